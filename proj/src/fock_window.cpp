#include "fockdual/fock_window.hpp"

#include <algorithm>
#include <string>

namespace fockdual {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double op_norm(const Mat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

/// g (x) a -> g.a for a in A (vec coordinates); columns indexed i * dim(A) + k.
Mat right_action_prepend(const Bimodule& g) {
    const int d = g.dim(), da = g.algebra().dim();
    Mat out(d, d * da);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < da; ++k) out.col(i * da + k) = g.right()[k].col(i);
    return out;
}

void require(const Report& rep, const std::string& what) {
    if (!rep.passed()) throw AxiomError("window: " + what + " fails its bimodule axioms");
}

}  // namespace

Window::Window(const Bimodule& x, int radius, const WindowOptions& opts)
    : source_(x), radius_(radius), tol_(opts.tol) {
    if (radius < 1) throw DimensionError("window radius must be at least 1");
    if (opts.validate) require(check_axioms(x, opts.tol), "X");

    auto [xo, to_x] = x.orthonormalized();
    auto [dx, to_d] = dual(x, opts.tol, false).orthonormalized();
    to_x_ = to_x;
    from_x_ = to_x.inverse();
    to_dual_ = to_d;
    from_dual_ = to_d.inverse();

    const int count = 2 * radius + 1;
    comps_.assign(count, trivial_bimodule(x.algebra()));
    prepend_.assign(count, Mat());
    comps_[radius + 1] = xo;
    comps_[radius - 1] = dx;
    prepend_[radius + 1] = right_action_prepend(xo);
    prepend_[radius - 1] = right_action_prepend(dx);

    TensorOptions topts;
    topts.tol = opts.tol;
    topts.validate_inputs = false;
    for (int n = 2; n <= radius; ++n) {
        TensorProduct up = tensor(xo, comps_[radius + n - 1], topts);
        comps_[radius + n] = up.module;
        prepend_[radius + n] = up.factor;
        TensorProduct down = tensor(dx, comps_[radius - n + 1], topts);
        comps_[radius - n] = down.module;
        prepend_[radius - n] = down.factor;
    }
    if (opts.validate)
        for (int n = -radius; n <= radius; ++n)
            require(check_axioms(comps_[n + radius], opts.tol), "component " + std::to_string(n));

    grading_.radius = radius;
    for (const auto& c : comps_) grading_.dims.push_back(c.dim());
}

const Bimodule& Window::component(int n) const {
    if (n < -radius_ || n > radius_) throw WindowEdgeError("degree " + std::to_string(n) + " is outside the window");
    return comps_[n + radius_];
}

const Mat& Window::prepend_matrix(int n) const {
    if (n == 0) throw DimensionError("degree 0 is not a tensor power of X or its dual");
    if (n < -radius_ || n > radius_) throw WindowEdgeError("degree " + std::to_string(n) + " is outside the window");
    return prepend_[n + radius_];
}

Coords Window::prepend(int n, const Coords& g, const Coords& c) const { return prepend_matrix(n) * kron(g, c); }

GradedVec Window::zero_vec() const {
    GradedVec v;
    v.radius = radius_;
    for (int n = -radius_; n <= radius_; ++n) v.parts.push_back(Vec::Zero(dim(n)));
    return v;
}

GradedVec Window::delta(int n, const Coords& c) const {
    GradedVec v = zero_vec();
    if (c.size() != dim(n)) throw DimensionError("vector does not match the component dimension");
    v.at(n) = c;
    return v;
}

Window build_window(const Bimodule& x, int radius, const WindowOptions& opts) { return Window(x, radius, opts); }

// ---------------------------------------------------------------------------

Mat creation(const Window& w, const Coords& x, int n) {
    if (n < -w.radius() || n >= w.radius())
        throw WindowEdgeError("creation operator at degree " + std::to_string(n) + " leaves the window");
    if (n >= 0) {
        const Coords g = w.to_window(x);
        return w.prepend_matrix(n + 1) * kron(g, Mat::Identity(w.dim(n), w.dim(n)));
    }
    const Coords g = w.to_dual_window(x);
    const Mat dual_creation = w.prepend_matrix(n) * kron(g, Mat::Identity(w.dim(n + 1), w.dim(n + 1)));
    return dual_creation.adjoint();
}

Mat left_action_op(const Window& w, const AlgElem& a, int n) { return w.component(n).left_matrix(a); }

GradedOp embed(const Window& w, const Mat& t, int n, int m) {
    GradedOp op = w.zero_op();
    op.set_block(n, m, t);
    return op;
}

GradedOp theta(const Window& w, const GradedVec& u, const GradedVec& v) {
    GradedOp op = w.zero_op();
    const Algebra& a = w.algebra();
    for (int m = -w.radius(); m <= w.radius(); ++m) {
        const Vec& um = u.at(m);
        if (um.size() == 0 || um.isZero(0.0)) continue;
        const Bimodule& cm = w.component(m);
        for (int l = -w.radius(); l <= w.radius(); ++l) {
            const Vec& vl = v.at(l);
            if (vl.size() == 0 || vl.isZero(0.0)) continue;
            const Bimodule& cl = w.component(l);
            Mat blk = Mat::Zero(cm.dim(), cl.dim());
            for (int k = 0; k < a.dim(); ++k)
                blk += (cm.right()[k] * um) * (vl.adjoint() * cl.ip_right_tensor()[k]);
            op.set_block(l, m, blk);
        }
    }
    return op;
}

AlgElem window_inner(const Window& w, const GradedVec& u, const GradedVec& v) {
    AlgElem acc = w.algebra().zero();
    for (int n = -w.radius(); n <= w.radius(); ++n)
        if (w.dim(n) > 0) acc += w.component(n).ip_right(u.at(n), v.at(n));
    return acc;
}

// ---------------------------------------------------------------------------

Report verify_creation_identities(const Window& w, int samples, double tol, Rng& rng) {
    Report rep("creation-identities");
    const Bimodule& x = w.source();
    const Algebra& alg = w.algebra();
    const int lo = -w.radius() + 1, hi = w.radius() - 1;

    double tn1l = 0, tn1r = 0, tn2l = 0, tn2r = 0, bound = 0, adj = 0, prod = 0, neg = 0, negstar = 0;
    for (int s = 0; s < samples; ++s) {
        const AlgElem a = random_element(alg, rng);
        const Coords x0 = x.random(rng), x1 = x.random(rng), y = x.random(rng);
        for (int n = lo; n <= hi; ++n) {
            const Mat t0 = creation(w, x0, n);
            const Mat t1 = creation(w, x1, n);
            tn1l = std::max(tn1l, max_abs(creation(w, x.left_act(a, x0), n) - left_action_op(w, a, n + 1) * t0));
            tn1r = std::max(tn1r, max_abs(creation(w, x.right_act(x0, a), n) - t0 * left_action_op(w, a, n)));
            tn2l = std::max(tn2l, max_abs(t0 * t1.adjoint() - left_action_op(w, x.ip_left(x0, x1), n + 1)));
            tn2r = std::max(tn2r, max_abs(t0.adjoint() * t1 - left_action_op(w, x.ip_right(x0, x1), n)));
            bound = std::max(bound, op_norm(t0) - x.norm(x0));

            if (n >= 0) {
                // T*_{x0}(y (x) c) = <x0,y>_R c  and  T_{x0} T*_{x1}(y (x) c) = <x0,x1>_L (y (x) c)
                const Coords c = random_vector(w.dim(n), rng);
                const Coords yc = w.prepend(n + 1, w.to_window(y), c);
                adj = std::max(adj, max_abs(t0.adjoint() * yc - left_action_op(w, x.ip_right(x0, y), n) * c));
                prod = std::max(prod, max_abs(t0 * (t1.adjoint() * yc) -
                                              left_action_op(w, x.ip_left(x0, x1), n + 1) * yc));
            } else {
                // T^n_x(~y (x) u) = <x,y>_L u  and  (T^n_x)^*(u) = ~x (x) u
                const Coords u = random_vector(w.dim(n + 1), rng);
                const Coords yu = w.prepend(n, w.to_dual_window(y), u);
                neg = std::max(neg, max_abs(t0 * yu - left_action_op(w, x.ip_left(x0, y), n + 1) * u));
                negstar = std::max(negstar, max_abs(t0.adjoint() * u - w.prepend(n, w.to_dual_window(x0), u)));
            }
        }
    }
    rep.add("tn1-left", "T^n_{ax} = L^{n+1}_a T^n_x", tn1l, tol);
    rep.add("tn1-right", "T^n_{xa} = T^n_x L^n_a", tn1r, tol);
    rep.add("tn2-left", "T^n_x (T^n_y)^* = L^{n+1}_{<x,y>_L}", tn2l, tol);
    rep.add("tn2-right", "(T^n_x)^* T^n_y = L^n_{<x,y>_R}", tn2r, tol);
    rep.add("creation-norm", "||T^n_x|| <= ||x||", std::max(0.0, bound), tol);
    if (hi >= 0) {
        rep.add("creation-adjoint", "T_{x0}^*(x (x) y) = <x0,x>_R y", adj, tol);
        rep.add("creation-product", "T_{x0} T_{x1}^*(x (x) y) = <x0,x1>_L x (x) y", prod, tol);
    }
    if (lo < 0) {
        rep.add("negative-creation", "T^n_x(~x1 (x) u) = <x,x1>_L u for n < 0", neg, tol);
        rep.add("negative-creation-adjoint", "(T^n_x)^*(u) = ~x (x) u for n < 0", negstar, tol);
    }
    return rep;
}

}  // namespace fockdual
