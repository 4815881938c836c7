#include "fockdual/circle_duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace fockdual {

namespace {

template <class M>
int degree_of(const M& f) {
    int d = 0;
    for (const auto& [k, c] : f) d = std::max(d, std::abs(k));
    return d;
}

void require_exact(int m, int degree, const char* what) {
    if (m <= degree)
        throw QuadratureError(std::string(what) + ": " + std::to_string(m) + " points cannot integrate degree " +
                              std::to_string(degree) + " exactly");
}

double amax(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

/// Samples of a loop-valued quantity at the M nodes, as vec coordinates.
using Samples = std::vector<Vec>;

/// Fourier coefficient k of sampled values.
Vec coefficient(const Samples& s, int k) {
    const int m = static_cast<int>(s.size());
    Vec acc = Vec::Zero(s.front().size());
    for (int j = 0; j < m; ++j) acc += quadrature_node(static_cast<int>(((-static_cast<long>(k) * j) % m + m) % m), m) * s[j];
    return acc / static_cast<double>(m);
}

}  // namespace

int loop_degree(const LoopA& f) { return degree_of(f); }
int loop_degree(const LoopX& f) { return degree_of(f); }

cplx quadrature_node(int j, int m) { return std::polar(1.0, 2.0 * std::numbers::pi * j / m); }

cplx quadrature_moment(int k, int m) {
    cplx acc = 0.0;
    for (int j = 0; j < m; ++j) acc += quadrature_node(static_cast<int>((static_cast<long>(k) * j % m + m) % m), m);
    return acc / static_cast<double>(m);
}

AlgElem evaluate_loop(const LoopA& f, cplx lambda, const Algebra& a) {
    AlgElem acc = a.zero();
    for (const auto& [k, c] : f) acc += std::pow(lambda, k) * c;
    return acc;
}

Coords evaluate_loop(const LoopX& f, cplx lambda, int dim) {
    Coords acc = Coords::Zero(dim);
    for (const auto& [k, c] : f) acc += std::pow(lambda, k) * c;
    return acc;
}

AlgElem circle_integrate(const LoopA& f, int m, const Algebra& a, int shift) {
    int deg = 0;
    for (const auto& [k, c] : f) deg = std::max(deg, std::abs(k + shift));
    require_exact(m, deg, "circle_integrate");
    AlgElem acc = a.zero();
    for (int j = 0; j < m; ++j) {
        const cplx l = quadrature_node(j, m);
        acc += std::pow(l, shift) * evaluate_loop(f, l, a);
    }
    return acc * cplx(1.0 / m);
}

Coords circle_integrate(const LoopX& f, int m, int dim, int shift) {
    int deg = 0;
    for (const auto& [k, c] : f) deg = std::max(deg, std::abs(k + shift));
    require_exact(m, deg, "circle_integrate");
    Coords acc = Coords::Zero(dim);
    for (int j = 0; j < m; ++j) {
        const cplx l = quadrature_node(j, m);
        acc += std::pow(l, shift) * evaluate_loop(f, l, dim);
    }
    return acc / static_cast<double>(m);
}

SeqA iso_I(const LoopA& phi) {
    SeqA out;
    for (const auto& [k, c] : phi) out.emplace(-k, c);
    return out;
}

SeqX iso_I(const LoopX& f) {
    SeqX out;
    for (const auto& [k, c] : f) out.emplace(1 - k, c);
    return out;
}

LoopA iso_I_inverse(const SeqA& phi) {
    LoopA out;
    for (const auto& [n, a] : phi) out.emplace(-n, a);
    return out;
}

LoopX iso_I_inverse(const SeqX& f) {
    LoopX out;
    for (const auto& [n, x] : f) out.emplace(1 - n, x);
    return out;
}

SeqA iso_I_quadrature(const LoopA& phi, int m, const Algebra& a) {
    SeqA out;
    for (const auto& [k, c] : phi) {
        const int n = -k;
        out.emplace(n, circle_integrate(phi, m, a, n));
    }
    return out;
}

SeqX iso_I_quadrature(const LoopX& f, int m, int dim) {
    SeqX out;
    for (const auto& [k, c] : f) {
        const int n = 1 - k;
        out.emplace(n, circle_integrate(f, m, dim, n - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct LoopOps {
    const Bimodule& x;
    int m;

    cplx node(int j) const { return quadrature_node(j, m); }
    /// node index of lambda^{-1} mu
    int div(int jl, int jm) const { return ((jm - jl) % m + m) % m; }
    int mul(int jl, int jm) const { return (jl + jm) % m; }
};

}  // namespace

Report y_structure_check(const Bimodule& x, const LoopX& f, const LoopX& g, const LoopA& phi, double tol, int m) {
    const Algebra& alg = x.algebra();
    const int d = std::max({loop_degree(f), loop_degree(g), loop_degree(phi)}) + 1;
    // products of two loops have degree <= 2d; the rule must not alias them
    const int needed = 4 * d + 1;
    if (m == 0) m = needed;
    require_exact(m, needed - 1, "y_structure_check");

    const LoopOps ops{x, m};
    std::vector<Coords> fv(m), gv(m);
    std::vector<AlgElem> pv;
    for (int j = 0; j < m; ++j) {
        fv[j] = evaluate_loop(f, ops.node(j), x.dim());
        gv[j] = evaluate_loop(g, ops.node(j), x.dim());
        pv.push_back(evaluate_loop(phi, ops.node(j), alg));
    }

    Samples left_act(m), right_act(m), ipl(m), ipr(m);
    for (int jm = 0; jm < m; ++jm) {
        const cplx mu = ops.node(jm);
        Vec la = Vec::Zero(x.dim()), ra = Vec::Zero(x.dim());
        Vec il = Vec::Zero(alg.dim()), ir = Vec::Zero(alg.dim());
        for (int jl = 0; jl < m; ++jl) {
            const cplx lambda = ops.node(jl);
            // (phi f)(mu) = int lambda phi(lambda) f(lambda^{-1} mu)
            la += lambda * x.left_act(pv[jl], fv[ops.div(jl, jm)]);
            // (f phi)(mu) = int f(lambda) phi(lambda^{-1} mu)
            ra += x.right_act(fv[jl], pv[ops.div(jl, jm)]);
            // <f,g>_L(mu) = int <f(lambda), mu g(mu^{-1} lambda)>_L
            il += alg.vec(x.ip_left(fv[jl], mu * gv[ops.div(jm, jl)]));
            // <f,g>_R(mu) = int <f(lambda), g(lambda mu)>_R
            ir += alg.vec(x.ip_right(fv[jl], gv[ops.mul(jl, jm)]));
        }
        left_act[jm] = la / static_cast<double>(m);
        right_act[jm] = ra / static_cast<double>(m);
        ipl[jm] = il / static_cast<double>(m);
        ipr[jm] = ir / static_cast<double>(m);
    }

    const SeqA sphi = iso_I(phi);
    const SeqX sf = iso_I(f), sg = iso_I(g);
    const SeqX seq_la = seq_left(x, sphi, sf);
    const SeqX seq_ra = seq_right(x, sf, sphi);
    const SeqA seq_il = seq_ip_left(x, sf, sg);
    const SeqA seq_ir = seq_ip_right(x, sf, sg);

    // I on the X side reads coefficient 1-n, on the A side coefficient -n
    auto cmp_x = [&](const Samples& s, const SeqX& seq) {
        double v = 0.0;
        for (int n = -2 * d; n <= 2 * d + 1; ++n) {
            const Vec c = coefficient(s, 1 - n);
            auto it = seq.find(n);
            v = std::max(v, amax(it == seq.end() ? c : Vec(c - it->second)));
        }
        return v;
    };
    auto cmp_a = [&](const Samples& s, const SeqA& seq) {
        double v = 0.0;
        for (int n = -2 * d - 1; n <= 2 * d + 1; ++n) {
            const Vec c = coefficient(s, -n);
            auto it = seq.find(n);
            v = std::max(v, amax(it == seq.end() ? c : Vec(c - alg.vec(it->second))));
        }
        return v;
    };

    Report rep("fourier");
    rep.add("left-action-intertwined", "I(phi f)(n) = I(phi)(n) I(f)(n)", cmp_x(left_act, seq_la), tol);
    rep.add("right-action-intertwined", "I(f phi)(n) = I(f)(n) I(phi)(n-1)", cmp_x(right_act, seq_ra), tol);
    rep.add("left-inner-product-intertwined", "J_A(<f,g>_L)(n) = <J_Y f(n), J_Y g(n)>_L", cmp_a(ipl, seq_il), tol);
    rep.add("right-inner-product-intertwined", "J_A(<f,g>_R)(n) = <J_Y f(n+1), J_Y g(n+1)>_R", cmp_a(ipr, seq_ir),
            tol);
    return rep;
}

double loop_norm(const Bimodule& x, const LoopX& f, int m) {
    const Algebra& alg = x.algebra();
    const int d = loop_degree(f) + 1;
    const int needed = 4 * d + 1;
    if (m == 0) m = needed;
    require_exact(m, needed - 1, "loop_norm");

    std::vector<Coords> fv(m);
    for (int j = 0; j < m; ++j) fv[j] = evaluate_loop(f, quadrature_node(j, m), x.dim());
    // <f,f>_R(mu) = int <f(lambda), f(lambda mu)>_R
    std::vector<AlgElem> h;
    for (int jm = 0; jm < m; ++jm) {
        AlgElem acc = alg.zero();
        for (int jl = 0; jl < m; ++jl) acc += x.ip_right(fv[jl], fv[(jl + jm) % m]);
        h.push_back(acc * cplx(1.0 / m));
    }
    // convolution (h * xi)(mu_i) = (1/M) sum_j h(mu_i mu_j^{-1}) xi(mu_j), A acting by left multiplication
    const int da = alg.dim();
    Mat conv = Mat::Zero(m * da, m * da);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            conv.block(i * da, j * da, da, da) = alg.left_mult_matrix(h[((i - j) % m + m) % m]) / static_cast<double>(m);
    Eigen::JacobiSVD<Mat> svd(conv);
    return std::sqrt(svd.singularValues()(0));
}

GradedOp spectral_projection(const Window& w, const GradedOp& s, int n, int m) {
    if (m < 4 * w.radius() + 2)
        throw QuadratureError("spectral projection needs at least " + std::to_string(4 * w.radius() + 2) +
                              " points, got " + std::to_string(m));
    GradedOp acc = w.zero_op();
    for (int j = 0; j < m; ++j) {
        const cplx l = quadrature_node(j, m);
        const GradedOp u = gauge(w, l);
        acc = acc + (u * s * u.adjoint()) * std::pow(l, -n);
    }
    return acc * cplx(1.0 / m);
}

}  // namespace fockdual
