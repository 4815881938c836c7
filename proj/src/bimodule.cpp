#include "fockdual/bimodule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fockdual {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void require_shapes(const std::vector<Mat>& ms, int count, int dim, const char* what) {
    if (static_cast<int>(ms.size()) != count)
        throw DimensionError(std::string(what) + ": need one matrix per algebra basis element");
    for (const auto& m : ms)
        if (m.rows() != dim || m.cols() != dim)
            throw DimensionError(std::string(what) + ": structure matrix has wrong shape");
}

Mat combine(const std::vector<Mat>& ms, const Vec& coeffs, int dim) {
    Mat out = Mat::Zero(dim, dim);
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (coeffs(k) != cplx(0.0)) out += coeffs(k) * ms[k];
    return out;
}

int numerical_rank(const Mat& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) <= tol) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > tol * s(0)) ++r;
    return r;
}

/// Hermitian [<e_i,e_j>]_{ij} in M_d(A), one matrix per block of A; rows (i,p), cols (j,q).
std::vector<Mat> block_gram(const Bimodule& x, bool right) {
    const Algebra& a = x.algebra();
    const int d = x.dim();
    std::vector<Mat> out;
    for (int b = 0; b < a.num_blocks(); ++b) {
        const int n = a.block_dim(b);
        out.push_back(Mat::Zero(d * n, d * n));
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const AlgElem g = right ? x.ip_right(x.basis(i), x.basis(j)) : x.ip_left(x.basis(i), x.basis(j));
            for (int b = 0; b < a.num_blocks(); ++b) {
                const int n = a.block_dim(b);
                out[b].block(i * n, j * n, n, n) = g.block(b);
            }
        }
    return out;
}

double positivity_violation(const std::vector<Mat>& grams) {
    double v = 0.0;
    for (const auto& g : grams) {
        if (g.size() == 0) continue;
        v = std::max(v, max_abs(g - g.adjoint()));
        Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
        v = std::max(v, -es.eigenvalues().minCoeff());
    }
    return v;
}

int rank_deficit(const Mat& gram, double tol) {
    if (gram.size() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double top = ev.maxCoeff();
    if (top <= tol) return static_cast<int>(ev.size());
    int deficit = 0;
    for (int i = 0; i < ev.size(); ++i)
        if (ev(i) <= tol * top) ++deficit;
    return deficit;
}

}  // namespace

// ---------------------------------------------------------------------------

Bimodule::Bimodule(Algebra algebra, int dim, std::vector<Mat> left, std::vector<Mat> right,
                   std::vector<Mat> ip_left, std::vector<Mat> ip_right)
    : algebra_(std::move(algebra)),
      dim_(dim),
      left_(std::move(left)),
      right_(std::move(right)),
      ip_left_(std::move(ip_left)),
      ip_right_(std::move(ip_right)) {
    if (dim_ < 0) throw DimensionError("bimodule dimension must be non-negative");
    const int da = algebra_.dim();
    require_shapes(left_, da, dim_, "left action");
    require_shapes(right_, da, dim_, "right action");
    require_shapes(ip_left_, da, dim_, "left inner product");
    require_shapes(ip_right_, da, dim_, "right inner product");
}

Mat Bimodule::left_matrix(const AlgElem& a) const { return combine(left_, algebra_.vec(a), dim_); }
Mat Bimodule::right_matrix(const AlgElem& a) const { return combine(right_, algebra_.vec(a), dim_); }

AlgElem Bimodule::ip_right(const Coords& x, const Coords& y) const {
    Vec v(algebra_.dim());
    for (int k = 0; k < algebra_.dim(); ++k) v(k) = x.dot(ip_right_[k] * y);
    return algebra_.unvec(v);
}

AlgElem Bimodule::ip_left(const Coords& x, const Coords& y) const {
    Vec v(algebra_.dim());
    for (int k = 0; k < algebra_.dim(); ++k) v(k) = (x.transpose() * ip_left_[k] * y.conjugate())(0, 0);
    return algebra_.unvec(v);
}

double Bimodule::norm(const Coords& x) const { return std::sqrt(alg_norm(ip_right(x, x))); }

Mat Bimodule::right_gram() const { return combine(ip_right_, algebra_.trace_functional(), dim_); }

Mat Bimodule::left_gram() const {
    return combine(ip_left_, algebra_.trace_functional(), dim_).transpose();
}

Coords Bimodule::basis(int i) const {
    Coords c = Coords::Zero(dim_);
    c(i) = 1.0;
    return c;
}

bool Bimodule::is_orthonormal(double tol) const {
    if (dim_ == 0) return true;
    return max_abs(right_gram() - Mat::Identity(dim_, dim_)) <= tol;
}

std::pair<Bimodule, Mat> Bimodule::orthonormalized() const {
    if (is_orthonormal()) return {*this, Mat::Identity(dim_, dim_)};
    const Mat g = right_gram();
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.adjoint()));
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 1e-12 * std::max(1.0, ev.maxCoeff()))
        throw AxiomError("right inner product is not definite; cannot orthonormalize");
    const Mat& v = es.eigenvectors();
    // symmetric (Loewdin) orthonormalization keeps the new basis closest to the old one
    const Mat b = v * ev.cwiseInverse().cwiseSqrt().asDiagonal() * v.adjoint();
    const Mat b_inv = v * ev.cwiseSqrt().asDiagonal() * v.adjoint();
    std::vector<Mat> l, r, il, ir;
    for (int k = 0; k < algebra_.dim(); ++k) {
        l.push_back(b_inv * left_[k] * b);
        r.push_back(b_inv * right_[k] * b);
        il.push_back(b.transpose() * ip_left_[k] * b.conjugate());
        ir.push_back(b.adjoint() * ip_right_[k] * b);
    }
    Bimodule out(algebra_, dim_, std::move(l), std::move(r), std::move(il), std::move(ir));
    out.automorphism_ = automorphism_;
    return {std::move(out), b_inv};
}

// ---------------------------------------------------------------------------

Report check_axioms(const Bimodule& x, double tol) {
    Report rep("axioms");
    const Algebra& a = x.algebra();
    const int d = x.dim();
    const int da = a.dim();

    double module_law = 0.0;
    double left_mod = 0.0, right_mod = 0.0;
    for (int k = 0; k < da; ++k) {
        const AlgElem fk = a.basis(k);
        for (int l = 0; l < da; ++l) {
            const AlgElem fl = a.basis(l);
            module_law = std::max(module_law, max_abs(x.right()[l] * x.left()[k] - x.left()[k] * x.right()[l]));
            left_mod = std::max(left_mod, max_abs(x.left()[k] * x.left()[l] - x.left_matrix(fk * fl)));
            right_mod = std::max(right_mod, max_abs(x.right()[l] * x.right()[k] - x.right_matrix(fk * fl)));
        }
    }
    const Mat id = Mat::Identity(d, d);
    left_mod = std::max(left_mod, max_abs(x.left_matrix(a.identity()) - id));
    right_mod = std::max(right_mod, max_abs(x.right_matrix(a.identity()) - id));
    rep.add("bimodule-law", "(ax)b = a(xb)", module_law, tol);
    rep.add("left-module", "(ab)x = a(bx), 1x = x", left_mod, tol);
    rep.add("right-module", "x(ab) = (xa)b, x1 = x", right_mod, tol);

    double compat = 0.0, lin_l = 0.0, lin_r = 0.0, herm_l = 0.0, herm_r = 0.0;
    std::vector<std::vector<AlgElem>> gl(d), gr(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            gl[i].push_back(x.ip_left(x.basis(i), x.basis(j)));
            gr[i].push_back(x.ip_right(x.basis(i), x.basis(j)));
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            herm_l = std::max(herm_l, max_abs_diff(gl[i][j].adjoint(), gl[j][i]));
            herm_r = std::max(herm_r, max_abs_diff(gr[i][j].adjoint(), gr[j][i]));
            const Mat lij = x.left_matrix(gl[i][j]);
            for (int m = 0; m < d; ++m) {
                const Coords lhs = lij.col(m);
                const Coords rhs = x.right_matrix(gr[j][m]).col(i);
                compat = std::max(compat, max_abs(lhs - rhs));
            }
            for (int k = 0; k < da; ++k) {
                const AlgElem fk = a.basis(k);
                lin_l = std::max(lin_l, max_abs_diff(x.ip_left(x.left()[k].col(i), x.basis(j)), fk * gl[i][j]));
                lin_r = std::max(lin_r, max_abs_diff(x.ip_right(x.basis(i), x.right()[k].col(j)), gr[i][j] * fk));
            }
        }
    rep.add("compatibility", "<x,y>_L z = x<y,z>_R", compat, tol);
    rep.add("left-linearity", "<ax,y>_L = a<x,y>_L", lin_l, tol);
    rep.add("right-linearity", "<x,ya>_R = <x,y>_R a", lin_r, tol);
    rep.add("left-hermitian", "<x,y>_L* = <y,x>_L", herm_l, tol);
    rep.add("right-hermitian", "<x,y>_R* = <y,x>_R", herm_r, tol);

    rep.add("left-positivity", "<x,x>_L >= 0", positivity_violation(block_gram(x, false)), tol);
    rep.add("right-positivity", "<x,x>_R >= 0", positivity_violation(block_gram(x, true)), tol);
    rep.add("left-definiteness", "<x,x>_L = 0 => x = 0", rank_deficit(x.left_gram(), tol), 0.0,
            "value is the rank deficit of tau(<.,.>_L)");
    rep.add("right-definiteness", "<x,x>_R = 0 => x = 0", rank_deficit(x.right_gram(), tol), 0.0,
            "value is the rank deficit of tau(<.,.>_R)");
    return rep;
}

// ---------------------------------------------------------------------------

Bimodule trivial_bimodule(const Algebra& a) {
    Bimodule x = from_automorphism(a, Automorphism::identity(a));
    return x;
}

Bimodule from_automorphism(const Algebra& a, const Automorphism& alpha) {
    if (alpha.algebra() != a) throw DimensionError("automorphism acts on a different algebra");
    const int d = a.dim();
    const Automorphism inv = alpha.inverse();
    std::vector<Mat> l, r, il(d, Mat::Zero(d, d)), ir(d, Mat::Zero(d, d));
    for (int k = 0; k < d; ++k) {
        const AlgElem fk = a.basis(k);
        l.push_back(a.left_mult_matrix(fk));
        r.push_back(a.right_mult_matrix(alpha.apply(fk)));
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const AlgElem fi = a.basis(i), fj = a.basis(j);
            const Vec vl = a.vec(fi * fj.adjoint());
            const Vec vr = a.vec(inv.apply(fi.adjoint() * fj));
            for (int k = 0; k < d; ++k) {
                il[k](i, j) = vl(k);
                ir[k](i, j) = vr(k);
            }
        }
    Bimodule x(a, d, std::move(l), std::move(r), std::move(il), std::move(ir));
    x.set_automorphism(alpha);
    return x;
}

Bimodule dual(const Bimodule& x, double tol, bool validate) {
    if (validate && !check_axioms(x, tol).passed()) throw AxiomError("dual: input bimodule fails its axioms");
    const Algebra& a = x.algebra();
    std::vector<Mat> l, r, il, ir;
    for (int k = 0; k < a.dim(); ++k) {
        const int ks = a.adjoint_index(k);
        l.push_back(x.right()[ks].conjugate());
        r.push_back(x.left()[ks].conjugate());
        il.push_back(x.ip_right_tensor()[k]);
        ir.push_back(x.ip_left_tensor()[k]);
    }
    return Bimodule(a, x.dim(), std::move(l), std::move(r), std::move(il), std::move(ir));
}

// ---------------------------------------------------------------------------

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Coords TensorProduct::factor_map(const Coords& x, const Coords& y) const { return factor * kron(x, y); }

TensorProduct tensor(const Bimodule& x, const Bimodule& y, const TensorOptions& opts) {
    if (x.algebra() != y.algebra()) throw DimensionError("tensor: bimodules over different algebras");
    if (opts.validate_inputs) {
        if (!check_axioms(x, opts.tol).passed()) throw AxiomError("tensor: left factor fails its axioms");
        if (!check_axioms(y, opts.tol).passed()) throw AxiomError("tensor: right factor fails its axioms");
    }
    const Algebra& a = x.algebra();
    const int da = a.dim();
    const int d1 = x.dim(), d2 = y.dim();
    const int n = d1 * d2;

    // algebraic structure: <x(x)y, x'(x)y'>_R = <y, <x,x'>_R y'>_R, <.,.>_L = <x<y,y'>_L, x'>_L
    std::vector<Mat> g_alg(da, Mat::Zero(n, n)), h_alg(da, Mat::Zero(n, n));
    for (int k = 0; k < da; ++k)
        for (int m = 0; m < da; ++m) {
            g_alg[k] += kron(x.ip_right_tensor()[m], y.ip_right_tensor()[k] * y.left()[m]);
            h_alg[k] += kron(x.right()[m].transpose() * x.ip_left_tensor()[k], y.ip_left_tensor()[m]);
        }
    Mat gram = Mat::Zero(n, n);
    for (int k = 0; k < da; ++k) gram += a.trace_functional()(k) * g_alg[k];

    Mat lift(n, 0), factor(0, n), kernel(n, 0);
    if (n > 0) {
        Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
        const auto& ev = es.eigenvalues();
        const double top = ev.maxCoeff();
        std::vector<int> keep, drop;
        for (int i = 0; i < n; ++i) {
            if (top <= opts.tol) {
                drop.push_back(i);
                continue;
            }
            const double rel = ev(i) / top;
            if (rel > opts.tol && rel <= 10.0 * opts.tol) {
                std::ostringstream os;
                os << "tensor: Gram eigenvalue " << ev(i) << " lies in the ill-conditioned band relative to "
                   << top;
                throw IllConditionedError(os.str());
            }
            (rel > opts.tol ? keep : drop).push_back(i);
        }
        lift.resize(n, keep.size());
        factor.resize(keep.size(), n);
        kernel.resize(n, drop.size());
        for (std::size_t c = 0; c < keep.size(); ++c) {
            const double lam = ev(keep[c]);
            lift.col(c) = es.eigenvectors().col(keep[c]) / std::sqrt(lam);
            factor.row(c) = std::sqrt(lam) * es.eigenvectors().col(keep[c]).adjoint();
        }
        for (std::size_t c = 0; c < drop.size(); ++c) kernel.col(c) = es.eigenvectors().col(drop[c]);

        // the left form must vanish on the right-form kernel
        double scale = 0.0, leak = 0.0;
        for (int k = 0; k < da; ++k) {
            scale = std::max(scale, max_abs(h_alg[k]));
            leak = std::max(leak, max_abs(kernel.transpose() * h_alg[k]));
            leak = std::max(leak, max_abs(h_alg[k] * kernel.conjugate()));
        }
        if (leak > std::sqrt(opts.tol) * std::max(1.0, scale))
            throw AxiomError("tensor: left inner product does not vanish on the right Gram kernel");
    }

    const int r = static_cast<int>(lift.cols());
    const Mat id1 = Mat::Identity(d1, d1), id2 = Mat::Identity(d2, d2);
    std::vector<Mat> l, rr, il, ir;
    for (int k = 0; k < da; ++k) {
        l.push_back(factor * kron(x.left()[k], id2) * lift);
        rr.push_back(factor * kron(id1, y.right()[k]) * lift);
        il.push_back(lift.transpose() * h_alg[k] * lift.conjugate());
        ir.push_back(lift.adjoint() * g_alg[k] * lift);
    }
    TensorProduct out{Bimodule(a, r, std::move(l), std::move(rr), std::move(il), std::move(ir)), factor, lift,
                      n, n - r};
    return out;
}

// ---------------------------------------------------------------------------

bool fullness(const Bimodule& x, Side side, double tol) {
    const Algebra& a = x.algebra();
    const int d = x.dim();
    Mat span(a.dim(), d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            span.col(i * d + j) = a.vec(side == Side::left ? x.ip_left(x.basis(i), x.basis(j))
                                                           : x.ip_right(x.basis(i), x.basis(j)));
    return numerical_rank(span, tol) == a.dim();
}

bool action_faithful(const Bimodule& x, Side side, double tol) {
    const Algebra& a = x.algebra();
    const int d = x.dim();
    Mat rep(d * d, a.dim());
    for (int k = 0; k < a.dim(); ++k) {
        const Mat& m = side == Side::left ? x.left()[k] : x.right()[k];
        rep.col(k) = m.reshaped();
    }
    return numerical_rank(rep, tol) == a.dim();
}

// ---------------------------------------------------------------------------

AlgebraMap AlgebraMap::identity(const Algebra& a) { return {a, a, Mat::Identity(a.dim(), a.dim())}; }

AlgebraMap AlgebraMap::from(const Automorphism& alpha) {
    return {alpha.algebra(), alpha.algebra(), alpha.matrix()};
}

bool AlgebraMap::is_star_homomorphism(double tol) const {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
    for (int i = 0; i < source.dim(); ++i) {
        const AlgElem fi = source.basis(i);
        if (max_abs_diff((*this)(fi.adjoint()), (*this)(fi).adjoint()) > tol) return false;
        for (int j = 0; j < source.dim(); ++j) {
            const AlgElem fj = source.basis(j);
            if (max_abs_diff((*this)(fi * fj), (*this)(fi) * (*this)(fj)) > tol) return false;
        }
    }
    return true;
}

bool AlgebraMap::injective(double tol) const { return numerical_rank(matrix, tol) == source.dim(); }

Report check_morphism(const AlgebraMap& phi_a, const Mat& phi_x, const Bimodule& x, const Bimodule& y,
                      double tol, Rng& rng, int samples) {
    if (phi_a.source != x.algebra() || phi_a.target != y.algebra())
        throw DimensionError("check_morphism: algebra map does not match the bimodules");
    if (phi_x.rows() != y.dim() || phi_x.cols() != x.dim())
        throw DimensionError("check_morphism: phi_X has the wrong shape");
    if (!phi_a.is_star_homomorphism()) throw DimensionError("check_morphism: phi_A is not a *-homomorphism");

    Report rep("morphism");
    const Algebra& a = x.algebra();
    double lact = 0.0, ract = 0.0, lip = 0.0, rip = 0.0;
    for (int k = 0; k < a.dim(); ++k) {
        const AlgElem fk = a.basis(k);
        const AlgElem img = phi_a(fk);
        lact = std::max(lact, max_abs(phi_x * x.left()[k] - y.left_matrix(img) * phi_x));
        ract = std::max(ract, max_abs(phi_x * x.right()[k] - y.right_matrix(img) * phi_x));
    }
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) {
            const Coords xi = x.basis(i), xj = x.basis(j);
            const Coords pi = phi_x * xi, pj = phi_x * xj;
            lip = std::max(lip, max_abs_diff(y.ip_left(pi, pj), phi_a(x.ip_left(xi, xj))));
            rip = std::max(rip, max_abs_diff(y.ip_right(pi, pj), phi_a(x.ip_right(xi, xj))));
        }
    rep.add("left-action", "phi_X(ax) = phi_A(a) phi_X(x)", lact, tol);
    rep.add("right-action", "phi_X(xa) = phi_X(x) phi_A(a)", ract, tol);
    rep.add("left-inner-product", "<phi_X x, phi_X y>_L = phi_A(<x,y>_L)", lip, tol);
    rep.add("right-inner-product", "<phi_X x, phi_X y>_R = phi_A(<x,y>_R)", rip, tol);

    double growth = 0.0, iso = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Coords v = x.random(rng);
        const double nx = x.norm(v), ny = y.norm(phi_x * v);
        growth = std::max(growth, ny - nx);
        iso = std::max(iso, std::abs(ny - nx));
    }
    rep.add("norm-decreasing", "||phi_X(x)|| <= ||x||", std::max(0.0, growth), tol);
    if (phi_a.injective()) rep.add("isometric", "||phi_X(x)|| = ||x|| when phi_A is injective", iso, tol);
    return rep;
}

}  // namespace fockdual
