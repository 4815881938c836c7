#include "fockdual/crossed_rep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace fockdual {

namespace {

double op_norm(const Mat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

Mat pinv(const Mat& m) {
    if (m.size() == 0) return Mat::Zero(m.cols(), m.rows());
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(m);
    return cod.pseudoInverse();
}

void require_support(const std::string& what, int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw WindowEdgeError(what + " has support at " + std::to_string(n) + ", outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
}

template <class T>
const T* lookup(const std::map<int, T>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? nullptr : &it->second;
}

}  // namespace

// ---------------------------------------------------------------------------

SeqX seq_left(const Bimodule& x, const SeqA& phi, const SeqX& f) {
    SeqX out;
    for (const auto& [n, v] : f)
        if (const AlgElem* a = lookup(phi, n)) out.emplace(n, x.left_act(*a, v));
    return out;
}

SeqX seq_right(const Bimodule& x, const SeqX& f, const SeqA& phi) {
    SeqX out;
    for (const auto& [n, v] : f)
        if (const AlgElem* a = lookup(phi, n - 1)) out.emplace(n, x.right_act(v, *a));
    return out;
}

SeqA seq_ip_left(const Bimodule& x, const SeqX& f, const SeqX& g) {
    SeqA out;
    for (const auto& [n, v] : f)
        if (const Coords* y = lookup(g, n)) out.emplace(n, x.ip_left(v, *y));
    return out;
}

SeqA seq_ip_right(const Bimodule& x, const SeqX& f, const SeqX& g) {
    SeqA out;
    for (const auto& [n, v] : f)
        if (const Coords* y = lookup(g, n)) out.emplace(n - 1, x.ip_right(v, *y));
    return out;
}

SeqA seq_mul(const SeqA& a, const SeqA& b) {
    SeqA out;
    for (const auto& [n, v] : a)
        if (const AlgElem* w = lookup(b, n)) out.emplace(n, v * *w);
    return out;
}

SeqA seq_adjoint(const SeqA& a) {
    SeqA out;
    for (const auto& [n, v] : a) out.emplace(n, v.adjoint());
    return out;
}

SeqA sigma_seq(const SeqA& phi) {
    SeqA out;
    for (const auto& [n, v] : phi) out.emplace(n - 1, v);
    return out;
}

SeqX sigma_seq(const SeqX& f) {
    SeqX out;
    for (const auto& [n, v] : f) out.emplace(n - 1, v);
    return out;
}

double seq_diff(const SeqA& a, const SeqA& b) {
    double d = 0.0;
    for (const auto& [n, v] : a) {
        const AlgElem* w = lookup(b, n);
        d = std::max(d, w ? max_abs_diff(v, *w) : max_abs_diff(v, v.parent().zero()));
    }
    for (const auto& [n, w] : b)
        if (!lookup(a, n)) d = std::max(d, max_abs_diff(w, w.parent().zero()));
    return d;
}

double seq_diff(const SeqX& a, const SeqX& b) {
    auto amax = [](const Coords& c) { return c.size() ? c.cwiseAbs().maxCoeff() : 0.0; };
    double d = 0.0;
    for (const auto& [n, v] : a) {
        const Coords* w = lookup(b, n);
        d = std::max(d, w ? amax(v - *w) : amax(v));
    }
    for (const auto& [n, w] : b)
        if (!lookup(a, n)) d = std::max(d, amax(w));
    return d;
}

double seq_norm(const Bimodule& x, const SeqX& f) {
    double s = 0.0;
    for (const auto& [n, v] : f) s = std::max(s, x.norm(v));
    return s;
}

// ---------------------------------------------------------------------------

GradedOp lambda_A(const Window& w, const AlgElem& a) {
    GradedOp op = w.zero_op();
    for (int n = -w.radius(); n <= w.radius(); ++n) op.set_block(n, n, left_action_op(w, a, n));
    return op;
}

GradedOp lambda_X(const Window& w, const Coords& x) {
    GradedOp op = w.zero_op();
    for (int n = -w.radius() + 1; n <= w.radius(); ++n) op.set_block(n - 1, n, creation(w, x, n - 1));
    op.mark_edge_truncated();
    return op;
}

GradedOp gauge(const Window& w, cplx lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw std::invalid_argument("gauge parameter is not of modulus one");
    GradedOp op = w.zero_op();
    for (int n = -w.radius(); n <= w.radius(); ++n)
        op.set_block(n, n, std::pow(lambda, n) * Mat::Identity(w.dim(n), w.dim(n)));
    return op;
}

GradedOp pi0(const Window& w, const SeqA& phi) {
    GradedOp op = w.zero_op();
    for (const auto& [n, a] : phi) {
        require_support("pi0 argument", n, -w.radius(), w.radius());
        op.set_block(n, n, left_action_op(w, a, n));
    }
    return op;
}

GradedOp pi1(const Window& w, const SeqX& f) {
    GradedOp op = w.zero_op();
    for (const auto& [n, x] : f) {
        require_support("pi1 argument", n, -w.radius() + 1, w.radius());
        op.set_block(n - 1, n, creation(w, x, n - 1));
    }
    return op;
}

Pi0Kernel pi0_kernel(const Window& w, int lo, int hi, double tol) {
    const Algebra& alg = w.algebra();
    const int da = alg.dim();
    Pi0Kernel out;
    for (int n = lo; n <= hi; ++n) {
        const int d = w.dim(n);
        Mat m(d * d, da);
        for (int k = 0; k < da; ++k) {
            const Mat l = left_action_op(w, alg.basis(k), n);
            m.col(k) = Eigen::Map<const Vec>(l.data(), l.size());
        }
        int rank = 0;
        Mat v = Mat::Identity(da, da);
        if (m.size()) {
            Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
            const auto& s = svd.singularValues();
            const double scale = std::max(1.0, s(0));
            for (int i = 0; i < s.size(); ++i)
                if (s(i) > tol * scale) ++rank;
            v = svd.matrixV();
        }
        const int kernel = da - rank;
        out.dimension += kernel;
        if (kernel > 0 && !out.witness) out.witness = SeqA{{n, alg.unvec(v.col(da - 1))}};
    }
    return out;
}

// ---------------------------------------------------------------------------

ShiftFrame::ShiftFrame(const Window& w, double tol) : w_(w), radius_(w.radius()) {
    const int nr = radius_;
    const Bimodule& x1 = w.component(1);
    const int d1 = x1.dim();
    TensorOptions topts;
    topts.tol = tol;
    topts.validate_inputs = false;
    for (int n = -nr; n <= nr - 1; ++n) d_.push_back(tensor(w.component(n), x1, topts));
    ws_.assign(2 * nr, Mat());

    auto idx = [nr](int n) { return n + nr; };
    const Algebra& alg = w.algebra();
    const int da = alg.dim();

    // W_0 : a (x) z -> a z
    {
        Mat alg_map(d1, da * d1);
        for (int k = 0; k < da; ++k)
            for (int i = 0; i < d1; ++i) alg_map.col(k * d1 + i) = x1.left()[k].col(i);
        ws_[idx(0)] = alg_map * d_[idx(0)].lift;
    }
    // W_{-1} : ~x (x) z -> <x, z>_R
    {
        const Bimodule& xm = w.component(-1);
        const int dm = xm.dim();
        Mat alg_map(da, dm * d1);
        for (int i = 0; i < dm; ++i) {
            const Coords xi = w.from_dual_window(xm.basis(i));
            for (int j = 0; j < d1; ++j)
                alg_map.col(i * d1 + j) = alg.vec(w.source().ip_right(xi, w.from_window(x1.basis(j))));
        }
        ws_[idx(-1)] = alg_map * d_[idx(-1)].lift;
    }
    // g (x) u' (x) z -> g (x) W(u' (x) z), peeling the first factor of X^{(n)}
    auto step = [&](int n, int inner) {
        const int dg = w.dim(n > 0 ? 1 : -1);
        const Mat& d_inner_factor = d_[idx(inner)].factor;
        const Mat m1 = d_[idx(n)].factor * kron(w.prepend_matrix(n), Mat::Identity(d1, d1));
        const Mat m2 = w.prepend_matrix(n + 1) *
                       kron(Mat::Identity(dg, dg), ws_[idx(inner)] * d_inner_factor);
        ws_[idx(n)] = m2 * pinv(m1);
    };
    for (int n = 1; n <= nr - 1; ++n) step(n, n - 1);
    for (int n = -2; n >= -nr; --n) step(n, n + 1);
}

Mat ShiftFrame::relabel_up(const Mat& s, int source, int target) const {
    for (int n : {source, target})
        if (n < -radius_ || n > radius_ - 1)
            throw WindowEdgeError("relabeling degree " + std::to_string(n) + " leaves the window");
    const TensorProduct& ds = d_[source + radius_];
    const TensorProduct& dt = d_[target + radius_];
    const int d1 = w_.dim(1);
    const Mat st = dt.factor * kron(s, Mat::Identity(d1, d1)) * ds.lift;
    return ws_[target + radius_] * st * ws_[source + radius_].adjoint();
}

GradedOp ShiftFrame::relabel_up(const GradedOp& op) const {
    GradedOp out = w_.zero_op();
    for (const auto& [key, m] : op.blocks()) out.set_block(key.first + 1, key.second + 1, relabel_up(m, key.first, key.second));
    return out;
}

double ShiftFrame::unitarity_defect() const {
    double d = 0.0;
    for (const Mat& m : ws_) {
        if (m.size() == 0) {
            if (m.rows() != m.cols()) d = std::max(d, 1.0);
            continue;
        }
        d = std::max(d, (m * m.adjoint() - Mat::Identity(m.rows(), m.rows())).cwiseAbs().maxCoeff());
        d = std::max(d, (m.adjoint() * m - Mat::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff());
    }
    return d;
}

// ---------------------------------------------------------------------------

namespace {

/// u delta_m = sum_p P_p (a_p delta_0) with P_p a product of T and T* letters.
using Path = std::pair<std::vector<Letter>, AlgElem>;

std::vector<Path> peel(const Window& w, const Coords& u, int m, double tol) {
    const Algebra& alg = w.algebra();
    if (m == 0) return {{{}, alg.unvec(u)}};
    if (m == 1) return {{{Letter::T(w.from_window(u), 0)}, alg.identity()}};
    if (m == -1) return {{{Letter::Tstar(w.from_dual_window(u), -1)}, alg.identity()}};

    const int g = m > 0 ? 1 : -1;
    const int inner = m - g;
    const int dg = w.dim(g), di = w.dim(inner);
    const Coords p = pinv(w.prepend_matrix(m)) * u;
    std::vector<Path> out;
    for (int i = 0; i < dg; ++i) {
        const Coords t = p.segment(i * di, di);
        if (t.size() == 0 || t.cwiseAbs().maxCoeff() <= tol * std::max(1.0, u.cwiseAbs().maxCoeff())) continue;
        const Coords e = w.component(g).basis(i);
        const Letter head = m > 0 ? Letter::T(w.from_window(e), inner) : Letter::Tstar(w.from_dual_window(e), m);
        for (auto& [letters, a] : peel(w, t, inner, tol)) {
            std::vector<Letter> l{head};
            l.insert(l.end(), letters.begin(), letters.end());
            out.emplace_back(std::move(l), std::move(a));
        }
    }
    return out;
}

std::vector<Letter> adjoint_letters(const std::vector<Letter>& ls) {
    return GeneratorWord(std::vector<Monomial>{{cplx(1.0), ls}}).adjoint().terms().front().letters;
}

}  // namespace

CompactApproximation generate_compacts(const Window& w, const Coords& u, int m, const Coords& v, int l,
                                       const CompactOptions& opts) {
    for (int n : {m, l})
        if (std::abs(n) > w.radius() - 1)
            throw WindowEdgeError("rank-one operator at degree " + std::to_string(n) + " is not interior");
    if (opts.require_fullness) {
        const bool fl = fullness(w.source(), Side::left, opts.tol);
        const bool fr = fullness(w.source(), Side::right, opts.tol);
        if (!fl || !fr)
            throw FullnessError(std::string("X is not full on the ") + (!fl && !fr ? "left and the right" : !fl ? "left" : "right"));
    }
    const auto pu = peel(w, u, m, opts.tol);
    const auto pv = peel(w, v, l, opts.tol);
    std::vector<Monomial> terms;
    for (const auto& [lu, a] : pu)
        for (const auto& [lv, b] : pv) {
            Monomial mono{cplx(1.0), lu};
            mono.letters.push_back(Letter::L(a * b.adjoint(), 0));
            const auto tail = adjoint_letters(lv);
            mono.letters.insert(mono.letters.end(), tail.begin(), tail.end());
            terms.push_back(std::move(mono));
        }
    CompactApproximation out;
    out.word = GeneratorWord(std::move(terms));
    const GradedOp target = theta(w, w.delta(m, u), w.delta(l, v));
    out.residual = (evaluate(w, out.word) - target).norm();
    return out;
}

namespace {

/// theta_{e_i, e_j} on a component, summed with coefficients c.
Mat theta_sum(const Bimodule& c, const Mat& coeff) {
    const int d = c.dim();
    const int da = c.algebra().dim();
    Mat out = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (coeff(i, j) == cplx(0.0)) continue;
            const Coords ei = c.basis(i), ej = c.basis(j);
            for (int k = 0; k < da; ++k) out += coeff(i, j) * (c.right()[k] * ei) * (ej.adjoint() * c.ip_right_tensor()[k]);
        }
    return out;
}

/// Least-squares c with sum_ij c_ij <e_i, e_j>_L close to 1.
Mat unit_coefficients(const Bimodule& c) {
    const int d = c.dim();
    const Algebra& alg = c.algebra();
    if (d == 0) return Mat::Zero(0, 0);
    Mat span(alg.dim(), d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) span.col(i * d + j) = alg.vec(c.ip_left(c.basis(i), c.basis(j)));
    const Vec sol = span.completeOrthogonalDecomposition().solve(alg.vec(alg.identity()));
    Mat coeff(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) coeff(i, j) = sol(i * d + j);
    return coeff;
}

double span_residual(const Bimodule& c, const Mat& coeff) {
    const Algebra& alg = c.algebra();
    AlgElem acc = alg.identity();
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.dim(); ++j) acc -= coeff(i, j) * c.ip_left(c.basis(i), c.basis(j));
    return alg_norm(acc);
}

}  // namespace

RankOneApproximation approximate_creation(const Window& w, const Coords& x, int n) {
    const Mat t = creation(w, x, n);
    RankOneApproximation out;
    if (n >= 0) {
        const Bimodule& src = w.component(n);
        out.coefficients = unit_coefficients(src);
        out.span_residual = span_residual(src, out.coefficients);
        out.residual = src.dim() ? op_norm(t - t * theta_sum(src, out.coefficients)) : 0.0;
    } else {
        const Bimodule& src = w.component(n + 1);
        out.coefficients = unit_coefficients(src);
        out.span_residual = span_residual(src, out.coefficients);
        out.residual = src.dim() ? op_norm(t - theta_sum(src, out.coefficients).adjoint() * t) : 0.0;
    }
    return out;
}

RankOneApproximation approximate_left_action(const Window& w, const AlgElem& a, int n) {
    const Bimodule& c = w.component(n);
    const Mat l = c.left_matrix(a);
    RankOneApproximation out;
    out.coefficients = unit_coefficients(c);
    out.span_residual = span_residual(c, out.coefficients);
    out.residual = c.dim() ? op_norm(l - l * theta_sum(c, out.coefficients)) : 0.0;
    return out;
}

// ---------------------------------------------------------------------------

AAlphaPicture a_alpha_picture(const Window& w) {
    const auto& alpha_opt = w.source().automorphism();
    if (!alpha_opt) throw std::invalid_argument("X is not presented as A_alpha");
    const Automorphism& alpha = *alpha_opt;
    const Algebra& alg = w.algebra();
    const int da = alg.dim();
    const int nr = w.radius();

    AAlphaPicture pic{alpha, nr, std::vector<Mat>(2 * nr + 1)};
    pic.intertwiners[nr] = Mat::Identity(da, da);

    for (int sign : {1, -1}) {
        for (int len = 1; len <= nr; ++len) {
            const int n = sign * len;
            long count = 1;
            for (int i = 0; i < len; ++i) count *= da;
            Mat elems(w.dim(n), count), values(da, count);
            std::vector<int> digits(len, 0);
            for (long c = 0; c < count; ++c) {
                long r = c;
                for (int i = len - 1; i >= 0; --i) {
                    digits[i] = static_cast<int>(r % da);
                    r /= da;
                }
                // element a_1 (x) ... (x) a_len, built from the innermost factor outwards
                Coords u;
                AlgElem value = alg.identity();
                for (int k = len; k >= 1; --k) {
                    const Vec ak = alg.vec(alg.basis(digits[k - 1]));
                    const Coords g = sign > 0 ? w.to_window(ak) : w.to_dual_window(ak);
                    u = (k == len) ? g : w.prepend(sign * (len - k + 1), g, u);
                }
                for (int k = 1; k <= len; ++k) {
                    const AlgElem ak = alg.basis(digits[k - 1]);
                    // n > 0: alpha^{-n+k-1}(a_k);  n < 0: alpha^{len-k}(a_k^*)
                    value = value * (sign > 0 ? alpha.apply(ak, -len + k - 1) : alpha.apply(ak.adjoint(), len - k));
                }
                elems.col(c) = u;
                values.col(c) = alg.vec(value);
            }
            pic.intertwiners[n + nr] = values * pinv(elems);
        }
    }
    return pic;
}

}  // namespace fockdual
