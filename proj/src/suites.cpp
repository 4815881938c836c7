#include "fockdual/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fockdual/circle_duality.hpp"
#include "fockdual/crossed_rep.hpp"
#include "fockdual/fock_window.hpp"
#include "fockdual/generator_word.hpp"

namespace fockdual {

namespace {

// Pinned acceptance tolerances. cfg.tol only steers rank decisions.
constexpr double kAxiomTol = 1e-10;
constexpr double kIdentityTol = 1e-10;
constexpr double kExactTol = 1e-12;
constexpr double kSpectralTol = 1e-13;
constexpr double kCompactTol = 1e-8;
constexpr double kQuadratureTol = 1e-14;
constexpr double kRoundTripTol = 1e-13;

constexpr int kCreationSamples = 100;
constexpr int kCovarianceSamples = 50;
constexpr int kPiSamples = 50;
constexpr int kSigmaWords = 100;
constexpr int kIsometrySamples = 50;

// Suite "any" rows apply to every suite.
const std::vector<AnchorRow> kAnchors = {
    {"any", "window-construction", "X^(n) satisfies the axioms for |n| <= N"},

    {"axioms", "bimodule-law", "(ax)b = a(xb)"},
    {"axioms", "left-module", "(ab)x = a(bx), 1x = x"},
    {"axioms", "right-module", "x(ab) = (xa)b, x1 = x"},
    {"axioms", "compatibility", "<x,y>_L z = x<y,z>_R"},
    {"axioms", "left-linearity", "<ax,y>_L = a<x,y>_L"},
    {"axioms", "right-linearity", "<x,ya>_R = <x,y>_R a"},
    {"axioms", "left-hermitian", "<x,y>_L* = <y,x>_L"},
    {"axioms", "right-hermitian", "<x,y>_R* = <y,x>_R"},
    {"axioms", "left-positivity", "<x,x>_L >= 0"},
    {"axioms", "right-positivity", "<x,x>_R >= 0"},
    {"axioms", "left-definiteness", "<x,x>_L = 0 => x = 0"},
    {"axioms", "right-definiteness", "<x,x>_R = 0 => x = 0"},
    {"axioms", "dual-axioms", "a.~x = (xa*)~, ~x.a = (a*x)~, <~x,~y>_L = <x,y>_R, <~x,~y>_R = <x,y>_L"},
    {"axioms", "dual-involution", "~~x = x"},
    {"axioms", "window-components", "X^(n) satisfies the axioms for |n| <= N"},
    {"axioms", "tensor-associativity", "<(x(x)y)(x)z, (x'(x)y')(x)z'>_R = <x(x)(y(x)z), x'(x)(y'(x)z')>_R"},
    {"axioms", "tensor-balancing", "xa (x) y = x (x) ay"},
    {"axioms", "tensor-power-dimension", "dim (A_alpha)^(n) = dim A"},

    {"creation-identities", "tn1-left", "T^n_{ax} = L^{n+1}_a T^n_x"},
    {"creation-identities", "tn1-right", "T^n_{xa} = T^n_x L^n_a"},
    {"creation-identities", "tn2-left", "T^n_x (T^n_y)^* = L^{n+1}_{<x,y>_L}"},
    {"creation-identities", "tn2-right", "(T^n_x)^* T^n_y = L^n_{<x,y>_R}"},
    {"creation-identities", "creation-norm", "||T^n_x|| <= ||x||"},
    {"creation-identities", "creation-adjoint", "T_{x0}^*(x (x) y) = <x0,x>_R y"},
    {"creation-identities", "creation-product", "T_{x0} T_{x1}^*(x (x) y) = <x0,x1>_L x (x) y"},
    {"creation-identities", "negative-creation", "T^n_x(~x1 (x) u) = <x,x1>_L u for n < 0"},
    {"creation-identities", "negative-creation-adjoint", "(T^n_x)^*(u) = ~x (x) u for n < 0"},
    {"creation-identities", "embed-composition", "i_{m,p}(S) i_{n,m}(T) = i_{n,p}(ST)"},
    {"creation-identities", "embed-adjoint", "i_{n,m}(T)^* = i_{m,n}(T^*)"},
    {"creation-identities", "embed-norm", "||i_{n,m}(T)|| = ||T||"},
    {"creation-identities", "theta-adjoint", "theta_{u,v}^* = theta_{v,u}"},
    {"creation-identities", "theta-action", "theta_{u,v}(z) = u<v,z>_R"},
    {"creation-identities", "graded-associativity", "(RS)T = R(ST), (ST)^* = T^* S^*"},
    {"creation-identities", "degree-bookkeeping", "deg T^n_x = 1, deg L^n_a = 0, degrees add under products"},

    {"covariance", "gauge-unitary", "U_lambda U_lambda^* = 1"},
    {"covariance", "gauge-group-law", "U_lambda U_mu = U_{lambda mu}"},
    {"covariance", "gauge-fixes-A", "U_lambda Lambda_A(a) U_lambda^* = Lambda_A(a)"},
    {"covariance", "gauge-rotates-X", "U_lambda Lambda_X(x) U_lambda^* = lambda Lambda_X(x)"},
    {"covariance", "spectral-fixed-A", "P_0(Lambda_A(a)) = Lambda_A(a)"},
    {"covariance", "spectral-fixed-X", "P_1(Lambda_X(x)) = Lambda_X(x)"},
    {"covariance", "spectral-kills-X", "P_0(Lambda_X(x)) = 0"},
    {"covariance", "spectral-degree-two", "P_2(Lambda_X(x) Lambda_X(y)) = Lambda_X(x) Lambda_X(y), P_1(...) = 0"},
    {"covariance", "spectral-completeness", "sum_{|n| <= 2N} P_n(S) = S"},
    {"covariance", "spectral-orthogonality", "P_m P_n = delta_{mn} P_n"},

    {"pi-representation", "lambda-tn1", "Lambda_A(a) Lambda_X(x) = Lambda_X(ax)"},
    {"pi-representation", "lambda-tn2", "Lambda_X(x)^* Lambda_X(y) = Lambda_A(<x,y>_R)"},
    {"pi-representation", "pi-generators", "pi_0(a delta_n) = L^n_a, pi_1(x delta_{n+1}) = T^n_x"},
    {"pi-representation", "pi1-right", "pi_1(f phi) = pi_1(f) pi_0(phi), (f phi)(n) = f(n) phi(n-1)"},
    {"pi-representation", "pi1-left", "pi_1(phi f) = pi_0(phi) pi_1(f)"},
    {"pi-representation", "pi0-right-inner", "pi_0(<f,g>_R) = pi_1(f)^* pi_1(g), <f,g>_R(n) = <f(n+1),g(n+1)>_R"},
    {"pi-representation", "pi0-left-inner", "pi_0(<f,g>_L) = pi_1(f) pi_1(g)^*"},
    {"pi-representation", "pi0-multiplicative", "pi_0(phi psi) = pi_0(phi) pi_0(psi), pi_0(phi^*) = pi_0(phi)^*"},
    {"pi-representation", "pi1-adjoint", "[(pi_1 f)^* xi](n) = (T^n_{f(n+1)})^* xi(n+1)"},
    {"pi-representation", "injectivity-dichotomy", "ker pi_0 = 0 iff A acts faithfully on X from both sides"},
    {"pi-representation", "kernel-witness", "pi_0(phi) = 0 for the exhibited phi != 0"},

    {"compact-generation", "fullness-left", "span <X,X>_L = A"},
    {"compact-generation", "fullness-right", "span <X,X>_R = A"},
    {"compact-generation", "theta-degree-zero", "theta_{a,b} = L^0_{ab*}"},
    {"compact-generation", "theta-generation", "theta_{u delta_m, v delta_l} = word in L^n_a, T^n_x, (T^n_x)^*"},
    {"compact-generation", "unit-in-left-span", "1 in span <X^(n), X^(n)>_L"},
    {"compact-generation", "creation-compact", "T^n_{x<u,v>_L} = theta_{x (x) u, v}"},
    {"compact-generation", "left-action-compact", "L^n_{a<u,v>_L} = theta_{au, v}"},

    {"sigma", "sigma-precondition", "A acts faithfully on X from both sides, so pi is injective"},
    {"sigma", "sigma-relabel", "eval(sigma w) = eval(w) with degrees n -> n-1"},
    {"sigma", "sigma-inverse", "sigma^{-1}(sigma w) = w"},
    {"sigma", "sigma-multiplicative", "sigma(vw) = sigma(v) sigma(w)"},
    {"sigma", "sigma-star", "sigma(w^*) = sigma(w)^*"},
    {"sigma", "sigma-sequence", "pi_0(sigma phi) = sigma(pi_0(phi)), (sigma phi)(n) = phi(n+1)"},
    {"sigma", "sigma-tn2", "sigma(T^0_x (T^0_y)^*) = T^{-1}_x (T^{-1}_y)^* = L^0_{<x,y>_L}"},
    {"sigma", "shift-frame-unitary", "X^(n) (x) X = X^(n+1)"},

    {"fourier", "quadrature-exactness", "(1/M) sum_j w_j^k = delta_{k,0} for |k| < M"},
    {"fourier", "quadrature-nyquist", "M <= degree is rejected"},
    {"fourier", "monomial-image", "J_Y(lambda^k x) = x delta_{1-k}"},
    {"fourier", "monomial-image-quadrature", "int lambda^{n-1} lambda^k x d lambda = x delta_{n,1-k}"},
    {"fourier", "loop-a-image", "I(lambda^{-n} a) = a delta_n"},
    {"fourier", "round-trip", "I^{-1}(I f) = f"},
    {"fourier", "left-action-intertwined", "I(phi f)(n) = I(phi)(n) I(f)(n)"},
    {"fourier", "right-action-intertwined", "I(f phi)(n) = I(f)(n) I(phi)(n-1)"},
    {"fourier", "left-inner-product-intertwined", "J_A(<f,g>_L)(n) = <J_Y f(n), J_Y g(n)>_L"},
    {"fourier", "right-inner-product-intertwined", "J_A(<f,g>_R)(n) = <J_Y f(n+1), J_Y g(n+1)>_R"},
    {"fourier", "isometry", "||f|| = sup_n ||J_Y f(n)||"},

    {"a-alpha-picture", "a-alpha-precondition", "X = A_alpha"},
    {"a-alpha-picture", "intertwiner-identity", "I_0 = id_A"},
    {"a-alpha-picture", "intertwiner-unitary", "I_n^* I_n = 1"},
    {"a-alpha-picture", "intertwiner-module-map", "I_n(cb) = I_n(c) b, I_n(c)^* I_n(c') = <c,c'>_R"},
    {"a-alpha-picture", "intertwiner-formula",
     "I_n(a_1 (x)...(x) a_n) = alpha^{-n}(a_1)...alpha^{-1}(a_n), I_{-n}(~a_1 (x)...(x) ~a_n) = alpha^{n-1}(a_1^*)...a_n^*"},
    {"a-alpha-picture", "in1", "I_n(L^n_a c) = alpha^{-n}(a) I_n(c)"},
    {"a-alpha-picture", "in2", "I_{n+1}(T^n_x c) = alpha^{-(n+1)}(x) I_n(c)"},
    {"a-alpha-picture", "conjugate-left", "I L^n_a I^* = E_nn (x) alpha^{-n}(a)"},
    {"a-alpha-picture", "conjugate-creation", "I T^n_x I^* = E_{n+1,n} (x) alpha^{-(n+1)}(x)"},
    {"a-alpha-picture", "sigma-transport", "I sigma(S) I^* = (Ad rho (x) alpha)(I S I^*)"},
};

const std::vector<std::string> kSuites = {"axioms",  "creation-identities", "covariance", "pi-representation",
                                          "compact-generation", "sigma", "fourier", "a-alpha-picture"};

double amax(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double op_norm(const Mat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

/// Report that looks anchors up in the table.
class Checks {
public:
    explicit Checks(std::string suite) : rep_(suite), suite_(std::move(suite)) {}

    void add(const std::string& id, double violation, double tol, std::string note = {}) {
        rep_.add(id, anchor_for(suite_, id), violation, tol, std::move(note));
    }
    void flag(const std::string& id, bool ok, std::string note = {}) {
        rep_.add_flag(id, anchor_for(suite_, id), ok, std::move(note));
    }
    /// Entries produced elsewhere; anchors are taken from the table.
    void take(const Report& r) {
        for (const auto& e : r.entries()) {
            ReportEntry& n = rep_.add(e.check_id, anchor_for(suite_, e.check_id), e.violation, e.tolerance, e.note);
            n.pass = e.pass;
        }
    }
    Report release() { return std::move(rep_); }

private:
    Report rep_;
    std::string suite_;
};

SeqA random_seq_a(const Algebra& a, int lo, int hi, Rng& rng) {
    std::bernoulli_distribution keep(0.6);
    SeqA s;
    for (int n = lo; n <= hi; ++n)
        if (keep(rng)) s.emplace(n, random_element(a, rng));
    if (s.empty() && lo <= hi) s.emplace(lo, random_element(a, rng));
    return s;
}

SeqX random_seq_x(const Bimodule& x, int lo, int hi, Rng& rng) {
    std::bernoulli_distribution keep(0.6);
    SeqX s;
    for (int n = lo; n <= hi; ++n)
        if (keep(rng)) s.emplace(n, x.random(rng));
    if (s.empty() && lo <= hi) s.emplace(lo, x.random(rng));
    return s;
}

GradedVec random_graded(const Window& w, Rng& rng) {
    GradedVec v = w.zero_vec();
    for (int n = -w.radius(); n <= w.radius(); ++n) v.at(n) = random_vector(w.dim(n), rng);
    return v;
}

GradedOp random_graded_op(const Window& w, Rng& rng) {
    GradedOp op = w.zero_op();
    for (int s = -w.radius(); s <= w.radius(); ++s)
        for (int t = -w.radius(); t <= w.radius(); ++t) op.set_block(s, t, random_matrix(w.dim(t), w.dim(s), rng));
    return op;
}

Vec apply(const GradedOp& op, const GradedVec& v) {
    const Grading& g = op.grading();
    Vec flat(g.total());
    for (int n = -g.radius; n <= g.radius; ++n)
        if (g.dim(n)) flat.segment(g.offset(n), g.dim(n)) = v.at(n);
    return op.dense() * flat;
}

Vec flatten(const Window& w, const GradedVec& v) {
    const Grading& g = w.grading();
    Vec flat(g.total());
    for (int n = -g.radius; n <= g.radius; ++n)
        if (g.dim(n)) flat.segment(g.offset(n), g.dim(n)) = v.at(n);
    return flat;
}

LoopA random_loop_a(const Algebra& a, int degree, Rng& rng) {
    std::uniform_int_distribution<int> deg(-degree, degree);
    std::uniform_int_distribution<int> count(1, 3);
    LoopA f;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) f.insert_or_assign(deg(rng), random_element(a, rng));
    return f;
}

LoopX random_loop_x(const Bimodule& x, int degree, Rng& rng) {
    std::uniform_int_distribution<int> deg(-degree, degree);
    std::uniform_int_distribution<int> count(1, 3);
    LoopX f;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) f[deg(rng)] = x.random(rng);
    return f;
}

WindowOptions window_options(const SuiteConfig& cfg) {
    WindowOptions o;
    o.tol = cfg.tol;
    return o;
}

// ---------------------------------------------------------------------------

Report suite_axioms(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("axioms");
    const Report base = check_axioms(x, kAxiomTol);
    c.take(base);

    const Bimodule xt = dual(x, cfg.tol, false);
    const Report dual_rep = check_axioms(xt, kAxiomTol);
    c.flag("dual-axioms", dual_rep.passed(),
           dual_rep.passed() ? std::string() : "failing: " + dual_rep.failing_checks().front());

    const Bimodule xtt = dual(xt, cfg.tol, false);
    double inv = 0.0;
    for (int k = 0; k < x.algebra().dim(); ++k) {
        inv = std::max(inv, amax(xtt.left()[k] - x.left()[k]));
        inv = std::max(inv, amax(xtt.right()[k] - x.right()[k]));
        inv = std::max(inv, amax(xtt.ip_left_tensor()[k] - x.ip_left_tensor()[k]));
        inv = std::max(inv, amax(xtt.ip_right_tensor()[k] - x.ip_right_tensor()[k]));
    }
    c.add("dual-involution", inv, 0.0);

    if (!base.passed()) return c.release();

    std::string note;
    bool ok = true;
    try {
        Window w(x, cfg.radius, window_options(cfg));
        std::ostringstream dims;
        for (int n = -cfg.radius; n <= cfg.radius; ++n) dims << (n > -cfg.radius ? "," : "") << w.dim(n);
        note = "dims " + dims.str();
        if (x.automorphism()) {
            bool dims_ok = true;
            for (int n = -cfg.radius; n <= cfg.radius; ++n) dims_ok = dims_ok && w.dim(n) == x.algebra().dim();
            c.flag("tensor-power-dimension", dims_ok, note);
        }
    } catch (const AxiomError& e) {
        ok = false;
        note = e.what();
    }
    c.flag("window-components", ok, note);

    // (X (x) X) (x) X against X (x) (X (x) X), compared through right inner products of images
    TensorOptions topts;
    topts.tol = cfg.tol;
    const TensorProduct xx = tensor(x, x, topts);
    const TensorProduct left = tensor(xx.module, x, topts);
    const TensorProduct right = tensor(x, xx.module, topts);
    double assoc = left.module.dim() == right.module.dim() ? 0.0 : 1.0;
    double balance = 0.0;
    for (int s = 0; s < 10; ++s) {
        const Coords a = x.random(rng), b = x.random(rng), d = x.random(rng);
        const Coords a2 = x.random(rng), b2 = x.random(rng), d2 = x.random(rng);
        const Coords l1 = left.factor_map(xx.factor_map(a, b), d);
        const Coords l2 = left.factor_map(xx.factor_map(a2, b2), d2);
        const Coords r1 = right.factor_map(a, xx.factor_map(b, d));
        const Coords r2 = right.factor_map(a2, xx.factor_map(b2, d2));
        assoc = std::max(assoc, max_abs_diff(left.module.ip_right(l1, l2), right.module.ip_right(r1, r2)));
        const AlgElem e = random_element(x.algebra(), rng);
        const Coords bal = xx.factor_map(x.right_act(a, e), b) - xx.factor_map(a, x.left_act(e, b));
        balance = std::max(balance, bal.size() ? bal.cwiseAbs().maxCoeff() : 0.0);
    }
    c.add("tensor-associativity", assoc, 1e-9);
    c.add("tensor-balancing", balance, kAxiomTol);
    return c.release();
}

Report suite_creation(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("creation-identities");
    const Window w(x, cfg.radius, window_options(cfg));
    c.take(verify_creation_identities(w, kCreationSamples, kIdentityTol, rng));

    std::uniform_int_distribution<int> deg(-w.radius(), w.radius());
    double comp = 0.0, adj = 0.0, nrm = 0.0, tadj = 0.0, tact = 0.0, assoc = 0.0;
    for (int s = 0; s < 20; ++s) {
        const int n = deg(rng), m = deg(rng), p = deg(rng);
        const Mat t = random_matrix(w.dim(m), w.dim(n), rng);
        const Mat sm = random_matrix(w.dim(p), w.dim(m), rng);
        comp = std::max(comp, max_abs_diff(embed(w, sm, m, p) * embed(w, t, n, m), embed(w, sm * t, n, p)));
        adj = std::max(adj, max_abs_diff(embed(w, t, n, m).adjoint(), embed(w, t.adjoint(), m, n)));
        nrm = std::max(nrm, std::abs(embed(w, t, n, m).norm() - op_norm(t)));

        const GradedVec u = random_graded(w, rng), v = random_graded(w, rng), z = random_graded(w, rng);
        tadj = std::max(tadj, max_abs_diff(theta(w, u, v).adjoint(), theta(w, v, u)));
        // u <v, z>_R evaluated degree by degree with the right action
        const AlgElem ip = window_inner(w, v, z);
        GradedVec direct = w.zero_vec();
        for (int k = -w.radius(); k <= w.radius(); ++k)
            if (w.dim(k)) direct.at(k) = w.component(k).right_act(u.at(k), ip);
        const Vec diff = apply(theta(w, u, v), z) - flatten(w, direct);
        tact = std::max(tact, diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0);

        const GradedOp r1 = random_graded_op(w, rng), r2 = random_graded_op(w, rng), r3 = random_graded_op(w, rng);
        assoc = std::max(assoc, max_abs_diff((r1 * r2) * r3, r1 * (r2 * r3)) / std::max(1.0, ((r1 * r2) * r3).max_abs()));
        assoc = std::max(assoc, max_abs_diff((r1 * r2).adjoint(), r2.adjoint() * r1.adjoint()));
    }
    c.add("embed-composition", comp, kIdentityTol);
    c.add("embed-adjoint", adj, 0.0);
    c.add("embed-norm", nrm, kIdentityTol);
    c.add("theta-adjoint", tadj, kIdentityTol);
    c.add("theta-action", tact, kIdentityTol);
    c.add("graded-associativity", assoc, kIdentityTol);

    bool degrees = true;
    for (int n = -w.radius(); n <= w.radius() - 1; ++n) {
        const Coords xv = x.random(rng);
        const AlgElem a = random_element(x.algebra(), rng);
        const GradedOp t = embed(w, creation(w, xv, n), n, n + 1);
        const GradedOp l = embed(w, left_action_op(w, a, n), n, n);
        const auto dt = t.pure_degree(), dl = l.pure_degree();
        // zero blocks (zero-dimensional components) carry no degree
        degrees = degrees && (!dt || *dt == 1) && (!dl || *dl == 0);
        const auto dtl = (t * l).pure_degree();
        degrees = degrees && (!dtl || *dtl == 1);
    }
    c.flag("degree-bookkeeping", degrees);
    return c.release();
}

Report suite_covariance(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("covariance");
    const Window w(x, cfg.radius, window_options(cfg));
    const int m = cfg.quadrature_points();
    const GradedOp id = w.identity_op();

    std::vector<cplx> roots;
    for (int k = 0; k < 8; ++k) roots.push_back(std::polar(1.0, 2.0 * M_PI * k / 8.0));

    double unit = 0.0, group = 0.0, fix_a = 0.0, rot_x = 0.0;
    for (cplx l : roots) {
        const GradedOp u = gauge(w, l);
        unit = std::max(unit, max_abs_diff(u * u.adjoint(), id));
        for (cplx mu : roots) group = std::max(group, max_abs_diff(u * gauge(w, mu), gauge(w, l * mu)));
    }
    for (int s = 0; s < kCovarianceSamples; ++s) {
        const AlgElem a = random_element(x.algebra(), rng);
        const Coords xv = x.random(rng);
        const GradedOp la = lambda_A(w, a), lx = lambda_X(w, xv);
        for (cplx l : roots) {
            const GradedOp u = gauge(w, l);
            fix_a = std::max(fix_a, max_abs_diff(u * la * u.adjoint(), la));
            rot_x = std::max(rot_x, max_abs_diff(u * lx * u.adjoint(), lx * l));
        }
    }
    c.add("gauge-unitary", unit, kExactTol);
    c.add("gauge-group-law", group, kExactTol);
    c.add("gauge-fixes-A", fix_a, kExactTol);
    c.add("gauge-rotates-X", rot_x, kExactTol);

    double p0a = 0.0, p1x = 0.0, p0x = 0.0, p2 = 0.0, complete = 0.0, orth = 0.0;
    for (int s = 0; s < 5; ++s) {
        const AlgElem a = random_element(x.algebra(), rng);
        const Coords xv = x.random(rng), yv = x.random(rng);
        const GradedOp la = lambda_A(w, a), lx = lambda_X(w, xv), lxy = lx * lambda_X(w, yv);
        p0a = std::max(p0a, max_abs_diff(spectral_projection(w, la, 0, m), la));
        p1x = std::max(p1x, max_abs_diff(spectral_projection(w, lx, 1, m), lx));
        p0x = std::max(p0x, spectral_projection(w, lx, 0, m).max_abs());
        p2 = std::max(p2, max_abs_diff(spectral_projection(w, lxy, 2, m), lxy));
        p2 = std::max(p2, spectral_projection(w, lxy, 1, m).max_abs());

        const GradedOp sop = random_graded_op(w, rng);
        GradedOp sum = w.zero_op();
        std::vector<GradedOp> parts;
        for (int n = -2 * w.radius(); n <= 2 * w.radius(); ++n) {
            parts.push_back(spectral_projection(w, sop, n, m));
            sum = sum + parts.back();
        }
        complete = std::max(complete, max_abs_diff(sum, sop));
        for (int i = 0; i < static_cast<int>(parts.size()); i += 3)
            for (int j = 0; j < static_cast<int>(parts.size()); j += 2) {
                const int ni = i - 2 * w.radius(), nj = j - 2 * w.radius();
                const GradedOp pp = spectral_projection(w, parts[j], ni, m);
                orth = std::max(orth, ni == nj ? max_abs_diff(pp, parts[j]) : pp.max_abs());
            }
    }
    const std::string rule = "M = " + std::to_string(m);
    c.add("spectral-fixed-A", p0a, kSpectralTol, rule);
    c.add("spectral-fixed-X", p1x, kSpectralTol, rule);
    c.add("spectral-kills-X", p0x, kSpectralTol, rule);
    c.add("spectral-degree-two", p2, kSpectralTol, rule);
    c.add("spectral-completeness", complete, kSpectralTol, rule);
    c.add("spectral-orthogonality", orth, kSpectralTol, rule);
    return c.release();
}

Report suite_pi(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("pi-representation");
    const Window w(x, cfg.radius, window_options(cfg));
    const Algebra& alg = x.algebra();
    const int nr = w.radius();
    const int lo = -nr + 1, hi = nr - 1;

    double tn1 = 0.0, tn2 = 0.0, gens = 0.0;
    for (int s = 0; s < kPiSamples; ++s) {
        const AlgElem a = random_element(alg, rng);
        const Coords xv = x.random(rng), yv = x.random(rng);
        const GradedOp lhs1 = (lambda_A(w, a) * lambda_X(w, xv)).restricted(lo, hi);
        tn1 = std::max(tn1, max_abs_diff(lhs1, lambda_X(w, x.left_act(a, xv)).restricted(lo, hi)));
        const GradedOp lhs2 = (lambda_X(w, xv).adjoint() * lambda_X(w, yv)).restricted(lo, hi);
        tn2 = std::max(tn2, max_abs_diff(lhs2, lambda_A(w, x.ip_right(xv, yv)).restricted(lo, hi)));
        for (int n = lo; n <= hi; ++n) {
            gens = std::max(gens, max_abs_diff(pi0(w, SeqA{{n, a}}), embed(w, left_action_op(w, a, n), n, n)));
            gens = std::max(gens, max_abs_diff(pi1(w, SeqX{{n + 1, xv}}), embed(w, creation(w, xv, n), n, n + 1)));
        }
    }
    c.add("lambda-tn1", tn1, kIdentityTol);
    c.add("lambda-tn2", tn2, kIdentityTol);
    c.add("pi-generators", gens, 0.0);

    double right = 0.0, left = 0.0, ipr = 0.0, ipl = 0.0, mult = 0.0, adjf = 0.0;
    for (int s = 0; s < kPiSamples; ++s) {
        const SeqA phi = random_seq_a(alg, lo, hi, rng), psi = random_seq_a(alg, lo, hi, rng);
        const SeqX f = random_seq_x(x, lo + 1, hi, rng), g = random_seq_x(x, lo + 1, hi, rng);
        const GradedOp pf = pi1(w, f), pg = pi1(w, g), pp = pi0(w, phi);
        right = std::max(right, max_abs_diff(pi1(w, seq_right(x, f, phi)), pf * pp));
        left = std::max(left, max_abs_diff(pi1(w, seq_left(x, phi, f)), pp * pf));
        ipr = std::max(ipr, max_abs_diff(pi0(w, seq_ip_right(x, f, g)), pf.adjoint() * pg));
        ipl = std::max(ipl, max_abs_diff(pi0(w, seq_ip_left(x, f, g)), pf * pg.adjoint()));
        mult = std::max(mult, max_abs_diff(pi0(w, seq_mul(phi, psi)), pp * pi0(w, psi)));
        mult = std::max(mult, max_abs_diff(pi0(w, seq_adjoint(phi)), pp.adjoint()));

        // [(pi_1 f)^* xi](n) = (T^n_{f(n+1)})^* xi(n+1): on negative degrees the adjoint
        // prepends ~f(n+1); on the others it is checked through <pi_1(f) eta, xi> = <eta, (.) xi>
        const GradedOp pfs = pf.adjoint();
        for (const auto& [k, xk] : f) {
            const int n = k - 1;
            const Mat blk = pfs.block(n + 1, n);
            if (n < 0) {
                Mat direct(w.dim(n), w.dim(n + 1));
                for (int j = 0; j < w.dim(n + 1); ++j)
                    direct.col(j) = w.prepend(n, w.to_dual_window(xk), w.component(n + 1).basis(j));
                adjf = std::max(adjf, amax(blk - direct));
            } else {
                const Coords eta = random_vector(w.dim(n), rng), xi = random_vector(w.dim(n + 1), rng);
                const AlgElem l1 = w.component(n + 1).ip_right(creation(w, xk, n) * eta, xi);
                const AlgElem l2 = w.component(n).ip_right(eta, blk * xi);
                adjf = std::max(adjf, max_abs_diff(l1, l2));
            }
        }
    }
    c.add("pi1-right", right, kIdentityTol);
    c.add("pi1-left", left, kIdentityTol);
    c.add("pi0-right-inner", ipr, kIdentityTol);
    c.add("pi0-left-inner", ipl, kIdentityTol);
    c.add("pi0-multiplicative", mult, kIdentityTol);
    c.add("pi1-adjoint", adjf, kExactTol);

    const bool fl = action_faithful(x, Side::left, cfg.tol);
    const bool fr = action_faithful(x, Side::right, cfg.tol);
    const Pi0Kernel ker = pi0_kernel(w, lo, hi, cfg.tol);
    std::ostringstream note;
    note << "left action " << (fl ? "faithful" : "not faithful") << ", right action "
         << (fr ? "faithful" : "not faithful") << ", dim ker pi_0 on [" << lo << "," << hi << "] = " << ker.dimension;
    c.flag("injectivity-dichotomy", (fl && fr) == (ker.dimension == 0), note.str());
    if (ker.witness) {
        const auto& [n, a] = *ker.witness->begin();
        std::ostringstream wn;
        wn << "phi = a delta_" << n << " with ||a|| = " << alg_norm(a);
        c.add("kernel-witness", pi0(w, *ker.witness).max_abs() / std::max(alg_norm(a), 1e-300), kIdentityTol, wn.str());
    }
    return c.release();
}

Report suite_compacts(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("compact-generation");
    const Window w(x, cfg.radius, window_options(cfg));
    const Algebra& alg = x.algebra();
    const bool fl = fullness(x, Side::left, cfg.tol);
    const bool fr = fullness(x, Side::right, cfg.tol);
    c.flag("fullness-left", fl);
    c.flag("fullness-right", fr);

    double zero = 0.0;
    for (int s = 0; s < 10; ++s) {
        const AlgElem a = random_element(alg, rng), b = random_element(alg, rng);
        const GradedOp th = theta(w, w.delta(0, alg.vec(a)), w.delta(0, alg.vec(b)));
        zero = std::max(zero, max_abs_diff(th, embed(w, left_action_op(w, a * b.adjoint(), 0), 0, 0)));
    }
    c.add("theta-degree-zero", zero, kExactTol);

    const int r = std::max(0, cfg.radius - 2);
    CompactOptions opts;
    opts.tol = cfg.tol;
    try {
        double worst = 0.0;
        for (int m = -r; m <= r; ++m)
            for (int l = -r; l <= r; ++l)
                for (int s = 0; s < 3; ++s) {
                    if (w.dim(m) == 0 || w.dim(l) == 0) continue;
                    const auto approx = generate_compacts(w, random_vector(w.dim(m), rng), m,
                                                          random_vector(w.dim(l), rng), l, opts);
                    worst = std::max(worst, approx.residual);
                }
        c.add("theta-generation", worst, kCompactTol, "|m|, |l| <= " + std::to_string(r));
    } catch (const FullnessError& e) {
        c.flag("theta-generation", false, std::string("obstruction: ") + e.what() +
                                              "; the image of pi equals the compacts only for X full on both sides");
    }

    double span = 0.0, tres = 0.0, lres = 0.0;
    int worst_degree = 0;
    for (int n = -cfg.radius + 1; n <= cfg.radius - 1; ++n) {
        const auto ta = approximate_creation(w, x.random(rng), n);
        const auto la = approximate_left_action(w, random_element(alg, rng), n);
        if (w.dim(n) > 0 && la.span_residual > span) {
            span = la.span_residual;
            worst_degree = n;
        }
        tres = std::max(tres, ta.residual);
        lres = std::max(lres, la.residual);
    }
    c.add("unit-in-left-span", span, kCompactTol, span > kCompactTol ? "worst at degree " + std::to_string(worst_degree) : "");
    c.add("creation-compact", tres, kCompactTol);
    c.add("left-action-compact", lres, kCompactTol);
    return c.release();
}

Report suite_sigma(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("sigma");
    const bool fl = action_faithful(x, Side::left, cfg.tol);
    const bool fr = action_faithful(x, Side::right, cfg.tol);
    c.flag("sigma-precondition", fl && fr,
           fl && fr ? std::string() : "sigma is defined on the image of pi only when pi is injective");
    if (!(fl && fr)) return c.release();

    const Window w(x, cfg.radius, window_options(cfg));
    const ShiftFrame frame(w, cfg.tol);
    c.add("shift-frame-unitary", frame.unitarity_defect(), kIdentityTol);

    const int lo = -cfg.radius + 2, hi = cfg.radius - 1;
    double relabel = 0.0;
    bool inverse = true, mult = true, star = true;
    if (lo <= hi) {
        for (int s = 0; s < kSigmaWords; ++s) {
            const GeneratorWord v = random_word(x, lo, hi, 3, 4, rng);
            const GradedOp lhs = evaluate(w, v);
            const GradedOp rhs = frame.relabel_up(evaluate(w, sigma(v)));
            relabel = std::max(relabel, max_abs_diff(lhs, rhs));

            const GeneratorWord u = random_word(x, lo, hi, 2, 3, rng);
            inverse = inverse && sigma_inverse(sigma(v)) == v && sigma(sigma_inverse(v)) == v;
            mult = mult && sigma(u * v) == sigma(u) * sigma(v) && sigma(u + v) == sigma(u) + sigma(v);
            star = star && sigma(v.adjoint()) == sigma(v).adjoint();
        }
    }
    c.add("sigma-relabel", relabel, kExactTol);
    c.flag("sigma-inverse", inverse);
    c.flag("sigma-multiplicative", mult);
    c.flag("sigma-star", star);

    double seq = 0.0, tn2 = 0.0;
    for (int s = 0; s < 20; ++s) {
        const SeqA phi = random_seq_a(x.algebra(), -cfg.radius + 1, cfg.radius, rng);
        std::vector<Monomial> terms;
        for (const auto& [n, a] : phi) terms.push_back({cplx(1.0), {Letter::L(a, n)}});
        seq = std::max(seq, max_abs_diff(pi0(w, sigma_seq(phi)), evaluate(w, sigma(GeneratorWord(terms)))));

        const Coords xv = x.random(rng), yv = x.random(rng);
        const GeneratorWord word = GeneratorWord(Letter::T(xv, 0)) * GeneratorWord(Letter::Tstar(yv, 0));
        tn2 = std::max(tn2, max_abs_diff(evaluate(w, sigma(word)), evaluate(w, GeneratorWord(Letter::L(x.ip_left(xv, yv), 0)))));
    }
    c.add("sigma-sequence", seq, 0.0);
    c.add("sigma-tn2", tn2, kIdentityTol);
    return c.release();
}

Report suite_fourier(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("fourier");
    const Algebra& alg = x.algebra();
    const int m = cfg.quadrature_points();

    double exact = 0.0;
    for (int k = -(m - 1); k <= m - 1; ++k) exact = std::max(exact, std::abs(quadrature_moment(k, m) - (k == 0 ? 1.0 : 0.0)));
    c.add("quadrature-exactness", exact, kQuadratureTol, "M = " + std::to_string(m));

    bool rejected = false;
    try {
        (void)circle_integrate(LoopA{{2, alg.identity()}}, 2, alg);
    } catch (const QuadratureError&) {
        rejected = true;
    }
    c.flag("quadrature-nyquist", rejected);

    double mono = 0.0, mono_q = 0.0, loop_a = 0.0, round = 0.0;
    for (int k = -3; k <= 3; ++k) {
        const Coords xv = x.random(rng);
        const LoopX f{{k, xv}};
        mono = std::max(mono, seq_diff(iso_I(f), SeqX{{1 - k, xv}}));
        mono_q = std::max(mono_q, seq_diff(iso_I_quadrature(f, m, x.dim()), SeqX{{1 - k, xv}}));
        const AlgElem a = random_element(alg, rng);
        loop_a = std::max(loop_a, seq_diff(iso_I(LoopA{{-k, a}}), SeqA{{k, a}}));
    }
    for (int s = 0; s < 20; ++s) {
        const LoopX f = random_loop_x(x, 3, rng);
        const LoopA phi = random_loop_a(alg, 3, rng);
        round = std::max(round, seq_diff(iso_I(iso_I_inverse(iso_I(f))), iso_I(f)));
        SeqA back;
        for (const auto& [k, a] : iso_I_inverse(iso_I(phi))) back.emplace(k, a);
        SeqA orig(phi.begin(), phi.end());
        round = std::max(round, seq_diff(back, orig));
    }
    c.add("monomial-image", mono, 0.0, "|k| <= 3");
    c.add("monomial-image-quadrature", mono_q, kExactTol);
    c.add("loop-a-image", loop_a, 0.0);
    c.add("round-trip", round, kRoundTripTol);

    Report ys("fourier");
    // monomials, constants, zero loops, then random trigonometric polynomials
    for (int k = -2; k <= 2; ++k)
        ys.merge_worst(y_structure_check(x, LoopX{{k, x.random(rng)}}, LoopX{{k, x.random(rng)}},
                                         LoopA{{0, random_element(alg, rng)}}, kExactTol));
    ys.merge_worst(y_structure_check(x, LoopX{}, LoopX{}, LoopA{}, kExactTol));
    for (int s = 0; s < 10; ++s)
        ys.merge_worst(y_structure_check(x, random_loop_x(x, 3, rng), random_loop_x(x, 3, rng),
                                         random_loop_a(alg, 3, rng), kExactTol));
    c.take(ys);

    double iso = 0.0;
    for (int s = 0; s < kIsometrySamples; ++s) {
        const LoopX f = random_loop_x(x, 3, rng);
        iso = std::max(iso, std::abs(loop_norm(x, f) - seq_norm(x, iso_I(f))));
    }
    c.add("isometry", iso, kIdentityTol, "loop norm from the convolution operator of <f,f>_R");
    return c.release();
}

Report suite_a_alpha(const Bimodule& x, const SuiteConfig& cfg, Rng& rng) {
    Checks c("a-alpha-picture");
    c.flag("a-alpha-precondition", x.automorphism().has_value(),
           x.automorphism() ? std::string() : "X was not constructed from an automorphism");
    if (!x.automorphism()) return c.release();

    const Window w(x, cfg.radius, window_options(cfg));
    const AAlphaPicture pic = a_alpha_picture(w);
    const Automorphism& alpha = pic.alpha;
    const Algebra& alg = x.algebra();
    const int nr = w.radius();
    const int da = alg.dim();
    const Mat amat = alpha.matrix();
    const Mat amat_inv = alpha.inverse().matrix();

    c.add("intertwiner-identity", amax(pic.I(0) - Mat::Identity(da, da)), 0.0);

    double unit = 0.0, modmap = 0.0;
    for (int n = -nr; n <= nr; ++n) {
        const Mat& in = pic.I(n);
        unit = std::max(unit, amax(in.adjoint() * in - Mat::Identity(in.cols(), in.cols())));
        unit = std::max(unit, amax(in * in.adjoint() - Mat::Identity(in.rows(), in.rows())));
        for (int s = 0; s < 5; ++s) {
            const Coords cv = random_vector(w.dim(n), rng), cw = random_vector(w.dim(n), rng);
            const AlgElem b = random_element(alg, rng);
            const Bimodule& comp = w.component(n);
            modmap = std::max(modmap, amax(in * comp.right_act(cv, b) - alg.right_mult_matrix(b) * (in * cv)));
            const AlgElem ip = alg.unvec(in * cv).adjoint() * alg.unvec(in * cw);
            modmap = std::max(modmap, max_abs_diff(ip, comp.ip_right(cv, cw)));
        }
    }
    c.add("intertwiner-unitary", unit, kExactTol);
    c.add("intertwiner-module-map", modmap, kExactTol);

    // closed formula on random elementary tensors of length 2
    double formula = 0.0;
    if (nr >= 2) {
        for (int s = 0; s < 10; ++s) {
            const AlgElem a1 = random_element(alg, rng), a2 = random_element(alg, rng);
            const Coords pos = w.prepend(2, w.to_window(alg.vec(a1)), w.to_window(alg.vec(a2)));
            formula = std::max(formula, amax(pic.I(2) * pos - alg.vec(alpha.apply(a1, -2) * alpha.apply(a2, -1))));
            const Coords neg = w.prepend(-2, w.to_dual_window(alg.vec(a1)), w.to_dual_window(alg.vec(a2)));
            formula = std::max(formula,
                               amax(pic.I(-2) * neg - alg.vec(alpha.apply(a1.adjoint(), 1) * a2.adjoint())));
        }
    }
    c.add("intertwiner-formula", formula, kExactTol);

    double in1 = 0.0, in2 = 0.0, conj_l = 0.0, conj_t = 0.0, transport = 0.0;
    for (int s = 0; s < 10; ++s) {
        const AlgElem a = random_element(alg, rng);
        const Coords xv = x.random(rng);
        for (int n = -nr; n <= nr; ++n) {
            const Mat l = left_action_op(w, a, n);
            const Mat target = alg.left_mult_matrix(alpha.apply(a, -n));
            in1 = std::max(in1, amax(pic.I(n) * l - target * pic.I(n)));
            conj_l = std::max(conj_l, amax(pic.I(n) * l * pic.I(n).adjoint() - target));
            if (n < nr) {
                const Mat t = creation(w, xv, n);
                const Mat tt = alg.left_mult_matrix(alpha.apply(alg.unvec(xv), -(n + 1)));
                in2 = std::max(in2, amax(pic.I(n + 1) * t - tt * pic.I(n)));
                conj_t = std::max(conj_t, amax(pic.I(n + 1) * t * pic.I(n).adjoint() - tt));
            }
            // sigma moves L^n_a to L^{n-1}_a; Ad rho (x) alpha moves E_nn (x) b to E_{n-1,n-1} (x) alpha(b)
            if (n > -nr) {
                const Mat shifted = pic.I(n - 1) * left_action_op(w, a, n - 1) * pic.I(n - 1).adjoint();
                transport = std::max(transport, amax(shifted - amat * (pic.I(n) * l * pic.I(n).adjoint()) * amat_inv));
                if (n < nr) {
                    const Mat ts = pic.I(n) * creation(w, xv, n - 1) * pic.I(n - 1).adjoint();
                    const Mat tn = pic.I(n + 1) * creation(w, xv, n) * pic.I(n).adjoint();
                    transport = std::max(transport, amax(ts - amat * tn * amat_inv));
                }
            }
        }
    }
    c.add("in1", in1, kExactTol);
    c.add("in2", in2, kExactTol);
    c.add("conjugate-left", conj_l, kExactTol);
    c.add("conjugate-creation", conj_t, kExactTol);
    c.add("sigma-transport", transport, kExactTol);
    return c.release();
}

}  // namespace

const std::vector<std::string>& suite_names() { return kSuites; }

const std::vector<AnchorRow>& anchor_table() { return kAnchors; }

const std::string& anchor_for(const std::string& suite, const std::string& check_id) {
    for (const auto& row : kAnchors)
        if (row.suite == suite && row.check_id == check_id) return row.anchor;
    for (const auto& row : kAnchors)
        if (row.suite == "any" && row.check_id == check_id) return row.anchor;
    throw std::out_of_range("no anchor for " + suite + "/" + check_id);
}

Report run_suite(const std::string& name, const Bimodule& x, const SuiteConfig& cfg) {
    using Fn = Report (*)(const Bimodule&, const SuiteConfig&, Rng&);
    static const std::map<std::string, Fn> table = {
        {"axioms", suite_axioms},         {"creation-identities", suite_creation},
        {"covariance", suite_covariance}, {"pi-representation", suite_pi},
        {"compact-generation", suite_compacts}, {"sigma", suite_sigma},
        {"fourier", suite_fourier},       {"a-alpha-picture", suite_a_alpha},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    const auto idx = static_cast<std::uint64_t>(std::find(kSuites.begin(), kSuites.end(), name) - kSuites.begin());
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(idx)};
    Rng rng(seq);
    try {
        return it->second(x, cfg, rng);
    } catch (const AxiomError& e) {
        // the window cannot be built on a module that violates the axioms
        Report r(name);
        r.add_flag("window-construction", anchor_for(name, "window-construction"), false, e.what());
        return r;
    }
}

}  // namespace fockdual
