#pragma once

// The representations Lambda and pi on the truncated Fock module, gauge
// unitaries, the shift sigma, compact generation and the A_alpha picture.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fockdual/fock_window.hpp"
#include "fockdual/generator_word.hpp"

namespace fockdual {

struct FullnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Finitely supported sequences Z -> A and Z -> X.

using SeqA = std::map<int, AlgElem>;
using SeqX = std::map<int, Coords>;

/// (phi f)(n) = phi(n) f(n)
SeqX seq_left(const Bimodule& x, const SeqA& phi, const SeqX& f);
/// (f phi)(n) = f(n) phi(n-1)
SeqX seq_right(const Bimodule& x, const SeqX& f, const SeqA& phi);
/// <f,g>_L(n) = <f(n), g(n)>_L
SeqA seq_ip_left(const Bimodule& x, const SeqX& f, const SeqX& g);
/// <f,g>_R(n) = <f(n+1), g(n+1)>_R
SeqA seq_ip_right(const Bimodule& x, const SeqX& f, const SeqX& g);
SeqA seq_mul(const SeqA& a, const SeqA& b);
SeqA seq_adjoint(const SeqA& a);

/// (sigma phi)(n) = phi(n+1), matching sigma(L^n_a) = L^{n-1}_a under pi0.
SeqA sigma_seq(const SeqA& phi);
SeqX sigma_seq(const SeqX& f);

/// Largest entrywise difference; missing indices count as zero.
double seq_diff(const SeqA& a, const SeqA& b);
double seq_diff(const SeqX& a, const SeqX& b);
/// sup_n ||f(n)||
double seq_norm(const Bimodule& x, const SeqX& f);

// ---------------------------------------------------------------------------
// Representations on the window.

/// Block-diagonal, L^n_a on every degree.
GradedOp lambda_A(const Window& w, const AlgElem& a);
/// Degree +1 with blocks T^{n-1}_x; the block leaving degree N is dropped and flagged.
GradedOp lambda_X(const Window& w, const Coords& x);
/// (U_lambda eta)(n) = lambda^n eta(n); throws std::invalid_argument unless |lambda| = 1.
GradedOp gauge(const Window& w, cplx lambda);

/// Block-diagonal with L^n_{phi(n)}; support must lie in [-N, N].
GradedOp pi0(const Window& w, const SeqA& phi);
/// Degree +1 with blocks T^{n-1}_{f(n)}; support must lie in [-N+1, N].
GradedOp pi1(const Window& w, const SeqX& f);

/// Kernel of phi -> pi0(phi) over sequences supported in [lo, hi].
struct Pi0Kernel {
    int dimension = 0;
    /// A nonzero element of the kernel when dimension > 0.
    std::optional<SeqA> witness;
};
Pi0Kernel pi0_kernel(const Window& w, int lo, int hi, double tol = 1e-9);

// ---------------------------------------------------------------------------
// The shift sigma, compared against evaluation through right tensoring by X.

/// Identifications X^{(n)} (x) X -> X^{(n+1)} used to relabel degrees:
/// a (x) z -> a z, ~x (x) z -> <x, z>_R and u (x) z -> u (x) z otherwise.
class ShiftFrame {
public:
    ShiftFrame(const Window& w, double tol = 1e-9);

    /// S : X^{(n-1)} -> X^{(m-1)}  to  W_{m-1} (S (x) 1) W_{n-1}^* : X^{(n)} -> X^{(m)}
    Mat relabel_up(const Mat& s, int source, int target) const;
    /// Every block of op moved up one degree; blocks that would leave the window throw.
    GradedOp relabel_up(const GradedOp& op) const;

    /// W_n W_n^* - 1 and W_n^* W_n - 1 in the max entry; zero when X is full.
    double unitarity_defect() const;

private:
    const Window& w_;
    int radius_;
    std::vector<TensorProduct> d_;  // C_n (x) X, n = -N..N-1
    std::vector<Mat> ws_;           // W_n
};

// ---------------------------------------------------------------------------
// Compact operators through the generators.

struct CompactOptions {
    double tol = 1e-9;
    /// When set, X must be full on both sides; otherwise FullnessError.
    bool require_fullness = true;
};

struct CompactApproximation {
    GeneratorWord word;
    double residual = 0.0;  // operator norm of eval(word) - target
};

/// A word in L, T, T* whose evaluation is theta_{u delta_m, v delta_l}.
/// Requires |m|, |l| <= N-1.
CompactApproximation generate_compacts(const Window& w, const Coords& u, int m, const Coords& v, int l,
                                       const CompactOptions& opts = {});

/// Least-squares combination of rank-one operators approximating T^n_x (or L^n_a).
/// Uses x = x . 1 with 1 approximated by span{<e_i, e_j>_L} of the source component.
struct RankOneApproximation {
    Mat coefficients;  // c_ij for theta_{x (x) e_i, e_j}
    double residual = 0.0;
    /// ||1 - sum_ij c_ij <e_i, e_j>_L||; nonzero when the component is not left full.
    double span_residual = 0.0;
};
RankOneApproximation approximate_creation(const Window& w, const Coords& x, int n);
RankOneApproximation approximate_left_action(const Window& w, const AlgElem& a, int n);

// ---------------------------------------------------------------------------
// A_alpha: the intertwiners I_n : X^{(n)} -> A.

struct AAlphaPicture {
    Automorphism alpha;
    int radius = 0;
    std::vector<Mat> intertwiners;  // index n + radius, dim(A) x dim(X^{(n)})

    const Mat& I(int n) const { return intertwiners.at(n + radius); }
};

/// Throws std::invalid_argument when the window was not built on an A_alpha bimodule.
AAlphaPicture a_alpha_picture(const Window& w);

}  // namespace fockdual
