#pragma once

// Hilbert C*-bimodules over a block algebra, given by structure constants.

#include <optional>
#include <stdexcept>
#include <vector>

#include "fockdual/algebra.hpp"
#include "fockdual/random.hpp"
#include "fockdual/report.hpp"

namespace fockdual {

/// Coordinates of a bimodule element in the basis of its Bimodule.
using Coords = Vec;

struct AxiomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { left, right };

/// Structure-constant presentation of a Hilbert C*-bimodule X over A.
///
/// All tensors are indexed by the orthonormal basis f_k of A (see Algebra):
///   left[k]   column i holds the coordinates of f_k . e_i
///   right[k]  column i holds the coordinates of e_i . f_k
///   ip_right[k](i,j) = k-th coordinate of <e_i, e_j>_R, so <x,y>_R = sum_k (x^H R_k y) f_k
///   ip_left[k](i,j)  = k-th coordinate of <e_i, e_j>_L, so <x,y>_L = sum_k (x^T L_k conj(y)) f_k
/// <.,.>_R is conjugate-linear in its first slot, <.,.>_L in its second.
class Bimodule {
public:
    Bimodule(Algebra algebra, int dim, std::vector<Mat> left, std::vector<Mat> right,
             std::vector<Mat> ip_left, std::vector<Mat> ip_right);

    const Algebra& algebra() const { return algebra_; }
    int dim() const { return dim_; }

    const std::vector<Mat>& left() const { return left_; }
    const std::vector<Mat>& right() const { return right_; }
    const std::vector<Mat>& ip_left_tensor() const { return ip_left_; }
    const std::vector<Mat>& ip_right_tensor() const { return ip_right_; }

    Mat left_matrix(const AlgElem& a) const;
    Mat right_matrix(const AlgElem& a) const;
    Coords left_act(const AlgElem& a, const Coords& x) const { return left_matrix(a) * x; }
    Coords right_act(const Coords& x, const AlgElem& a) const { return right_matrix(a) * x; }

    AlgElem ip_left(const Coords& x, const Coords& y) const;
    AlgElem ip_right(const Coords& x, const Coords& y) const;

    /// ||x|| = ||<x,x>_R||^{1/2}
    double norm(const Coords& x) const;

    /// Scalar forms tau(<x,y>_R) and tau(<y,x>_L) as Hermitian Gram matrices.
    Mat right_gram() const;
    Mat left_gram() const;

    Coords basis(int i) const;
    Coords zero() const { return Coords::Zero(dim_); }
    Coords random(Rng& rng) const { return random_vector(dim_, rng); }

    /// Set when the bimodule is A_alpha; coordinates are then vec(a).
    const std::optional<Automorphism>& automorphism() const { return automorphism_; }
    void set_automorphism(std::optional<Automorphism> alpha) { automorphism_ = std::move(alpha); }

    /// Same bimodule in a basis for which right_gram() is the identity.
    /// The returned matrix maps old coordinates to new ones.
    std::pair<Bimodule, Mat> orthonormalized() const;
    bool is_orthonormal(double tol = 1e-13) const;

private:
    Algebra algebra_;
    int dim_;
    std::vector<Mat> left_, right_, ip_left_, ip_right_;
    std::optional<Automorphism> automorphism_;
};

/// Sweeps every axiom over the basis; failures are entries, not exceptions.
Report check_axioms(const Bimodule& x, double tol);

/// A as a bimodule over itself: multiplication, <x,y>_L = xy*, <x,y>_R = x*y.
Bimodule trivial_bimodule(const Algebra& a);
/// A_alpha: a.x = ax, x.a = x alpha(a), <x,y>_L = xy*, <x,y>_R = alpha^{-1}(x*y).
Bimodule from_automorphism(const Algebra& a, const Automorphism& alpha);

/// Conjugate space with a.~x = ~(x a*), ~x.a = ~(a* x) and the inner products swapped.
/// Coordinates of ~x are conj(coordinates of x). Throws AxiomError if X fails check_axioms
/// (skipped when validate is false).
Bimodule dual(const Bimodule& x, double tol = 1e-9, bool validate = true);

struct TensorOptions {
    double tol = 1e-9;
    bool validate_inputs = true;
};

/// Balanced tensor product X (x)_A Y realised as the quotient of the algebraic
/// tensor product by the kernel of the right Gram form.
struct TensorProduct {
    Bimodule module;
    /// r x (d_X d_Y): class of an algebraic tensor; factor * kron(x, y) is [x (x) y].
    Mat factor;
    /// (d_X d_Y) x r: orthonormal representatives of the quotient basis.
    Mat lift;
    int algebraic_dim = 0;
    int kernel_dim = 0;

    Coords factor_map(const Coords& x, const Coords& y) const;
};

TensorProduct tensor(const Bimodule& x, const Bimodule& y, const TensorOptions& opts = {});

/// Kronecker product with row index i * rows(b) + k.
Mat kron(const Mat& a, const Mat& b);

/// span{<e_i,e_j>_side} = A
bool fullness(const Bimodule& x, Side side, double tol = 1e-9);
/// rank of A -> End(X) for the chosen action equals dim A
bool action_faithful(const Bimodule& x, Side side, double tol = 1e-9);

/// Linear map between algebras on vec coordinates.
struct AlgebraMap {
    Algebra source;
    Algebra target;
    Mat matrix;  // target.dim() x source.dim()

    AlgElem operator()(const AlgElem& a) const { return target.unvec(matrix * source.vec(a)); }
    static AlgebraMap identity(const Algebra& a);
    static AlgebraMap from(const Automorphism& alpha);
    bool is_star_homomorphism(double tol = 1e-10) const;
    bool injective(double tol = 1e-9) const;
};

/// Checks that (phi_A, phi_X) intertwines both actions and both inner products,
/// and that phi_X is norm decreasing (isometric when phi_A is injective) on samples.
/// Throws DimensionError if phi_A is not a *-homomorphism.
Report check_morphism(const AlgebraMap& phi_a, const Mat& phi_x, const Bimodule& x, const Bimodule& y,
                      double tol, Rng& rng, int samples = 20);

}  // namespace fockdual
