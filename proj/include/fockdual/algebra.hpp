#pragma once

// Finite-dimensional C*-algebras presented as direct sums of full matrix
// blocks, their elements and automorphisms.

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fockdual {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class AlgElem;

/// A = M_{n_1}(C) + ... + M_{n_k}(C) with a faithful trace
/// tau(a) = sum_b w_b tr(a_b).
///
/// Coordinates: elements are vectorized in the basis f_k = E_ij^{(b)} / sqrt(w_b)
/// (block-major, then row-major), which is orthonormal for tau(a* b).
class Algebra {
public:
    explicit Algebra(std::vector<int> block_dims, std::vector<double> weights = {});

    const std::vector<int>& block_dims() const { return data_->dims; }
    const std::vector<double>& weights() const { return data_->weights; }
    int num_blocks() const { return static_cast<int>(data_->dims.size()); }
    int block_dim(int b) const { return data_->dims.at(b); }
    /// sum of n_b^2
    int dim() const { return data_->dim; }

    AlgElem zero() const;
    AlgElem identity() const;
    /// k-th orthonormal basis element.
    AlgElem basis(int k) const;
    /// Index of f_k^*; f_k^* is again a basis element.
    int adjoint_index(int k) const { return data_->adjoint_index.at(k); }

    Vec vec(const AlgElem& a) const;
    AlgElem unvec(const Vec& v) const;

    /// Row functional t with tau(a) = t . vec(a).
    const Vec& trace_functional() const { return data_->trace_functional; }
    cplx trace(const AlgElem& a) const;

    /// Matrices of b -> a b and b -> b a on vec coordinates.
    Mat left_mult_matrix(const AlgElem& a) const;
    Mat right_mult_matrix(const AlgElem& a) const;

    bool operator==(const Algebra& other) const;
    bool operator!=(const Algebra& other) const { return !(*this == other); }

    std::string describe() const;

private:
    struct Data {
        std::vector<int> dims;
        std::vector<double> weights;
        std::vector<int> offsets;  // start of each block in vec coordinates
        std::vector<int> adjoint_index;
        Vec trace_functional;
        int dim = 0;
    };
    std::shared_ptr<const Data> data_;

    friend class AlgElem;
};

/// Tuple of block matrices belonging to a parent Algebra.
class AlgElem {
public:
    AlgElem(Algebra parent, std::vector<Mat> blocks);

    const Algebra& parent() const { return parent_; }
    const std::vector<Mat>& blocks() const { return blocks_; }
    const Mat& block(int b) const { return blocks_.at(b); }

    AlgElem adjoint() const;

    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    AlgElem& operator*=(cplx s);

private:
    Algebra parent_;
    std::vector<Mat> blocks_;
};

AlgElem operator+(AlgElem a, const AlgElem& b);
AlgElem operator-(AlgElem a, const AlgElem& b);
AlgElem operator-(const AlgElem& a);
AlgElem operator*(cplx s, AlgElem a);
AlgElem operator*(AlgElem a, cplx s);
/// Blockwise product; throws DimensionError when parents differ.
AlgElem operator*(const AlgElem& a, const AlgElem& b);

AlgElem alg_mul(const AlgElem& a, const AlgElem& b);
/// C*-norm: largest singular value over all blocks.
double alg_norm(const AlgElem& a);
/// a = a* within tol and spectrum >= -tol * norm(a).
bool is_positive(const AlgElem& a, double tol);
/// Largest entrywise deviation, used by the verification reports.
double max_abs_diff(const AlgElem& a, const AlgElem& b);

/// alpha(a)_b = U_b a_{p(b)} U_b^*. Requires n_b = n_{p(b)} and unitary U_b.
class Automorphism {
public:
    Automorphism(Algebra algebra, std::vector<int> block_permutation, std::vector<Mat> unitaries);

    static Automorphism identity(const Algebra& algebra);

    const Algebra& algebra() const { return algebra_; }
    const std::vector<int>& block_permutation() const { return perm_; }
    const std::vector<Mat>& unitaries() const { return unitaries_; }

    AlgElem apply(const AlgElem& a) const;
    /// alpha^power(a) for any integer power.
    AlgElem apply(const AlgElem& a, int power) const;

    Automorphism inverse() const;
    /// (this o other)(a) = this(other(a))
    Automorphism compose(const Automorphism& other) const;
    Automorphism power(int n) const;

    /// Matrix of alpha on vec coordinates.
    Mat matrix() const;

private:
    Automorphism(Algebra algebra, std::vector<int> perm, std::vector<Mat> unitaries, bool);

    Algebra algebra_;
    std::vector<int> perm_;
    std::vector<Mat> unitaries_;
};

AlgElem apply_automorphism(const Automorphism& alpha, const AlgElem& a, int power);

}  // namespace fockdual
