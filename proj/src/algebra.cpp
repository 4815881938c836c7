#include "fockdual/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fockdual {

Algebra::Algebra(std::vector<int> block_dims, std::vector<double> weights) {
    if (block_dims.empty())
        throw DimensionError("algebra needs at least one block");
    for (int n : block_dims)
        if (n <= 0) throw DimensionError("block dimensions must be positive");
    if (weights.empty()) weights.assign(block_dims.size(), 1.0);
    if (weights.size() != block_dims.size())
        throw DimensionError("one trace weight per block is required");
    for (double w : weights)
        if (!(w > 0.0)) throw DimensionError("trace weights must be positive");

    auto d = std::make_shared<Data>();
    d->dims = std::move(block_dims);
    d->weights = std::move(weights);
    int off = 0;
    for (int n : d->dims) {
        d->offsets.push_back(off);
        off += n * n;
    }
    d->dim = off;
    d->adjoint_index.resize(off);
    d->trace_functional = Vec::Zero(off);
    for (std::size_t b = 0; b < d->dims.size(); ++b) {
        const int n = d->dims[b];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                d->adjoint_index[d->offsets[b] + i * n + j] = d->offsets[b] + j * n + i;
                if (i == j) d->trace_functional(d->offsets[b] + i * n + j) = std::sqrt(d->weights[b]);
            }
    }
    data_ = std::move(d);
}

AlgElem Algebra::zero() const {
    std::vector<Mat> blocks;
    for (int n : data_->dims) blocks.push_back(Mat::Zero(n, n));
    return AlgElem(*this, std::move(blocks));
}

AlgElem Algebra::identity() const {
    std::vector<Mat> blocks;
    for (int n : data_->dims) blocks.push_back(Mat::Identity(n, n));
    return AlgElem(*this, std::move(blocks));
}

AlgElem Algebra::basis(int k) const {
    if (k < 0 || k >= dim()) throw DimensionError("algebra basis index out of range");
    Vec v = Vec::Zero(dim());
    v(k) = 1.0;
    return unvec(v);
}

Vec Algebra::vec(const AlgElem& a) const {
    if (a.parent() != *this) throw DimensionError("element belongs to a different algebra");
    Vec v(dim());
    for (int b = 0; b < num_blocks(); ++b) {
        const int n = data_->dims[b];
        const double s = std::sqrt(data_->weights[b]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v(data_->offsets[b] + i * n + j) = s * a.block(b)(i, j);
    }
    return v;
}

AlgElem Algebra::unvec(const Vec& v) const {
    if (v.size() != dim()) throw DimensionError("coordinate vector has wrong length");
    std::vector<Mat> blocks;
    for (int b = 0; b < num_blocks(); ++b) {
        const int n = data_->dims[b];
        const double s = 1.0 / std::sqrt(data_->weights[b]);
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = s * v(data_->offsets[b] + i * n + j);
        blocks.push_back(std::move(m));
    }
    return AlgElem(*this, std::move(blocks));
}

cplx Algebra::trace(const AlgElem& a) const {
    return data_->trace_functional.transpose() * vec(a);
}

Mat Algebra::left_mult_matrix(const AlgElem& a) const {
    Mat m(dim(), dim());
    for (int k = 0; k < dim(); ++k) m.col(k) = vec(a * basis(k));
    return m;
}

Mat Algebra::right_mult_matrix(const AlgElem& a) const {
    Mat m(dim(), dim());
    for (int k = 0; k < dim(); ++k) m.col(k) = vec(basis(k) * a);
    return m;
}

bool Algebra::operator==(const Algebra& other) const {
    if (data_ == other.data_) return true;
    return data_->dims == other.data_->dims && data_->weights == other.data_->weights;
}

std::string Algebra::describe() const {
    std::ostringstream os;
    for (int b = 0; b < num_blocks(); ++b) {
        if (b) os << " + ";
        os << "M_" << data_->dims[b];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

AlgElem::AlgElem(Algebra parent, std::vector<Mat> blocks)
    : parent_(std::move(parent)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != parent_.num_blocks())
        throw DimensionError("wrong number of blocks for algebra element");
    for (int b = 0; b < parent_.num_blocks(); ++b) {
        const int n = parent_.block_dim(b);
        if (blocks_[b].rows() != n || blocks_[b].cols() != n)
            throw DimensionError("block has wrong shape for algebra element");
    }
}

AlgElem AlgElem::adjoint() const {
    std::vector<Mat> blocks;
    for (const auto& m : blocks_) blocks.push_back(m.adjoint());
    return AlgElem(parent_, std::move(blocks));
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    if (o.parent_ != parent_) throw DimensionError("mismatched parent algebras");
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += o.blocks_[b];
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
    if (o.parent_ != parent_) throw DimensionError("mismatched parent algebras");
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= o.blocks_[b];
    return *this;
}

AlgElem& AlgElem::operator*=(cplx s) {
    for (auto& m : blocks_) m *= s;
    return *this;
}

AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
AlgElem operator-(const AlgElem& a) { return cplx(-1.0) * a; }
AlgElem operator*(cplx s, AlgElem a) { return a *= s; }
AlgElem operator*(AlgElem a, cplx s) { return a *= s; }

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    if (a.parent() != b.parent()) throw DimensionError("mismatched parent algebras");
    std::vector<Mat> blocks;
    for (int i = 0; i < a.parent().num_blocks(); ++i) blocks.push_back(a.block(i) * b.block(i));
    return AlgElem(a.parent(), std::move(blocks));
}

AlgElem alg_mul(const AlgElem& a, const AlgElem& b) { return a * b; }

double alg_norm(const AlgElem& a) {
    double n = 0.0;
    for (const auto& m : a.blocks()) {
        Eigen::JacobiSVD<Mat> svd(m);
        if (svd.singularValues().size() > 0) n = std::max(n, svd.singularValues()(0));
    }
    return n;
}

bool is_positive(const AlgElem& a, double tol) {
    const double scale = alg_norm(a);
    for (const auto& m : a.blocks()) {
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * std::max(1.0, scale)) return false;
        Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol * scale) return false;
    }
    return true;
}

double max_abs_diff(const AlgElem& a, const AlgElem& b) {
    if (a.parent() != b.parent()) throw DimensionError("mismatched parent algebras");
    double m = 0.0;
    for (int i = 0; i < a.parent().num_blocks(); ++i)
        if (a.block(i).size() > 0) m = std::max(m, (a.block(i) - b.block(i)).cwiseAbs().maxCoeff());
    return m;
}

// ---------------------------------------------------------------------------

Automorphism::Automorphism(Algebra algebra, std::vector<int> perm, std::vector<Mat> unitaries, bool)
    : algebra_(std::move(algebra)), perm_(std::move(perm)), unitaries_(std::move(unitaries)) {}

Automorphism::Automorphism(Algebra algebra, std::vector<int> block_permutation, std::vector<Mat> unitaries)
    : algebra_(std::move(algebra)), perm_(std::move(block_permutation)), unitaries_(std::move(unitaries)) {
    const int k = algebra_.num_blocks();
    if (static_cast<int>(perm_.size()) != k || static_cast<int>(unitaries_.size()) != k)
        throw DimensionError("automorphism needs one permutation entry and one unitary per block");
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (int b = 0; b < k; ++b)
        if (sorted[b] != b) throw DimensionError("block_permutation is not a permutation");
    for (int b = 0; b < k; ++b) {
        const int n = algebra_.block_dim(b);
        if (algebra_.block_dim(perm_[b]) != n)
            throw DimensionError("automorphism permutes blocks of different sizes");
        const Mat& u = unitaries_[b];
        if (u.rows() != n || u.cols() != n) throw DimensionError("unitary has wrong shape");
        if ((u.adjoint() * u - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
            throw DimensionError("automorphism data is not unitary");
    }
    // multiplicativity and *-preservation on a basis
    const int d = algebra_.dim();
    for (int i = 0; i < d; ++i) {
        const AlgElem fi = algebra_.basis(i);
        const AlgElem ai = apply(fi);
        if (max_abs_diff(apply(fi.adjoint()), ai.adjoint()) > 1e-10)
            throw DimensionError("automorphism does not preserve adjoints");
        for (int j = 0; j < d; ++j) {
            const AlgElem fj = algebra_.basis(j);
            if (max_abs_diff(apply(fi * fj), ai * apply(fj)) > 1e-10)
                throw DimensionError("automorphism is not multiplicative");
        }
    }
}

Automorphism Automorphism::identity(const Algebra& algebra) {
    std::vector<int> perm(algebra.num_blocks());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mat> us;
    for (int n : algebra.block_dims()) us.push_back(Mat::Identity(n, n));
    return Automorphism(algebra, std::move(perm), std::move(us), true);
}

AlgElem Automorphism::apply(const AlgElem& a) const {
    if (a.parent() != algebra_) throw DimensionError("automorphism applied to a foreign element");
    std::vector<Mat> blocks;
    for (int b = 0; b < algebra_.num_blocks(); ++b)
        blocks.push_back(unitaries_[b] * a.block(perm_[b]) * unitaries_[b].adjoint());
    return AlgElem(algebra_, std::move(blocks));
}

AlgElem Automorphism::apply(const AlgElem& a, int power) const { return this->power(power).apply(a); }

Automorphism Automorphism::inverse() const {
    const int k = algebra_.num_blocks();
    std::vector<int> inv(k);
    std::vector<Mat> us(k);
    for (int b = 0; b < k; ++b) inv[perm_[b]] = b;
    for (int j = 0; j < k; ++j) us[j] = unitaries_[inv[j]].adjoint();
    return Automorphism(algebra_, std::move(inv), std::move(us), true);
}

Automorphism Automorphism::compose(const Automorphism& other) const {
    if (other.algebra_ != algebra_) throw DimensionError("composing automorphisms of different algebras");
    const int k = algebra_.num_blocks();
    std::vector<int> perm(k);
    std::vector<Mat> us(k);
    for (int b = 0; b < k; ++b) {
        perm[b] = other.perm_[perm_[b]];
        us[b] = unitaries_[b] * other.unitaries_[perm_[b]];
    }
    return Automorphism(algebra_, std::move(perm), std::move(us), true);
}

Automorphism Automorphism::power(int n) const {
    Automorphism result = identity(algebra_);
    Automorphism base = n >= 0 ? *this : inverse();
    unsigned m = static_cast<unsigned>(n >= 0 ? n : -static_cast<long>(n));
    while (m) {
        if (m & 1u) result = result.compose(base);
        base = base.compose(base);
        m >>= 1u;
    }
    return result;
}

Mat Automorphism::matrix() const {
    const int d = algebra_.dim();
    Mat m(d, d);
    for (int k = 0; k < d; ++k) m.col(k) = algebra_.vec(apply(algebra_.basis(k)));
    return m;
}

AlgElem apply_automorphism(const Automorphism& alpha, const AlgElem& a, int power) {
    return alpha.apply(a, power);
}

}  // namespace fockdual
