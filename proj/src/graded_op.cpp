#include "fockdual/graded_op.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fockdual {

int Grading::dim(int n) const {
    if (!contains(n)) throw WindowEdgeError("degree " + std::to_string(n) + " is outside the window");
    return dims[n + radius];
}

int Grading::offset(int n) const {
    if (!contains(n)) throw WindowEdgeError("degree " + std::to_string(n) + " is outside the window");
    return std::accumulate(dims.begin(), dims.begin() + (n + radius), 0);
}

int Grading::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

GradedOp::GradedOp(Grading grading) : grading_(std::move(grading)) {
    if (static_cast<int>(grading_.dims.size()) != 2 * grading_.radius + 1)
        throw DimensionError("grading needs one dimension per degree");
}

GradedOp GradedOp::identity(const Grading& g) {
    GradedOp op(g);
    for (int n = -g.radius; n <= g.radius; ++n) op.set_block(n, n, Mat::Identity(g.dim(n), g.dim(n)));
    return op;
}

void GradedOp::check_degree(int n) const {
    if (!grading_.contains(n)) throw WindowEdgeError("degree " + std::to_string(n) + " is outside the window");
}

Mat GradedOp::block(int source, int target) const {
    check_degree(source);
    check_degree(target);
    auto it = blocks_.find({source, target});
    if (it != blocks_.end()) return it->second;
    return Mat::Zero(grading_.dim(target), grading_.dim(source));
}

void GradedOp::set_block(int source, int target, Mat m) {
    check_degree(source);
    check_degree(target);
    if (m.rows() != grading_.dim(target) || m.cols() != grading_.dim(source))
        throw DimensionError("block shape does not match the component dimensions");
    blocks_[{source, target}] = std::move(m);
}

void GradedOp::add_to_block(int source, int target, const Mat& m) {
    auto it = blocks_.find({source, target});
    if (it == blocks_.end()) {
        set_block(source, target, m);
        return;
    }
    if (m.rows() != it->second.rows() || m.cols() != it->second.cols())
        throw DimensionError("block shape does not match the component dimensions");
    it->second += m;
}

GradedOp GradedOp::adjoint() const {
    GradedOp out(grading_);
    for (const auto& [key, m] : blocks_) out.blocks_[{key.second, key.first}] = m.adjoint();
    out.edge_ = edge_;
    return out;
}

GradedOp GradedOp::operator*(const GradedOp& o) const {
    if (!(grading_ == o.grading_)) throw DimensionError("composing operators on different windows");
    GradedOp out(grading_);
    // (this o other): other maps n -> m, this maps m -> p
    for (const auto& [k2, t] : o.blocks_)
        for (const auto& [k1, s] : blocks_) {
            if (k1.first != k2.second) continue;
            out.add_to_block(k2.first, k1.second, s * t);
        }
    out.edge_ = edge_ || o.edge_;
    return out;
}

GradedOp GradedOp::operator+(const GradedOp& o) const {
    if (!(grading_ == o.grading_)) throw DimensionError("adding operators on different windows");
    GradedOp out = *this;
    for (const auto& [key, m] : o.blocks_) out.add_to_block(key.first, key.second, m);
    out.edge_ = edge_ || o.edge_;
    return out;
}

GradedOp GradedOp::operator-(const GradedOp& o) const { return *this + o * cplx(-1.0); }

GradedOp GradedOp::operator*(cplx s) const {
    GradedOp out = *this;
    for (auto& [key, m] : out.blocks_) m *= s;
    return out;
}

GradedOp GradedOp::restricted(int lo, int hi) const {
    GradedOp out(grading_);
    for (const auto& [key, m] : blocks_)
        if (key.first >= lo && key.first <= hi && key.second >= lo && key.second <= hi) out.blocks_[key] = m;
    out.edge_ = edge_;
    return out;
}

std::optional<int> GradedOp::pure_degree(double tol) const {
    std::optional<int> deg;
    for (const auto& [key, m] : blocks_) {
        if (m.size() == 0 || m.cwiseAbs().maxCoeff() <= tol) continue;
        const int d = key.second - key.first;
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

Mat GradedOp::dense() const {
    const int n = grading_.total();
    Mat out = Mat::Zero(n, n);
    for (const auto& [key, m] : blocks_)
        if (m.size()) out.block(grading_.offset(key.second), grading_.offset(key.first), m.rows(), m.cols()) = m;
    return out;
}

double GradedOp::norm() const {
    const Mat d = dense();
    if (d.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(d);
    return svd.singularValues()(0);
}

double GradedOp::max_abs() const {
    double v = 0.0;
    for (const auto& [key, m] : blocks_)
        if (m.size()) v = std::max(v, m.cwiseAbs().maxCoeff());
    return v;
}

double max_abs_diff(const GradedOp& a, const GradedOp& b) { return (a - b).max_abs(); }

}  // namespace fockdual
