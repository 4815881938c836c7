#pragma once

// Block operators on a degree-graded direct sum of finite-dimensional spaces.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fockdual/algebra.hpp"

namespace fockdual {

struct WindowEdgeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Degrees -radius..radius with a dimension for each.
struct Grading {
    int radius = 0;
    std::vector<int> dims;  // index n + radius

    int dim(int n) const;
    bool contains(int n) const { return n >= -radius && n <= radius; }
    int offset(int n) const;  // start of degree n in the dense layout
    int total() const;
    bool operator==(const Grading&) const = default;
};

/// Operator stored as blocks X^{(n)} -> X^{(m)} keyed by (source n, target m).
class GradedOp {
public:
    using Key = std::pair<int, int>;

    explicit GradedOp(Grading grading);

    static GradedOp identity(const Grading& g);

    const Grading& grading() const { return grading_; }
    const std::map<Key, Mat>& blocks() const { return blocks_; }

    bool has_block(int source, int target) const { return blocks_.count({source, target}) > 0; }
    /// Zero matrix of the right shape when absent.
    Mat block(int source, int target) const;
    void set_block(int source, int target, Mat m);
    void add_to_block(int source, int target, const Mat& m);

    /// Set when a block was dropped because it would leave the window.
    bool edge_truncated() const { return edge_; }
    void mark_edge_truncated(bool v = true) { edge_ = v; }

    GradedOp adjoint() const;
    GradedOp operator*(const GradedOp& o) const;
    GradedOp operator+(const GradedOp& o) const;
    GradedOp operator-(const GradedOp& o) const;
    GradedOp operator*(cplx s) const;

    /// Only blocks whose source and target both lie in [lo, hi].
    GradedOp restricted(int lo, int hi) const;

    /// target - source when every block with an entry above tol has the same shift.
    std::optional<int> pure_degree(double tol = 0.0) const;

    Mat dense() const;
    /// Largest singular value of the dense operator.
    double norm() const;
    double max_abs() const;

private:
    void check_degree(int n) const;

    Grading grading_;
    std::map<Key, Mat> blocks_;
    bool edge_ = false;
};

inline GradedOp operator*(cplx s, const GradedOp& op) { return op * s; }

/// Largest entry of the difference.
double max_abs_diff(const GradedOp& a, const GradedOp& b);

}  // namespace fockdual
