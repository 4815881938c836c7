#pragma once

// The truncated Fock module: the graded sum of tensor powers X^{(n)}, |n| <= N,
// with X^{(0)} = A and X^{(n)} = dual(X)^{(-n)} for n < 0.

#include <vector>

#include "fockdual/bimodule.hpp"
#include "fockdual/graded_op.hpp"
#include "fockdual/report.hpp"

namespace fockdual {

struct WindowOptions {
    double tol = 1e-9;
    /// Reject X (and every component) that fails check_axioms.
    bool validate = true;
};

/// Element of the window: one coordinate vector per degree.
struct GradedVec {
    int radius = 0;
    std::vector<Vec> parts;  // index n + radius

    const Vec& at(int n) const { return parts.at(n + radius); }
    Vec& at(int n) { return parts.at(n + radius); }
};

class Window {
public:
    Window(const Bimodule& x, int radius, const WindowOptions& opts = {});

    int radius() const { return radius_; }
    const Algebra& algebra() const { return source_.algebra(); }
    /// X in the coordinates the caller supplied.
    const Bimodule& source() const { return source_; }
    /// X^{(n)} with an orthonormal basis.
    const Bimodule& component(int n) const;
    int dim(int n) const { return component(n).dim(); }
    const Grading& grading() const { return grading_; }
    double tol() const { return tol_; }

    /// Caller coordinates of x -> degree-1 coordinates.
    Coords to_window(const Coords& x) const { return to_x_ * x; }
    Coords from_window(const Coords& v) const { return from_x_ * v; }
    /// x -> degree -1 coordinates of ~x (conjugate-linear).
    Coords to_dual_window(const Coords& x) const { return to_dual_ * x.conjugate(); }
    /// Inverse of to_dual_window: v = ~x -> caller coordinates of x.
    Coords from_dual_window(const Coords& v) const { return (from_dual_ * v).conjugate(); }

    /// For n >= 1: X^{(1)} (x) X^{(n-1)} -> X^{(n)}; for n <= -1: X^{(-1)} (x) X^{(n+1)} -> X^{(n)}.
    /// At |n| = 1 this is the identification g (x) a -> g.a.
    const Mat& prepend_matrix(int n) const;
    /// g (x) c in X^{(n)}, with g in window coordinates of degree sign(n).
    Coords prepend(int n, const Coords& g, const Coords& c) const;

    /// Element of degree n embedded in the window.
    GradedVec delta(int n, const Coords& c) const;
    GradedVec zero_vec() const;

    GradedOp zero_op() const { return GradedOp(grading_); }
    GradedOp identity_op() const { return GradedOp::identity(grading_); }

private:
    Bimodule source_;
    int radius_;
    double tol_;
    std::vector<Bimodule> comps_;
    std::vector<Mat> prepend_;
    Mat to_x_, from_x_, to_dual_, from_dual_;
    Grading grading_;
};

Window build_window(const Bimodule& x, int radius, const WindowOptions& opts = {});

/// T^n_x : X^{(n)} -> X^{(n+1)} for -N <= n <= N-1; x in caller coordinates.
/// For n < 0 this is the adjoint of the creation operator of ~x at degree -n-1.
Mat creation(const Window& w, const Coords& x, int n);
/// L^n_a : X^{(n)} -> X^{(n)}
Mat left_action_op(const Window& w, const AlgElem& a, int n);

/// Single-block operator i_{n,m}(t) for t : X^{(n)} -> X^{(m)}.
GradedOp embed(const Window& w, const Mat& t, int n, int m);

/// theta_{u,v}(z) = u <v, z>_R
GradedOp theta(const Window& w, const GradedVec& u, const GradedVec& v);

/// Right A-valued inner product of graded vectors, summed over degrees.
AlgElem window_inner(const Window& w, const GradedVec& u, const GradedVec& v);

/// Sweeps the creation identities over random samples and all interior degrees.
Report verify_creation_identities(const Window& w, int samples, double tol, Rng& rng);

}  // namespace fockdual
