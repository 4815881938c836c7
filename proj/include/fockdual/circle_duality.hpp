#pragma once

// Trigonometric-polynomial loops on the circle, uniform quadrature, the
// Fourier isomorphism onto finitely supported sequences, and the spectral
// projections of the gauge action.

#include <map>
#include <stdexcept>

#include "fockdual/crossed_rep.hpp"

namespace fockdual {

struct QuadratureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// lambda -> sum_k lambda^k c_k
using LoopA = std::map<int, AlgElem>;
using LoopX = std::map<int, Coords>;

/// Largest |k| with a coefficient; 0 for the zero loop.
int loop_degree(const LoopA& f);
int loop_degree(const LoopX& f);

AlgElem evaluate_loop(const LoopA& f, cplx lambda, const Algebra& a);
Coords evaluate_loop(const LoopX& f, cplx lambda, int dim);

/// j-th node exp(2 pi i j / M) of the M-point rule.
cplx quadrature_node(int j, int m);
/// (1/M) sum_j node_j^k, the rule applied to lambda^k.
cplx quadrature_moment(int k, int m);

/// Integral of lambda^shift f(lambda) over normalized Haar measure with the M-point rule.
/// Throws QuadratureError when M <= degree of the integrand (the rule would alias).
AlgElem circle_integrate(const LoopA& f, int m, const Algebra& a, int shift = 0);
Coords circle_integrate(const LoopX& f, int m, int dim, int shift = 0);

/// (I phi)(n) = int lambda^n phi(lambda), read off the coefficients.
SeqA iso_I(const LoopA& phi);
/// (I f)(n) = int lambda^{n-1} f(lambda)
SeqX iso_I(const LoopX& f);
LoopA iso_I_inverse(const SeqA& phi);
LoopX iso_I_inverse(const SeqX& f);

/// The same maps evaluated with the M-point rule instead of coefficient lookup.
SeqA iso_I_quadrature(const LoopA& phi, int m, const Algebra& a);
SeqX iso_I_quadrature(const LoopX& f, int m, int dim);

/// Compares the convolution structure on loops (computed by double quadrature)
/// against the sequence structure through I, coefficient by coefficient.
/// M = 0 picks the smallest exact rule.
Report y_structure_check(const Bimodule& x, const LoopX& f, const LoopX& g, const LoopA& phi, double tol,
                         int m = 0);

/// ||f||^2 = ||<f,f>_R|| with the norm of <f,f>_R taken as a convolution operator
/// on L^2(S^1) (x) L^2(A, tau), i.e. without going through Fourier coefficients.
double loop_norm(const Bimodule& x, const LoopX& f, int m = 0);

/// P_n(S) = int lambda^{-n} U_lambda S U_lambda^* d lambda with the M-point rule.
/// Requires M >= 4N + 2.
GradedOp spectral_projection(const Window& w, const GradedOp& s, int n, int m);

}  // namespace fockdual
