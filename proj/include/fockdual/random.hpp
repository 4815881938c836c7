#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "fockdual/algebra.hpp"

namespace fockdual {

using Rng = std::mt19937_64;

inline cplx random_complex(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

inline Mat random_matrix(int rows, int cols, Rng& rng) {
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = random_complex(rng);
    return m;
}

inline Vec random_vector(int n, Rng& rng) { return random_matrix(n, 1, rng); }

inline AlgElem random_element(const Algebra& a, Rng& rng) { return a.unvec(random_vector(a.dim(), rng)); }

inline cplx random_unit(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, u(rng));
}

}  // namespace fockdual
