#include "doctest.h"

#include "fockdual/builtins.hpp"
#include "fockdual/circle_duality.hpp"

using namespace fockdual;

TEST_SUITE("circle_duality") {
    TEST_CASE("the M-point rule integrates lambda^k exactly for |k| < M") {
        for (int m : {1, 5, 14})
            for (int k = -(m - 1); k <= m - 1; ++k) CHECK(std::abs(quadrature_moment(k, m) - (k == 0 ? 1.0 : 0.0)) < 1e-14);
        // aliasing at k = M
        CHECK(std::abs(quadrature_moment(7, 7) - 1.0) < 1e-14);
    }

    TEST_CASE("under-resolved quadrature is rejected") {
        const Algebra a({1});
        CHECK_THROWS_AS(circle_integrate(LoopA{{3, a.identity()}}, 3, a), QuadratureError);
        CHECK_NOTHROW(circle_integrate(LoopA{{3, a.identity()}}, 4, a));
        CHECK_THROWS_AS(spectral_projection(Window(builtins::swap(), 3), Window(builtins::swap(), 3).identity_op(), 0, 13),
                        QuadratureError);
    }

    TEST_CASE("I sends lambda^k x to x delta_{1-k}") {
        Rng rng(17);
        const Bimodule x = builtins::matrix();
        for (int k = -3; k <= 3; ++k) {
            const Coords v = x.random(rng);
            const SeqX img = iso_I(LoopX{{k, v}});
            REQUIRE(img.size() == 1);
            CHECK(img.begin()->first == 1 - k);
            CHECK((img.begin()->second - v).cwiseAbs().maxCoeff() == 0.0);
            CHECK(seq_diff(iso_I_quadrature(LoopX{{k, v}}, 8, x.dim()), img) < 1e-13);
        }
    }

    TEST_CASE("scalar loop norm is the largest coefficient modulus") {
        // A = X = C: <f,f>_R is convolution by sum_k |c_k|^2 lambda^{-k}..., whose norm is max |c_k|^2
        const Bimodule s = builtins::scalar();
        Coords three(1), four_i(1);
        three(0) = 3.0;
        four_i(0) = cplx(0.0, 4.0);
        CHECK(loop_norm(s, LoopX{{1, three}, {-2, four_i}}) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(seq_norm(s, iso_I(LoopX{{1, three}, {-2, four_i}})) == doctest::Approx(4.0).epsilon(1e-15));
    }

    TEST_CASE("Y structure matches the sequence structure") {
        Rng rng(18);
        for (const auto& name : builtins::names()) {
            const Bimodule x = builtins::by_name(name);
            const LoopX f{{-1, x.random(rng)}, {2, x.random(rng)}};
            const LoopX g{{0, x.random(rng)}, {1, x.random(rng)}};
            const LoopA phi{{1, random_element(x.algebra(), rng)}, {-2, random_element(x.algebra(), rng)}};
            CHECK(y_structure_check(x, f, g, phi, 1e-12).passed());
        }
    }

    TEST_CASE("a wrong twist in the right action is detected") {
        // (f phi)(n) = f(n) phi(n-1); pairing with phi(n) instead is a real mismatch
        Rng rng(19);
        const Bimodule x = builtins::swap();
        const LoopX f{{0, x.random(rng)}};
        const LoopA phi{{0, random_element(x.algebra(), rng)}};
        const SeqX correct = seq_right(x, iso_I(f), iso_I(phi));
        const SeqA sphi = iso_I(phi);
        SeqX wrong;
        for (const auto& [n, v] : iso_I(f)) {
            auto it = sphi.find(n);
            if (it != sphi.end()) wrong.emplace(n, x.right_act(v, it->second));
        }
        CHECK(seq_diff(correct, wrong) > 0.1);
    }

    TEST_CASE("spectral projections split operators by degree") {
        Rng rng(20);
        const Window w(builtins::matrix(), 2);
        const GradedOp lx = lambda_X(w, w.source().random(rng));
        const int m = 4 * 2 + 2;
        CHECK(max_abs_diff(spectral_projection(w, lx, 1, m), lx) < 1e-13);
        CHECK(spectral_projection(w, lx, -1, m).max_abs() < 1e-13);
        CHECK(spectral_projection(w, lx.adjoint(), -1, m).pure_degree(1e-13) == -1);
    }
}
