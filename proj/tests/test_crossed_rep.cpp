#include "doctest.h"

#include "fockdual/builtins.hpp"
#include "fockdual/crossed_rep.hpp"

using namespace fockdual;

TEST_SUITE("crossed_rep") {
    TEST_CASE("gauge rejects non-unimodular scalars") {
        const Window w(builtins::swap(), 2);
        CHECK_THROWS_AS(gauge(w, cplx(1.1, 0.0)), std::invalid_argument);
        CHECK_NOTHROW(gauge(w, std::polar(1.0, 0.3)));
    }

    TEST_CASE("pi supports must lie in the window") {
        const Window w(builtins::swap(), 2);
        const AlgElem one = w.algebra().identity();
        CHECK_THROWS_AS(pi0(w, SeqA{{3, one}}), WindowEdgeError);
        CHECK_THROWS_AS(pi1(w, SeqX{{-2, w.source().basis(0)}}), WindowEdgeError);
    }

    TEST_CASE("half has a nonzero kernel element of pi_0 and swap has none") {
        const Window hw(builtins::half(), 3);
        const Pi0Kernel k = pi0_kernel(hw, -2, 2);
        CHECK(k.dimension > 0);
        REQUIRE(k.witness.has_value());
        double size = 0.0;
        for (const auto& [n, a] : *k.witness) size = std::max(size, alg_norm(a));
        CHECK(size > 0.5);
        CHECK(pi0(hw, *k.witness).max_abs() < 1e-12);

        const Window sw(builtins::swap(), 3);
        CHECK(pi0_kernel(sw, -2, 2).dimension == 0);
    }

    TEST_CASE("half kernel by hand: a = f_1 at degree 1 acts on X^(1) = C by a_1 = 0") {
        // X^(1) = X with a.x = a_1 x and X^(n) = 0 for n >= 2, so L^1_{(0,1)} = 0.
        const Window hw(builtins::half(), 3);
        const AlgElem f1 = hw.algebra().basis(1);
        CHECK(pi0(hw, SeqA{{1, f1}}).max_abs() == 0.0);
        CHECK(pi0(hw, SeqA{{2, f1}}).max_abs() == 0.0);
    }

    TEST_CASE("sigma on words is an invertible *-homomorphism") {
        Rng rng(11);
        const Bimodule x = builtins::matrix();
        for (int s = 0; s < 20; ++s) {
            const GeneratorWord u = random_word(x, -1, 2, 2, 3, rng), v = random_word(x, -1, 2, 2, 3, rng);
            CHECK(sigma_inverse(sigma(u)) == u);
            CHECK(sigma(u * v) == sigma(u) * sigma(v));
            CHECK(sigma(u.adjoint()) == sigma(u).adjoint());
        }
    }

    TEST_CASE("sigma agrees with relabeling after evaluation on swap") {
        Rng rng(12);
        const Window w(builtins::swap(), 3);
        const ShiftFrame frame(w);
        CHECK(frame.unitarity_defect() < 1e-12);
        for (int s = 0; s < 10; ++s) {
            const GeneratorWord v = random_word(w.source(), -1, 2, 2, 3, rng);
            CHECK(max_abs_diff(evaluate(w, v), frame.relabel_up(evaluate(w, sigma(v)))) < 1e-12);
        }
    }

    TEST_CASE("compact generation reaches theta on full modules") {
        Rng rng(13);
        const Window w(builtins::matrix(), 3);
        for (int m = -2; m <= 2; ++m)
            for (int l = -2; l <= 2; ++l) {
                const auto c = generate_compacts(w, random_vector(w.dim(m), rng), m, random_vector(w.dim(l), rng), l);
                CHECK(c.residual < 1e-8);
            }
    }

    TEST_CASE("compact generation reports the fullness obstruction and the window edge") {
        Rng rng(14);
        const Window hw(builtins::half(), 3);
        CHECK_THROWS_AS(generate_compacts(hw, random_vector(1, rng), 1, random_vector(2, rng), 0), FullnessError);
        const Window sw(builtins::swap(), 2);
        CHECK_THROWS_AS(generate_compacts(sw, random_vector(2, rng), 2, random_vector(2, rng), 0), WindowEdgeError);
    }

    TEST_CASE("rank-one approximation: the unit is outside the left span on half") {
        Rng rng(15);
        const Window hw(builtins::half(), 3);
        const auto r = approximate_left_action(hw, random_element(hw.algebra(), rng), 1);
        CHECK(r.span_residual == doctest::Approx(1.0).epsilon(1e-12));
        const Window sw(builtins::swap(), 3);
        CHECK(approximate_left_action(sw, random_element(sw.algebra(), rng), 1).span_residual < 1e-12);
        CHECK(approximate_creation(sw, sw.source().random(rng), -2).residual < 1e-12);
    }

    TEST_CASE("A_alpha intertwiners on swap: I_2(a_1 (x) a_2) = a_1 alpha(a_2)") {
        Rng rng(16);
        const Window w(builtins::swap(), 3);
        const AAlphaPicture pic = a_alpha_picture(w);
        const Algebra& a = w.algebra();
        const Automorphism alpha = builtins::swap_automorphism();
        for (int s = 0; s < 5; ++s) {
            const AlgElem a1 = random_element(a, rng), a2 = random_element(a, rng);
            const Coords t = w.prepend(2, w.to_window(a.vec(a1)), w.to_window(a.vec(a2)));
            CHECK((pic.I(2) * t - a.vec(a1 * alpha.apply(a2))).cwiseAbs().maxCoeff() < 1e-13);
        }
        CHECK_THROWS_AS(a_alpha_picture(Window(builtins::half(), 2)), std::invalid_argument);
    }
}
