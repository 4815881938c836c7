#include "doctest.h"

#include "fockdual/algebra.hpp"
#include "fockdual/builtins.hpp"
#include "fockdual/random.hpp"

using namespace fockdual;

namespace {

Mat e12() {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

}  // namespace

TEST_SUITE("algebra") {
    TEST_CASE("vec and unvec are inverse and tau-orthonormal") {
        Rng rng(1);
        const Algebra a({1, 2, 3}, {0.5, 1.0, 2.0});
        CHECK(a.dim() == 1 + 4 + 9);
        for (int s = 0; s < 5; ++s) {
            const AlgElem x = random_element(a, rng);
            CHECK(max_abs_diff(a.unvec(a.vec(x)), x) == 0.0);
        }
        // tau(f_k^* f_l) from the weighted block traces, written out
        for (int k = 0; k < a.dim(); ++k)
            for (int l = 0; l < a.dim(); ++l) {
                const AlgElem p = a.basis(k).adjoint() * a.basis(l);
                cplx tau = 0.0;
                for (int b = 0; b < a.num_blocks(); ++b) tau += a.weights()[b] * p.block(b).trace();
                CHECK(std::abs(tau - (k == l ? 1.0 : 0.0)) < 1e-14);
                CHECK(std::abs(a.trace(p) - tau) < 1e-14);
            }
    }

    TEST_CASE("multiplication matrices agree with blockwise products") {
        Rng rng(2);
        const Algebra a({2, 1});
        const AlgElem x = random_element(a, rng), y = random_element(a, rng);
        CHECK((a.left_mult_matrix(x) * a.vec(y) - a.vec(x * y)).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((a.right_mult_matrix(y) * a.vec(x) - a.vec(x * y)).cwiseAbs().maxCoeff() < 1e-14);
    }

    TEST_CASE("the C*-norm of e_12 is 1") {
        const Algebra a({2});
        CHECK(alg_norm(AlgElem(a, {e12()})) == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("Ad diag(1,i) squared sends e_12 to -e_12") {
        const Automorphism alpha = builtins::matrix_automorphism();
        const AlgElem x(alpha.algebra(), {e12()});
        CHECK(max_abs_diff(alpha.apply(x, 2), -x) < 1e-15);
        CHECK(max_abs_diff(alpha.apply(alpha.apply(x)), alpha.apply(x, 2)) < 1e-15);
        CHECK(max_abs_diff(alpha.apply(alpha.apply(x, -3), 3), x) < 1e-15);
    }

    TEST_CASE("automorphisms are multiplicative and *-preserving") {
        Rng rng(3);
        const Automorphism alpha(Algebra({2, 2}), {1, 0},
                                 {builtins::matrix_automorphism().unitaries()[0], Mat::Identity(2, 2)});
        const Algebra& a = alpha.algebra();
        for (int s = 0; s < 5; ++s) {
            const AlgElem x = random_element(a, rng), y = random_element(a, rng);
            CHECK(max_abs_diff(alpha.apply(x * y), alpha.apply(x) * alpha.apply(y)) < 1e-13);
            CHECK(max_abs_diff(alpha.apply(x.adjoint()), alpha.apply(x).adjoint()) < 1e-14);
            CHECK((alpha.matrix() * a.vec(x) - a.vec(alpha.apply(x))).cwiseAbs().maxCoeff() < 1e-14);
        }
    }

    TEST_CASE("invalid automorphisms are rejected") {
        const Algebra a({1, 2});
        CHECK_THROWS_AS(Automorphism(a, {1, 0}, {Mat::Identity(1, 1), Mat::Identity(2, 2)}), std::invalid_argument);
        CHECK_THROWS_AS(Automorphism(a, {0, 1}, {Mat::Identity(1, 1), 2.0 * Mat::Identity(2, 2)}), std::invalid_argument);
    }

    TEST_CASE("positivity") {
        Rng rng(4);
        const Algebra a({3});
        const AlgElem x = random_element(a, rng);
        CHECK(is_positive(x.adjoint() * x, 1e-12));
        CHECK_FALSE(is_positive(-(x.adjoint() * x), 1e-12));
    }
}
