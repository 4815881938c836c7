#include "doctest.h"

#include "fockdual/builtins.hpp"
#include "fockdual/fock_window.hpp"

using namespace fockdual;

namespace {

double amax(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_SUITE("fock_window") {
    TEST_CASE("component dimensions") {
        const Window sw(builtins::swap(), 3);
        const Window mw(builtins::matrix(), 3);
        for (int n = -3; n <= 3; ++n) {
            CHECK(sw.dim(n) == 2);
            CHECK(mw.dim(n) == 4);
        }
        const Window hw(builtins::half(), 3);
        CHECK(hw.dim(0) == 2);
        CHECK(hw.dim(1) == 1);
        CHECK(hw.dim(-1) == 1);
        for (int n : {-3, -2, 2, 3}) CHECK(hw.dim(n) == 0);
    }

    TEST_CASE("components are orthonormal Hilbert bimodules") {
        for (const auto& name : builtins::names()) {
            const Window w(builtins::by_name(name), 3);
            for (int n = -3; n <= 3; ++n) {
                CAPTURE(n);
                CHECK(w.component(n).is_orthonormal(1e-12));
                CHECK(check_axioms(w.component(n), 1e-10).passed());
            }
        }
    }

    TEST_CASE("creation identities hold on the builtins") {
        Rng rng(8);
        for (const auto& name : builtins::names()) {
            CAPTURE(name);
            const Window w(builtins::by_name(name), 3);
            const Report r = verify_creation_identities(w, 30, 1e-10, rng);
            CHECK(r.passed());
        }
    }

    TEST_CASE("scalar creation is the degree shift") {
        const Window w(builtins::scalar(), 3);
        Coords one(1);
        one(0) = 1.0;
        for (int n = -3; n < 3; ++n) CHECK(std::abs(creation(w, one, n)(0, 0)) == doctest::Approx(1.0));
    }

    TEST_CASE("theta_{delta_1, delta_0} on scalar is T^0_1 L^0_1") {
        const Window w(builtins::scalar(), 2);
        Coords one(1);
        one(0) = 1.0;
        const GradedOp th = theta(w, w.delta(1, w.to_window(one)), w.delta(0, one));
        const GradedOp word = embed(w, creation(w, one, 0), 0, 1) *
                              embed(w, left_action_op(w, w.algebra().identity(), 0), 0, 0);
        CHECK(max_abs_diff(th, word) < 1e-15);
    }

    TEST_CASE("A_alpha degree two: a_1 (x) a_2 corresponds to a_1 alpha(a_2) on swap") {
        // For A_alpha, x (x) y -> x alpha^{-1}(y) identifies X (x) X with A_{alpha^2} isometrically:
        // compare Gram matrices of two-fold tensors with those of a_1 alpha^{-1}(a_2).
        Rng rng(9);
        const Bimodule x = builtins::swap();
        const Automorphism alpha = builtins::swap_automorphism();
        const Algebra& a = alpha.algebra();
        const Window w(x, 2);
        for (int s = 0; s < 5; ++s) {
            const AlgElem p1 = random_element(a, rng), p2 = random_element(a, rng);
            const AlgElem q1 = random_element(a, rng), q2 = random_element(a, rng);
            const Coords u = w.prepend(2, w.to_window(a.vec(p1)), w.to_window(a.vec(p2)));
            const Coords v = w.prepend(2, w.to_window(a.vec(q1)), w.to_window(a.vec(q2)));
            const AlgElem iu = p1 * alpha.apply(p2), iv = q1 * alpha.apply(q2);
            // <u,v>_R in X^(2) = alpha^{-2}((I u)^* I v) with alpha^2 = id
            CHECK(max_abs_diff(w.component(2).ip_right(u, v), iu.adjoint() * iv) < 1e-13);
        }
    }

    TEST_CASE("embedding is a *-preserving isometric block placement") {
        Rng rng(10);
        const Window w(builtins::matrix(), 2);
        const Mat t = random_matrix(w.dim(1), w.dim(-1), rng);
        const GradedOp e = embed(w, t, -1, 1);
        CHECK(amax(e.block(-1, 1) - t) == 0.0);
        CHECK(e.pure_degree() == 2);
        CHECK(max_abs_diff(e.adjoint(), embed(w, t.adjoint(), 1, -1)) == 0.0);
    }

    TEST_CASE("creation outside the window throws") {
        const Window w(builtins::swap(), 2);
        CHECK_THROWS_AS((void)creation(w, w.source().basis(0), 2), WindowEdgeError);
        CHECK_THROWS_AS((void)creation(w, w.source().basis(0), -3), WindowEdgeError);
    }

    TEST_CASE("a module violating the axioms is rejected") {
        CHECK_THROWS_AS(Window(builtins::scaled_left_product(), 2), AxiomError);
    }
}
