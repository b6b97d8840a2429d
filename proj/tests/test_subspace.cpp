#include "bipwalk/subspace.hpp"

#include "bipwalk/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <string>

using namespace bipwalk;

namespace {

double basis_orthonormality_defect(const SubspaceBasis& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.vectors.size(); ++i)
        for (std::size_t j = 0; j < b.vectors.size(); ++j) {
            const cx dot = vec_dot(b.vectors[i], b.vectors[j]);
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

} // namespace

TEST_CASE("bases are orthonormal") {
    const GraphSpec g(10, 7);
    CHECK(basis_orthonormality_defect(basis_oneset(mark(g, 3, 0))) < 1e-14);
    CHECK(basis_orthonormality_defect(basis_bothsets(mark(g, 3, 2))) < 1e-14);
}

TEST_CASE("degenerate classes are rejected with guidance") {
    const GraphSpec g(5, 4);
    CHECK_THROWS_AS(basis_oneset(mark(g, 5, 0)), DegenerateBasisError);
    CHECK_THROWS_AS(basis_bothsets(mark(g, 5, 2)), DegenerateBasisError);
    CHECK_THROWS_AS(basis_bothsets(mark(g, 2, 4)), DegenerateBasisError);
    CHECK_THROWS_AS(reduced_operator_oneset(5, 5), DegenerateBasisError);
    CHECK_THROWS_AS(reduced_operator_bothsets(5, 4, 2, 4), DegenerateBasisError);
    try {
        basis_oneset(mark(g, 5, 0));
        FAIL("expected DegenerateBasisError");
    } catch (const DegenerateBasisError& e) {
        CHECK(std::string(e.what()).find("full-space engine") != std::string::npos);
    }
    CHECK_THROWS_AS(basis_oneset(mark(g, 2, 1)), std::invalid_argument);
}

TEST_CASE("non-canonical marks are rejected by the reduced machinery") {
    const GraphSpec g(8, 6);
    const MarkConfig m = mark_explicit(g, {1, 4}, {});
    CHECK_THROWS_AS(basis_oneset(m), std::invalid_argument);
}

TEST_CASE("closed-form operators match conjugation of the full step") {
    struct Cfg { int n1, n2, k1, k2; };
    for (const Cfg c : {Cfg{10, 7, 3, 0}, Cfg{50, 37, 4, 0}, Cfg{9, 3, 8, 0},
                        Cfg{10, 7, 3, 2}, Cfg{9, 8, 2, 3}, Cfg{12, 5, 1, 4}}) {
        const GraphSpec g(c.n1, c.n2);
        const MarkConfig m = mark(g, c.k1, c.k2);
        const SubspaceBasis b = c.k2 == 0 ? basis_oneset(m) : basis_bothsets(m);
        const Matrix closed = c.k2 == 0
            ? reduced_operator_oneset(c.n1, c.k1)
            : reduced_operator_bothsets(c.n1, c.n2, c.k1, c.k2);
        const Matrix conj = reduced_operator_conjugated(b);
        CHECK(closed.max_abs_diff(conj) < 1e-12);
        CHECK(unitarity_defect(closed) < 1e-12);
    }
}

TEST_CASE("reduced initial coordinates match projection of the full states") {
    struct Cfg { int n1, n2, k1, k2; };
    for (const Cfg c : {Cfg{10, 7, 3, 0}, Cfg{11, 4, 2, 0},
                        Cfg{10, 7, 3, 2}, Cfg{6, 13, 2, 5}}) {
        const GraphSpec g(c.n1, c.n2);
        const MarkConfig m = mark(g, c.k1, c.k2);
        const SubspaceBasis b = c.k2 == 0 ? basis_oneset(m) : basis_bothsets(m);
        for (const Init init : {Init::Vertices, Init::Edges}) {
            const ReducedState projected =
                reduce_state(initial_state(g, init), b);
            const ReducedState direct =
                reduced_initial_state(g, c.k1, c.k2, init);
            REQUIRE(projected.coords.size() == direct.coords.size());
            CHECK(vec_max_abs_diff(projected.coords, direct.coords) < 1e-12);
            double norm2 = 0.0;
            for (const cx& a : direct.coords) norm2 += std::norm(a);
            CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("states outside the subspace fail the projection") {
    const GraphSpec g(5, 4);
    const MarkConfig m = mark(g, 2, 0);
    const SubspaceBasis b = basis_oneset(m);
    WalkState s(g);
    s.amp[0] = 1.0; // a single arc is not a symmetric bundle
    CHECK_THROWS_AS(reduce_state(s, b), ProjectionLossError);
    try {
        reduce_state(s, b);
    } catch (const ProjectionLossError& e) {
        // captured share is 1/(k1 n2) of the norm
        CHECK(e.residual() == doctest::Approx(std::sqrt(1.0 - 1.0 / 8.0)).epsilon(1e-12));
    }
}

TEST_CASE("full and reduced dynamics agree trajectory-wise") {
    struct Cfg { int n1, n2, k1, k2; };
    for (const Cfg c : {Cfg{10, 7, 3, 0}, Cfg{9, 8, 2, 3}}) {
        const GraphSpec g(c.n1, c.n2);
        const MarkConfig m = mark(g, c.k1, c.k2);
        for (const Init init : {Init::Vertices, Init::Edges}) {
            const ProbabilityTrace full =
                evolve(initial_state(g, init), m, 100);
            const ProbabilityTrace red =
                reduced_trace(g, c.k1, c.k2, init, 100);
            REQUIRE(full.size() == red.size());
            for (std::size_t i = 0; i < full.size(); ++i) {
                CHECK(std::abs(full[i].p_x - red[i].p_x) < 1e-9);
                CHECK(std::abs(full[i].p_y - red[i].p_y) < 1e-9);
                CHECK(std::abs(full[i].p_total - red[i].p_total) < 1e-9);
            }
        }
    }
}

TEST_CASE("the invariance check rejects a basis the step leaks from") {
    // A one-set basis built with the wrong marks is not invariant under the
    // step for the true marks; conjugation must refuse it.
    const GraphSpec g(8, 5);
    const SubspaceBasis b = basis_oneset(mark(g, 3, 0));
    SubspaceBasis wrong = b;
    wrong.marks = mark(g, 2, 0);
    CHECK_THROWS_AS(reduced_operator_conjugated(wrong), ProjectionLossError);
}
