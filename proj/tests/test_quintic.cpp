#include "doctest.h"

#include "symprod/elimination.hpp"
#include "symprod/plane_embedding.hpp"

using namespace symprod;

namespace {

HomogeneousForm mono(int i, int j, int k, int c) {
    return HomogeneousForm::monomial({i, j, k}, Rat(c));
}

}  // namespace

TEST_CASE("standard conic parametrization") {
    const ConicParametrization& par = ConicParametrization::standard();
    // the unique quadric through (s^2 : st : t^2) is XZ - Y^2
    HomogeneousForm expected(2);
    expected.set({1, 0, 1}, Rat(1));
    expected.set({0, 2, 0}, Rat(-1));
    CHECK(par.quadric == expected);
    CHECK(par.at(ProjectivePoint({1, 0})) == ProjectivePoint({1, 0, 0}));
    CHECK(par.at(ProjectivePoint({0, 1})) == ProjectivePoint({0, 0, 1}));
    CHECK(par.at(ProjectivePoint({1, 1})) == ProjectivePoint({1, 1, 1}));
    CHECK(par.at(ProjectivePoint({1, 2})) == ProjectivePoint({1, 2, 4}));

    SUBCASE("degenerate parametrizations are rejected") {
        BinaryForm s2(2), st(2), t2(2);
        s2.c[2] = 1;
        st.c[1] = 1;
        t2.c[0] = 1;
        // common zero (0 : 1) between A and B
        CHECK_THROWS_AS(ConicParametrization(s2, st, st + s2 * Rat(0)), std::domain_error);
        // image inside the line Y = Z: no unique quadric
        CHECK_THROWS_AS(ConicParametrization(s2, st, st), std::domain_error);
        // zero component
        CHECK_THROWS_AS(ConicParametrization(s2, BinaryForm(2), t2), std::domain_error);
    }
}

TEST_CASE("marked parameters and their conic points") {
    const auto& params = default_tangency_parameters();
    CHECK(params[0] == ProjectivePoint({1, 0}));
    CHECK(params[1] == ProjectivePoint({0, 1}));
    CHECK(params[2] == ProjectivePoint({1, 1}));
    CHECK(default_extra_parameter() == ProjectivePoint({1, 2}));
}

TEST_CASE("quintic construction for seed 0") {
    const QuinticConstruction qc = construct_quintic(0);
    CHECK(qc.seed == 0);
    CHECK(qc.attempts >= 1);
    CHECK(qc.nullity == 11);
    CHECK(qc.quintic.deg == 5);
    CHECK_FALSE(qc.quintic.is_zero());
    CHECK(qc.pullback_scale != 0);
    CHECK(qc.tangency_points[0] == ProjectivePoint({1, 0, 0}));
    CHECK(qc.tangency_points[1] == ProjectivePoint({0, 0, 1}));
    CHECK(qc.tangency_points[2] == ProjectivePoint({1, 1, 1}));
    CHECK(qc.extra_point == ProjectivePoint({1, 2, 4}));

    SUBCASE("pullback to the conic is exactly 3(p1 + p2 + p3) + q") {
        const ConicParametrization& par = ConicParametrization::standard();
        const BinaryForm pullback = compose_ternary(qc.quintic, par.a, par.b, par.c);
        CHECK(pullback.degree() == 10);
        BinaryForm expected = parameter_linear_form(ProjectivePoint({1, 0})).pow(3) *
                              parameter_linear_form(ProjectivePoint({0, 1})).pow(3) *
                              parameter_linear_form(ProjectivePoint({1, 1})).pow(3) *
                              parameter_linear_form(ProjectivePoint({1, 2}));
        CHECK(pullback == expected * qc.pullback_scale);
        for (const auto& p : default_tangency_parameters())
            CHECK(root_multiplicity(pullback, p) == 3);
        CHECK(root_multiplicity(pullback, default_extra_parameter()) == 1);
    }

    SUBCASE("the quintic is smooth at the four marked points") {
        for (const auto& p : qc.tangency_points) CHECK(smooth_at(qc.quintic, p));
        CHECK(smooth_at(qc.quintic, qc.extra_point));
    }

    SUBCASE("primitive integer coefficients") {
        Int content = 0;
        for (const auto& [e, c] : qc.quintic.terms) {
            CHECK(c.get_den() == 1);
            content = gcd(content, c.get_num());
        }
        CHECK(content == 1);
    }

    SUBCASE("construction is deterministic") {
        const QuinticConstruction again = construct_quintic(0);
        CHECK(again.quintic == qc.quintic);
        CHECK(again.attempts == qc.attempts);
    }

    SUBCASE("different seeds can give different quintics") {
        const QuinticConstruction other = construct_quintic(1);
        CHECK(other.nullity == 11);
        CHECK(other.pullback_scale != 0);
    }
}

TEST_CASE("smooth_at validates incidence") {
    const HomogeneousForm conic = mono(1, 0, 1, 1) - mono(0, 2, 0, 1);  // XZ - Y^2
    CHECK(smooth_at(conic, ProjectivePoint({1, 1, 1})));
    CHECK_THROWS_AS(smooth_at(conic, ProjectivePoint({1, 1, 2})), std::domain_error);
}

TEST_CASE("singular point search: sample mode") {
    // nodal cubic Y^2 Z - X^3 - X^2 Z with its node at (0 : 0 : 1)
    const HomogeneousForm nodal = mono(0, 2, 1, 1) - mono(3, 0, 0, 1) - mono(2, 0, 1, 1);
    const auto nodal_sing = singular_points_search(nodal, SingularSearchMode::sample);
    REQUIRE(nodal_sing.size() == 1);
    CHECK(nodal_sing[0] == ProjectivePoint({0, 0, 1}));

    const HomogeneousForm conic = mono(1, 0, 1, 1) - mono(0, 2, 0, 1);
    CHECK(singular_points_search(conic, SingularSearchMode::sample).empty());
}

TEST_CASE("singular point search: eliminate mode") {
    const HomogeneousForm nodal = mono(0, 2, 1, 1) - mono(3, 0, 0, 1) - mono(2, 0, 1, 1);
    const auto nodal_sing = singular_points_search(nodal, SingularSearchMode::eliminate);
    REQUIRE(nodal_sing.size() == 1);
    CHECK(nodal_sing[0] == ProjectivePoint({0, 0, 1}));

    SUBCASE("certifies smooth curves") {
        const HomogeneousForm conic = mono(1, 0, 1, 1) - mono(0, 2, 0, 1);
        CHECK(singular_points_search(conic, SingularSearchMode::eliminate).empty());
        // Fermat cubic
        const HomogeneousForm fermat = mono(3, 0, 0, 1) + mono(0, 3, 0, 1) + mono(0, 0, 3, 1);
        CHECK(singular_points_search(fermat, SingularSearchMode::eliminate).empty());
    }

    SUBCASE("cuspidal cubic") {
        const HomogeneousForm cusp = mono(0, 2, 1, 1) - mono(3, 0, 0, 1);  // Y^2 Z = X^3
        const auto sing = singular_points_search(cusp, SingularSearchMode::eliminate);
        REQUIRE(sing.size() == 1);
        CHECK(sing[0] == ProjectivePoint({0, 0, 1}));
        CHECK(singular_points_search(cusp, SingularSearchMode::sample) == sing);
    }

    SUBCASE("line pair: singular along a whole line is inconclusive, not wrong") {
        // (X)(X) = X^2 is singular along X = 0; a positive-dimensional
        // singular locus can never be certified pointwise
        const HomogeneousForm double_line = mono(2, 0, 0, 1);
        CHECK_THROWS_AS(singular_points_search(double_line, SingularSearchMode::eliminate),
                        resource_error);
    }

    SUBCASE("resource guards") {
        const HomogeneousForm septic = mono(7, 0, 0, 1) + mono(0, 7, 0, 1) + mono(0, 0, 7, 1);
        CHECK_THROWS_AS(singular_points_search(septic, SingularSearchMode::eliminate),
                        resource_error);
        CHECK_THROWS_AS(singular_points_search(HomogeneousForm(3), SingularSearchMode::sample),
                        std::domain_error);
        CHECK_THROWS_AS(
            singular_points_search(HomogeneousForm::monomial({0, 0, 0}, 1),
                                   SingularSearchMode::sample),
            std::domain_error);
    }
}

TEST_CASE("triangle of lines has exactly the three vertices singular") {
    const HomogeneousForm triangle = mono(1, 0, 0, 1) * mono(0, 1, 0, 1) * mono(0, 0, 1, 1);
    const auto sing = singular_points_search(triangle, SingularSearchMode::eliminate);
    REQUIRE(sing.size() == 3);
    CHECK(sing[0] == ProjectivePoint({0, 0, 1}));
    CHECK(sing[1] == ProjectivePoint({0, 1, 0}));
    CHECK(sing[2] == ProjectivePoint({1, 0, 0}));
}

TEST_CASE("full verification report for seed 0") {
    const NoncollinearityReport rep = verify_quintic_noncollinearity(0);
    CHECK(rep.seed == 0);
    CHECK(rep.rank == 3);
    CHECK_FALSE(rep.collinear);
    CHECK(rep.target_degree == 125);
    CHECK(rep.all_ok);
    CHECK(rep.stages.size() == 6);
    for (const auto& s : rep.stages) {
        CAPTURE(s.name);
        CAPTURE(s.detail);
        CHECK(s.ok);
    }
    // the images must be the cubic Veronese images of the tangency points
    for (size_t i = 0; i < 3; ++i)
        CHECK(rep.images[i] == veronese3(rep.construction.tangency_points[i]));
}
