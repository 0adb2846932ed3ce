#include "doctest.h"

#include "symprod/ns_calculus.hpp"

#include <algorithm>
#include <random>

using namespace symprod;

namespace {

// Independent oracle for the top self-intersection of a*xi + b*theta:
// expand the multinomial over the 2^n factor choices instead of using the
// binomial closed form in top_intersection's implementation.
Int self_intersection_oracle(const SymmetricProductSpace& space, const Int& a, const Int& b) {
    const int n = space.n;
    Int total = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        int xi_count = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) ++xi_count;
        Int term = monomial_intersection(space, xi_count);
        for (int i = 0; i < xi_count; ++i) term *= a;
        for (int i = 0; i < n - xi_count; ++i) term *= b;
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("monomial intersections match the Poincare-formula values") {
    const SymmetricProductSpace s63(6, 3);
    CHECK(monomial_intersection(s63, 3) == 1);    // xi^3
    CHECK(monomial_intersection(s63, 0) == 120);  // theta^3 = 6*5*4
    const SymmetricProductSpace s23(2, 3);
    CHECK(monomial_intersection(s23, 0) == 0);  // theta^3 vanishes for g = 2 < 3
    CHECK(monomial_intersection(s23, 1) == 2);  // xi*theta^2 = 2*1
    CHECK_THROWS_AS(monomial_intersection(s63, 4), std::domain_error);
    CHECK_THROWS_AS(monomial_intersection(s63, -1), std::domain_error);
}

TEST_CASE("top intersection of mixed classes") {
    const SymmetricProductSpace s(6, 3);
    const DivisorClass xi(s, 1, 0);
    const DivisorClass theta(s, 0, 1);
    CHECK(top_intersection({xi, theta, theta}) == 30);  // 6*5
    CHECK(top_intersection({xi, xi, xi}) == 1);
    CHECK(top_intersection({theta, theta, theta}) == 120);

    SUBCASE("requires exactly n classes on a single space") {
        CHECK_THROWS_AS(top_intersection({xi, theta}), std::domain_error);
        const SymmetricProductSpace other(6, 2);
        CHECK_THROWS_AS(top_intersection({xi, theta, DivisorClass(other, 1, 0)}),
                        std::domain_error);
        CHECK_THROWS_AS(top_intersection({}), std::domain_error);
    }
}

TEST_CASE("top intersection is symmetric and multilinear") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (int g = 1; g <= 8; ++g) {
        for (int n = 1; n <= 4; ++n) {
            const SymmetricProductSpace space(g, n);
            std::vector<DivisorClass> cls;
            for (int i = 0; i < n; ++i) cls.emplace_back(space, coeff(rng), coeff(rng));
            const Int base = top_intersection(cls);

            std::vector<DivisorClass> shuffled = cls;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(top_intersection(shuffled) == base);

            // Linearity in the first slot: (A + B, rest) = (A, rest) + (B, rest).
            const DivisorClass extra(space, coeff(rng), coeff(rng));
            std::vector<DivisorClass> sum_args = cls;
            sum_args[0] = cls[0] + extra;
            std::vector<DivisorClass> extra_args = cls;
            extra_args[0] = extra;
            CHECK(top_intersection(sum_args) == base + top_intersection(extra_args));
        }
    }
}

TEST_CASE("standard classes have the expected coordinates") {
    const SymmetricProductSpace s63(6, 3);
    CHECK(delta_class(s63) == DivisorClass(s63, 8, -1));
    CHECK(sym_class(s63, 5) == DivisorClass(s63, 5, 0));
    CHECK(alt_class(s63, 5) == DivisorClass(s63, -3, 1));
    CHECK(alt_class(s63, 8) == DivisorClass(s63, 0, 1));
    CHECK(canonical_class(s63) == DivisorClass(s63, 2, 1));

    const SymmetricProductSpace s32(3, 2);
    CHECK(alt_class(s32, 4) == DivisorClass(s32, 0, 1));
    CHECK(canonical_class(s32) == DivisorClass(s32, 0, 1));
}

TEST_CASE("alternation class is the symmetrization twisted down by half the diagonal") {
    for (int g = 1; g <= 9; ++g)
        for (int n = 1; n <= 5; ++n) {
            const SymmetricProductSpace space(g, n);
            for (Int d = -4; d <= 12; ++d)
                CHECK(alt_class(space, d) + delta_class(space) == sym_class(space, d));
            CHECK(canonical_class(space) == alt_class(space, 2 * g - 2));
        }
}

TEST_CASE("degrees of the standard classes (frozen values)") {
    const SymmetricProductSpace s63(6, 3);
    CHECK(sym_degree(s63, 5) == 125);
    CHECK(alt_degree(s63, 8) == 120);
    CHECK(alt_degree(s63, 5) == -15);
    const SymmetricProductSpace s53(5, 3);
    CHECK(sym_degree(s53, 7) == 343);
    CHECK(alt_degree(s53, 7) == 60);
}

TEST_CASE("degree helpers agree with the multinomial expansion oracle") {
    for (int g = 1; g <= 10; ++g)
        for (int n = 1; n <= 5; ++n) {
            const SymmetricProductSpace space(g, n);
            for (Int d = -6; d <= 18; ++d) {
                const DivisorClass sc = sym_class(space, d);
                const DivisorClass ac = alt_class(space, d);
                CHECK(sym_degree(space, d) ==
                      self_intersection_oracle(space, sc.xi, sc.theta));
                CHECK(alt_degree(space, d) ==
                      self_intersection_oracle(space, ac.xi, ac.theta));
            }
        }
}

TEST_CASE("cubic closed form for n = 3 alternation degrees (frozen values)") {
    CHECK(alt_degree_n3(7, 8) == 104);
    CHECK(alt_degree_n3(8, 8) == 88);
    CHECK(alt_degree_n3(5, 7) == 60);
    CHECK(alt_degree_n3(6, 7) == 47);
    CHECK(alt_degree_n3(9, 8) == 72);
    CHECK(alt_degree_n3(6, 5) == -15);
    CHECK(alt_degree_n3(6, 8) == 120);
}

TEST_CASE("cubic closed form agrees with alt_degree for every genus >= 1") {
    for (int g = 1; g <= 14; ++g) {
        const SymmetricProductSpace space(g, 3);
        for (Int d = -8; d <= 25; ++d)
            CHECK(alt_degree_n3(g, d) == alt_degree(space, d));
    }
}

TEST_CASE("space validation") {
    CHECK_THROWS_AS(SymmetricProductSpace(0, 3), std::domain_error);
    CHECK_THROWS_AS(SymmetricProductSpace(5, 0), std::domain_error);
    CHECK_THROWS_AS(alt_degree_n3(0, 5), std::domain_error);
    const SymmetricProductSpace a(6, 3), b(5, 3);
    CHECK_THROWS_AS(DivisorClass(a, 1, 0) + DivisorClass(b, 1, 0), std::domain_error);
}
