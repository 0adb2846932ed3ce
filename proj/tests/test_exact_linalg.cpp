#include "doctest.h"

#include "symprod/exact_linalg.hpp"

#include <random>

using namespace symprod;

namespace {

Mat random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Mat m(rows, std::vector<Rat>(cols));
    for (auto& row : m)
        for (auto& v : row) v = Rat(dist(rng));
    return m;
}

// Leibniz-formula determinant and permanent over all permutations (oracle,
// usable up to ~6x6).
void leibniz(const Mat& m, Rat* det_out, Rat* perm_out) {
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Rat det = 0, per = 0;
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rat prod = 1;
        for (size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
        per += prod;
        det += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    *det_out = det;
    *perm_out = per;
}

}  // namespace

TEST_CASE("determinant and permanent match the Leibniz oracle") {
    std::mt19937_64 rng(7);
    for (size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            const Mat m = random_matrix(rng, n, n, -5, 5);
            Rat d, p;
            leibniz(m, &d, &p);
            CHECK(det(m) == d);
            CHECK(permanent(m) == p);
        }
    }
}

TEST_CASE("determinant basics") {
    CHECK(det({{Rat(3)}}) == 3);
    CHECK(det({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == -2);
    CHECK(det({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 0);
    // Row swap flips the sign.
    CHECK(det({{Rat(3), Rat(4)}, {Rat(1), Rat(2)}}) == 2);
    CHECK_THROWS_AS(det({{Rat(1), Rat(2)}}), std::domain_error);
}

TEST_CASE("permanent basics") {
    CHECK(permanent({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == 10);
    // Permanent of a 0/1 matrix counts permutations avoiding the zeros.
    CHECK(permanent({{Rat(1), Rat(1), Rat(1)},
                     {Rat(1), Rat(1), Rat(1)},
                     {Rat(1), Rat(1), Rat(1)}}) == 6);
    CHECK(permanent({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == 1);
    Mat too_big(21, std::vector<Rat>(21, Rat(1)));
    CHECK_THROWS_AS(permanent(too_big), resource_error);
}

TEST_CASE("rank, rref and nullspace") {
    const Mat m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1)}};
    CHECK(rank(m) == 2);

    std::vector<int> pivots;
    const Mat r = rref(m, &pivots);
    CHECK(pivots == std::vector<int>{0, 1});
    // Pivot columns of an rref are unit vectors.
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t i = 0; i < r.size(); ++i)
            CHECK(r[i][static_cast<size_t>(pivots[k])] == (i == k ? 1 : 0));

    const std::vector<Vec> ns = nullspace(m);
    CHECK(ns.size() == 1);
    for (const auto& row : m) {
        Rat dot = 0;
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * ns[0][j];
        CHECK(dot == 0);
    }
}

TEST_CASE("rank-nullity on random matrices, and nullspace vectors annihilate the rows") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<size_t> dim(1, 7);
    for (int rep = 0; rep < 40; ++rep) {
        const size_t rows = dim(rng), cols = dim(rng);
        const Mat m = random_matrix(rng, rows, cols, -4, 4);
        const int rk = rank(m);
        const std::vector<Vec> ns = nullspace(m);
        CHECK(static_cast<size_t>(rk) + ns.size() == cols);
        for (const auto& v : ns) {
            bool nonzero = false;
            for (const auto& c : v) nonzero = nonzero || c != 0;
            CHECK(nonzero);
            for (const auto& row : m) {
                Rat dot = 0;
                for (size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const Mat a = random_matrix(rng, 4, 4, -3, 3);
        const Mat b = random_matrix(rng, 4, 4, -3, 3);
        Mat prod(4, std::vector<Rat>(4, Rat(0)));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                for (size_t k = 0; k < 4; ++k) prod[i][j] += a[i][k] * b[k][j];
        CHECK(det(prod) == det(a) * det(b));
    }
}
