#pragma once

#include "symprod/rational.hpp"

#include <array>
#include <compare>
#include <vector>

namespace symprod {

// Point of P^k with a canonical representative: primitive integer
// coordinates whose first nonzero entry is positive.  Equality of canonical
// forms is exactly projective equality, so the representative doubles as a
// dictionary key.
struct ProjectivePoint {
    std::vector<Int> coords;

    explicit ProjectivePoint(std::vector<Int> raw);
    static ProjectivePoint from_rationals(const std::vector<Rat>& raw);

    size_t dim() const { return coords.size() - 1; }

    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
    bool operator<(const ProjectivePoint& o) const;  // lexicographic, for canonical sorting
};

// Effective degree-3 divisor on P^2 (unordered triple of points, repeats
// allowed).  Stored sorted so equality is multiset equality.
struct Divisor3 {
    std::array<ProjectivePoint, 3> points;

    Divisor3(ProjectivePoint a, ProjectivePoint b, ProjectivePoint c);

    bool operator==(const Divisor3& o) const { return points == o.points; }
};

}  // namespace symprod
