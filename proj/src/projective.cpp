#include "symprod/projective.hpp"

#include <algorithm>

namespace symprod {

ProjectivePoint::ProjectivePoint(std::vector<Int> raw) : coords(std::move(raw)) {
    if (coords.size() < 2)
        throw std::domain_error("ProjectivePoint: need at least 2 coordinates");
    Int g = 0;
    for (const Int& c : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw std::domain_error("ProjectivePoint: all coordinates zero");
    for (Int& c : coords) c /= g;
    for (const Int& c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (Int& x : coords) x = -x;
        break;
    }
}

ProjectivePoint ProjectivePoint::from_rationals(const std::vector<Rat>& raw) {
    // Clear denominators: multiply by the lcm, then canonicalize as integers.
    Int lcm = 1;
    for (const Rat& q : raw)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(raw.size());
    for (const Rat& q : raw) ints.push_back(Int(q.get_num() * (lcm / q.get_den())));
    return ProjectivePoint(std::move(ints));
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
    return std::lexicographical_compare(coords.begin(), coords.end(),
                                        o.coords.begin(), o.coords.end());
}

Divisor3::Divisor3(ProjectivePoint a, ProjectivePoint b, ProjectivePoint c)
    : points{std::move(a), std::move(b), std::move(c)} {
    for (const auto& p : points)
        if (p.dim() != 2) throw std::domain_error("Divisor3: points must lie in P^2");
    std::sort(points.begin(), points.end());
}

}  // namespace symprod
