#include "symprod/ns_calculus.hpp"

namespace symprod {

SymmetricProductSpace::SymmetricProductSpace(int genus, int power) : g(genus), n(power) {
    if (g < 1) throw std::domain_error("SymmetricProductSpace: genus must be >= 1");
    if (n < 1) throw std::domain_error("SymmetricProductSpace: power must be >= 1");
}

namespace {

void require_same_space(const SymmetricProductSpace& a, const SymmetricProductSpace& b) {
    if (!(a == b)) throw std::domain_error("divisor classes live on different spaces");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_space(space, o.space);
    return {space, xi + o.xi, theta + o.theta};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same_space(space, o.space);
    return {space, xi - o.xi, theta - o.theta};
}

DivisorClass DivisorClass::operator*(const Int& k) const {
    return {space, xi * k, theta * k};
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    require_same_space(space, o.space);
    return xi == o.xi && theta == o.theta;
}

Int monomial_intersection(const SymmetricProductSpace& space, int i) {
    if (i < 0 || i > space.n)
        throw std::domain_error("monomial_intersection: exponent out of range");
    return falling_factorial(Int(space.g), static_cast<unsigned>(space.n - i));
}

Int top_intersection(std::span<const DivisorClass> classes) {
    if (classes.empty()) throw std::domain_error("top_intersection: no classes");
    const SymmetricProductSpace space = classes.front().space;
    const int n = space.n;
    if (static_cast<int>(classes.size()) != n)
        throw std::domain_error("top_intersection: need exactly n classes");
    for (const auto& c : classes) require_same_space(space, c.space);

    // Expand the product: each factor contributes its x- or its th-part.
    Int total = 0;
    const unsigned long full = 1ul << n;
    for (unsigned long s = 0; s < full; ++s) {
        Int term = 1;
        int xi_count = 0;
        for (int j = 0; j < n && term != 0; ++j) {
            if (s & (1ul << j)) {
                term *= classes[static_cast<size_t>(j)].xi;
                ++xi_count;
            } else {
                term *= classes[static_cast<size_t>(j)].theta;
            }
        }
        if (term == 0) continue;
        total += term * monomial_intersection(space, xi_count);
    }
    return total;
}

DivisorClass delta_class(const SymmetricProductSpace& space) {
    return {space, Int(space.n + space.g - 1), Int(-1)};
}

DivisorClass sym_class(const SymmetricProductSpace& space, const Int& d) {
    return {space, d, Int(0)};
}

DivisorClass alt_class(const SymmetricProductSpace& space, const Int& d) {
    return {space, d - space.g - space.n + 1, Int(1)};
}

DivisorClass canonical_class(const SymmetricProductSpace& space) {
    return alt_class(space, Int(2 * space.g - 2));
}

Int sym_degree(const SymmetricProductSpace& space, const Int& d) {
    return int_pow(d, static_cast<unsigned>(space.n));
}

Int alt_degree(const SymmetricProductSpace& space, const Int& d) {
    const Int e = d - space.g - space.n + 1;
    const unsigned n = static_cast<unsigned>(space.n);
    Int total = 0;
    for (unsigned i = 0; i <= n; ++i)
        total += binomial(n, i) * monomial_intersection(space, static_cast<int>(i)) *
                 int_pow(e, i);
    return total;
}

Int alt_degree_n3(int g, const Int& d) {
    if (g < 1) throw std::domain_error("alt_degree_n3: genus must be >= 1");
    const Int gz(g);
    const Int e = d - g - 2;
    return gz * (gz - 1) * (gz - 2) + 3 * gz * (gz - 1) * e + 3 * gz * e * e + e * e * e;
}

}  // namespace symprod
