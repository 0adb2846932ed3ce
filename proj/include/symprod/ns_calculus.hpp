#pragma once

#include "symprod/rational.hpp"

#include <span>
#include <vector>

namespace symprod {

// Ambient data for the n-th symmetric power C(n) of a smooth projective
// genus-g curve: everything below happens inside the rank-2 sublattice of
// NS(C(n)) spanned by x (divisors whose support meets a fixed point) and
// th (pull-back of a theta divisor under an Abel-Jacobi map).
struct SymmetricProductSpace {
    int g;
    int n;
    SymmetricProductSpace(int genus, int power);
    bool operator==(const SymmetricProductSpace&) const = default;
};

// Class a*x + b*th.  Arithmetic requires matching spaces.
struct DivisorClass {
    SymmetricProductSpace space;
    Int xi;
    Int theta;

    DivisorClass(const SymmetricProductSpace& s, Int a, Int b)
        : space(s), xi(std::move(a)), theta(std::move(b)) {}

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Int& k) const;
    bool operator==(const DivisorClass& o) const;
};

// x^i . th^(n-i) = g!/(g-n+i)! (Poincare), which the falling factorial
// realizes for every g >= 0: once n-i > g the chain of factors crosses
// zero and the product vanishes, matching th^(g+1) = 0.
Int monomial_intersection(const SymmetricProductSpace& space, int i);

// Top intersection number of exactly n classes on the same space, by
// multilinear expansion over all 2^n choices of x- or th-component.
Int top_intersection(std::span<const DivisorClass> classes);
inline Int top_intersection(std::initializer_list<DivisorClass> classes) {
    return top_intersection(std::span<const DivisorClass>(classes.begin(), classes.size()));
}

// Diagonal-related class: delta/2 = (n+g-1) x - th.
DivisorClass delta_class(const SymmetricProductSpace& space);

// Class of the "symmetrization" bundle induced by a degree-d bundle on the
// curve: d*x.
DivisorClass sym_class(const SymmetricProductSpace& space, const Int& d);

// Class of the "alternation" bundle: sym minus the diagonal contribution,
// (d-g-n+1) x + th.
DivisorClass alt_class(const SymmetricProductSpace& space, const Int& d);

// alt_class at the canonical degree 2g-2, i.e. (g-n-1) x + th; this is the
// canonical class of C(n) itself.
DivisorClass canonical_class(const SymmetricProductSpace& space);

// Top self-intersection d^n of sym_class.
Int sym_degree(const SymmetricProductSpace& space, const Int& d);

// Top self-intersection of alt_class:
//   sum_i C(n,i) * g!/(g-n+i)! * (d-g-n+1)^i.
Int alt_degree(const SymmetricProductSpace& space, const Int& d);

// Cubic-in-d closed form of alt_degree for n = 3,
//   g(g-1)(g-2) + 3g(g-1)e + 3g e^2 + e^3   with e = d-g-2,
// valid verbatim for every g >= 1 (the falling factorials absorb g < 3).
Int alt_degree_n3(int g, const Int& d);

}  // namespace symprod
