#pragma once

#include "symprod/projective.hpp"
#include "symprod/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace symprod {

// Exponent triple (i, j, k) of X^i Y^j Z^k.
using Exponents = std::array<int, 3>;

struct LexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

// All exponent triples of total degree d, in descending lexicographic order.
// For d = 3 this fixes the coordinate order on P^9:
//   (3,0,0),(2,1,0),(2,0,1),(1,2,0),(1,1,1),(1,0,2),(0,3,0),(0,2,1),(0,1,2),(0,0,3).
std::vector<Exponents> monomials_of_degree(int d);

// Sparse homogeneous polynomial in X, Y, Z with exact rational coefficients.
// The degree is part of the value (a zero form still has one); all stored
// terms have that total degree and nonzero coefficient.
struct HomogeneousForm {
    int deg;
    std::map<Exponents, Rat, LexDescending> terms;

    explicit HomogeneousForm(int degree);
    static HomogeneousForm monomial(const Exponents& e, const Rat& c);

    bool is_zero() const { return terms.empty(); }
    Rat coeff(const Exponents& e) const;
    void set(const Exponents& e, const Rat& c);  // keeps the no-zero-terms invariant

    HomogeneousForm operator+(const HomogeneousForm& o) const;
    HomogeneousForm operator-(const HomogeneousForm& o) const;
    HomogeneousForm operator*(const HomogeneousForm& o) const;
    HomogeneousForm operator*(const Rat& k) const;
    bool operator==(const HomogeneousForm& o) const { return deg == o.deg && terms == o.terms; }

    HomogeneousForm pow(unsigned e) const;
    HomogeneousForm partial(int var) const;  // var in {0,1,2}

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
    Rat eval(const ProjectivePoint& p) const;  // at the canonical representative

    // F(M v): substitute each variable by the linear form given by row of m.
    HomogeneousForm substitute_linear(const std::array<std::array<Int, 3>, 3>& m) const;

    // Scale to primitive integer coefficients with positive leading
    // (lex-descending first) coefficient; no-op on the zero form.
    HomogeneousForm normalized() const;
};

// a X + b Y + c Z for p = (a : b : c); vanishes exactly on the lines dual to p.
HomogeneousForm dual_line(const ProjectivePoint& p);

// Binary form in (s, t): c[i] is the coefficient of s^i t^(deg-i).
struct BinaryForm {
    std::vector<Rat> c;  // size deg+1

    explicit BinaryForm(int degree) : c(static_cast<size_t>(degree) + 1, Rat(0)) {
        if (degree < 0) throw std::domain_error("BinaryForm: negative degree");
    }
    static BinaryForm from_coeffs(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const;

    Rat eval(const Rat& s, const Rat& t) const;
    Rat eval(const ProjectivePoint& param) const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator*(const Rat& k) const;
    bool operator==(const BinaryForm& o) const { return c == o.c; }

    BinaryForm pow(unsigned e) const;
    BinaryForm normalized() const;  // primitive integer, positive leading coeff
};

// t0*s - s0*t, the linear form vanishing at the parameter (s0 : t0).
BinaryForm parameter_linear_form(const ProjectivePoint& param);

// Exact division by alpha*s + beta*t; nullopt when not divisible.
std::optional<BinaryForm> divide_linear(const BinaryForm& f, const Rat& alpha, const Rat& beta);

// Largest m with (t0*s - s0*t)^m dividing f (f nonzero required).
int root_multiplicity(const BinaryForm& f, const ProjectivePoint& param);

// Gcd as a primitive integer binary form with positive leading coefficient;
// the zero form acts as the gcd identity.
BinaryForm binary_gcd(BinaryForm a, BinaryForm b);

// F(A, B, C) for a ternary form F and three binary forms of one common
// degree m: a binary form of degree deg(F) * m.
BinaryForm compose_ternary(const HomogeneousForm& f, const BinaryForm& a, const BinaryForm& b,
                           const BinaryForm& c);

}  // namespace symprod
