#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symprod {

// Every quantity in the library is exact: unbounded integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an operation would exceed one of the documented cost guards
// (e.g. permanent arity, elimination degree). Mapped to CLI exit code 4.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// base^exp with the convention 0^0 = 1.
Int int_pow(const Int& base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

// top * (top-1) * ... * (top-len+1).  For integer top >= 0 and len <= top+1
// this is top!/(top-len)!; once len > top the chain crosses zero, so the
// product vanishes -- which is exactly the degenerate case the intersection
// formulas need.
Int falling_factorial(const Int& top, unsigned len);

// Canonical "num/den" rendering (den >= 1, gcd 1); kept strict so serialized
// output is byte-stable.
std::string rat_to_string(const Rat& q);

// Accepts "n" or "n/d" with optional sign; throws std::domain_error on junk.
Rat rat_from_string(const std::string& s);

}  // namespace symprod
