#pragma once

#include "symprod/forms.hpp"

#include <utility>
#include <vector>

namespace symprod {

// Resultant of two ternary forms (degrees >= 1) with respect to Z, as a
// binary form of degree deg(f)*deg(g) in (X, Y): the Sylvester determinant
// is evaluated at deg(f)*deg(g)+1 rational abscissae and recovered by exact
// Lagrange interpolation.
BinaryForm resultant_z(const HomogeneousForm& f, const HomogeneousForm& g);

// All rational zeros (p : q) of a nonzero binary form, with multiplicities,
// sorted by canonical representative.  Root candidates come from divisor
// enumeration on the extreme coefficients of the primitive core; when one of
// those exceeds coeff_guard in absolute value the enumeration would be too
// expensive and a resource_error is thrown instead.
std::vector<std::pair<ProjectivePoint, int>> rational_zeros(const BinaryForm& f,
                                                            const Int& coeff_guard);

}  // namespace symprod
