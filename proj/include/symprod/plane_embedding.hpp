#pragma once

#include "symprod/forms.hpp"
#include "symprod/projective.hpp"

#include <array>
#include <string>
#include <vector>

namespace symprod {

// Image of the divisor x1 + x2 + x3 under the multiplication map of dual
// lines: the cubic gamma_x1 * gamma_x2 * gamma_x3, read off in the
// descending-lex cubic monomial basis as a point of P^9.  Symmetric in the
// three points and projectively well defined; injective because a cubic
// form factors into linear forms uniquely up to scaling.
ProjectivePoint phi3(const Divisor3& d);

// phi3 of the triple divisor 3x, i.e. the coefficients of gamma_x^3.
ProjectivePoint veronese3(const ProjectivePoint& x);

// Exact collinearity test in P^9: rank of the 3x10 coordinate matrix <= 2.
int collinear_p10_rank(const std::array<ProjectivePoint, 3>& pts);
bool collinear_p10(const std::array<ProjectivePoint, 3>& pts);

// Value of the symmetrized product of n equal-degree sections on the cycle
// points[0] + ... + points[n-1]: the permanent of (sections[i](points[j])),
// taken at canonical representatives.  Arity above 8 throws resource_error
// (Ryser cost guard).
Rat sym_section_eval(const std::vector<HomogeneousForm>& sections,
                     const std::vector<ProjectivePoint>& points);

// Determinant of the same matrix.  It vanishes exactly when some nonzero
// combination of the sections vanishes at every point of the cycle (the
// cycle is subordinated to a hyperplane of the span).
Rat alt_section_eval(const std::vector<HomogeneousForm>& sections,
                     const std::vector<ProjectivePoint>& points);

// Certificate separating two distinct degree-3 divisors on P^2 by a single
// symmetrized product of linear sections: with p0 the multiplicity of the
// pivot in d1 (strictly smaller than in d2), the product s0^p0 * s1^(3-p0)
// is nonzero on d1 and zero on d2.
struct SeparatingSection {
    int p0;
    ProjectivePoint pivot;
    HomogeneousForm s0;
    HomogeneousForm s1;
    std::vector<HomogeneousForm> rows() const;  // p0 copies of s0 then 3-p0 of s1
};
SeparatingSection separating_section(const Divisor3& d1, const Divisor3& d2);

// Rational parametrization of a smooth conic by three degree-2 binary forms
// without common zeros; the unique quadric through the image is computed and
// must be irreducible (full-rank symmetric matrix).
struct ConicParametrization {
    BinaryForm a, b, c;
    HomogeneousForm quadric;

    ConicParametrization(BinaryForm A, BinaryForm B, BinaryForm C);
    static const ConicParametrization& standard();  // (s^2, st, t^2)

    ProjectivePoint at(const ProjectivePoint& param) const;
};

const std::array<ProjectivePoint, 3>& default_tangency_parameters();  // (1:0),(0:1),(1:1)
const ProjectivePoint& default_extra_parameter();                     // (1:2)

struct QuinticConstruction {
    HomogeneousForm quintic;  // primitive integer coefficients
    int nullity;              // kernel dimension of the ten incidence conditions
    unsigned seed;
    unsigned attempts;  // seeded selection attempts consumed (>= 1)
    std::array<ProjectivePoint, 3> tangency_points;  // conic points over the p_i
    ProjectivePoint extra_point;                     // conic point over q
    Rat pullback_scale;  // pullback = scale * L1^3 L2^3 L3^3 Lq
};

// Quintics meeting the conic exactly in 3(x1+x2+x3) + y: the order-3
// vanishing conditions at the three tangency parameters plus the simple one
// at q give ten exact linear conditions on the 21 quintic coefficients.  A
// seeded small-integer combination of the kernel is accepted once the
// pullback factorization is exact with nonzero scale and the gradient is
// nonzero at all four marked points.
QuinticConstruction construct_quintic(unsigned seed, const ConicParametrization& par,
                                      const std::array<ProjectivePoint, 3>& ps,
                                      const ProjectivePoint& q);
QuinticConstruction construct_quintic(unsigned seed);

// Gradient test at a point that must lie on the curve (else domain_error).
bool smooth_at(const HomogeneousForm& f, const ProjectivePoint& x);

enum class SingularSearchMode { sample, eliminate };

// sample: evaluates the gradient at every curve point found in a small
// deterministic coordinate box -- cheap, no proof.  eliminate: after a
// Z-regularizing shear, takes the pairwise Z-resultants of the three
// partials; a constant gcd certifies smoothness, otherwise the rational
// singular points are extracted and gradient-verified.  Retries a fixed
// shear list and throws resource_error when the elimination stays
// inconclusive (e.g. irrational singular locus) or the degree exceeds 6.
std::vector<ProjectivePoint> singular_points_search(const HomogeneousForm& f,
                                                    SingularSearchMode mode);

struct VerificationStage {
    std::string name;
    bool ok;
    std::string detail;
};

struct NoncollinearityReport {
    unsigned seed;
    QuinticConstruction construction;
    std::array<ProjectivePoint, 3> images;  // veronese3 of the tangency points
    int rank;                               // of the 3x10 image matrix
    bool collinear;
    Int target_degree;  // 5^3: top self-intersection of the induced polarization
    std::vector<VerificationStage> stages;
    bool all_ok;
};

// End-to-end certificate: construct the quintic, re-check smoothness at the
// marked points and their incidence, push the three tangency points through
// veronese3 and certify they are NOT collinear in P^9.
NoncollinearityReport verify_quintic_noncollinearity(unsigned seed);

// Sampling kernels (deterministic per index, so any worker count gives the
// same result; workers > 1 uses OpenMP when available).
struct InjectivitySample {
    long pairs = 0;
    long collisions = 0;
};
InjectivitySample injectivity_sample(long pairs, unsigned seed, int workers = 1);

struct SeparationSample {
    long trials = 0;
    long failures = 0;
};
SeparationSample separation_sample(long trials, unsigned seed, int workers = 1);

}  // namespace symprod
