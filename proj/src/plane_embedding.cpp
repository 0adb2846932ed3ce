#include "symprod/plane_embedding.hpp"

#include "symprod/elimination.hpp"
#include "symprod/exact_linalg.hpp"
#include "symprod/ns_calculus.hpp"

#include <algorithm>
#include <random>

namespace symprod {

ProjectivePoint phi3(const Divisor3& d) {
    const HomogeneousForm cubic =
        dual_line(d.points[0]) * dual_line(d.points[1]) * dual_line(d.points[2]);
    std::vector<Rat> coords;
    for (const Exponents& e : monomials_of_degree(3)) coords.push_back(cubic.coeff(e));
    return ProjectivePoint::from_rationals(coords);
}

ProjectivePoint veronese3(const ProjectivePoint& x) { return phi3(Divisor3(x, x, x)); }

int collinear_p10_rank(const std::array<ProjectivePoint, 3>& pts) {
    Mat m;
    for (const auto& p : pts) {
        if (p.dim() != 9) throw std::domain_error("collinear_p10: points must lie in P^9");
        Vec row;
        for (const Int& c : p.coords) row.emplace_back(c);
        m.push_back(std::move(row));
    }
    return rank(std::move(m));
}

bool collinear_p10(const std::array<ProjectivePoint, 3>& pts) {
    return collinear_p10_rank(pts) <= 2;
}

namespace {

Mat section_matrix(const std::vector<HomogeneousForm>& sections,
                   const std::vector<ProjectivePoint>& points) {
    if (sections.empty()) throw std::domain_error("section evaluation: no sections");
    if (sections.size() != points.size())
        throw std::domain_error("section evaluation: section and point counts differ");
    for (const auto& s : sections)
        if (s.deg != sections.front().deg)
            throw std::domain_error("section evaluation: sections of mixed degree");
    Mat m(sections.size(), Vec(points.size(), Rat(0)));
    for (size_t i = 0; i < sections.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j) m[i][j] = sections[i].eval(points[j]);
    return m;
}

}  // namespace

Rat sym_section_eval(const std::vector<HomogeneousForm>& sections,
                     const std::vector<ProjectivePoint>& points) {
    if (sections.size() > 8) throw resource_error("sym_section_eval: arity above 8");
    return permanent(section_matrix(sections, points));
}

Rat alt_section_eval(const std::vector<HomogeneousForm>& sections,
                     const std::vector<ProjectivePoint>& points) {
    return det(section_matrix(sections, points));
}

std::vector<HomogeneousForm> SeparatingSection::rows() const {
    std::vector<HomogeneousForm> r;
    for (int i = 0; i < p0; ++i) r.push_back(s0);
    for (int i = p0; i < 3; ++i) r.push_back(s1);
    return r;
}

SeparatingSection separating_section(const Divisor3& d1, const Divisor3& d2) {
    if (d1 == d2) throw std::domain_error("separating_section: divisors are equal");
    std::vector<ProjectivePoint> support;
    for (const auto& p : d1.points)
        if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
    for (const auto& p : d2.points)
        if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
    std::sort(support.begin(), support.end());

    const auto mult = [](const Divisor3& d, const ProjectivePoint& p) {
        int m = 0;
        for (const auto& x : d.points)
            if (x == p) ++m;
        return m;
    };

    // Both divisors have degree 3, so multiplicities cannot all satisfy
    // m1 >= m2 unless the divisors coincide; pick the first pivot with room
    // above it in d2.
    const ProjectivePoint* pivot = nullptr;
    int p0 = 0;
    for (const auto& p : support) {
        const int m1 = mult(d1, p), m2 = mult(d2, p);
        if (m1 < m2) {
            pivot = &p;
            p0 = m1;
            break;
        }
    }
    if (!pivot) throw std::runtime_error("separating_section: no pivot found");

    size_t v0 = 0;
    while (pivot->coords[v0] == 0) ++v0;
    Exponents e0{0, 0, 0};
    e0[v0] = 1;
    const HomogeneousForm s0 = HomogeneousForm::monomial(e0, 1);

    // Two independent lines through the pivot (a : b : c).
    const Rat a(pivot->coords[0]), b(pivot->coords[1]), c(pivot->coords[2]);
    HomogeneousForm l_xy(1), l_xz(1), l_yz(1);
    l_xy.set({1, 0, 0}, b);
    l_xy.set({0, 1, 0}, -a);
    l_xz.set({1, 0, 0}, c);
    l_xz.set({0, 0, 1}, -a);
    l_yz.set({0, 1, 0}, c);
    l_yz.set({0, 0, 1}, -b);
    const HomogeneousForm& l1 = (a != 0 || b != 0) ? l_xy : l_xz;
    const HomogeneousForm& l2 = (a != 0) ? l_xz : l_yz;

    std::vector<ProjectivePoint> others;
    for (const auto& p : support)
        if (!(p == *pivot)) others.push_back(p);

    for (int k = 0;; ++k) {
        const HomogeneousForm s1 = l1 + l2 * Rat(k);
        if (s1.is_zero()) continue;
        bool good = true;
        for (const auto& y : others)
            if (s1.eval(y) == 0) {
                good = false;
                break;
            }
        if (good) return SeparatingSection{p0, *pivot, s0, s1};
        if (k > static_cast<int>(others.size()) + 2)
            throw std::runtime_error("separating_section: pencil exhausted");
    }
}

ConicParametrization::ConicParametrization(BinaryForm A, BinaryForm B, BinaryForm C)
    : a(std::move(A)), b(std::move(B)), c(std::move(C)), quadric(2) {
    if (a.degree() != 2 || b.degree() != 2 || c.degree() != 2)
        throw std::domain_error("ConicParametrization: components must have degree 2");
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::domain_error("ConicParametrization: zero component");
    if (binary_gcd(binary_gcd(a, b), c).degree() != 0)
        throw std::domain_error("ConicParametrization: components share a zero");

    // Quadrics through the image: kernel of the 5x6 matrix of the degree-4
    // pullbacks of the six quadric monomials.
    const auto mons = monomials_of_degree(2);
    Mat m(5, Vec(6, Rat(0)));
    for (size_t col = 0; col < mons.size(); ++col) {
        const BinaryForm pb = compose_ternary(HomogeneousForm::monomial(mons[col], 1), a, b, c);
        for (size_t row = 0; row < 5; ++row) m[row][col] = pb.c[row];
    }
    const auto kernel = nullspace(m);
    if (kernel.size() != 1)
        throw std::domain_error("ConicParametrization: image is not an irreducible conic");
    HomogeneousForm q(2);
    for (size_t i = 0; i < mons.size(); ++i) q.set(mons[i], kernel[0][i]);

    const Rat h = Rat(1) / 2;
    const Mat gram{
        {q.coeff({2, 0, 0}), q.coeff({1, 1, 0}) * h, q.coeff({1, 0, 1}) * h},
        {q.coeff({1, 1, 0}) * h, q.coeff({0, 2, 0}), q.coeff({0, 1, 1}) * h},
        {q.coeff({1, 0, 1}) * h, q.coeff({0, 1, 1}) * h, q.coeff({0, 0, 2})}};
    if (det(gram) == 0)
        throw std::domain_error("ConicParametrization: image conic is degenerate");
    quadric = q.normalized();
}

const ConicParametrization& ConicParametrization::standard() {
    static const ConicParametrization par = [] {
        BinaryForm A(2), B(2), C(2);
        A.c[2] = 1;  // s^2
        B.c[1] = 1;  // st
        C.c[0] = 1;  // t^2
        return ConicParametrization(A, B, C);
    }();
    return par;
}

ProjectivePoint ConicParametrization::at(const ProjectivePoint& param) const {
    if (param.dim() != 1)
        throw std::domain_error("ConicParametrization::at: parameter must lie in P^1");
    return ProjectivePoint::from_rationals({a.eval(param), b.eval(param), c.eval(param)});
}

const std::array<ProjectivePoint, 3>& default_tangency_parameters() {
    static const std::array<ProjectivePoint, 3> ps{ProjectivePoint({Int(1), Int(0)}),
                                                   ProjectivePoint({Int(0), Int(1)}),
                                                   ProjectivePoint({Int(1), Int(1)})};
    return ps;
}

const ProjectivePoint& default_extra_parameter() {
    static const ProjectivePoint q({Int(1), Int(2)});
    return q;
}

namespace {

// The first k coefficients of the expansion of f at the parameter p along
// the pencil (L_p, M_p), with M_p = s0*s + t0*t nonzero at p.  Their
// vanishing is exactly "f vanishes to order >= k at p", and each value is a
// linear functional of f -- which is what lets them serve as rows of an
// exact condition matrix.
std::vector<Rat> vanishing_functional_values(BinaryForm f, const ProjectivePoint& p, int k) {
    const Rat alpha(p.coords[1]);  // L_p = alpha*s + beta*t vanishes at p
    const Rat beta = -Rat(p.coords[0]);
    BinaryForm m(1);
    m.c[1] = Rat(p.coords[0]);
    m.c[0] = Rat(p.coords[1]);
    const Rat mval = m.eval(p);  // s0^2 + t0^2 > 0
    std::vector<Rat> out;
    for (int j = 0; j < k; ++j) {
        const Rat v = f.eval(p);
        out.push_back(v);
        if (j + 1 == k) break;
        const BinaryForm g =
            f - m.pow(static_cast<unsigned>(f.degree())) * (v / rat_pow(mval, static_cast<unsigned>(f.degree())));
        const auto quotient = divide_linear(g, alpha, beta);
        if (!quotient) throw std::runtime_error("vanishing_functional_values: division failed");
        f = *quotient;
    }
    return out;
}

}  // namespace

QuinticConstruction construct_quintic(unsigned seed, const ConicParametrization& par,
                                      const std::array<ProjectivePoint, 3>& ps,
                                      const ProjectivePoint& q) {
    const std::vector<ProjectivePoint> params{ps[0], ps[1], ps[2], q};
    for (size_t i = 0; i < params.size(); ++i) {
        if (params[i].dim() != 1)
            throw std::domain_error("construct_quintic: parameters must lie in P^1");
        for (size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j])
                throw std::domain_error("construct_quintic: parameters must be pairwise distinct");
    }

    const auto mons = monomials_of_degree(5);  // 21 quintic monomials
    std::vector<BinaryForm> pullbacks;
    pullbacks.reserve(mons.size());
    for (const auto& e : mons)
        pullbacks.push_back(compose_ternary(HomogeneousForm::monomial(e, 1), par.a, par.b, par.c));

    // Ten exact linear conditions: order >= 3 at each tangency parameter,
    // order >= 1 at q.
    Mat cond(10, Vec(mons.size(), Rat(0)));
    for (size_t col = 0; col < pullbacks.size(); ++col) {
        size_t row = 0;
        for (const auto& p : ps) {
            const auto vals = vanishing_functional_values(pullbacks[col], p, 3);
            for (const Rat& v : vals) cond[row++][col] = v;
        }
        cond[row][col] = pullbacks[col].eval(q);
    }
    const auto kernel = nullspace(cond);
    if (kernel.empty()) throw std::runtime_error("construct_quintic: condition kernel is empty");

    const std::array<ProjectivePoint, 3> tangency{par.at(ps[0]), par.at(ps[1]), par.at(ps[2])};
    const ProjectivePoint extra = par.at(q);

    const auto full_factor = [&](BinaryForm residue) -> std::optional<Rat> {
        for (const auto& p : ps)
            for (int rep = 0; rep < 3; ++rep) {
                const auto quotient = divide_linear(residue, Rat(p.coords[1]), -Rat(p.coords[0]));
                if (!quotient) return std::nullopt;
                residue = *quotient;
            }
        const auto quotient = divide_linear(residue, Rat(q.coords[1]), -Rat(q.coords[0]));
        if (!quotient) return std::nullopt;
        residue = *quotient;
        if (residue.degree() != 0 || residue.c[0] == 0) return std::nullopt;
        return residue.c[0];
    };

    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL * (static_cast<uint64_t>(seed) + 1) + attempt);
        std::uniform_int_distribution<int> coef(-9, 9);
        Vec w(mons.size(), Rat(0));
        bool any = false;
        for (const auto& kv : kernel) {
            const int cj = coef(rng);
            if (cj == 0) continue;
            any = true;
            for (size_t i = 0; i < w.size(); ++i) w[i] += Rat(cj) * kv[i];
        }
        if (!any) continue;
        HomogeneousForm quintic(5);
        for (size_t i = 0; i < mons.size(); ++i) quintic.set(mons[i], w[i]);
        if (quintic.is_zero()) continue;
        quintic = quintic.normalized();

        const BinaryForm pb = compose_ternary(quintic, par.a, par.b, par.c);
        if (pb.is_zero()) continue;
        const auto scale = full_factor(pb);
        if (!scale) continue;

        bool marked_ok = true;
        for (const auto& x : tangency)
            if (quintic.eval(x) != 0 || !smooth_at(quintic, x)) {
                marked_ok = false;
                break;
            }
        if (marked_ok && (quintic.eval(extra) != 0 || !smooth_at(quintic, extra)))
            marked_ok = false;
        if (!marked_ok) continue;

        return QuinticConstruction{quintic,        static_cast<int>(kernel.size()),
                                   seed,           attempt + 1,
                                   tangency,       extra,
                                   *scale};
    }
    throw std::runtime_error("construct_quintic: no admissible kernel combination found");
}

QuinticConstruction construct_quintic(unsigned seed) {
    return construct_quintic(seed, ConicParametrization::standard(),
                             default_tangency_parameters(), default_extra_parameter());
}

bool smooth_at(const HomogeneousForm& f, const ProjectivePoint& x) {
    if (x.dim() != 2) throw std::domain_error("smooth_at: point must lie in P^2");
    if (f.eval(x) != 0) throw std::domain_error("smooth_at: point not on the curve");
    for (int v = 0; v < 3; ++v)
        if (f.partial(v).eval(x) != 0) return true;
    return false;
}

namespace {

std::vector<ProjectivePoint> singular_points_sample(const HomogeneousForm& f) {
    std::vector<ProjectivePoint> out;
    const int N = 7;
    auto consider = [&](const ProjectivePoint& p) {
        if (f.eval(p) != 0) return;
        if (!smooth_at(f, p)) out.push_back(p);
    };
    for (int x = 0; x <= N; ++x)
        for (int y = -N; y <= N; ++y)
            for (int z = -N; z <= N; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                consider(ProjectivePoint({Int(x), Int(y), Int(z)}));
            }
    // Also walk the standard conic: its rational points with small
    // parameters (this covers the marked points of the quintic pipeline).
    const ConicParametrization& par = ConicParametrization::standard();
    for (int u = 0; u <= N; ++u)
        for (int v = -N; v <= N; ++v) {
            if (u == 0 && v == 0) continue;
            consider(par.at(ProjectivePoint({Int(u), Int(v)})));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ProjectivePoint> singular_points_eliminate(const HomogeneousForm& f) {
    if (f.deg > 6)
        throw resource_error("singular_points_search: degree above 6 in eliminate mode");
    static const std::array<std::array<int, 2>, 10> shears{
        {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {1, 4}, {4, 1}}};
    const Int guard("1000000000000");

    for (const auto& sh : shears) {
        const Int A(sh[0]), B(sh[1]);
        const std::array<std::array<Int, 3>, 3> m{{{Int(1), Int(0), A},
                                                   {Int(0), Int(1), B},
                                                   {Int(0), Int(0), Int(1)}}};
        const HomogeneousForm g = f.substitute_linear(m);
        const std::array<HomogeneousForm, 3> parts{g.partial(0), g.partial(1), g.partial(2)};
        bool z_regular = true;
        for (const auto& p : parts)
            if (p.is_zero() || p.eval(Rat(0), Rat(0), Rat(1)) == 0) {
                z_regular = false;
                break;
            }
        if (!z_regular) continue;

        // Every singular point's (X : Y) shadow is a zero of each pairwise
        // resultant, so the gcd over the nonzero ones still catches all of
        // them; an identically zero resultant (partials sharing a component)
        // is simply uninformative.  No nonzero resultant means this shear
        // cannot bound the singular locus at all.
        std::vector<BinaryForm> resultants;
        for (const auto& [i, j] :
             std::array<std::array<int, 2>, 3>{{{0, 1}, {0, 2}, {1, 2}}}) {
            BinaryForm r = resultant_z(parts[static_cast<size_t>(i)],
                                       parts[static_cast<size_t>(j)]);
            if (!r.is_zero()) resultants.push_back(std::move(r));
        }
        if (resultants.empty()) continue;
        BinaryForm G = resultants.front().normalized();
        for (size_t k = 1; k < resultants.size(); ++k) G = binary_gcd(G, resultants[k]);
        // Constant gcd: the partials have no common zero with (X, Y) != 0,
        // and Z-regularity already excludes (0:0:1) -- smooth.
        if (G.degree() == 0) return {};

        std::vector<ProjectivePoint> found;
        bool resolved = true;
        int mult_sum = 0;
        std::vector<std::pair<ProjectivePoint, int>> zeros;
        try {
            zeros = rational_zeros(G, guard);
        } catch (const resource_error&) {
            continue;
        }
        for (const auto& [xy, mult] : zeros) {
            mult_sum += mult;
            // Specialize the partials to the pencil over (x0 : y0); their
            // gcd's zeros are exactly the z with a singular point there.
            std::array<BinaryForm, 3> pz{BinaryForm(parts[0].deg), BinaryForm(parts[1].deg),
                                         BinaryForm(parts[2].deg)};
            for (int i = 0; i < 3; ++i)
                for (const auto& [e, cf] : parts[static_cast<size_t>(i)].terms)
                    pz[static_cast<size_t>(i)].c[static_cast<size_t>(e[2])] +=
                        cf * rat_pow(Rat(xy.coords[0]), static_cast<unsigned>(e[0])) *
                        rat_pow(Rat(xy.coords[1]), static_cast<unsigned>(e[1]));
            const BinaryForm H = binary_gcd(binary_gcd(pz[0], pz[1]), pz[2]);
            if (H.degree() == 0) continue;  // spurious projection: nothing above it
            std::vector<std::pair<ProjectivePoint, int>> hz;
            try {
                hz = rational_zeros(H, guard);
            } catch (const resource_error&) {
                resolved = false;
                break;
            }
            int hsum = 0;
            for (const auto& [zw, zm] : hz) {
                hsum += zm;
                if (zw.coords[1] == 0) continue;  // excluded by Z-regularity
                std::vector<Int> v{xy.coords[0] * zw.coords[1], xy.coords[1] * zw.coords[1],
                                   zw.coords[0]};
                const ProjectivePoint cand(std::move(v));
                bool singular = true;
                for (const auto& p : parts)
                    if (p.eval(cand) != 0) {
                        singular = false;
                        break;
                    }
                if (!singular) {
                    resolved = false;
                    break;
                }
                found.emplace_back(std::vector<Int>{cand.coords[0] + A * cand.coords[2],
                                                    cand.coords[1] + B * cand.coords[2],
                                                    cand.coords[2]});
            }
            if (!resolved) break;
            // Z-locus must split rationally, else a singular point escapes.
            if (hsum != H.degree()) {
                resolved = false;
                break;
            }
        }
        // Same for the projections themselves.
        if (resolved && mult_sum != G.degree()) resolved = false;
        if (!resolved) continue;
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        return found;
    }
    throw resource_error("singular_points_search: elimination inconclusive after shear retries");
}

}  // namespace

std::vector<ProjectivePoint> singular_points_search(const HomogeneousForm& f,
                                                    SingularSearchMode mode) {
    if (f.is_zero() || f.deg < 1)
        throw std::domain_error("singular_points_search: need a nonzero form of positive degree");
    return mode == SingularSearchMode::sample ? singular_points_sample(f)
                                              : singular_points_eliminate(f);
}

NoncollinearityReport verify_quintic_noncollinearity(unsigned seed) {
    QuinticConstruction qc = [&] {
        try {
            return construct_quintic(seed);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("stage construct: ") + e.what());
        }
    }();
    std::vector<VerificationStage> stages;
    stages.push_back({"construct", true, "nullity " + std::to_string(qc.nullity) + ", attempts " +
                                             std::to_string(qc.attempts)});

    bool smooth_ok = true;
    try {
        for (const auto& x : qc.tangency_points) smooth_ok = smooth_ok && smooth_at(qc.quintic, x);
        smooth_ok = smooth_ok && smooth_at(qc.quintic, qc.extra_point);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("stage marked_smoothness: ") + e.what());
    }
    stages.push_back({"marked_smoothness", smooth_ok,
                      smooth_ok ? "gradient nonzero at all four marked points"
                                : "vanishing gradient at a marked point"});

    std::array<ProjectivePoint, 3> images{veronese3(qc.tangency_points[0]),
                                          veronese3(qc.tangency_points[1]),
                                          veronese3(qc.tangency_points[2])};
    const bool distinct =
        !(images[0] == images[1]) && !(images[0] == images[2]) && !(images[1] == images[2]);
    stages.push_back({"images", distinct,
                      distinct ? "cubic images pairwise distinct" : "coincident cubic images"});

    const int rk = collinear_p10_rank(images);
    const bool noncollinear = rk == 3;
    stages.push_back({"collinearity", noncollinear, "rank " + std::to_string(rk)});

    bool incidence = true;
    const HomogeneousForm& conic = ConicParametrization::standard().quadric;
    for (const auto& x : qc.tangency_points)
        incidence = incidence && qc.quintic.eval(x) == 0 && conic.eval(x) == 0;
    incidence = incidence && qc.quintic.eval(qc.extra_point) == 0 &&
                conic.eval(qc.extra_point) == 0;
    stages.push_back({"incidence", incidence,
                      incidence ? "marked points lie on quintic and conic"
                                : "a marked point misses quintic or conic"});

    const Int target = sym_degree(SymmetricProductSpace(6, 3), Int(5));
    const bool degree_ok = target == 125;
    stages.push_back({"polarization_degree", degree_ok, target.get_str()});

    bool all = true;
    for (const auto& s : stages) all = all && s.ok;
    return NoncollinearityReport{seed,         std::move(qc), std::move(images), rk,
                                 !noncollinear, target,        std::move(stages), all};
}

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t h = a + 0x9e3779b97f4a7c15ULL;
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

ProjectivePoint random_parameter(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 40);
    while (true) {
        const int p = num(rng), q = den(rng);
        if (p != 0 || q != 0) return ProjectivePoint({Int(p), Int(q)});
    }
}

ProjectivePoint random_plane_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-15, 15);
    while (true) {
        const int x = c(rng), y = c(rng), z = c(rng);
        if (x != 0 || y != 0 || z != 0) return ProjectivePoint({Int(x), Int(y), Int(z)});
    }
}

Divisor3 random_divisor(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pattern(0, 5);
    const int p = pattern(rng);
    ProjectivePoint a = random_plane_point(rng);
    if (p == 0) return Divisor3(a, a, a);
    ProjectivePoint b = random_plane_point(rng);
    if (p <= 2) return Divisor3(a, a, b);
    ProjectivePoint c = random_plane_point(rng);
    return Divisor3(a, b, c);
}

template <typename F>
void run_indexed(long count, int workers, F&& body) {
#ifdef SYMPROD_HAVE_OPENMP
    if (workers > 1) {
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
        for (long k = 0; k < count; ++k) body(k);
        return;
    }
#else
    (void)workers;
#endif
    for (long k = 0; k < count; ++k) body(k);
}

}  // namespace

InjectivitySample injectivity_sample(long pairs, unsigned seed, int workers) {
    if (pairs < 0) throw std::domain_error("injectivity_sample: negative pair count");
    const ConicParametrization& par = ConicParametrization::standard();
    std::vector<char> collision(static_cast<size_t>(pairs), 0);
    run_indexed(pairs, workers, [&](long k) {
        std::mt19937_64 rng(mix(seed, static_cast<uint64_t>(k)));
        for (int tries = 0; tries < 64; ++tries) {
            const Divisor3 d1(par.at(random_parameter(rng)), par.at(random_parameter(rng)),
                              par.at(random_parameter(rng)));
            const Divisor3 d2(par.at(random_parameter(rng)), par.at(random_parameter(rng)),
                              par.at(random_parameter(rng)));
            if (d1 == d2) continue;
            if (phi3(d1) == phi3(d2)) collision[static_cast<size_t>(k)] = 1;
            return;
        }
        collision[static_cast<size_t>(k)] = 1;  // could not draw a distinct pair
    });
    InjectivitySample out{pairs, 0};
    for (char c : collision) out.collisions += c;
    return out;
}

SeparationSample separation_sample(long trials, unsigned seed, int workers) {
    if (trials < 0) throw std::domain_error("separation_sample: negative trial count");
    std::vector<char> failure(static_cast<size_t>(trials), 0);
    run_indexed(trials, workers, [&](long k) {
        std::mt19937_64 rng(mix(~static_cast<uint64_t>(seed), static_cast<uint64_t>(k)));
        for (int tries = 0; tries < 64; ++tries) {
            const Divisor3 d1 = random_divisor(rng);
            const Divisor3 d2 = random_divisor(rng);
            if (d1 == d2) continue;
            const SeparatingSection sec = separating_section(d1, d2);
            const auto rows = sec.rows();
            const std::vector<ProjectivePoint> pts1(d1.points.begin(), d1.points.end());
            const std::vector<ProjectivePoint> pts2(d2.points.begin(), d2.points.end());
            const bool ok = sym_section_eval(rows, pts1) != 0 && sym_section_eval(rows, pts2) == 0;
            if (!ok) failure[static_cast<size_t>(k)] = 1;
            return;
        }
        failure[static_cast<size_t>(k)] = 1;
    });
    SeparationSample out{trials, 0};
    for (char c : failure) out.failures += c;
    return out;
}

}  // namespace symprod
