#include "symprod/elimination.hpp"

#include "symprod/exact_linalg.hpp"

#include <algorithm>

namespace symprod {

namespace {

// Coefficient of Z^z in f, as a binary form in (X, Y).
BinaryForm z_coefficient(const HomogeneousForm& f, int z) {
    BinaryForm out(f.deg - z);
    for (const auto& [e, c] : f.terms)
        if (e[2] == z) out.c[static_cast<size_t>(e[0])] = c;
    return out;
}

// Newton interpolation: the unique polynomial of degree < xs.size() through
// (xs[i], ys[i]), returned as a dense coefficient vector (index = power).
std::vector<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const size_t n = xs.size();
    std::vector<Rat> dd = ys;  // divided differences, computed in place
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rat> poly{dd[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // poly <- poly * (x - xs[i]) + dd[i]
        poly.insert(poly.begin(), Rat(0));
        for (size_t k = 0; k + 1 < poly.size(); ++k) poly[k] -= xs[i] * poly[k + 1];
        poly[0] += dd[i];
    }
    return poly;
}

std::vector<Int> divisors_up_to_abs(const Int& n, const Int& guard) {
    Int a = abs(n);
    if (a > guard) throw resource_error("rational_zeros: coefficient too large to factor");
    std::vector<Int> out;
    for (Int i = 1; i * i <= a; ++i) {
        if (a % i != 0) continue;
        out.push_back(i);
        out.push_back(a / i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

BinaryForm resultant_z(const HomogeneousForm& f, const HomogeneousForm& g) {
    const int a = f.deg, b = g.deg;
    if (a < 1 || b < 1) throw std::domain_error("resultant_z: both degrees must be >= 1");
    std::vector<BinaryForm> fc, gc;
    for (int z = 0; z <= a; ++z) fc.push_back(z_coefficient(f, z));
    for (int z = 0; z <= b; ++z) gc.push_back(z_coefficient(g, z));

    const int n = a * b;
    std::vector<Rat> xs, ys;
    // Abscissae 0, 1, -1, 2, -2, ...
    xs.emplace_back(0);
    for (int k = 1; static_cast<int>(xs.size()) < n + 1; ++k) {
        xs.emplace_back(k);
        if (static_cast<int>(xs.size()) < n + 1) xs.emplace_back(-k);
    }
    for (const Rat& x : xs) {
        std::vector<Rat> p(static_cast<size_t>(a) + 1), q(static_cast<size_t>(b) + 1);
        for (int z = 0; z <= a; ++z) p[static_cast<size_t>(z)] = fc[static_cast<size_t>(z)].eval(x, Rat(1));
        for (int z = 0; z <= b; ++z) q[static_cast<size_t>(z)] = gc[static_cast<size_t>(z)].eval(x, Rat(1));
        Mat syl(static_cast<size_t>(a + b), Vec(static_cast<size_t>(a + b), Rat(0)));
        for (int i = 0; i < b; ++i)
            for (int j = 0; j <= a; ++j)
                syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = p[static_cast<size_t>(a - j)];
        for (int i = 0; i < a; ++i)
            for (int j = 0; j <= b; ++j)
                syl[static_cast<size_t>(b + i)][static_cast<size_t>(i + j)] = q[static_cast<size_t>(b - j)];
        ys.push_back(det(std::move(syl)));
    }
    const std::vector<Rat> poly = interpolate(xs, ys);
    BinaryForm r(n);
    for (size_t i = 0; i < poly.size() && i <= static_cast<size_t>(n); ++i) r.c[i] = poly[i];
    return r;
}

std::vector<std::pair<ProjectivePoint, int>> rational_zeros(const BinaryForm& f,
                                                            const Int& coeff_guard) {
    if (f.is_zero()) throw std::domain_error("rational_zeros: zero form");
    std::vector<std::pair<ProjectivePoint, int>> out;

    const BinaryForm fn = f.normalized();
    int lo = 0;
    while (fn.c[static_cast<size_t>(lo)] == 0) ++lo;
    int hi = fn.degree();
    while (fn.c[static_cast<size_t>(hi)] == 0) --hi;
    if (lo > 0) out.emplace_back(ProjectivePoint({Int(0), Int(1)}), lo);
    if (hi < fn.degree()) out.emplace_back(ProjectivePoint({Int(1), Int(0)}), fn.degree() - hi);

    if (hi > lo) {
        // Primitive integer core u(x), x = s/t, with nonzero extreme coefficients.
        std::vector<Int> u;
        for (int i = lo; i <= hi; ++i) u.push_back(Int(fn.c[static_cast<size_t>(i)].get_num()));
        const auto ps = divisors_up_to_abs(u.front(), coeff_guard);
        const auto qs = divisors_up_to_abs(u.back(), coeff_guard);
        for (const Int& p : ps)
            for (const Int& q : qs) {
                Int g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                for (int sign = 0; sign < 2; ++sign) {
                    const Int num = sign ? Int(-p) : p;
                    const ProjectivePoint root({num, q});
                    if (fn.eval(root) != 0) continue;
                    out.emplace_back(root, root_multiplicity(fn, root));
                }
            }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace symprod
