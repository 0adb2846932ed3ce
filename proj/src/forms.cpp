#include "symprod/forms.hpp"

#include <algorithm>

namespace symprod {

std::vector<Exponents> monomials_of_degree(int d) {
    if (d < 0) throw std::domain_error("monomials_of_degree: negative degree");
    std::vector<Exponents> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j)
            out.push_back({i, j, d - i - j});
    return out;
}

HomogeneousForm::HomogeneousForm(int degree) : deg(degree) {
    if (degree < 0) throw std::domain_error("HomogeneousForm: negative degree");
}

HomogeneousForm HomogeneousForm::monomial(const Exponents& e, const Rat& c) {
    for (int x : e)
        if (x < 0) throw std::domain_error("HomogeneousForm: negative exponent");
    HomogeneousForm f(e[0] + e[1] + e[2]);
    f.set(e, c);
    return f;
}

Rat HomogeneousForm::coeff(const Exponents& e) const {
    const auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
}

void HomogeneousForm::set(const Exponents& e, const Rat& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != deg)
        throw std::domain_error("HomogeneousForm: exponents do not match degree");
    if (c == 0) {
        terms.erase(e);
    } else {
        // callers may hand in a two-argument mpq (which GMP leaves
        // uncanonicalized); all stored coefficients must be canonical
        Rat canon = c;
        canon.canonicalize();
        terms[e] = std::move(canon);
    }
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
    if (deg != o.deg) throw std::domain_error("HomogeneousForm: degree mismatch in sum");
    HomogeneousForm r = *this;
    for (const auto& [e, c] : o.terms) r.set(e, r.coeff(e) + c);
    return r;
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const {
    if (deg != o.deg) throw std::domain_error("HomogeneousForm: degree mismatch in difference");
    HomogeneousForm r = *this;
    for (const auto& [e, c] : o.terms) r.set(e, r.coeff(e) - c);
    return r;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
    HomogeneousForm r(deg + o.deg);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            const Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            r.set(e, r.coeff(e) + c1 * c2);
        }
    return r;
}

HomogeneousForm HomogeneousForm::operator*(const Rat& k) const {
    HomogeneousForm r(deg);
    if (k == 0) return r;
    for (const auto& [e, c] : terms) r.terms[e] = c * k;
    return r;
}

HomogeneousForm HomogeneousForm::pow(unsigned e) const {
    HomogeneousForm r = HomogeneousForm::monomial({0, 0, 0}, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

HomogeneousForm HomogeneousForm::partial(int var) const {
    if (var < 0 || var > 2) throw std::domain_error("partial: variable index out of range");
    HomogeneousForm r(deg > 0 ? deg - 1 : 0);
    for (const auto& [e, c] : terms) {
        if (e[static_cast<size_t>(var)] == 0) continue;
        Exponents d = e;
        --d[static_cast<size_t>(var)];
        r.set(d, r.coeff(d) + c * e[static_cast<size_t>(var)]);
    }
    return r;
}

Rat HomogeneousForm::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat total = 0;
    for (const auto& [e, c] : terms)
        total += c * rat_pow(x, static_cast<unsigned>(e[0])) *
                 rat_pow(y, static_cast<unsigned>(e[1])) *
                 rat_pow(z, static_cast<unsigned>(e[2]));
    return total;
}

Rat HomogeneousForm::eval(const ProjectivePoint& p) const {
    if (p.dim() != 2) throw std::domain_error("HomogeneousForm::eval: point must lie in P^2");
    return eval(Rat(p.coords[0]), Rat(p.coords[1]), Rat(p.coords[2]));
}

HomogeneousForm HomogeneousForm::substitute_linear(
    const std::array<std::array<Int, 3>, 3>& m) const {
    std::array<HomogeneousForm, 3> lin{HomogeneousForm(1), HomogeneousForm(1),
                                       HomogeneousForm(1)};
    for (size_t v = 0; v < 3; ++v) {
        lin[v].set({1, 0, 0}, Rat(m[v][0]));
        lin[v].set({0, 1, 0}, Rat(m[v][1]));
        lin[v].set({0, 0, 1}, Rat(m[v][2]));
    }
    HomogeneousForm r(deg);
    for (const auto& [e, c] : terms) {
        HomogeneousForm term = lin[0].pow(static_cast<unsigned>(e[0])) *
                               lin[1].pow(static_cast<unsigned>(e[1])) *
                               lin[2].pow(static_cast<unsigned>(e[2]));
        r = r + term * c;
    }
    return r;
}

HomogeneousForm HomogeneousForm::normalized() const {
    if (is_zero()) return *this;
    Int lcm = 1;
    for (const auto& [e, c] : terms)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int content = 0;
    for (const auto& [e, c] : terms) {
        const Int scaled = Int(c.get_num() * (lcm / c.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale(lcm, content);
    scale.canonicalize();
    if (terms.begin()->second < 0) scale = -scale;
    return *this * scale;
}

HomogeneousForm dual_line(const ProjectivePoint& p) {
    if (p.dim() != 2) throw std::domain_error("dual_line: point must lie in P^2");
    HomogeneousForm f(1);
    f.set({1, 0, 0}, Rat(p.coords[0]));
    f.set({0, 1, 0}, Rat(p.coords[1]));
    f.set({0, 0, 1}, Rat(p.coords[2]));
    return f;
}

BinaryForm BinaryForm::from_coeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty()) throw std::domain_error("BinaryForm: empty coefficient vector");
    BinaryForm f(static_cast<int>(coeffs.size()) - 1);
    f.c = std::move(coeffs);
    for (Rat& q : f.c) q.canonicalize();  // two-argument mpq inputs may arrive raw
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& q) { return q == 0; });
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
    const int n = degree();
    Rat total = 0;
    for (int i = 0; i <= n; ++i)
        total += c[static_cast<size_t>(i)] * rat_pow(s, static_cast<unsigned>(i)) *
                 rat_pow(t, static_cast<unsigned>(n - i));
    return total;
}

Rat BinaryForm::eval(const ProjectivePoint& param) const {
    if (param.dim() != 1) throw std::domain_error("BinaryForm::eval: parameter must lie in P^1");
    return eval(Rat(param.coords[0]), Rat(param.coords[1]));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree() != o.degree()) throw std::domain_error("BinaryForm: degree mismatch in sum");
    BinaryForm r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (degree() != o.degree())
        throw std::domain_error("BinaryForm: degree mismatch in difference");
    BinaryForm r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    BinaryForm r(degree() + o.degree());
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
}

BinaryForm BinaryForm::operator*(const Rat& k) const {
    BinaryForm r = *this;
    for (Rat& q : r.c) q *= k;
    return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
    BinaryForm r(0);
    r.c[0] = 1;
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) return *this;
    Int lcm = 1;
    for (const Rat& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    Int content = 0;
    for (const Rat& q : c) {
        const Int scaled = Int(q.get_num() * (lcm / q.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale(lcm, content);
    scale.canonicalize();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (*it == 0) continue;
        if (*it < 0) scale = -scale;
        break;
    }
    return *this * scale;
}

BinaryForm parameter_linear_form(const ProjectivePoint& param) {
    if (param.dim() != 1)
        throw std::domain_error("parameter_linear_form: parameter must lie in P^1");
    BinaryForm f(1);
    f.c[1] = Rat(param.coords[1]);   // coefficient of s
    f.c[0] = -Rat(param.coords[0]);  // coefficient of t
    return f;
}

std::optional<BinaryForm> divide_linear(const BinaryForm& f, const Rat& alpha, const Rat& beta) {
    if (alpha == 0 && beta == 0) throw std::domain_error("divide_linear: zero divisor form");
    const int n = f.degree();
    if (n < 1) return std::nullopt;
    BinaryForm q(n - 1);
    if (alpha != 0) {
        q.c[static_cast<size_t>(n - 1)] = f.c[static_cast<size_t>(n)] / alpha;
        for (int i = n - 1; i >= 1; --i)
            q.c[static_cast<size_t>(i - 1)] =
                (f.c[static_cast<size_t>(i)] - beta * q.c[static_cast<size_t>(i)]) / alpha;
        if (f.c[0] != beta * q.c[0]) return std::nullopt;
    } else {
        for (int i = 0; i <= n - 1; ++i)
            q.c[static_cast<size_t>(i)] = f.c[static_cast<size_t>(i)] / beta;
        if (f.c[static_cast<size_t>(n)] != 0) return std::nullopt;
    }
    return q;
}

int root_multiplicity(const BinaryForm& f, const ProjectivePoint& param) {
    if (f.is_zero()) throw std::domain_error("root_multiplicity: zero form");
    const Rat alpha(param.coords[1]);
    const Rat beta = -Rat(param.coords[0]);
    int m = 0;
    BinaryForm cur = f;
    while (cur.degree() >= 1) {
        auto q = divide_linear(cur, alpha, beta);
        if (!q) break;
        cur = *q;
        ++m;
    }
    return m;
}

namespace {

// Trim a dense univariate coefficient vector (index = power).
void trim(std::vector<Rat>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rat f = a.back() / b.back();
        const size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
        trim(a);
    }
    return a;
}

std::vector<Rat> univariate_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

BinaryForm binary_gcd(BinaryForm a, BinaryForm b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    // Split off the pure s- and t-power factors, gcd the univariate cores.
    auto split = [](const BinaryForm& f, int* s_pow, int* t_pow) {
        int lo = 0;
        while (f.c[static_cast<size_t>(lo)] == 0) ++lo;
        int hi = f.degree();
        while (f.c[static_cast<size_t>(hi)] == 0) --hi;
        *s_pow = lo;
        *t_pow = f.degree() - hi;
        return std::vector<Rat>(f.c.begin() + lo, f.c.begin() + hi + 1);
    };
    int sa, ta, sb, tb;
    const auto ua = split(a, &sa, &ta);
    const auto ub = split(b, &sb, &tb);
    auto g = univariate_gcd(ua, ub);
    const int cs = std::min(sa, sb), ct = std::min(ta, tb);
    BinaryForm core = BinaryForm::from_coeffs(std::move(g));
    BinaryForm result(core.degree() + cs + ct);
    for (int i = 0; i <= core.degree(); ++i)
        result.c[static_cast<size_t>(i + cs)] = core.c[static_cast<size_t>(i)];
    return result.normalized();
}

BinaryForm compose_ternary(const HomogeneousForm& f, const BinaryForm& a, const BinaryForm& b,
                           const BinaryForm& c) {
    const int m = a.degree();
    if (b.degree() != m || c.degree() != m)
        throw std::domain_error("compose_ternary: component degrees differ");
    BinaryForm r(f.deg * m);
    for (const auto& [e, coeff] : f.terms) {
        const BinaryForm term = a.pow(static_cast<unsigned>(e[0])) *
                                b.pow(static_cast<unsigned>(e[1])) *
                                c.pow(static_cast<unsigned>(e[2]));
        r = r + term * coeff;
    }
    return r;
}

}  // namespace symprod
