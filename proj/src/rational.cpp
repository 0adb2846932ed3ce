#include "symprod/rational.hpp"

namespace symprod {

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int int_pow(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r = 1;
    Rat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Int falling_factorial(const Int& top, unsigned len) {
    Int r = 1;
    Int f = top;
    for (unsigned i = 0; i < len; ++i, --f) r *= f;
    return r;
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty rational literal");
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check = [](const std::string& part) {
        if (part.empty()) return false;
        size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (!check(num) || !check(den))
        throw std::domain_error("malformed rational literal: " + s);
    Rat q{Int(num), Int(den)};
    if (q.get_den() == 0) throw std::domain_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace symprod
