#include "symprod/linear_series.hpp"

#include "symprod/ns_calculus.hpp"

#include <algorithm>
#include <cstdlib>

namespace symprod {

CurveClass::CurveClass(int genus, bool hyperelliptic, bool trigonal)
    : g(genus), is_hyperelliptic(hyperelliptic), is_trigonal(trigonal) {
    if (g < 1) throw std::domain_error("CurveClass: genus must be >= 1");
    if (g >= 3 && is_hyperelliptic && is_trigonal)
        throw std::domain_error("CurveClass: hyperelliptic and trigonal exclude each other for g >= 3");
}

SeriesSpec::SeriesSpec(Int degree, Int dim) : d(std::move(degree)), r(std::move(dim)) {
    if (d < 0) throw std::domain_error("SeriesSpec: degree must be >= 0");
    if (r < 0) throw std::domain_error("SeriesSpec: dimension must be >= 0");
}

Int h0_nonspecial(int g, const Int& d) {
    if (g < 0) throw std::domain_error("h0_nonspecial: genus must be >= 0");
    if (d < 0) throw std::domain_error("h0_nonspecial: degree must be >= 0");
    return d - g + 1;
}

Int riemann_roch_residual(int g, const Int& d, const Int& r) {
    if (g < 0) throw std::domain_error("riemann_roch_residual: genus must be >= 0");
    return r - d + g;
}

Int clifford_max_r(const Int& d, bool strict) {
    if (d < 0) throw std::domain_error("clifford_max_r: degree must be >= 0");
    Int q;
    const Int num = strict ? Int(d - 1) : d;
    mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 2);
    return q;
}

Int castelnuovo_genus_bound(const Int& d, int r) {
    if (r < 2) throw std::domain_error("castelnuovo_genus_bound: r must be >= 2");
    if (d < r) throw std::domain_error("castelnuovo_genus_bound: d must be >= r");
    const Int rm1(r - 1);
    Int m;
    mpz_fdiv_q(m.get_mpz_t(), Int(d - 1).get_mpz_t(), rm1.get_mpz_t());
    const Int eps = d - 1 - m * rm1;
    return m * (m - 1) / 2 * rm1 + m * eps;
}

bool deg9_feasible(const CurveClass& c, int r) {
    const Int d = 9;
    const int g = c.g;
    if (Int(r) <= d - g) return true;  // nonspecial series of that dimension
    const Int res = riemann_roch_residual(g, d, Int(r));
    if (res < 1) return false;         // would have to be special, but h^0(K-D) = 0
    if (d > 2 * g - 2) return false;   // no special bundle has degree 9 here
    if (c.is_hyperelliptic) return Int(r) <= clifford_max_r(d, false);
    if (d == 2 * g - 2 && r == g - 1) return true;  // the canonical series
    if (Int(r) > clifford_max_r(d, true)) return false;  // strict Clifford
    if (!c.is_trigonal && r >= 4) {
        // A base point would leave a g^r_8, which is neither nonspecial
        // (r > 8-g) nor allowed by strict Clifford (r > 3), so the series
        // must be base point free and maps the curve birationally onto a
        // nondegenerate degree-9 curve in P^r.
        const bool base_point_possible =
            Int(r) <= clifford_max_r(Int(8), true) || r <= 8 - g;
        if (!base_point_possible) {
            if (Int(g) > castelnuovo_genus_bound(d, r)) return false;
            // Residual series of degree 2g-11 and dimension >= 1: a pencil
            // of degree 3 would make the curve trigonal.
            if (res >= 2 && 2 * g - 11 == 3) return false;
        }
    }
    return true;
}

int max_r_degree9(const CurveClass& curve) {
    if (curve.g < 5) throw std::domain_error("max_r_degree9: genus must be >= 5");
    for (int r = 9; r >= 1; --r)
        if (deg9_feasible(curve, r)) return r;
    return 0;
}

namespace {

CandidateRow eval_cell(int g, const Int& d, const Int& threshold, bool* is_candidate) {
    CandidateRow row{g, d, alt_degree_n3(g, d), false, ""};
    *is_candidate = false;
    if (row.value > threshold) return row;

    const Int two_g_2 = 2 * g - 2;
    const Int r_ns = d - g;
    // Plausibility against Riemann-Roch alone (deliberately weak): some
    // complete series of dimension >= 1 fits in degree d, either nonspecial
    // or special within the non-strict Clifford region.
    Int lo = r_ns + 1;
    if (lo < 1) lo = 1;
    const bool rr_ok = (r_ns >= 1) || (d <= two_g_2 && lo <= clifford_max_r(d, false));
    if (!rr_ok) return row;
    *is_candidate = true;

    const Int strict_cap = clifford_max_r(d, true);
    const bool nonspecial_ok = r_ns >= 4;
    const bool canonical_ok = (d == two_g_2) && (g - 1 >= 4);
    Int lo4 = r_ns + 1;
    if (lo4 < 4) lo4 = 4;
    const bool special_ok = (d <= two_g_2) && lo4 <= strict_cap;
    row.survives = nonspecial_ok || canonical_ok || special_ok;
    if (row.survives) return row;

    std::string reason = "nonspecial r = d-g = " + r_ns.get_str() + " < 4";
    if (d > two_g_2) {
        reason += "; no special series: d > 2g-2 = " + two_g_2.get_str();
    } else {
        if (d == two_g_2)
            reason += "; canonical series has r = g-1 = " + Int(g - 1).get_str() + " < 4";
        if (strict_cap < 4)
            reason += "; strict Clifford caps special r at " + strict_cap.get_str();
        else
            reason += "; special series needs r >= d-g+1 = " + Int(d - g + 1).get_str() +
                      " by Riemann-Roch, above the strict Clifford cap " + strict_cap.get_str();
    }
    row.exclusion_reason = std::move(reason);
    return row;
}

}  // namespace

SearchReport min_alt_embedding_degree_search(int g_min, int g_max, const Int& d_max,
                                             int workers) {
    if (g_min < 5) throw std::domain_error("search: g_min must be >= 5");
    if (g_max < g_min) throw std::domain_error("search: g_max must be >= g_min");
    if (d_max < g_max + 3) throw std::domain_error("search: d_max must be >= g_max + 3");
    if (d_max > 1000000) throw resource_error("search: d_max too large");
    if (workers < 1) throw std::domain_error("search: workers must be >= 1");

    SearchReport report;
    report.g_min = g_min;
    report.g_max = g_max;
    report.d_max = d_max;
    report.threshold = 125;

    const long dmax = static_cast<long>(d_max.get_si());
    const long per_g = dmax;  // d runs over 1..d_max
    const long cells = static_cast<long>(g_max - g_min + 1) * per_g;
    std::vector<CandidateRow> rows(static_cast<size_t>(cells),
                                   CandidateRow{0, Int(0), Int(0), false, ""});
    std::vector<char> flags(static_cast<size_t>(cells), 0);

    auto run_cell = [&](long k) {
        const int g = g_min + static_cast<int>(k / per_g);
        const Int d = Int(1 + k % per_g);
        bool is_candidate = false;
        rows[static_cast<size_t>(k)] = eval_cell(g, d, report.threshold, &is_candidate);
        flags[static_cast<size_t>(k)] = is_candidate ? 1 : 0;
    };

#ifdef SYMPROD_HAVE_OPENMP
    if (workers > 1) {
#pragma omp parallel for num_threads(workers) schedule(static)
        for (long k = 0; k < cells; ++k) run_cell(k);
    } else {
        for (long k = 0; k < cells; ++k) run_cell(k);
    }
#else
    (void)workers;
    for (long k = 0; k < cells; ++k) run_cell(k);
#endif

    // Deterministic merge in grid order, independent of the partitioning.
    for (long k = 0; k < cells; ++k) {
        if (!flags[static_cast<size_t>(k)]) continue;
        const CandidateRow& row = rows[static_cast<size_t>(k)];
        report.candidates.push_back(row);
        if (row.survives) report.surviving.emplace_back(row.g, row.d);
    }
    if (!report.surviving.empty()) {
        Int best = report.candidates.front().value;
        bool seen = false;
        for (const auto& row : report.candidates) {
            if (!row.survives) continue;
            if (!seen || row.value < best) best = row.value;
            seen = true;
        }
        report.min_degree = best;
    }
    return report;
}

int default_worker_count() {
    const char* env = std::getenv("SYMPROD_WORKERS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return std::clamp(v, 1, 256);
}

}  // namespace symprod
