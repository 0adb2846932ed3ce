#pragma once

#include "symprod/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

// Discrete curve data the feasibility bounds depend on.  Hyperelliptic and
// trigonal are mutually exclusive for g >= 3 (a curve carrying both a g^1_2
// and a g^1_3 has genus <= 2).
struct CurveClass {
    int g;
    bool is_hyperelliptic = false;
    bool is_trigonal = false;
    CurveClass(int genus, bool hyperelliptic = false, bool trigonal = false);
};

// A linear series g^r_d.
struct SeriesSpec {
    Int d;
    Int r;
    SeriesSpec(Int degree, Int dim);
};

// h^0 of a nonspecial degree-d bundle on a genus-g curve: d - g + 1.
Int h0_nonspecial(int g, const Int& d);

// h^0 of the Serre-dual bundle forced by Riemann-Roch when a complete
// g^r_d exists: h^0(K - D) = r - d + g.
Int riemann_roch_residual(int g, const Int& d, const Int& r);

// Clifford bound for special series: r <= d/2.  Non-strict mode returns
// floor(d/2); strict mode returns the largest r with r < d/2, i.e.
// floor((d-1)/2) (which is -1 when d = 0: no such r exists).  The strict
// form applies to special non-canonical series on non-hyperelliptic curves.
Int clifford_max_r(const Int& d, bool strict);

// Castelnuovo's bound for the genus of a nondegenerate degree-d curve in
// P^r: with m = floor((d-1)/(r-1)) and eps = d-1 - m(r-1), the bound is
// C(m,2)(r-1) + m*eps.  Requires r >= 2 and d >= r.
Int castelnuovo_genus_bound(const Int& d, int r);

// Can a complete g^r_9 exist on a curve of the given class?  Combines
// Riemann-Roch, the Clifford bound (strict for special non-canonical series
// on non-hyperelliptic curves), Castelnuovo's genus bound and a residual
// trigonal-pencil argument.
bool deg9_feasible(const CurveClass& curve, int r);

// Largest r for which a g^r_9 can exist on a curve of the given class,
// derived from Riemann-Roch, Clifford, Castelnuovo and residual-series
// arguments (genus >= 5 required).  Yields 4 for g = 5, 6 (or whenever one
// of the flags is set) and 3 for g >= 7 general curves.
int max_r_degree9(const CurveClass& curve);

// One grid cell of the embedding-degree search.
struct CandidateRow {
    int g;
    Int d;
    Int value;  // alt_degree_n3(g, d)
    bool survives;
    std::string exclusion_reason;  // empty iff survives
};

struct SearchReport {
    int g_min;
    int g_max;
    Int d_max;
    Int threshold;
    std::vector<CandidateRow> candidates;          // value <= threshold and RR-consistent
    std::vector<std::pair<int, Int>> surviving;    // subset of candidates
    std::optional<Int> min_degree;                 // nullopt: all admissible values exceed threshold
};

// Scans the (g, d) grid (g in [g_min, g_max], 1 <= d <= d_max) for pairs
// whose alternation bundle on C(3) could be very ample with top
// self-intersection <= 125.  A pair enters `candidates` when its value is
// <= 125 and a plausibility check against Riemann-Roch passes; it survives
// only if some complete series with r >= 4 is compatible with nonspeciality
// or with the (strict) Clifford bound.  Requires g_min >= 5 and
// d_max >= g_max + 3.  workers > 1 runs the per-cell scan in parallel; the
// per-cell predicate is pure, so the report is identical for any worker
// count.
SearchReport min_alt_embedding_degree_search(int g_min, int g_max, const Int& d_max,
                                             int workers = 1);

// SYMPROD_WORKERS environment variable, default 1.
int default_worker_count();

}  // namespace symprod
