// Benchmark: OpenMP-parallel kernels against their serial reference paths.
//
// Each kernel below accepts a worker count; workers == 1 selects the plain
// serial loop that the tests treat as the reference implementation.  The
// benchmark times both, checks that the results agree exactly, and prints a
// small table.  Wall-clock speedups depend on the host core count; equality
// of results does not.

#include "symprod/plane_embedding.hpp"
#include "symprod/linear_series.hpp"
#include "symprod/serialization.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Row {
    std::string name;
    double serial;
    double parallel;
    bool equal;
};

void print_rows(const std::vector<Row>& rows, int workers) {
    std::cout << "\n" << std::left << std::setw(28) << "kernel" << std::right << std::setw(12)
              << "serial [s]" << std::setw(14) << "parallel [s]" << std::setw(10) << "speedup"
              << std::setw(8) << "equal" << "\n";
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(28) << r.name << std::right << std::fixed
                  << std::setprecision(3) << std::setw(12) << r.serial << std::setw(14)
                  << r.parallel << std::setw(10)
                  << (r.parallel > 0 ? r.serial / r.parallel : 0.0) << std::setw(8)
                  << (r.equal ? "yes" : "NO") << "\n";
    }
    std::cout << "(parallel column uses " << workers << " workers)\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace symprod;

    int workers = default_worker_count();
    if (workers == 1) workers = 4;  // still exercise the parallel path on 1-core defaults
    if (argc > 1) workers = std::max(1, std::atoi(argv[1]));

    std::vector<Row> rows;

    {
        const auto t0 = std::chrono::steady_clock::now();
        const SearchReport serial = min_alt_embedding_degree_search(5, 40, 400, 1);
        const double ts = seconds_since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        const SearchReport parallel = min_alt_embedding_degree_search(5, 40, 400, workers);
        const double tp = seconds_since(t1);
        rows.push_back({"degree search (36x400)", ts, tp,
                        to_json(serial) == to_json(parallel)});
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto serial = injectivity_sample(400, 2026, 1);
        const double ts = seconds_since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        const auto parallel = injectivity_sample(400, 2026, workers);
        const double tp = seconds_since(t1);
        rows.push_back({"injectivity sample (400)", ts, tp,
                        serial.pairs == parallel.pairs &&
                            serial.collisions == parallel.collisions});
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto serial = separation_sample(400, 2026, 1);
        const double ts = seconds_since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        const auto parallel = separation_sample(400, 2026, workers);
        const double tp = seconds_since(t1);
        rows.push_back({"separation sample (400)", ts, tp,
                        serial.trials == parallel.trials &&
                            serial.failures == parallel.failures});
    }

    print_rows(rows, workers);

    for (const auto& r : rows)
        if (!r.equal) {
            std::cout << "MISMATCH between serial and parallel results\n";
            return 1;
        }
    std::cout << "serial and parallel results identical\n";
    return 0;
}
