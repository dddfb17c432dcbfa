// Compares the OpenMP kernels against their serial reference
// implementations: table validation on large rings and a verification
// campaign over the default corpus.

#include <omp.h>

#include <cstdio>
#include <string>

#include "amalgam/census.hpp"
#include "amalgam/ring.hpp"

using namespace amalgam;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const double t0 = omp_get_wtime();
    fn();
    return (omp_get_wtime() - t0) * 1e3;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %13s %13s %9s\n", "benchmark", "serial", "parallel",
                "speedup");

    {
        auto big = make_product(make_zmod(16), make_zmod(16)).ring;  // order 256
        const auto& t = big->tables();
        double serial = time_ms([&] { (void)validate_tables_serial(t); });
        double parallel = time_ms([&] { (void)validate_tables(t); });
        row("validate order-256 ring", serial, parallel);
    }
    {
        auto corrupted = make_zmod(64)->tables();
        corrupted.mul[2 * 64 + 2] = 1;  // breaks distributivity
        double serial = time_ms([&] { (void)validate_tables_serial(corrupted); });
        double parallel = time_ms([&] { (void)validate_tables(corrupted); });
        row("validate corrupted ring", serial, parallel);
    }
    {
        CorpusCaps small{.max_ring_order = 8, .max_product_order = 16,
                         .max_amalgam_order = 32};
        auto corpus = generate_corpus(small);
        std::printf("campaign corpus: %zu items\n", corpus.size());
        const auto& ids = all_statement_ids();
        double serial = time_ms([&] { (void)run_campaign_serial(corpus, ids); });
        double parallel = time_ms([&] { (void)run_campaign(corpus, ids); });
        row("campaign (small corpus)", serial, parallel);
    }
    return 0;
}
