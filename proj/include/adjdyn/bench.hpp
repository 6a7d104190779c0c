#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace adjdyn {

struct BenchReport {
    std::size_t n = 0;
    double density = 0.0;
    std::size_t repeats = 0;
    std::size_t nnz = 0;
    unsigned threads = 1;
    double dense_mean_seconds = 0.0;
    double sparse_mean_seconds = 0.0;
    double speedup = 0.0;        // dense / sparse
    double max_abs_diff = 0.0;   // between the two products
    bool anomalous = false;      // speedup < 1 at density <= 0.01
};

/// Times dense and compressed-row matvec on the same random n x n matrix
/// after one warmup product each.
BenchReport run_matvec_bench(std::size_t n, double density, std::size_t repeats, std::uint64_t seed,
                             unsigned threads = 1);

std::string format_bench_report(const BenchReport& report);

}  // namespace adjdyn
