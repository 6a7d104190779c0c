#include "adjdyn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"
#include "adjdyn/sparse_matrix.hpp"
#include "adjdyn/text.hpp"
#include "adjdyn/topology.hpp"

namespace adjdyn {

namespace {

template <class F>
double mean_seconds(std::size_t repeats, F&& f) {
    f();  // warmup
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < repeats; ++i) f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() / static_cast<double>(repeats);
}

}  // namespace

BenchReport run_matvec_bench(std::size_t n, double density, std::size_t repeats, std::uint64_t seed,
                             unsigned threads) {
    if (n == 0 || repeats == 0) throw Error(ErrorKind::InvalidArgument, "n and repeats must be positive");
    const SparseMatrix sparse = generate_random_sparse(n, n, density, -1.0, 1.0, seed);
    const DenseMatrix dense = to_dense(sparse);
    Rng rng(derive_seed(seed, 1));
    StateVector v(n);
    for (auto& x : v) x = rng.uniform(-1.0, 1.0);

    StateVector dense_out;
    StateVector sparse_out;
    BenchReport report;
    report.n = n;
    report.density = density;
    report.repeats = repeats;
    report.nnz = sparse.nnz();
    report.threads = std::max(1u, threads);
    report.dense_mean_seconds = mean_seconds(repeats, [&] { dense_out = dense_matvec(dense, v); });
    report.sparse_mean_seconds =
        mean_seconds(repeats, [&] { matvec_into(sparse, v, sparse_out, report.threads); });
    report.speedup = report.sparse_mean_seconds > 0.0
                         ? report.dense_mean_seconds / report.sparse_mean_seconds
                         : INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        report.max_abs_diff = std::max(report.max_abs_diff, std::abs(dense_out[i] - sparse_out[i]));
    }
    report.anomalous = density <= 0.01 && report.speedup < 1.0;
    return report;
}

std::string format_bench_report(const BenchReport& r) {
    std::ostringstream os;
    os << "n = " << r.n << '\n'
       << "density = " << text::format_real(r.density) << '\n'
       << "nnz = " << r.nnz << '\n'
       << "repeats = " << r.repeats << '\n'
       << "threads = " << r.threads << '\n'
       << "dense_mean_s = " << r.dense_mean_seconds << '\n'
       << "sparse_mean_s = " << r.sparse_mean_seconds << '\n'
       << "speedup = " << r.speedup << '\n'
       << "max_abs_diff = " << r.max_abs_diff << '\n';
    if (r.anomalous) os << "warning = sparse slower than dense at density <= 0.01 (anomalous)\n";
    return os.str();
}

}  // namespace adjdyn
