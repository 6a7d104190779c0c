#include "adjdyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"

namespace adjdyn {

namespace {

constexpr double kOrthogonalStart = 1e-12;
constexpr std::uint64_t kRestartSeed = 0x5ca1ab1e;

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void remove_projections(std::vector<double>& v, const std::vector<std::vector<double>>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            const double p = dot(v, b);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * b[i];
        }
    }
}

void fix_sign(std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    if (v[best] < 0.0) {
        for (auto& x : v) x = -x;
    }
}

// Dense symmetric covariance, row-major n x n.
struct Covariance {
    std::size_t n;
    std::vector<double> values;

    void apply(std::span<const double> v, std::vector<double>& out) const {
        out.assign(n, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            const double* row = values.data() + r * n;
            double acc = 0.0;
            for (std::size_t c = 0; c < n; ++c) acc += row[c] * v[c];
            out[r] = acc;
        }
    }
};

// Unit vector orthogonal to `basis`, built from coordinate axes in index order.
std::vector<double> orthogonal_completion(std::size_t n, const std::vector<std::vector<double>>& basis) {
    for (std::size_t axis = 0; axis < n; ++axis) {
        std::vector<double> v(n, 0.0);
        v[axis] = 1.0;
        remove_projections(v, basis);
        const double len = norm(v);
        if (len > 1e-6) {
            for (auto& x : v) x /= len;
            return v;
        }
    }
    return std::vector<double>(n, 0.0);
}

}  // namespace

Projection pca_project(const StateHistory& history, const PcaOptions& options) {
    const std::size_t rows = history.size();
    const std::size_t n = history.dim();
    if (rows < 2) {
        throw Error(ErrorKind::TooFewRows, "PCA needs at least 2 rows, got " + std::to_string(rows));
    }
    const std::size_t k = options.n_components;
    if (k < 1 || k > std::min(rows, n)) {
        throw Error(ErrorKind::InvalidArgument, std::to_string(k) + " components for " +
                                                    std::to_string(rows) + " rows of dimension " +
                                                    std::to_string(n));
    }

    Projection out;
    out.mean.assign(n, 0.0);
    for (std::size_t t = 0; t < rows; ++t) {
        const auto row = history.row(t);
        for (std::size_t j = 0; j < n; ++j) out.mean[j] += row[j];
    }
    for (auto& m : out.mean) m /= static_cast<double>(rows);

    std::vector<double> centered(rows * n);
    for (std::size_t t = 0; t < rows; ++t) {
        const auto row = history.row(t);
        for (std::size_t j = 0; j < n; ++j) centered[t * n + j] = row[j] - out.mean[j];
    }

    Covariance cov{n, std::vector<double>(n * n, 0.0)};
    const double divisor = static_cast<double>(rows - 1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            double s = 0.0;
            for (std::size_t t = 0; t < rows; ++t) s += centered[t * n + a] * centered[t * n + b];
            s /= divisor;
            cov.values[a * n + b] = s;
            cov.values[b * n + a] = s;
        }
    }
    double trace = 0.0;
    for (std::size_t j = 0; j < n; ++j) trace += cov.values[j * n + j];
    const double threshold = options.tol * trace;

    std::vector<double> v;
    std::vector<double> cv;
    for (std::size_t comp = 0; comp < k; ++comp) {
        // Deflation by projecting out accepted components keeps the iterate in
        // their orthogonal complement, where C acts as the deflated matrix.
        v.assign(n, 1.0);
        remove_projections(v, out.components);
        double len = norm(v);
        if (len < 1e-6) {
            v = orthogonal_completion(n, out.components);
            len = 1.0;
        }
        for (auto& x : v) x /= len;

        cov.apply(v, cv);
        remove_projections(cv, out.components);
        if (dot(v, cv) < kOrthogonalStart * trace) {
            // All-ones can be orthogonal to the data (e.g. a conserved
            // population); retry from a fixed pseudo-random vector.
            Rng rng(derive_seed(kRestartSeed, comp));
            std::vector<double> r(n);
            for (auto& x : r) x = rng.uniform(-1.0, 1.0);
            remove_projections(r, out.components);
            if (const double rn = norm(r); rn > 0.0) {
                for (std::size_t j = 0; j < n; ++j) v[j] = r[j] / rn;
            }
        }

        double lambda = 0.0;
        bool converged = false;
        for (std::size_t it = 0; it < options.max_iters; ++it) {
            cov.apply(v, cv);
            remove_projections(cv, out.components);
            lambda = dot(v, cv);
            double residual = 0.0;
            for (std::size_t j = 0; j < n; ++j) residual += (cv[j] - lambda * v[j]) * (cv[j] - lambda * v[j]);
            residual = std::sqrt(residual);
            if (residual <= threshold) {
                converged = true;
                break;
            }
            const double cn = norm(cv);
            for (std::size_t j = 0; j < n; ++j) v[j] = cv[j] / cn;
        }
        if (!converged) {
            throw Error(ErrorKind::NoConvergence, "principal component " + std::to_string(comp + 1) +
                                                      " did not converge in " +
                                                      std::to_string(options.max_iters) + " iterations");
        }
        if (lambda <= threshold) {
            // Remaining variance is numerically zero.
            lambda = 0.0;
            v = orthogonal_completion(n, out.components);
        }
        remove_projections(v, out.components);
        const double vn = norm(v);
        for (auto& x : v) x /= vn;
        fix_sign(v);
        out.components.push_back(v);
        out.explained_variance.push_back(lambda);
    }
    // Power iteration finds eigenvalues in descending order up to rounding.
    for (std::size_t i = 1; i < k; ++i) {
        out.explained_variance[i] = std::min(out.explained_variance[i], out.explained_variance[i - 1]);
    }

    out.points.assign(rows, std::vector<double>(k, 0.0));
    for (std::size_t t = 0; t < rows; ++t) {
        const std::span<const double> row(centered.data() + t * n, n);
        for (std::size_t c = 0; c < k; ++c) out.points[t][c] = dot(row, out.components[c]);
    }
    return out;
}

namespace {

bool rows_match(std::span<const double> a, std::span<const double> b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (tol == 0.0 ? a[i] != b[i] : !(std::abs(a[i] - b[i]) <= tol)) return false;
    }
    return true;
}

std::size_t hash_row(std::span<const double> row) {
    std::size_t h = 1469598103934665603ULL;
    for (double x : row) {
        const double v = x == 0.0 ? 0.0 : x;  // -0 == 0
        h = (h ^ std::hash<double>{}(v)) * 1099511628211ULL;
    }
    return h;
}

}  // namespace

CycleReport detect_cycle(const StateHistory& history, double tol) {
    CycleReport report;
    report.approximate = tol > 0.0;
    const std::size_t rows = history.size();

    std::vector<std::size_t> hashes;
    if (tol == 0.0) {
        hashes.reserve(rows);
        for (std::size_t t = 0; t < rows; ++t) hashes.push_back(hash_row(history.row(t)));
    }
    auto same = [&](std::size_t a, std::size_t b) {
        if (tol == 0.0 && hashes[a] != hashes[b]) return false;
        return rows_match(history.row(a), history.row(b), tol);
    };
    for (std::size_t s = 0; s + 1 < rows; ++s) {
        for (std::size_t p = 1; s + p < rows; ++p) {
            if (!same(s, s + p)) continue;
            bool periodic = true;
            for (std::size_t m = s + 1; m + p < rows && periodic; ++m) periodic = same(m, m + p);
            if (periodic) {
                report.transient = s;
                report.period = p;
                return report;
            }
        }
    }
    return report;
}

double ReadoutModel::predict(std::span<const double> state) const {
    if (state.size() + 1 != weights.size()) {
        throw Error(ErrorKind::DimensionMismatch, "state of length " + std::to_string(state.size()) +
                                                      " for a readout over " +
                                                      std::to_string(weights.size() - 1));
    }
    return dot(state, std::span(weights).first(state.size())) + weights.back();
}

std::vector<double> solve_linear_system(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    double scale = 0.0;
    for (double x : a) scale = std::max(scale, std::abs(x));
    const double eps = 1e-13 * std::max(scale, 1e-300);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        }
        if (!(std::abs(a[pivot * n + col]) > eps)) {
            throw Error(ErrorKind::SingularSystem, "pivot " + std::to_string(col) + " vanished");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return x;
}

ReadoutModel train_linear_readout(const StateHistory& history, std::span<const double> targets,
                                  double ridge) {
    if (!(ridge >= 0.0)) throw Error(ErrorKind::InvalidArgument, "ridge must be non-negative");
    const std::size_t rows = history.size();
    if (targets.size() != rows) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(targets.size()) + " targets for " +
                                                      std::to_string(rows) + " states");
    }
    const std::size_t n = history.dim();
    const std::size_t d = n + 1;
    std::vector<double> gram(d * d, 0.0);
    std::vector<double> rhs(d, 0.0);
    std::vector<double> feat(d, 1.0);
    for (std::size_t t = 0; t < rows; ++t) {
        const auto row = history.row(t);
        std::copy(row.begin(), row.end(), feat.begin());
        for (std::size_t a = 0; a < d; ++a) {
            rhs[a] += feat[a] * targets[t];
            for (std::size_t b = 0; b < d; ++b) gram[a * d + b] += feat[a] * feat[b];
        }
    }
    for (std::size_t a = 0; a < d; ++a) gram[a * d + a] += ridge;

    ReadoutModel model;
    model.weights = solve_linear_system(std::move(gram), std::move(rhs));
    for (std::size_t t = 0; t < rows; ++t) {
        const double err = model.predict(history.row(t)) - targets[t];
        model.training_residual += err * err;
    }
    return model;
}

}  // namespace adjdyn
