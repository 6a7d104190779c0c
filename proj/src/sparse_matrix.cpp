#include "adjdyn/sparse_matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"

namespace adjdyn {

SparseMatrix SparseMatrix::from_triplets(std::size_t n_rows, std::size_t n_cols,
                                         std::vector<Triplet> triplets) {
    for (const auto& t : triplets) {
        if (t.row >= n_rows || t.col >= n_cols) {
            throw Error(ErrorKind::IndexOutOfBounds,
                        "entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                            ") outside " + std::to_string(n_rows) + "x" + std::to_string(n_cols));
        }
        if (!std::isfinite(t.weight)) {
            throw Error(ErrorKind::NonFiniteWeight,
                        "entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) + ")");
        }
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < triplets.size(); ++i) {
        if (triplets[i].row == triplets[i - 1].row && triplets[i].col == triplets[i - 1].col) {
            throw Error(ErrorKind::DuplicateEntry, "entry (" + std::to_string(triplets[i].row) +
                                                       ", " + std::to_string(triplets[i].col) + ")");
        }
    }

    SparseMatrix m;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.row_offsets_.assign(n_rows + 1, 0);
    m.col_indices_.reserve(triplets.size());
    m.weights_.reserve(triplets.size());
    for (const auto& t : triplets) {
        ++m.row_offsets_[t.row + 1];
        m.col_indices_.push_back(t.col);
        m.weights_.push_back(t.weight);
    }
    for (std::size_t r = 0; r < n_rows; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
    return m;
}

std::span<const std::size_t> SparseMatrix::row_cols(std::size_t r) const {
    return std::span(col_indices_).subspan(row_offsets_[r], row_offsets_[r + 1] - row_offsets_[r]);
}

std::span<const double> SparseMatrix::row_weights(std::size_t r) const {
    return std::span(weights_).subspan(row_offsets_[r], row_offsets_[r + 1] - row_offsets_[r]);
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto cols = row_cols(r);
    const auto it = std::lower_bound(cols.begin(), cols.end(), c);
    if (it == cols.end() || *it != c) return 0.0;
    return row_weights(r)[static_cast<std::size_t>(it - cols.begin())];
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t r = 0; r < n_rows_; ++r) {
        for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
            out.push_back({r, col_indices_[k], weights_[k]});
        }
    }
    return out;
}

SparseMatrix SparseMatrix::scaled(double factor) const {
    SparseMatrix out = *this;
    for (auto& w : out.weights_) w *= factor;
    return out;
}

namespace {

void matvec_rows(const SparseMatrix& m, std::span<const double> v, StateVector& out,
                 std::size_t begin, std::size_t end) {
    const auto offsets = m.row_offsets();
    const auto cols = m.col_indices();
    const auto weights = m.weights();
    for (std::size_t r = begin; r < end; ++r) {
        double acc = 0.0;
        for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += weights[k] * v[cols[k]];
        out[r] = acc;
    }
}

}  // namespace

void matvec_into(const SparseMatrix& m, std::span<const double> v, StateVector& out,
                 unsigned threads) {
    if (v.size() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                      " vs " + std::to_string(m.cols()) + " columns");
    }
    out.assign(m.rows(), 0.0);
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, m.rows()));
    if (workers == 1) {
        matvec_rows(m, v, out, 0, m.rows());
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (m.rows() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(m.rows(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] { matvec_rows(m, v, out, begin, end); });
    }
}

StateVector matvec(const SparseMatrix& m, std::span<const double> v) {
    StateVector out;
    matvec_into(m, v, out);
    return out;
}

DenseMatrix to_dense(const SparseMatrix& m) {
    DenseMatrix d{m.rows(), m.cols(), std::vector<double>(m.rows() * m.cols(), 0.0)};
    for (const auto& t : m.triplets()) d(t.row, t.col) = t.weight;
    return d;
}

StateVector dense_matvec(const DenseMatrix& m, std::span<const double> v) {
    if (v.size() != m.cols) {
        throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                      " vs " + std::to_string(m.cols) + " columns");
    }
    StateVector out(m.rows, 0.0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* row = m.values.data() + r * m.cols;
        double acc = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

namespace {

constexpr Eigen::Index kBlockColumns = 8;

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& z) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
    return qr.householderQ() * Eigen::MatrixXd::Identity(z.rows(), z.cols());
}

struct RitzPair {
    double modulus = 0.0;
    double residual = 0.0;  // ||M (Q y) - theta (Q y)|| / ||y||
};

// Applies M to every column of q (into z) and returns the largest-modulus
// Ritz value of the projection H = Q' M Q with the residual of its vector.
RitzPair ritz_step(const SparseMatrix& m, const Eigen::MatrixXd& q, Eigen::MatrixXd& z, StateVector& in,
                   StateVector& out) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        Eigen::VectorXd::Map(in.data(), q.rows()) = q.col(j);
        matvec_into(m, in, out);
        z.col(j) = Eigen::VectorXd::Map(out.data(), q.rows());
    }
    const Eigen::MatrixXd h = q.transpose() * z;
    const Eigen::MatrixXd r = z - q * h;
    Eigen::EigenSolver<Eigen::MatrixXd> es(h, true);
    if (es.info() != Eigen::Success) return {0.0, std::numeric_limits<double>::infinity()};
    Eigen::Index top = 0;
    for (Eigen::Index i = 1; i < h.rows(); ++i) {
        if (std::abs(es.eigenvalues()[i]) > std::abs(es.eigenvalues()[top])) top = i;
    }
    const Eigen::VectorXcd y = es.eigenvectors().col(top);
    return {std::abs(es.eigenvalues()[top]), (r.cast<std::complex<double>>() * y).norm() / y.norm()};
}

}  // namespace

SpectralEstimate spectral_radius_estimate(const SparseMatrix& m, std::size_t max_iters, double tol,
                                          std::uint64_t seed) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NotSquare,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    const auto n = static_cast<Eigen::Index>(m.rows());
    SpectralEstimate result;
    if (n == 0) {
        result.converged = true;
        return result;
    }
    const Eigen::Index p = std::min(n, kBlockColumns);
    Rng rng(seed);
    Eigen::MatrixXd z(n, p);
    z.col(0).setOnes();
    for (Eigen::Index j = 1; j < p; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) z(i, j) = rng.uniform(-1.0, 1.0);
    }
    StateVector in(m.rows()), out(m.rows());

    // Stop on a tiny residual, or once the smallest residual over a window of
    // `window` steps is below sqrt(tol) and within 1% of the previous
    // window's (rounding can keep it above tol). Window minima ride out the
    // oscillation of rotating complex pairs.
    const double loose = std::sqrt(tol);
    constexpr std::size_t window = 500;
    double previous_min = std::numeric_limits<double>::infinity();
    double current_min = std::numeric_limits<double>::infinity();
    while (result.iterations < max_iters) {
        const Eigen::MatrixXd q = orthonormal_basis(z);
        const RitzPair ritz = ritz_step(m, q, z, in, out);
        ++result.iterations;
        result.value = ritz.modulus;
        const double relative = ritz.residual / std::max(1.0, ritz.modulus);
        if (relative <= tol) {
            result.converged = true;
            break;
        }
        current_min = std::min(current_min, relative);
        if (result.iterations % window == 0) {
            if (relative <= loose && current_min >= 0.99 * previous_min) {
                result.converged = true;
                break;
            }
            previous_min = current_min;
            current_min = std::numeric_limits<double>::infinity();
        }
    }
    return result;
}

double spectral_radius(const SparseMatrix& m, std::size_t max_iters, double tol) {
    const SpectralEstimate est = spectral_radius_estimate(m, max_iters, tol);
    if (!est.converged) {
        throw Error(ErrorKind::NoConvergence, "power iteration stopped at estimate " +
                                                  std::to_string(est.value) + " after " +
                                                  std::to_string(est.iterations) + " iterations");
    }
    return est.value;
}

bool is_symmetric(const SparseMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NotSquare,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto cols = m.row_cols(r);
        const auto ws = m.row_weights(r);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (m.at(cols[k], r) != ws[k]) return false;
        }
    }
    return true;
}

}  // namespace adjdyn
