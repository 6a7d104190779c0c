#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace adjdyn {

/// Flattened cell or node states. Row i of an adjacency matrix reads this vector.
using StateVector = std::vector<double>;

struct Triplet {
    std::size_t row;
    std::size_t col;
    double weight;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Row-major dense matrix. Used as a test oracle and for the benchmark baseline.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
};

/// Immutable compressed-row adjacency matrix.
///
/// Convention: a nonzero at (i, j) means cell j feeds cell i, so row i lists
/// the inputs of cell i. Entries are stored explicitly even when their weight
/// is zero; nnz() counts stored entries.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Builds and finalizes. Throws IndexOutOfBounds, DuplicateEntry or NonFiniteWeight.
    static SparseMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                      std::vector<Triplet> triplets);

    std::size_t rows() const noexcept { return n_rows_; }
    std::size_t cols() const noexcept { return n_cols_; }
    std::size_t nnz() const noexcept { return weights_.size(); }
    bool is_square() const noexcept { return n_rows_ == n_cols_; }

    std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
    std::span<const std::size_t> col_indices() const noexcept { return col_indices_; }
    std::span<const double> weights() const noexcept { return weights_; }

    std::span<const std::size_t> row_cols(std::size_t r) const;
    std::span<const double> row_weights(std::size_t r) const;

    /// Stored weight at (r, c), or 0 when absent.
    double at(std::size_t r, std::size_t c) const;

    /// Entries sorted by (row, col).
    std::vector<Triplet> triplets() const;

    /// Same structure, every weight multiplied by `factor`.
    SparseMatrix scaled(double factor) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::size_t> row_offsets_{0};
    std::vector<std::size_t> col_indices_;
    std::vector<double> weights_;
};

/// out = M v. Throws DimensionMismatch.
StateVector matvec(const SparseMatrix& m, std::span<const double> v);

/// out = M v, written into `out` (resized). Rows are split across `threads`
/// workers; each output entry is accumulated by exactly one worker in column
/// order, so the result does not depend on the thread count.
void matvec_into(const SparseMatrix& m, std::span<const double> v, StateVector& out,
                 unsigned threads = 1);

DenseMatrix to_dense(const SparseMatrix& m);

StateVector dense_matvec(const DenseMatrix& m, std::span<const double> v);

struct SpectralEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Dominant eigenvalue magnitude by power iteration.
///
/// Block (subspace) power iteration on min(n, 8) columns, re-orthonormalized
/// every step; column 0 is exactly the classic power iterate and starts at
/// all-ones, the others at seeded random vectors. The estimate is the largest
/// modulus among the Ritz values of the projected block, which resolves
/// complex conjugate and +/- dominant pairs (common for random reservoirs).
/// Converged when that Ritz pair's residual is at most `tol` relative to
/// max(1, estimate), or when the residual sits below sqrt(tol) and its
/// minimum has shrunk by less than 1% between successive 500-step windows.
/// More than eight dominant eigenvalues of nearly equal modulus converge
/// slowly and may end unconverged. Throws NotSquare.
SpectralEstimate spectral_radius_estimate(const SparseMatrix& m, std::size_t max_iters = 10000,
                                          double tol = 1e-12, std::uint64_t seed = 0x5eed);

/// As spectral_radius_estimate, but throws NoConvergence when not converged.
double spectral_radius(const SparseMatrix& m, std::size_t max_iters = 10000, double tol = 1e-12);

/// True iff M[i,j] == M[j,i] for every stored entry. Throws NotSquare.
bool is_symmetric(const SparseMatrix& m);

}  // namespace adjdyn
