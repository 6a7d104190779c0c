#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "adjdyn/sparse_matrix.hpp"

namespace adjdyn {

/// 1D stencil. `center` is the 0-based position of the cell itself in `weights`.
struct Stencil1D {
    std::vector<double> weights;
    std::size_t center = 0;
};

/// 2D stencil. weights[r][c]; row 0 lies `center_row` cells above the cell,
/// column 0 lies `center_col` cells to its left.
struct Stencil2D {
    std::vector<std::vector<double>> weights;
    std::size_t center_row = 0;
    std::size_t center_col = 0;

    std::size_t rows() const noexcept { return weights.size(); }
    std::size_t cols() const noexcept { return weights.empty() ? 0 : weights.front().size(); }
};

struct GridSpec {
    std::size_t width = 1;
    std::size_t height = 1;
    bool wrapped = true;
};

/// Positional weights [n^0, n^1, ..., n^(k-1)], least significant first.
/// Throws ArgumentTooSmall when n_states < 2 or k_neighbors < 1.
std::vector<double> pattern_weights(std::size_t n_states, std::size_t k_neighbors);

/// Adjacency matrix of a 1D automaton: cell i reads cell (i + j) mod width with
/// weight weights[j + center] for every nonzero stencil entry. Unwrapped grids
/// drop the connections that would cross the boundary.
/// Throws StencilWiderThanGrid, InvalidArgument.
SparseMatrix generate_ca_1d(const GridSpec& grid, const Stencil1D& stencil);

/// 2D analogue over a row-major flattening (cell i <-> row i / width, col i % width).
SparseMatrix generate_ca_2d(const GridSpec& grid, const Stencil2D& stencil);

/// Moore neighborhood (3x3, all ones) with `center_weight` at the center.
Stencil2D moore_stencil(double center_weight = 0.0);

/// Von Neumann neighborhood (3x3 cross) with `center_weight` at the center.
Stencil2D von_neumann_stencil(double center_weight = 0.0);

struct PositionalBase {
    std::size_t n_states = 2;
};

struct UniformWeights {
    double lo = -1.0;
    double hi = 1.0;
};

using WeightScheme = std::variant<PositionalBase, UniformWeights>;

struct RandomDigraph {
    SparseMatrix matrix;
    /// inputs[i] is node i's ordered input list. With PositionalBase, input m
    /// of node i carries weight n^m.
    std::vector<std::vector<std::size_t>> inputs;
};

/// Every node draws exactly `in_degree` distinct inputs uniformly at random.
/// Pure function of the arguments. Throws DegreeTooLarge.
RandomDigraph generate_random_digraph(std::size_t n_nodes, std::size_t in_degree,
                                      const WeightScheme& scheme, bool allow_self,
                                      std::uint64_t seed);

/// Each entry present independently with probability `density`, weight uniform
/// in [lo, hi). Used for benchmarks and randomized tests.
SparseMatrix generate_random_sparse(std::size_t n_rows, std::size_t n_cols, double density,
                                    double lo, double hi, std::uint64_t seed);

}  // namespace adjdyn
