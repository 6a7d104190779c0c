#include "adjdyn/topology.hpp"

#include <algorithm>
#include <string>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"

namespace adjdyn {

namespace {

using Offset = long long;

// Maps a cell coordinate plus offset onto [0, extent), or reports that it
// falls off an unwrapped edge.
bool resolve(Offset pos, Offset extent, bool wrapped, std::size_t& out) {
    if (wrapped) {
        const Offset m = ((pos % extent) + extent) % extent;
        out = static_cast<std::size_t>(m);
        return true;
    }
    if (pos < 0 || pos >= extent) return false;
    out = static_cast<std::size_t>(pos);
    return true;
}

}  // namespace

std::vector<double> pattern_weights(std::size_t n_states, std::size_t k_neighbors) {
    if (n_states < 2) throw Error(ErrorKind::ArgumentTooSmall, "n_states must be at least 2");
    if (k_neighbors < 1) throw Error(ErrorKind::ArgumentTooSmall, "k_neighbors must be at least 1");
    std::vector<double> out(k_neighbors);
    double w = 1.0;
    for (auto& x : out) {
        x = w;
        w *= static_cast<double>(n_states);
    }
    return out;
}

SparseMatrix generate_ca_1d(const GridSpec& grid, const Stencil1D& stencil) {
    if (grid.height != 1) {
        throw Error(ErrorKind::InvalidArgument, "1D generation needs height 1");
    }
    if (grid.width < 1) throw Error(ErrorKind::InvalidArgument, "width must be at least 1");
    if (stencil.weights.empty() || stencil.center >= stencil.weights.size()) {
        throw Error(ErrorKind::InvalidArgument, "stencil center outside the stencil");
    }
    if (std::all_of(stencil.weights.begin(), stencil.weights.end(), [](double w) { return w == 0.0; })) {
        throw Error(ErrorKind::InvalidArgument, "stencil has no nonzero weight");
    }
    if (stencil.weights.size() > grid.width) {
        throw Error(ErrorKind::StencilWiderThanGrid,
                    "stencil of " + std::to_string(stencil.weights.size()) + " cells on width " +
                        std::to_string(grid.width));
    }
    const auto width = static_cast<Offset>(grid.width);
    const auto center = static_cast<Offset>(stencil.center);
    const auto len = static_cast<Offset>(stencil.weights.size());

    std::vector<Triplet> entries;
    for (Offset i = 0; i < width; ++i) {
        for (Offset j = -center; j < len - center; ++j) {
            const double w = stencil.weights[static_cast<std::size_t>(j + center)];
            std::size_t col = 0;
            if (w != 0.0 && resolve(i + j, width, grid.wrapped, col)) {
                entries.push_back({static_cast<std::size_t>(i), col, w});
            }
        }
    }
    return SparseMatrix::from_triplets(grid.width, grid.width, std::move(entries));
}

SparseMatrix generate_ca_2d(const GridSpec& grid, const Stencil2D& stencil) {
    if (grid.width < 1 || grid.height < 1) {
        throw Error(ErrorKind::InvalidArgument, "grid dimensions must be at least 1");
    }
    if (stencil.rows() == 0 || stencil.cols() == 0 || stencil.center_row >= stencil.rows() ||
        stencil.center_col >= stencil.cols()) {
        throw Error(ErrorKind::InvalidArgument, "stencil center outside the stencil");
    }
    bool any_nonzero = false;
    for (const auto& row : stencil.weights) {
        if (row.size() != stencil.cols()) throw Error(ErrorKind::InvalidArgument, "ragged stencil");
        for (double w : row) any_nonzero = any_nonzero || w != 0.0;
    }
    if (!any_nonzero) throw Error(ErrorKind::InvalidArgument, "stencil has no nonzero weight");
    if (stencil.rows() > grid.height || stencil.cols() > grid.width) {
        throw Error(ErrorKind::StencilWiderThanGrid,
                    std::to_string(stencil.rows()) + "x" + std::to_string(stencil.cols()) +
                        " stencil on " + std::to_string(grid.height) + "x" +
                        std::to_string(grid.width) + " grid");
    }
    const auto width = static_cast<Offset>(grid.width);
    const auto height = static_cast<Offset>(grid.height);
    const auto crow = static_cast<Offset>(stencil.center_row);
    const auto ccol = static_cast<Offset>(stencil.center_col);
    const auto srows = static_cast<Offset>(stencil.rows());
    const auto scols = static_cast<Offset>(stencil.cols());
    const std::size_t n = grid.width * grid.height;

    std::vector<Triplet> entries;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<Offset>(i / grid.width);
        const auto c = static_cast<Offset>(i % grid.width);
        for (Offset dr = -crow; dr < srows - crow; ++dr) {
            for (Offset dc = -ccol; dc < scols - ccol; ++dc) {
                const double w = stencil.weights[static_cast<std::size_t>(dr + crow)]
                                                [static_cast<std::size_t>(dc + ccol)];
                std::size_t tr = 0, tc = 0;
                if (w != 0.0 && resolve(r + dr, height, grid.wrapped, tr) &&
                    resolve(c + dc, width, grid.wrapped, tc)) {
                    entries.push_back({i, tr * grid.width + tc, w});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(n, n, std::move(entries));
}

Stencil2D moore_stencil(double center_weight) {
    return {{{1, 1, 1}, {1, center_weight, 1}, {1, 1, 1}}, 1, 1};
}

Stencil2D von_neumann_stencil(double center_weight) {
    return {{{0, 1, 0}, {1, center_weight, 1}, {0, 1, 0}}, 1, 1};
}

RandomDigraph generate_random_digraph(std::size_t n_nodes, std::size_t in_degree,
                                      const WeightScheme& scheme, bool allow_self,
                                      std::uint64_t seed) {
    const std::size_t available = allow_self ? n_nodes : (n_nodes == 0 ? 0 : n_nodes - 1);
    if (in_degree > available) {
        throw Error(ErrorKind::DegreeTooLarge, "in-degree " + std::to_string(in_degree) + " with only " +
                                                   std::to_string(available) + " candidate inputs");
    }
    std::vector<double> positional;
    if (const auto* base = std::get_if<PositionalBase>(&scheme); base && in_degree > 0) {
        positional = pattern_weights(base->n_states, in_degree);
    }

    Rng rng(seed);
    RandomDigraph out;
    out.inputs.resize(n_nodes);
    std::vector<Triplet> entries;
    entries.reserve(n_nodes * in_degree);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n_nodes; ++i) {
        pool.clear();
        for (std::size_t j = 0; j < n_nodes; ++j) {
            if (allow_self || j != i) pool.push_back(j);
        }
        out.inputs[i] = rng.sample_distinct(pool, in_degree);
        for (std::size_t m = 0; m < in_degree; ++m) {
            double w = 0.0;
            if (const auto* u = std::get_if<UniformWeights>(&scheme)) {
                w = rng.uniform(u->lo, u->hi);
            } else {
                w = positional[m];
            }
            entries.push_back({i, out.inputs[i][m], w});
        }
    }
    out.matrix = SparseMatrix::from_triplets(n_nodes, n_nodes, std::move(entries));
    return out;
}

SparseMatrix generate_random_sparse(std::size_t n_rows, std::size_t n_cols, double density,
                                    double lo, double hi, std::uint64_t seed) {
    if (!(density > 0.0 && density <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "density must be in (0, 1]");
    }
    Rng rng(seed);
    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(density * static_cast<double>(n_rows * n_cols)) + 16);
    for (std::size_t r = 0; r < n_rows; ++r) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (rng.bernoulli(density)) entries.push_back({r, c, rng.uniform(lo, hi)});
        }
    }
    return SparseMatrix::from_triplets(n_rows, n_cols, std::move(entries));
}

}  // namespace adjdyn
