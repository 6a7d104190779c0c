#include "adjdyn/systems.hpp"

#include <cmath>
#include <string>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"
#include "adjdyn/topology.hpp"

namespace adjdyn {

std::string_view to_string(SystemKind kind) noexcept {
    switch (kind) {
        case SystemKind::ElementaryCa: return "elementary_ca";
        case SystemKind::Life: return "life";
        case SystemKind::Rbn: return "rbn";
        case SystemKind::Cml: return "cml";
        case SystemKind::Esn: return "esn";
    }
    return "unknown";
}

SystemKind system_kind_from_string(std::string_view name) {
    for (auto k : {SystemKind::ElementaryCa, SystemKind::Life, SystemKind::Rbn, SystemKind::Cml,
                   SystemKind::Esn}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorKind::ParseError, "unknown system kind '" + std::string(name) + "'");
}

void validate(const SystemConfig& c) {
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); };
    switch (c.kind) {
        case SystemKind::ElementaryCa:
            if (c.width < 1) fail("width must be at least 1");
            if (c.rule_number < 0 || c.rule_number > 255) {
                throw Error(ErrorKind::RuleOutOfRange, "elementary rule " + std::to_string(c.rule_number));
            }
            break;
        case SystemKind::Life:
            if (c.width < 1 || c.height < 1) fail("grid dimensions must be at least 1");
            break;
        case SystemKind::Rbn:
            if (c.nodes < 1) fail("nodes must be at least 1");
            break;
        case SystemKind::Cml:
            if (c.width < 1) fail("width must be at least 1");
            if (!(c.eps >= 0.0 && c.eps <= 1.0)) fail("eps must be in [0, 1]");
            if (!(c.r >= 0.0 && c.r <= 4.0)) fail("r must be in [0, 4]");
            break;
        case SystemKind::Esn:
            if (c.nodes < 1) fail("nodes must be at least 1");
            if (!(c.density > 0.0 && c.density <= 1.0)) fail("density must be in (0, 1]");
            if (!(c.rho > 0.0) || !std::isfinite(c.rho)) fail("rho must be positive");
            break;
    }
}

std::size_t state_size(const SystemConfig& c) {
    switch (c.kind) {
        case SystemKind::ElementaryCa:
        case SystemKind::Cml: return c.width;
        case SystemKind::Life: return c.width * c.height;
        case SystemKind::Rbn:
        case SystemKind::Esn: return c.nodes;
    }
    return 0;
}

DynamicalSystem build_system(const SystemConfig& c, StateVector init) {
    validate(c);
    switch (c.kind) {
        case SystemKind::ElementaryCa: return elementary_ca(c.width, c.rule_number, c.wrapped, std::move(init));
        case SystemKind::Life: return game_of_life(c.width, c.height, c.wrapped, std::move(init));
        case SystemKind::Rbn: return random_boolean_network(c.nodes, c.in_degree, c.seed, std::move(init));
        case SystemKind::Cml: return coupled_map_lattice(c.width, c.eps, c.r, c.wrapped, std::move(init));
        case SystemKind::Esn: return echo_state_network(c.nodes, c.density, c.rho, c.seed, std::move(init));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown system kind");
}

DynamicalSystem elementary_ca(std::size_t width, int rule_number, bool wrapped, StateVector init) {
    auto rule = elementary_rule(rule_number);
    const auto w = pattern_weights(2, 3);
    const Stencil1D stencil{{w[2], w[1], w[0]}, 1};
    return {generate_ca_1d({width, 1, wrapped}, stencil), std::move(rule), std::move(init)};
}

DynamicalSystem game_of_life(std::size_t width, std::size_t height, bool wrapped, StateVector init) {
    return {generate_ca_2d({width, height, wrapped}, moore_stencil(9.0)), game_of_life_rule(),
            std::move(init)};
}

DynamicalSystem random_boolean_network(std::size_t n, std::size_t k, std::uint64_t seed,
                                       StateVector init) {
    auto graph = generate_random_digraph(n, k, PositionalBase{2}, false, seed);
    return {std::move(graph.matrix), random_boolean_tables(n, k, derive_seed(seed, 1)), std::move(init)};
}

SparseMatrix cml_matrix(std::size_t width, double eps, bool wrapped) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eps must be in [0, 1]");
    const double side = eps / 2.0;
    double self = 1.0 - eps;
    // Rows accumulate in column order, which puts the self weight first,
    // middle or last depending on wrapping; all three sums must stay <= 1.
    auto worst_sum = [side](double s) {
        return std::max({(s + side) + side, (side + s) + side, (side + side) + s});
    };
    while (self > 0.0 && worst_sum(self) > 1.0) self = std::nextafter(self, 0.0);

    if (width < 3) {
        // Neighbors coincide with each other or the cell itself; build the
        // rows directly so weights add up instead of colliding.
        std::vector<Triplet> entries;
        for (std::size_t i = 0; i < width; ++i) {
            std::vector<double> row(width, 0.0);
            row[i] += self;
            const long long n = static_cast<long long>(width);
            for (long long d : {-1LL, 1LL}) {
                const long long j = static_cast<long long>(i) + d;
                if (wrapped) {
                    row[static_cast<std::size_t>(((j % n) + n) % n)] += side;
                } else if (j >= 0 && j < n) {
                    row[static_cast<std::size_t>(j)] += side;
                }
            }
            for (std::size_t j = 0; j < width; ++j) {
                if (row[j] != 0.0) entries.push_back({i, j, row[j]});
            }
        }
        return SparseMatrix::from_triplets(width, width, std::move(entries));
    }
    return generate_ca_1d({width, 1, wrapped}, Stencil1D{{side, self, side}, 1});
}

DynamicalSystem coupled_map_lattice(std::size_t width, double eps, double r, bool wrapped,
                                    StateVector init) {
    return {cml_matrix(width, eps, wrapped), logistic_map(r, ApplyOrder::MapThenMix), std::move(init)};
}

SparseMatrix esn_matrix(std::size_t n, double density, double rho_target, std::uint64_t seed) {
    if (!(density > 0.0 && density <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "density must be in (0, 1]");
    }
    if (density * static_cast<double>(n) * static_cast<double>(n) < 1.0) {
        throw Error(ErrorKind::InvalidArgument, "density * n * n must be at least 1");
    }
    if (!(rho_target > 0.0)) throw Error(ErrorKind::InvalidArgument, "rho must be positive");
    const auto degree = std::max<std::size_t>(
        1, std::min<std::size_t>(n, static_cast<std::size_t>(std::llround(density * static_cast<double>(n)))));
    auto graph = generate_random_digraph(n, degree, UniformWeights{-1.0, 1.0}, true, seed);
    const double radius = spectral_radius(graph.matrix, 200000, 1e-13);
    if (radius < 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "reservoir has zero spectral radius; try another seed");
    }
    return graph.matrix.scaled(rho_target / radius);
}

DynamicalSystem echo_state_network(std::size_t n, double density, double rho_target,
                                   std::uint64_t seed, StateVector init) {
    return {esn_matrix(n, density, rho_target, seed), tanh_map(), std::move(init)};
}

StateVector zeros_state(std::size_t n) { return StateVector(n, 0.0); }

StateVector one_hot_state(std::size_t n, std::size_t index) {
    if (index >= n) throw Error(ErrorKind::IndexOutOfBounds, "one-hot index " + std::to_string(index));
    StateVector s(n, 0.0);
    s[index] = 1.0;
    return s;
}

StateVector random_binary_state(std::size_t n, double p_alive, std::uint64_t seed) {
    Rng rng(seed);
    StateVector s(n);
    for (auto& x : s) x = rng.bernoulli(p_alive) ? 1.0 : 0.0;
    return s;
}

StateVector random_uniform_state(std::size_t n, double lo, double hi, std::uint64_t seed) {
    Rng rng(seed);
    StateVector s(n);
    for (auto& x : s) x = rng.uniform(lo, hi);
    return s;
}

StateVector glider_state(std::size_t width, std::size_t height, std::size_t top, std::size_t left) {
    if (width < 3 || height < 3) throw Error(ErrorKind::InvalidArgument, "a glider needs a 3x3 grid");
    StateVector s(width * height, 0.0);
    static constexpr std::size_t cells[5][2] = {{0, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
    for (const auto& rc : cells) {
        const std::size_t r = (top + rc[0]) % height;
        const std::size_t c = (left + rc[1]) % width;
        s[r * width + c] = 1.0;
    }
    return s;
}

StateVector blinker_state(std::size_t width, std::size_t height) {
    if (width < 3 || height < 1) throw Error(ErrorKind::InvalidArgument, "a blinker needs width 3");
    StateVector s(width * height, 0.0);
    const std::size_t r = height / 2;
    const std::size_t c = width / 2;
    for (std::size_t d = 0; d < 3; ++d) s[r * width + (c + d + width - 1) % width] = 1.0;
    return s;
}

}  // namespace adjdyn
