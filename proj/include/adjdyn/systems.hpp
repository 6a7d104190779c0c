#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "adjdyn/engine.hpp"

namespace adjdyn {

enum class SystemKind { ElementaryCa, Life, Rbn, Cml, Esn };

std::string_view to_string(SystemKind kind) noexcept;
/// Throws ParseError.
SystemKind system_kind_from_string(std::string_view name);

/// Parameters of one preset. Only the fields used by `kind` matter.
struct SystemConfig {
    SystemKind kind = SystemKind::ElementaryCa;
    std::size_t width = 16;    // elementary_ca, life, cml
    std::size_t height = 1;    // life
    std::size_t nodes = 16;    // rbn, esn
    int rule_number = 110;     // elementary_ca
    bool wrapped = true;       // elementary_ca, life, cml
    std::size_t in_degree = 2; // rbn
    double eps = 0.3;          // cml coupling, [0, 1]
    double r = 4.0;            // cml logistic parameter, [0, 4]
    double density = 0.05;     // esn, (0, 1]
    double rho = 0.9;          // esn target spectral radius, > 0
    std::uint64_t seed = 0;    // rbn, esn

    friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

/// Range checks for the fields `kind` uses. Throws InvalidArgument.
void validate(const SystemConfig& config);

/// Number of cells or nodes the preset produces.
std::size_t state_size(const SystemConfig& config);

/// Dispatches to the preset constructors below.
DynamicalSystem build_system(const SystemConfig& config, StateVector init);

/// [4, 2, 1] stencil centered on the cell, Wolfram table.
DynamicalSystem elementary_ca(std::size_t width, int rule_number, bool wrapped, StateVector init);

/// Moore stencil with self-weight 9 and the B3/S23 counting table.
DynamicalSystem game_of_life(std::size_t width, std::size_t height, bool wrapped, StateVector init);

/// n nodes with k distinct random inputs (no self-loops) and random Boolean
/// tables. The wiring uses `seed`, the tables an independent stream derived
/// from it.
DynamicalSystem random_boolean_network(std::size_t n, std::size_t k, std::uint64_t seed,
                                       StateVector init);

/// Kaneko diffusive coupling of logistic maps:
///   x'(i) = (1 - eps) g(x(i)) + eps/2 [g(x(i-1)) + g(x(i+1))],  g(x) = r x (1 - x)
/// realized as map_then_mix. The self weight is lowered by a few ulps when
/// needed so that rounded row sums never exceed 1, which keeps [0, 1] closed
/// under the update.
DynamicalSystem coupled_map_lattice(std::size_t width, double eps, double r, bool wrapped,
                                    StateVector init);

/// Each node reads round(density * n) (at least 1) random inputs with
/// weights uniform in [-1, 1); the matrix is rescaled to spectral radius
/// `rho_target`. tanh activation, no input or bias terms.
DynamicalSystem echo_state_network(std::size_t n, double density, double rho_target,
                                   std::uint64_t seed, StateVector init);

/// The CML coupling matrix on its own.
SparseMatrix cml_matrix(std::size_t width, double eps, bool wrapped);

/// The ESN reservoir matrix on its own.
SparseMatrix esn_matrix(std::size_t n, double density, double rho_target, std::uint64_t seed);

// Initial states.

StateVector zeros_state(std::size_t n);
StateVector one_hot_state(std::size_t n, std::size_t index);
StateVector random_binary_state(std::size_t n, double p_alive, std::uint64_t seed);
StateVector random_uniform_state(std::size_t n, double lo, double hi, std::uint64_t seed);

/// Glider with live cells at (row, col) offsets (0,1) (1,2) (2,0) (2,1) (2,2)
/// from (top, left), on a row-major width x height grid (wrapping).
StateVector glider_state(std::size_t width, std::size_t height, std::size_t top = 0,
                         std::size_t left = 0);

/// Horizontal blinker of three cells centered on the grid.
StateVector blinker_state(std::size_t width, std::size_t height);

}  // namespace adjdyn
