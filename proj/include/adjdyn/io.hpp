#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "adjdyn/analysis.hpp"
#include "adjdyn/engine.hpp"
#include "adjdyn/topology.hpp"

namespace adjdyn {

// State histories -----------------------------------------------------------

/// One row per step, comma-separated reals in shortest round-trip form.
void write_states_csv(std::ostream& os, const StateHistory& history);
StateHistory read_states_csv(std::istream& is);

/// Binary layout: "LFST", u32 row count, u32 state dimension, then the rows
/// as little-endian IEEE-754 doubles.
void write_states_lfst(std::ostream& os, const StateHistory& history);
StateHistory read_states_lfst(std::istream& is);

enum class StateFormat { Csv, Lfst };

void write_states(const std::filesystem::path& path, const StateHistory& history, StateFormat format);
/// Detects the format from the leading magic bytes.
StateHistory read_states(const std::filesystem::path& path);

// Stencils ------------------------------------------------------------------

/// Rows of whitespace-separated reals plus one `center R C` line. Blank lines
/// and lines starting with '#' are ignored. Throws ParseError.
Stencil2D read_stencil(std::istream& is);
Stencil2D read_stencil(const std::filesystem::path& path);
std::string stencil_to_text(const Stencil2D& stencil);

// Rendering -----------------------------------------------------------------

/// One character per cell, one grid per row of the history, grids separated
/// by a blank line. Binary grids use '.' and '#'; up to 10 states use decimal
/// digits. `n_states` 0 infers max + 1. Throws DimensionMismatch,
/// BadStateValue or InvalidArgument (more than 10 states).
std::string render_text(const StateHistory& history, std::size_t width, std::size_t height,
                        std::size_t n_states = 0);

/// Plain PGM (P2) of one state with maxval n_states - 1.
std::string render_pgm(std::span<const double> state, std::size_t width, std::size_t height,
                       std::size_t n_states);

/// Writes <prefix>_<step>.pgm per history row, the step zero-padded to a
/// common width (at least 4). Returns the written paths.
std::vector<std::filesystem::path> write_pgm_frames(const StateHistory& history, std::size_t width,
                                                    std::size_t height, std::size_t n_states,
                                                    const std::string& prefix);

// Trajectories --------------------------------------------------------------

/// Header `step,pc1,pc2,...` then one line per projected point.
void write_trajectory_csv(std::ostream& os, const Projection& projection);

/// SVG polyline through the first two coordinates of every point. Points are
/// written verbatim; the y axis is flipped with a transform.
std::string trajectory_svg(const Projection& projection);

}  // namespace adjdyn
