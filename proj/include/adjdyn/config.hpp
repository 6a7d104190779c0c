#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "adjdyn/io.hpp"
#include "adjdyn/systems.hpp"

namespace adjdyn {

enum class InitKind { Zeros, Center, Random, Glider, Blinker, File };

std::string_view to_string(InitKind kind) noexcept;

/// Everything `adjdyn run` needs. Parsed from flat `key = value` text with
/// `#` comments; unknown keys are rejected.
///
/// Keys: kind width height nodes rule wrapped k eps r density rho seed
///       steps init init_density init_file output format
struct RunConfig {
    SystemConfig system;
    bool has_seed = false;
    std::size_t steps = 0;
    InitKind init = InitKind::Zeros;
    double init_density = 0.5;  // P(alive) for random binary starts
    std::string init_file;
    std::string output;  // empty: stdout
    StateFormat format = StateFormat::Csv;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ParseError (syntax, unknown key, bad value).
RunConfig parse_run_config(std::istream& is);
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Writes every key, so parse(write(c)) == c.
std::string write_run_config(const RunConfig& config);

/// True when building or initializing the system consumes random draws.
bool needs_seed(const RunConfig& config);

/// Initial state for the configured system. Random starts use a stream
/// derived from the seed, independent of the wiring stream.
StateVector initial_state(const RunConfig& config);

}  // namespace adjdyn
