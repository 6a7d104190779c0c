#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "adjdyn/sparse_matrix.hpp"

namespace adjdyn {

/// Next state indexed by the integer pattern key produced by a positional stencil.
struct PatternLut {
    std::size_t n_states = 2;
    std::size_t k = 0;
    std::vector<int> table;  // length n_states^k, index 0 first

    friend bool operator==(const PatternLut&, const PatternLut&) = default;
};

/// Counting rule. The matrix carries a self-weight `center_weight` larger than
/// any neighbor count, so key = count + center_weight * own_state.
struct CountLut {
    std::size_t n_states = 2;
    std::size_t center_weight = 1;
    std::vector<int> table;  // length center_weight * n_states

    friend bool operator==(const CountLut&, const CountLut&) = default;
};

/// One pattern table per node (random Boolean networks). Input m of a node
/// contributes n_states^m to its key.
struct PerNodeLut {
    std::size_t n_states = 2;
    std::size_t k = 0;
    std::vector<std::vector<int>> tables;

    friend bool operator==(const PerNodeLut&, const PerNodeLut&) = default;
};

enum class MapKind { Tanh, Logistic, Identity };

/// mix_then_map: x' = g(A x). map_then_mix: x' = A g(x).
enum class ApplyOrder { MixThenMap, MapThenMix };

struct ContinuousMap {
    MapKind kind = MapKind::Identity;
    double r = 0.0;  // logistic parameter
    ApplyOrder order = ApplyOrder::MixThenMap;

    double operator()(double x) const noexcept;

    friend bool operator==(const ContinuousMap&, const ContinuousMap&) = default;
};

/// The activation f of x' = f(A x).
class RuleSpec {
public:
    using Variant = std::variant<PatternLut, CountLut, PerNodeLut, ContinuousMap>;

    /// Validates table lengths, table values and the logistic range; throws InvalidArgument.
    explicit RuleSpec(Variant v);

    const Variant& variant() const noexcept { return v_; }
    bool is_discrete() const noexcept { return !std::holds_alternative<ContinuousMap>(v_); }

    /// Number of discrete states; 0 for continuous maps.
    std::size_t n_states() const noexcept;

    ApplyOrder order() const noexcept;

    friend bool operator==(const RuleSpec&, const RuleSpec&) = default;

private:
    Variant v_;
};

/// Wolfram numbering: table[p] = bit p of rule_number, where p = 4*left + 2*center + right.
/// Throws RuleOutOfRange.
RuleSpec elementary_rule(int rule_number);

/// Outer-totalistic binary rule on `max_count` neighbors: a dead cell is born
/// with a count in `birth`, a live one survives with a count in `survive`.
/// Pairs with a counting stencil whose self-weight is max_count + 1.
RuleSpec life_like_rule(std::span<const int> birth, std::span<const int> survive,
                        std::size_t max_count = 8);

/// B3/S23 with center weight 9 (Moore counts 0..8).
RuleSpec game_of_life_rule();

/// Independent random Boolean tables of 2^in_degree entries per node.
RuleSpec random_boolean_tables(std::size_t n_nodes, std::size_t in_degree, std::uint64_t seed);

RuleSpec tanh_map();
RuleSpec logistic_map(double r, ApplyOrder order = ApplyOrder::MapThenMix);
RuleSpec identity_map(ApplyOrder order = ApplyOrder::MixThenMap);

/// Elementwise f. LUT variants round each preactivation to the nearest
/// integer key (NonIntegerKey past 1e-6) and look it up (KeyOutOfTable when
/// outside the table). For continuous maps the function g is applied
/// regardless of order; the engine decides where it sits around the matvec.
/// `current` is accepted for rules that depend on the current state; none of
/// the shipped variants read it. Throws DimensionMismatch.
StateVector apply_rule(const RuleSpec& rule, std::span<const double> preactivation,
                       std::span<const double> current);

/// Checks that every value is a valid state for the rule (integral and in
/// range for LUT rules, finite for maps). Throws BadStateValue.
void validate_state(const RuleSpec& rule, std::span<const double> values);

/// One-line text form, tables listed index-0-first:
///   rule pattern index0first n=2 k=3 table=01110110
///   rule count index0first n=2 c=9 table=000100000001100000
///   rule pernode index0first n=2 k=2 tables=0110,1000
///   rule map name=logistic r=4 order=map_then_mix
/// Digits are packed when n <= 10, otherwise entries are separated by ':'.
std::string rule_to_text(const RuleSpec& rule);

/// Inverse of rule_to_text. Throws ParseError.
RuleSpec rule_from_text(const std::string& line);

}  // namespace adjdyn
