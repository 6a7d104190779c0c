#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adjdyn/rules.hpp"
#include "adjdyn/sparse_matrix.hpp"

namespace adjdyn {

/// T+1 recorded states of dimension n, stored row-major. Row 0 is the initial state.
class StateHistory {
public:
    StateHistory() = default;
    explicit StateHistory(std::size_t n) : n_(n) {}

    /// Builds from explicit rows; throws DimensionMismatch on ragged input.
    static StateHistory from_rows(const std::vector<StateVector>& rows);

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ == 0 ? empty_rows_ : values_.size() / n_; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const double> row(std::size_t t) const { return std::span(values_).subspan(t * n_, n_); }
    std::span<const double> values() const noexcept { return values_; }

    void append(std::span<const double> state);

    friend bool operator==(const StateHistory&, const StateHistory&) = default;

private:
    std::size_t n_ = 0;
    std::size_t empty_rows_ = 0;  // row count when n_ == 0
    std::vector<double> values_;
};

/// x_{t+1} = f(A x_t) on an N x N adjacency matrix, or x_{t+1} = A g(x_t)
/// for continuous maps flagged map_then_mix. There is no bias term.
class DynamicalSystem {
public:
    /// Throws NotSquare, DimensionMismatch or BadStateValue.
    DynamicalSystem(SparseMatrix matrix, RuleSpec rule, StateVector state);

    const SparseMatrix& matrix() const noexcept { return matrix_; }
    const RuleSpec& rule() const noexcept { return rule_; }
    const StateVector& state() const noexcept { return state_; }
    std::size_t time() const noexcept { return t_; }
    std::size_t size() const noexcept { return state_.size(); }

    /// Replaces the state and resets the step counter. Throws DimensionMismatch
    /// or BadStateValue.
    void set_state(StateVector values);

    /// Advances one step. Propagates KeyOutOfTable / NonIntegerKey.
    void step();

    /// Advances `steps` steps. When `record` is set the returned history holds
    /// steps + 1 rows starting with the current state.
    std::optional<StateHistory> run(std::size_t steps, bool record);

private:
    SparseMatrix matrix_;
    RuleSpec rule_;
    StateVector state_;
    StateVector scratch_;
    std::size_t t_ = 0;
};

}  // namespace adjdyn
