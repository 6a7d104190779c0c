#include "adjdyn/engine.hpp"

#include <string>

#include "adjdyn/error.hpp"

namespace adjdyn {

StateHistory StateHistory::from_rows(const std::vector<StateVector>& rows) {
    StateHistory h(rows.empty() ? 0 : rows.front().size());
    for (const auto& r : rows) h.append(r);
    return h;
}

void StateHistory::append(std::span<const double> state) {
    if (state.size() != n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "state of length " + std::to_string(state.size()) + " in history of dimension " +
                        std::to_string(n_));
    }
    if (n_ == 0) {
        ++empty_rows_;
        return;
    }
    values_.insert(values_.end(), state.begin(), state.end());
}

DynamicalSystem::DynamicalSystem(SparseMatrix matrix, RuleSpec rule, StateVector state)
    : matrix_(std::move(matrix)), rule_(std::move(rule)) {
    if (!matrix_.is_square()) {
        throw Error(ErrorKind::NotSquare, "adjacency matrix is " + std::to_string(matrix_.rows()) + "x" +
                                              std::to_string(matrix_.cols()));
    }
    set_state(std::move(state));
}

void DynamicalSystem::set_state(StateVector values) {
    if (values.size() != matrix_.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "state of length " + std::to_string(values.size()) +
                                                  " for " + std::to_string(matrix_.rows()) + " cells");
    }
    validate_state(rule_, values);
    state_ = std::move(values);
    t_ = 0;
}

void DynamicalSystem::step() {
    if (rule_.order() == ApplyOrder::MapThenMix) {
        const StateVector mapped = apply_rule(rule_, state_, state_);
        matvec_into(matrix_, mapped, scratch_);
        state_.swap(scratch_);
    } else {
        matvec_into(matrix_, state_, scratch_);
        state_ = apply_rule(rule_, scratch_, state_);
    }
    ++t_;
}

std::optional<StateHistory> DynamicalSystem::run(std::size_t steps, bool record) {
    std::optional<StateHistory> history;
    if (record) {
        history.emplace(size());
        history->append(state_);
    }
    for (std::size_t s = 0; s < steps; ++s) {
        step();
        if (history) history->append(state_);
    }
    return history;
}

}  // namespace adjdyn
