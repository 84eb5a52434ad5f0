#pragma once

#include "smsl/operation.hpp"
#include "smsl/state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smsl {

// What an FSM keeps of an operation once guards have done their work.
struct OperationRecord {
    std::string id;
    Move move;
    std::string label;

    bool operator==(const OperationRecord&) const = default;
};

struct Transition {
    StateCode src;
    std::string op;
    StateCode dst;

    bool operator==(const Transition&) const = default;
};

struct FsmCounts {
    std::uint64_t candidates = 0;
    std::uint64_t valid_states = 0;
    std::uint64_t operations = 0;
    std::uint64_t transitions = 0;

    bool operator==(const FsmCounts&) const = default;
};

/// Synthesized state machine in canonical order: states by code, operations
/// by id, transitions by (src code, op id).
struct FsmModel {
    std::string spec_name;
    VocabularyPtr vocab;
    std::vector<StateCode> state_codes;
    std::vector<State> states;
    std::vector<OperationRecord> operations;
    std::vector<Transition> transitions;
    StateCode initial_state;
    FsmCounts counts;

    [[nodiscard]] std::optional<std::size_t> state_index(StateCode code) const;
    [[nodiscard]] const State& state(StateCode code) const; // throws ReferenceError
    [[nodiscard]] const OperationRecord* find_operation(const std::string& id) const;
    [[nodiscard]] const Transition* find_transition(StateCode src, const std::string& op) const;

    // Outgoing transitions of each state, indexed like `states`.
    [[nodiscard]] std::vector<std::vector<std::size_t>> successors() const;
};

bool operator==(const FsmModel& a, const FsmModel& b);

// Checks the model invariants: sorted unique states, resolvable
// transitions, deterministic (src, op). Throws ConsistencyError.
void check_fsm(const FsmModel& fsm);

// Codes of states reachable from `start` (including it), ascending.
std::vector<StateCode> reachable_states(const FsmModel& fsm, StateCode start);

} // namespace smsl
