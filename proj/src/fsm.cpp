#include "smsl/fsm.hpp"

#include "smsl/errors.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace smsl {

std::optional<std::size_t> FsmModel::state_index(StateCode code) const
{
    auto it = std::lower_bound(state_codes.begin(), state_codes.end(), code);
    if (it == state_codes.end() || *it != code)
        return std::nullopt;
    return static_cast<std::size_t>(it - state_codes.begin());
}

const State& FsmModel::state(StateCode code) const
{
    if (auto i = state_index(code))
        return states[*i];
    throw ReferenceError("unknown state " + state_id(code));
}

const OperationRecord* FsmModel::find_operation(const std::string& id) const
{
    auto it = std::lower_bound(operations.begin(), operations.end(), id,
                               [](const OperationRecord& op, const std::string& key) { return op.id < key; });
    if (it == operations.end() || it->id != id)
        return nullptr;
    return &*it;
}

const Transition* FsmModel::find_transition(StateCode src, const std::string& op) const
{
    auto it = std::lower_bound(transitions.begin(), transitions.end(), std::tie(src, op),
                               [](const Transition& t, const std::tuple<const StateCode&, const std::string&>& key) {
                                   return std::tie(t.src, t.op) < key;
                               });
    if (it == transitions.end() || it->src != src || it->op != op)
        return nullptr;
    return &*it;
}

std::vector<std::vector<std::size_t>> FsmModel::successors() const
{
    std::vector<std::vector<std::size_t>> out(states.size());
    for (std::size_t t = 0; t < transitions.size(); ++t)
        if (auto i = state_index(transitions[t].src))
            out[*i].push_back(t);
    return out;
}

bool operator==(const FsmModel& a, const FsmModel& b)
{
    const bool same_vocab = (a.vocab && b.vocab) ? a.vocab->same_structure(*b.vocab) : a.vocab == b.vocab;
    return a.spec_name == b.spec_name && same_vocab && a.state_codes == b.state_codes && a.states == b.states
           && a.operations == b.operations && a.transitions == b.transitions && a.initial_state == b.initial_state
           && a.counts == b.counts;
}

void check_fsm(const FsmModel& fsm)
{
    if (fsm.states.size() != fsm.state_codes.size())
        throw ConsistencyError("state list and code list differ in length");
    if (!std::is_sorted(fsm.state_codes.begin(), fsm.state_codes.end())
        || std::adjacent_find(fsm.state_codes.begin(), fsm.state_codes.end()) != fsm.state_codes.end())
        throw ConsistencyError("state codes are not strictly ascending");
    if (!fsm.state_index(fsm.initial_state))
        throw ConsistencyError("initial state " + state_id(fsm.initial_state) + " is not a valid state");
    for (std::size_t i = 1; i < fsm.operations.size(); ++i)
        if (!(fsm.operations[i - 1].id < fsm.operations[i].id))
            throw ConsistencyError("operation ids are not strictly ascending");
    for (std::size_t i = 0; i < fsm.transitions.size(); ++i) {
        const auto& t = fsm.transitions[i];
        if (!fsm.state_index(t.src) || !fsm.state_index(t.dst))
            throw ConsistencyError("transition references an unknown state");
        if (!fsm.find_operation(t.op))
            throw ConsistencyError("transition references unknown operation '" + t.op + "'");
        if (i > 0) {
            const auto& prev = fsm.transitions[i - 1];
            if (std::tie(prev.src, prev.op) == std::tie(t.src, t.op))
                throw ConsistencyError("nondeterministic transition (" + state_id(t.src) + ", " + t.op + ")");
            if (std::tie(prev.src, prev.op) > std::tie(t.src, t.op))
                throw ConsistencyError("transitions are not sorted");
        }
    }
}

std::vector<StateCode> reachable_states(const FsmModel& fsm, StateCode start)
{
    auto first = fsm.state_index(start);
    if (!first)
        return {};
    const auto succ = fsm.successors();
    std::vector<bool> seen(fsm.states.size(), false);
    std::deque<std::size_t> queue{*first};
    seen[*first] = true;
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        for (auto t : succ[s]) {
            auto d = fsm.state_index(fsm.transitions[t].dst);
            if (d && !seen[*d]) {
                seen[*d] = true;
                queue.push_back(*d);
            }
        }
    }
    std::vector<StateCode> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i])
            out.push_back(fsm.state_codes[i]);
    return out;
}

} // namespace smsl
