#include "smsl/synthesis.hpp"

#include "smsl/errors.hpp"
#include "smsl/random.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace smsl {

std::vector<State> enumerate_candidates(const DomainSpec& spec)
{
    const StateCodec codec{spec.vocab};
    const auto count = codec.candidate_count();
    if (codec.saturated() || count > spec.max_states_for_full_enumeration)
        throw EnumerationCapExceeded(count, spec.max_states_for_full_enumeration);

    std::vector<State> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(codec.decode(StateCode{i}));
    return out;
}

std::vector<State> filter_states(const std::vector<State>& candidates, const std::vector<Expr>& constraints)
{
    std::vector<State> out;
    for (const auto& s : candidates)
        if (std::all_of(constraints.begin(), constraints.end(), [&](const Expr& c) { return evaluate(c, s); }))
            out.push_back(s);
    return out;
}

OperationAssignment assign_operations(const DomainSpec& spec, const std::vector<State>& states)
{
    const StateCodec codec{spec.vocab};
    OperationAssignment out;
    for (const auto& s : states) {
        auto& ops = out[codec.encode(s)];
        for (const auto& op : spec.operations)
            if (precondition_holds(op, s))
                ops.push_back(op.id);
    }
    return out;
}

std::vector<Transition> infer_transitions(const DomainSpec& spec, const std::vector<State>& states,
                                          const OperationAssignment& assignment)
{
    const StateCodec codec{spec.vocab};
    std::unordered_set<StateCode> valid;
    for (const auto& s : states)
        valid.insert(codec.encode(s));

    std::vector<Transition> out;
    for (const auto& s : states) {
        const auto src = codec.encode(s);
        auto it = assignment.find(src);
        if (it == assignment.end())
            continue;
        for (const auto& id : it->second) {
            const auto* op = spec.find_operation(id);
            if (!op)
                throw ConsistencyError("assignment names unknown operation '" + id + "'");
            auto next = apply_operation(*op, s);
            const auto dst = codec.encode(next);
            if (!valid.contains(dst) || !spec.satisfies_constraints(next))
                continue;
            out.push_back({src, id, dst});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Transition& a, const Transition& b) { return std::tie(a.src, a.op) < std::tie(b.src, b.op); });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].src == out[i].src && out[i - 1].op == out[i].op)
            throw ConsistencyError("operation '" + out[i].op + "' yields two successors of " + state_id(out[i].src));
    return out;
}

namespace {

// Reservoir sample of valid states, always keeping the initial state.
std::vector<State> sample_valid_states(const DomainSpec& spec, const StateCodec& codec, std::uint64_t seed,
                                       std::uint64_t& valid_seen)
{
    const auto keep = spec.max_states_for_full_enumeration;
    const auto initial = codec.encode(spec.initial_state);
    Rng rng{seed};
    std::vector<StateCode> reservoir;
    valid_seen = 0;
    std::uint64_t others = 0;
    for (std::uint64_t i = 0; i < codec.candidate_count(); ++i) {
        const StateCode code{i};
        auto s = codec.decode(code);
        if (!spec.satisfies_constraints(s))
            continue;
        ++valid_seen;
        if (code == initial)
            continue;
        ++others;
        if (reservoir.size() + 1 < keep) {
            reservoir.push_back(code);
        } else if (keep > 1) {
            auto j = rng.below(others);
            if (j < keep - 1)
                reservoir[j] = code;
        }
    }
    reservoir.push_back(initial);
    std::sort(reservoir.begin(), reservoir.end());
    std::vector<State> out;
    out.reserve(reservoir.size());
    for (auto c : reservoir)
        out.push_back(codec.decode(c));
    return out;
}

} // namespace

SynthesisResult synthesize_traced(const DomainSpec& spec, const SynthesisOptions& options)
{
    validate_domain(spec);
    const StateCodec codec{spec.vocab};
    SynthesisResult result;
    auto& trace = result.trace;
    trace.candidates = codec.candidate_count();

    std::vector<State> valid;
    if (!codec.saturated() && trace.candidates <= spec.max_states_for_full_enumeration) {
        valid = filter_states(enumerate_candidates(spec), spec.state_constraints);
        trace.valid_states = valid.size();
    } else if (options.allow_sampling && !codec.saturated()) {
        valid = sample_valid_states(spec, codec, options.sample_seed, trace.valid_states);
        trace.sampled = true;
    } else {
        throw EnumerationCapExceeded(trace.candidates, spec.max_states_for_full_enumeration);
    }

    const auto initial = codec.encode(spec.initial_state);
    auto& fsm = result.fsm;
    fsm.spec_name = spec.name;
    fsm.vocab = spec.vocab;
    fsm.initial_state = initial;
    for (const auto& s : valid)
        fsm.state_codes.push_back(codec.encode(s));
    if (!std::binary_search(fsm.state_codes.begin(), fsm.state_codes.end(), initial))
        throw InvalidDomain("initial state " + to_string(spec.initial_state) + " was filtered out");

    const auto assignment = assign_operations(spec, valid);
    for (const auto& [code, ops] : assignment)
        trace.assigned_pairs += ops.size();
    fsm.transitions = infer_transitions(spec, valid, assignment);
    trace.transitions = fsm.transitions.size();
    fsm.states = std::move(valid);

    for (const auto& op : spec.operations)
        fsm.operations.push_back({op.id, op.move(), render_label(op.label_template, *spec.vocab, op.move())});
    std::sort(fsm.operations.begin(), fsm.operations.end(),
              [](const OperationRecord& a, const OperationRecord& b) { return a.id < b.id; });

    fsm.counts = {trace.candidates, fsm.states.size(), fsm.operations.size(), fsm.transitions.size()};
    check_fsm(fsm);
    return result;
}

FsmModel synthesize(const DomainSpec& spec, const SynthesisOptions& options)
{
    return synthesize_traced(spec, options).fsm;
}

} // namespace smsl
