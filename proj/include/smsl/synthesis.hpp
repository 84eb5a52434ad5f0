#pragma once

#include "smsl/domain_spec.hpp"
#include "smsl/fsm.hpp"

#include <map>
#include <string>
#include <vector>

namespace smsl {

using OperationAssignment = std::map<StateCode, std::vector<std::string>>;

// Every placement of the entities, with all stack orders at ordered
// positions, in code order. Throws EnumerationCapExceeded above the
// domain's cap.
std::vector<State> enumerate_candidates(const DomainSpec& spec);

// Keeps, in order, the states satisfying every constraint.
std::vector<State> filter_states(const std::vector<State>& candidates, const std::vector<Expr>& constraints);

// Operation ids whose precondition holds, per state. Ids keep declaration order.
OperationAssignment assign_operations(const DomainSpec& spec, const std::vector<State>& states);

// Applies each assigned operation and keeps transitions whose result is a
// member of `states` and satisfies the constraints. Sorted by (src, op).
std::vector<Transition> infer_transitions(const DomainSpec& spec, const std::vector<State>& states,
                                          const OperationAssignment& assignment);

struct SynthesisOptions {
    // Above the enumeration cap, keep a seeded uniform sample of valid
    // states instead of failing.
    bool allow_sampling = false;
    std::uint64_t sample_seed = 0;
};

// Per-phase figures.
struct SynthesisTrace {
    std::uint64_t candidates = 0;
    std::uint64_t valid_states = 0;
    std::uint64_t assigned_pairs = 0;
    std::uint64_t transitions = 0;
    bool sampled = false;
};

struct SynthesisResult {
    FsmModel fsm;
    SynthesisTrace trace;
};

SynthesisResult synthesize_traced(const DomainSpec& spec, const SynthesisOptions& options = {});

// Throws EnumerationCapExceeded, or InvalidDomain when the initial state
// is not among the valid states.
FsmModel synthesize(const DomainSpec& spec, const SynthesisOptions& options = {});

} // namespace smsl
