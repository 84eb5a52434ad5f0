#pragma once

#include "smsl/coverage.hpp"
#include "smsl/domain_spec.hpp"
#include "smsl/fsm.hpp"
#include "smsl/posesim.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace smsl {

/// Environment configurations for one randomized initialization, keyed by
/// the state they abstract to.
struct StateConfigStore {
    std::uint64_t seed = 0;
    LayoutHandle layout;
    std::map<StateCode, EnvConfig> configs;
};

struct DemonstrationRecord {
    Transition transition;
    std::string language_goal;
    ActionRecord action;
    EnvConfig pre;
    EnvConfig post;
    std::uint64_t seed = 0;
};

// Walks every plan path from its start configuration, executing each step
// and keeping the first configuration seen per state. States the plan never
// reaches are then instantiated directly on the same layout, so every state
// of the FSM ends up with a configuration.
// Throws ReferenceError when the plan does not belong to `fsm`, and
// ConsistencyError when a step lands in a different state than planned.
StateConfigStore collect_configs(const DomainSpec& spec, const FsmModel& fsm, const CoveragePlan& plan,
                                 std::uint64_t seed);

using TransitionFilter = std::function<bool(const Transition&)>;

// One record per selected transition, in FSM order. Throws MissingConfig.
std::vector<DemonstrationRecord> generate_demos(const FsmModel& fsm, const StateConfigStore& store,
                                                const TransitionFilter& filter = {});

std::string render_goal(const OperationSpec& op, const Vocabulary& vocab);

// Single JSON line, no trailing newline.
std::string emit_record(const DemonstrationRecord& record);
std::string emit_store(const StateConfigStore& store);

} // namespace smsl
