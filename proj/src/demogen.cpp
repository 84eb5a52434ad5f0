#include "smsl/demogen.hpp"

#include "pose_json.hpp"
#include "smsl/errors.hpp"

namespace smsl {

namespace {

const OperationRecord& operation_of(const FsmModel& fsm, const std::string& id)
{
    const auto* op = fsm.find_operation(id);
    if (!op)
        throw ReferenceError("unknown operation '" + id + "'");
    return *op;
}

} // namespace

StateConfigStore collect_configs(const DomainSpec& spec, const FsmModel& fsm, const CoveragePlan& plan,
                                 std::uint64_t seed)
{
    if (!spec.vocab->same_structure(*fsm.vocab))
        throw ReferenceError("domain '" + spec.name + "' does not declare the vocabulary of '" + fsm.spec_name + "'");
    if (auto problem = plan_mismatch(fsm, plan))
        throw ReferenceError("plan does not match the state machine: " + *problem);

    StateConfigStore store{seed, randomize_layout(fsm.vocab, spec.layout, seed), {}};
    for (const auto& path : plan.paths) {
        auto start = store.configs.find(path.start);
        Scene scene{start != store.configs.end() ? start->second : instantiate_state(store.layout, fsm.state(path.start))};
        store.configs.emplace(path.start, scene.capture());
        for (const auto& step : path.steps) {
            scene.execute(operation_of(fsm, step.op).move);
            const auto reached = scene.state();
            if (!(reached == fsm.state(step.state)))
                throw ConsistencyError("executing '" + step.op + "' reached " + to_string(reached) + ", expected "
                                       + state_id(step.state));
            store.configs.emplace(step.state, scene.capture());
        }
    }
    for (std::size_t i = 0; i < fsm.states.size(); ++i)
        if (!store.configs.contains(fsm.state_codes[i]))
            store.configs.emplace(fsm.state_codes[i], instantiate_state(store.layout, fsm.states[i]));
    return store;
}

std::vector<DemonstrationRecord> generate_demos(const FsmModel& fsm, const StateConfigStore& store,
                                                const TransitionFilter& filter)
{
    std::vector<DemonstrationRecord> records;
    for (const auto& t : fsm.transitions) {
        if (filter && !filter(t))
            continue;
        auto pre = store.configs.find(t.src);
        if (pre == store.configs.end())
            throw MissingConfig("no stored configuration for state " + state_id(t.src));
        const auto& op = operation_of(fsm, t.op);
        auto result = execute_move(pre->second, op.move);
        const auto reached = abstract_state(result.env);
        if (!(reached == fsm.state(t.dst)))
            throw ConsistencyError("executing '" + t.op + "' from " + state_id(t.src) + " reached "
                                   + to_string(reached) + ", expected " + state_id(t.dst));
        records.push_back({t, op.label, result.action, pre->second, std::move(result.env), store.seed});
    }
    return records;
}

std::string render_goal(const OperationSpec& op, const Vocabulary& vocab)
{
    return render_label(op.label_template, vocab, op.move());
}

std::string emit_record(const DemonstrationRecord& record)
{
    detail::ordered_json doc;
    doc["transition"] = {{"src", state_id(record.transition.src)},
                         {"op", record.transition.op},
                         {"dst", state_id(record.transition.dst)}};
    doc["language_goal"] = record.language_goal;
    doc["pick"] = detail::pose_json(record.action.pick);
    doc["place"] = detail::pose_json(record.action.place);
    doc["pre"] = detail::env_json(record.pre);
    doc["post"] = detail::env_json(record.post);
    doc["seed"] = record.seed;
    return doc.dump();
}

std::string emit_store(const StateConfigStore& store)
{
    detail::ordered_json configs = detail::ordered_json::object();
    for (const auto& [code, env] : store.configs)
        configs[state_id(code)] = detail::env_json(env);
    detail::ordered_json doc;
    doc["seed"] = store.seed;
    doc["layout"] = detail::ordered_json::parse(emit_layout(*store.layout));
    doc["configs"] = configs;
    return detail::dump_canonical(doc);
}

} // namespace smsl
