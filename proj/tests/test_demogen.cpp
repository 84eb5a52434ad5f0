#include "smsl/demogen.hpp"
#include "smsl/errors.hpp"

#include "support.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace smsl;

namespace {

StateConfigStore store_for(const std::string& name, std::uint64_t seed)
{
    const auto& fsm = test::fsm(name);
    return collect_configs(test::manifest(name).spec, fsm, plan_coverage(fsm, fsm.initial_state), seed);
}

} // namespace

TEST(Demogen, RiverStoreHoldsEveryState)
{
    EXPECT_EQ(store_for("river_crossing", 0).configs.size(), 40u);
}

TEST(Demogen, StoredConfigsAbstractToTheirKeys)
{
    for (auto name : test::kBuiltins) {
        const auto store = store_for(name, 1);
        EXPECT_EQ(store.configs.size(), test::fsm(name).states.size()) << name;
        for (const auto& [code, env] : store.configs) {
            EXPECT_EQ(abstract_state(env), test::fsm(name).state(code)) << name;
            EXPECT_EQ(env.layout, store.layout);
            EXPECT_EQ(env.seed, store.seed);
        }
    }
}

TEST(Demogen, RecordCountsAndInvariants)
{
    const std::map<std::string, std::size_t> expected = {{"hanoi", 78}, {"river_crossing", 92}, {"chess", 324}};
    for (auto name : test::kBuiltins) {
        const auto& fsm = test::fsm(name);
        const auto records = generate_demos(fsm, store_for(name, 2));
        ASSERT_EQ(records.size(), expected.at(name)) << name;
        for (const auto& r : records) {
            EXPECT_EQ(abstract_state(r.pre), fsm.state(r.transition.src));
            EXPECT_EQ(abstract_state(r.post), fsm.state(r.transition.dst));
            const auto moved = fsm.find_operation(r.transition.op)->move.entity;
            EXPECT_EQ(r.action.place, r.post.poses[moved.value()]);
            EXPECT_EQ(r.action.pick, r.pre.poses[moved.value()]);
            EXPECT_EQ(r.seed, 2u);
        }
    }
}

TEST(Demogen, WalkedConfigsMatchFreshInstancesSymbolically)
{
    // Three-state chain: walked configs differ from fresh ones only in how
    // they were produced.
    const auto& fsm = test::fsm("hanoi");
    const auto& t1 = fsm.transitions[fsm.successors()[*fsm.state_index(fsm.initial_state)][0]];
    const auto& t2 = fsm.transitions[fsm.successors()[*fsm.state_index(t1.dst)][0]];
    CoveragePlan plan{fsm.spec_name, CoverageMode::single_path, fsm.initial_state,
                      {{fsm.initial_state, {{t1.op, t1.dst}, {t2.op, t2.dst}}}}, {}, {}};
    std::vector<StateCode> covered = {fsm.initial_state, t1.dst, t2.dst};
    std::sort(covered.begin(), covered.end());
    plan.covered = covered;
    for (const auto& c : fsm.state_codes)
        if (!std::binary_search(covered.begin(), covered.end(), c))
            plan.unreachable.push_back(c);
    const auto store = collect_configs(test::manifest("hanoi").spec, fsm, plan, 0);
    EXPECT_EQ(abstract_state(store.configs.at(t2.dst)), abstract_state(instantiate_state(store.layout, fsm.state(t2.dst))));
}

TEST(Demogen, Deterministic)
{
    for (auto name : test::kBuiltins) {
        EXPECT_EQ(emit_store(store_for(name, 5)), emit_store(store_for(name, 5))) << name;
        const auto a = generate_demos(test::fsm(name), store_for(name, 5));
        const auto b = generate_demos(test::fsm(name), store_for(name, 5));
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            EXPECT_EQ(emit_record(a[i]), emit_record(b[i]));
    }
}

TEST(Demogen, FilterSelectsOne)
{
    const auto& fsm = test::fsm("river_crossing");
    const auto target = fsm.transitions[17];
    const auto records = generate_demos(fsm, store_for("river_crossing", 0), [&](const Transition& t) { return t == target; });
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].transition, target);
}

TEST(Demogen, OrderIndependent)
{
    // Each record depends only on the store and its transition.
    const auto& fsm = test::fsm("river_crossing");
    const auto store = store_for("river_crossing", 3);
    std::multiset<std::string> all;
    for (const auto& r : generate_demos(fsm, store))
        all.insert(emit_record(r));
    std::multiset<std::string> piecewise;
    for (auto it = fsm.transitions.rbegin(); it != fsm.transitions.rend(); ++it)
        for (const auto& r : generate_demos(fsm, store, [&](const Transition& t) { return t == *it; }))
            piecewise.insert(emit_record(r));
    EXPECT_EQ(all, piecewise);
}

TEST(Demogen, MissingConfigNamesState)
{
    const auto& fsm = test::fsm("hanoi");
    auto store = store_for("hanoi", 0);
    store.configs.erase(fsm.initial_state);
    try {
        (void)generate_demos(fsm, store);
        FAIL();
    } catch (const MissingConfig& e) {
        EXPECT_NE(std::string(e.what()).find(state_id(fsm.initial_state)), std::string::npos);
    }
}

TEST(Demogen, PlanMustBelongToMachine)
{
    const auto& hanoi = test::fsm("hanoi");
    const auto plan = plan_coverage(hanoi, hanoi.initial_state);
    EXPECT_THROW((void)collect_configs(test::manifest("river_crossing").spec, test::fsm("river_crossing"), plan, 0),
                 ReferenceError);
}

TEST(Demogen, SeedsVaryPosesNotSymbols)
{
    for (auto name : {"hanoi", "river_crossing"}) {
        const auto& fsm = test::fsm(name);
        const auto a = generate_demos(fsm, store_for(name, 10));
        const auto b = generate_demos(fsm, store_for(name, 11));
        ASSERT_EQ(a.size(), b.size());
        bool differs = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].transition, b[i].transition);
            EXPECT_EQ(a[i].language_goal, b[i].language_goal);
            differs = differs || !(a[i].pre == b[i].pre) || !(a[i].action.place == b[i].action.place);
        }
        EXPECT_TRUE(differs) << name;
    }
}

TEST(Demogen, GoalsRenderAndAreDistinct)
{
    const auto& hanoi = test::manifest("hanoi").spec;
    EXPECT_EQ(render_goal(*hanoi.find_operation("move_gray_to_stand_blue"), *hanoi.vocab),
              "move the gray ring to the blue stand");
    const auto& river = test::manifest("river_crossing").spec;
    EXPECT_EQ(render_goal(*river.find_operation("move_sheep_red_land_to_boat"), *river.vocab),
              "move the sheep from the red land to the boat");
    for (auto name : test::kBuiltins) {
        const auto& spec = test::manifest(name).spec;
        std::set<std::string> goals;
        for (const auto& op : spec.operations)
            goals.insert(render_goal(op, *spec.vocab));
        EXPECT_EQ(goals.size(), spec.operations.size()) << name;
    }
    auto op = *hanoi.find_operation("move_gray_to_stand_blue");
    op.label_template = "{color}";
    EXPECT_THROW((void)render_goal(op, *hanoi.vocab), TemplateError);
}

TEST(Demogen, RecordLineLayout)
{
    const auto records = generate_demos(test::fsm("hanoi"), store_for("hanoi", 0));
    const auto line = emit_record(records.front());
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto doc = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"transition", "language_goal", "pick", "place", "pre", "post", "seed"}));
    EXPECT_EQ(doc["pick"].size(), 4u);
    EXPECT_EQ(doc["pre"].size(), 3u);
    EXPECT_EQ(doc["transition"]["src"], state_id(records.front().transition.src));
}
