#include "smsl/posesim.hpp"

#include "pose_json.hpp"
#include "smsl/errors.hpp"
#include "smsl/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>

namespace smsl {

namespace {

constexpr int kMaxRejections = 1000;

double planar_distance(double ax, double ay, double bx, double by) { return std::hypot(ax - bx, ay - by); }

// Radius around the anchor that entities placed here can occupy.
double extent(const LayoutSpec& layout, std::size_t position)
{
    double reach = 0;
    const auto& pl = layout.positions[position];
    if (!pl.stacked())
        for (const auto& s : pl.slot_offsets)
            reach = std::max(reach, std::hypot(s[0], s[1]));
    double footprint = 0;
    for (const auto& e : layout.entities)
        footprint = std::max(footprint, e.footprint_radius);
    return reach + footprint;
}

bool contained(const Workspace& ws, const Pose& anchor, double reach)
{
    return anchor.x - reach >= ws.min_x && anchor.x + reach <= ws.max_x && anchor.y - reach >= ws.min_y
           && anchor.y + reach <= ws.max_y;
}

double required_gap(const LayoutSpec& layout, std::size_t a, std::size_t b)
{
    return std::max({layout.positions[a].min_separation, layout.positions[b].min_separation,
                     extent(layout, a) + extent(layout, b)});
}

int stack_level(const LayoutInstance& layout, std::size_t position, const Pose& pose)
{
    const auto& pl = layout.spec.positions[position];
    return static_cast<int>(std::lround((pose.z - layout.anchors[position].z) / pl.stack_step));
}

std::size_t nearest_slot(const LayoutInstance& layout, std::size_t position, const Pose& pose)
{
    const auto& anchor = layout.anchors[position];
    const auto& slots = layout.spec.positions[position].slot_offsets;
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const double d = planar_distance(pose.x, pose.y, anchor.x + slots[s][0], anchor.y + slots[s][1]);
        if (d < best_d) {
            best_d = d;
            best = s;
        }
    }
    return best;
}

Pose slot_pose(const LayoutInstance& layout, std::size_t position, std::size_t slot)
{
    const auto& anchor = layout.anchors[position];
    const auto& offset = layout.spec.positions[position].slot_offsets[slot];
    return {anchor.x + offset[0], anchor.y + offset[1], anchor.z, anchor.yaw};
}

Pose level_pose(const LayoutInstance& layout, std::size_t position, int level)
{
    const auto& anchor = layout.anchors[position];
    return {anchor.x, anchor.y, anchor.z + level * layout.spec.positions[position].stack_step, anchor.yaw};
}

} // namespace

LayoutHandle randomize_layout(VocabularyPtr vocab, const LayoutSpec& layout, std::uint64_t seed)
{
    const auto& names = vocab->positions();
    const auto n = layout.positions.size();
    if (n != vocab->position_count())
        throw InfeasibleLayout("layout and vocabulary disagree on the number of positions");

    auto instance = std::make_shared<LayoutInstance>();
    instance->vocab = vocab;
    instance->spec = layout;
    instance->seed = seed;
    instance->anchors.resize(n);

    std::vector<std::size_t> placed;
    for (std::size_t p = 0; p < n; ++p) {
        if (!layout.positions[p].anchor)
            continue;
        const auto& anchor = *layout.positions[p].anchor;
        if (!contained(layout.workspace, anchor, extent(layout, p)))
            throw InfeasibleLayout("workspace containment: fixed anchor of '" + names[p].name + "' does not fit");
        for (auto q : placed) {
            const auto& other = instance->anchors[q];
            if (planar_distance(anchor.x, anchor.y, other.x, other.y) < required_gap(layout, p, q) - 1e-9)
                throw InfeasibleLayout("min_separation: fixed anchors of '" + names[p].name + "' and '"
                                       + names[q].name + "' are too close");
        }
        instance->anchors[p] = {anchor.x, anchor.y, anchor.z, wrap_angle(anchor.yaw)};
        placed.push_back(p);
    }

    Rng rng{seed};
    const auto& ws = layout.workspace;
    for (std::size_t p = 0; p < n; ++p) {
        if (layout.positions[p].anchor)
            continue;
        std::map<std::string, int> separation;
        std::string containment;
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxRejections && !accepted; ++attempt) {
            Pose draw;
            draw.x = rng.uniform(ws.min_x, ws.max_x);
            draw.y = rng.uniform(ws.min_y, ws.max_y);
            draw.yaw = rng.uniform(-std::numbers::pi, std::numbers::pi);
            if (!contained(ws, draw, extent(layout, p))) {
                containment = "workspace containment of '" + names[p].name + "'";
                continue;
            }
            auto clash = std::find_if(placed.begin(), placed.end(), [&](std::size_t q) {
                const auto& other = instance->anchors[q];
                return planar_distance(draw.x, draw.y, other.x, other.y) < required_gap(layout, p, q);
            });
            if (clash != placed.end()) {
                ++separation["min_separation between '" + names[p].name + "' and '" + names[*clash].name + "'"];
                continue;
            }
            instance->anchors[p] = draw;
            placed.push_back(p);
            accepted = true;
        }
        if (!accepted) {
            // Containment binds only when no draw fit the workspace at all.
            std::string binding = containment;
            if (!separation.empty())
                binding = std::max_element(separation.begin(), separation.end(), [](const auto& a, const auto& b) {
                              return a.second < b.second;
                          })->first;
            throw InfeasibleLayout(std::to_string(kMaxRejections) + " consecutive rejections placing '"
                                   + names[p].name + "'; binding constraint: " + binding);
        }
    }
    return instance;
}

LayoutHandle randomize_layout(const DomainSpec& spec, std::uint64_t seed)
{
    return randomize_layout(spec.vocab, spec.layout, seed);
}

EnvConfig instantiate_state(const LayoutHandle& layout, const State& state)
{
    const auto& vocab = *layout->vocab;
    EnvConfig env{std::vector<Pose>(vocab.entity_count()), layout, layout->seed};
    for (std::uint32_t p = 0; p < vocab.position_count(); ++p) {
        const auto stack = state.stack(PositionIndex{p});
        const auto& pl = layout->spec.positions[p];
        if (!pl.stacked() && stack.size() > pl.slot_offsets.size())
            throw SlotOverflow("position '" + vocab.position(PositionIndex{p}).name + "' holds "
                               + std::to_string(stack.size()) + " entities but has "
                               + std::to_string(pl.slot_offsets.size()) + " slots");
        for (std::size_t i = 0; i < stack.size(); ++i)
            env.poses[stack[i].value()] =
                pl.stacked() ? level_pose(*layout, p, static_cast<int>(i)) : slot_pose(*layout, p, i);
    }
    return env;
}

State abstract_state(const EnvConfig& env, const Tolerance& tolerance)
{
    const auto& layout = *env.layout;
    const auto& vocab = *layout.vocab;
    const auto positions = vocab.position_count();

    // (height or slot, entity) per position
    std::vector<std::vector<std::pair<double, EntityIndex>>> found(positions);
    for (std::uint32_t e = 0; e < vocab.entity_count(); ++e) {
        const auto& pose = env.poses.at(e);
        const auto& name = vocab.entity(EntityIndex{e}).name;
        if (!std::isfinite(pose.x) || !std::isfinite(pose.y) || !std::isfinite(pose.z) || !std::isfinite(pose.yaw))
            throw AmbiguousAbstraction(name, "non-finite pose");
        std::size_t best = 0;
        double best_d = INFINITY;
        for (std::size_t p = 0; p < positions; ++p) {
            const double d = planar_distance(pose.x, pose.y, layout.anchors[p].x, layout.anchors[p].y);
            if (d < best_d) {
                best_d = d;
                best = p;
            }
        }
        if (best_d > tolerance.xy)
            throw AmbiguousAbstraction(name, "no anchor within " + std::to_string(tolerance.xy) + " m");
        if (std::abs(wrap_angle(pose.yaw - layout.anchors[best].yaw)) > tolerance.yaw)
            throw AmbiguousAbstraction(name, "yaw outside tolerance at '" + vocab.position(PositionIndex{
                                                 static_cast<std::uint32_t>(best)}).name + "'");
        found[best].push_back({pose.z, EntityIndex{e}});
    }

    std::vector<Stack> stacks(positions);
    for (std::size_t p = 0; p < positions; ++p) {
        auto& here = found[p];
        const auto& pl = layout.spec.positions[p];
        const auto& pname = vocab.position(PositionIndex{static_cast<std::uint32_t>(p)}).name;
        std::vector<long> claims;
        for (const auto& [z, e] : here) {
            const auto& pose = env.poses[e.value()];
            claims.push_back(pl.stacked() ? stack_level(layout, p, pose)
                                          : static_cast<long>(nearest_slot(layout, p, pose)));
        }
        for (std::size_t i = 0; i < claims.size(); ++i)
            for (std::size_t j = i + 1; j < claims.size(); ++j)
                if (claims[i] == claims[j])
                    throw AbstractionCollision("'" + vocab.entity(here[i].second).name + "' and '"
                                               + vocab.entity(here[j].second).name + "' claim the same "
                                               + (pl.stacked() ? "level" : "slot") + " at '" + pname + "'");
        std::stable_sort(here.begin(), here.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [z, e] : here)
            stacks[p].push_back(e);
    }
    return State::from_stacks(layout.vocab, std::move(stacks));
}

State abstract_state(const EnvConfig& env) { return abstract_state(env, env.layout->spec.tolerance); }

namespace {

Execution place(const EnvConfig& env, const State& state, const Move& move)
{
    const auto& layout = *env.layout;
    const auto dest = move.dest.value();
    const auto& pl = layout.spec.positions[dest];
    const auto& vocab = *layout.vocab;

    Pose target;
    if (pl.stacked()) {
        int level = 0;
        for (auto other : state.stack(move.dest))
            level = std::max(level, stack_level(layout, dest, env.poses[other.value()]) + 1);
        target = level_pose(layout, dest, level);
    } else {
        std::vector<bool> used(pl.slot_offsets.size(), false);
        for (auto other : state.stack(move.dest))
            used[nearest_slot(layout, dest, env.poses[other.value()])] = true;
        auto free = std::find(used.begin(), used.end(), false);
        if (free == used.end())
            throw SlotOverflow("no free slot at '" + vocab.position(move.dest).name + "'");
        target = slot_pose(layout, dest, static_cast<std::size_t>(free - used.begin()));
    }

    Execution out{env, {env.poses[move.entity.value()], target}};
    out.env.poses[move.entity.value()] = target;
    return out;
}

} // namespace

Execution execute_move(const EnvConfig& env, const Move& move)
{
    const auto state = abstract_state(env);
    if (!move_applicable(move, state))
        throw InapplicableOperation("move of '" + state.vocabulary().entity(move.entity).name + "' to '"
                                    + state.vocabulary().position(move.dest).name + "' not applicable in "
                                    + to_string(state));
    return place(env, state, move);
}

Execution execute_operation(const EnvConfig& env, const OperationSpec& op)
{
    const auto state = abstract_state(env);
    if (!precondition_holds(op, state))
        throw InapplicableOperation("operation '" + op.id + "' not applicable in " + to_string(state));
    return place(env, state, op.move());
}

ObjectRegistry::ObjectRegistry(const Vocabulary& vocab)
{
    // Fixed bodies are spawned first, then rigid objects, as a simulator
    // would assign them.
    std::uint32_t next = 1;
    for (std::uint32_t p = 0; p < vocab.position_count(); ++p) {
        position_lookup_[next] = p;
        position_ids_.push_back(ObjectId{next++});
    }
    for (std::uint32_t e = 0; e < vocab.entity_count(); ++e) {
        entity_lookup_[next] = e;
        entity_ids_.push_back(ObjectId{next++});
    }
}

std::optional<EntityIndex> ObjectRegistry::entity_of(ObjectId id) const
{
    auto it = entity_lookup_.find(id.value);
    if (it == entity_lookup_.end())
        return std::nullopt;
    return EntityIndex{it->second};
}

std::optional<PositionIndex> ObjectRegistry::position_of(ObjectId id) const
{
    auto it = position_lookup_.find(id.value);
    if (it == position_lookup_.end())
        return std::nullopt;
    return PositionIndex{it->second};
}

Scene::Scene(EnvConfig env) : env_{std::move(env)}, registry_{*env_.layout->vocab} {}

Pose Scene::get_object_pose(ObjectId id) const
{
    if (auto e = registry_.entity_of(id))
        return env_.poses.at(e->value());
    if (auto p = registry_.position_of(id))
        return env_.layout->anchors.at(p->value());
    throw RangeError("unknown object id " + std::to_string(id.value));
}

ActionRecord Scene::execute(const Move& move)
{
    auto result = execute_move(env_, move);
    env_ = std::move(result.env);
    return result.action;
}

EnvConfig Scene::capture() const
{
    EnvConfig out{std::vector<Pose>(registry_.entity_count()), env_.layout, env_.seed};
    for (std::uint32_t e = 0; e < registry_.entity_count(); ++e)
        out.poses[e] = get_object_pose(registry_.entity_object(EntityIndex{e}));
    return out;
}

namespace detail {

double round_sig9(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    const double rounded = std::strtod(buf, nullptr);
    return rounded == 0.0 ? 0.0 : rounded;
}

ordered_json pose_json(const Pose& pose)
{
    return ordered_json::array({round_sig9(pose.x), round_sig9(pose.y), round_sig9(pose.z), round_sig9(pose.yaw)});
}

ordered_json env_json(const EnvConfig& env)
{
    const auto& vocab = *env.layout->vocab;
    ordered_json out = ordered_json::object();
    for (std::uint32_t e = 0; e < vocab.entity_count(); ++e)
        out[vocab.entity(EntityIndex{e}).name] = pose_json(env.poses[e]);
    return out;
}

} // namespace detail

std::string emit_layout(const LayoutInstance& layout)
{
    detail::ordered_json doc;
    doc["seed"] = layout.seed;
    detail::ordered_json anchors = detail::ordered_json::object();
    for (std::uint32_t p = 0; p < layout.anchors.size(); ++p)
        anchors[layout.vocab->position(PositionIndex{p}).name] = detail::pose_json(layout.anchors[p]);
    doc["anchors"] = anchors;
    return detail::dump_canonical(doc);
}

std::string emit_env_config(const EnvConfig& env)
{
    detail::ordered_json doc;
    doc["seed"] = env.seed;
    doc["poses"] = detail::env_json(env);
    return detail::dump_canonical(doc);
}

} // namespace smsl
