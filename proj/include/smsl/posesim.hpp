#pragma once

#include "smsl/domain_spec.hpp"
#include "smsl/layout.hpp"
#include "smsl/operation.hpp"
#include "smsl/state.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace smsl {

/// A layout with every anchor resolved for one seed.
struct LayoutInstance {
    VocabularyPtr vocab;
    LayoutSpec spec;
    std::vector<Pose> anchors; // per position
    std::uint64_t seed = 0;
};

using LayoutHandle = std::shared_ptr<const LayoutInstance>;

/// Pose of every entity, tied to the layout it was produced in.
struct EnvConfig {
    std::vector<Pose> poses; // per entity
    LayoutHandle layout;
    std::uint64_t seed = 0;

    bool operator==(const EnvConfig& other) const { return poses == other.poses && seed == other.seed; }
};

struct ActionRecord {
    Pose pick;
    Pose place;
};

struct Execution {
    EnvConfig env;
    ActionRecord action;
};

// Draws "randomized" anchors from the seed, redrawing until each anchor fits
// the workspace and keeps clear of the others. Throws InfeasibleLayout after
// 1000 consecutive rejections, naming the constraint that rejected most.
LayoutHandle randomize_layout(const DomainSpec& spec, std::uint64_t seed);
LayoutHandle randomize_layout(VocabularyPtr vocab, const LayoutSpec& layout, std::uint64_t seed);

// Throws SlotOverflow when a slotted position holds more entities than slots.
EnvConfig instantiate_state(const LayoutHandle& layout, const State& state);

// Nearest anchor within tolerance; stacked positions order by height.
// Throws AmbiguousAbstraction or AbstractionCollision.
State abstract_state(const EnvConfig& env, const Tolerance& tolerance);
State abstract_state(const EnvConfig& env);

// Moves one entity; all other poses are copied unchanged. Throws
// InapplicableOperation when the abstracted state rejects the move.
Execution execute_operation(const EnvConfig& env, const OperationSpec& op);
Execution execute_move(const EnvConfig& env, const Move& move);

struct ObjectId {
    std::uint32_t value = 0;

    auto operator<=>(const ObjectId&) const = default;
};

/// Runtime ids for fixed bodies (positions) and rigid objects (entities).
class ObjectRegistry {
public:
    explicit ObjectRegistry(const Vocabulary& vocab);

    [[nodiscard]] ObjectId entity_object(EntityIndex e) const { return entity_ids_.at(e.value()); }
    [[nodiscard]] ObjectId position_object(PositionIndex p) const { return position_ids_.at(p.value()); }
    [[nodiscard]] std::optional<EntityIndex> entity_of(ObjectId id) const;
    [[nodiscard]] std::optional<PositionIndex> position_of(ObjectId id) const;
    [[nodiscard]] std::size_t entity_count() const { return entity_ids_.size(); }

private:
    std::vector<ObjectId> position_ids_;
    std::vector<ObjectId> entity_ids_;
    std::unordered_map<std::uint32_t, std::uint32_t> entity_lookup_;
    std::unordered_map<std::uint32_t, std::uint32_t> position_lookup_;
};

/// Live environment handed to task code instead of being respawned.
class Scene {
public:
    explicit Scene(EnvConfig env);

    [[nodiscard]] const ObjectRegistry& registry() const { return registry_; }
    [[nodiscard]] Pose get_object_pose(ObjectId id) const;
    [[nodiscard]] State state() const { return abstract_state(env_); }

    ActionRecord execute(const Move& move);

    // {entity -> get_object_pose(id_entity)}
    [[nodiscard]] EnvConfig capture() const;

private:
    EnvConfig env_;
    ObjectRegistry registry_;
};

// JSON with 9 significant digits; poses as [x, y, z, yaw].
std::string emit_layout(const LayoutInstance& layout);
std::string emit_env_config(const EnvConfig& env);

} // namespace smsl
