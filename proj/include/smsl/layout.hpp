#pragma once

#include <array>
#include <numbers>
#include <optional>
#include <vector>

namespace smsl {

// Planar pose plus stacking height. Meters and radians, yaw in [-pi, pi).
struct Pose {
    double x = 0;
    double y = 0;
    double z = 0;
    double yaw = 0;

    bool operator==(const Pose&) const = default;
};

double wrap_angle(double radians);

struct Workspace {
    double min_x = 0;
    double min_y = 0;
    double max_x = 0;
    double max_y = 0;

    bool operator==(const Workspace&) const = default;
};

using PlanarOffset = std::array<double, 2>;

/// Geometry of one position.
///
/// Positions with stack_step > 0 stack entities vertically above the anchor
/// (level i sits at z = anchor.z + i * stack_step); the rest place entities
/// at anchor + slot offset, one entity per slot.
struct PositionLayout {
    std::optional<Pose> anchor; // nullopt: drawn per seed
    std::vector<PlanarOffset> slot_offsets;
    double stack_step = 0;
    double min_separation = 0.1;

    [[nodiscard]] bool stacked() const { return stack_step > 0; }

    bool operator==(const PositionLayout&) const = default;
};

struct EntityGeometry {
    double footprint_radius = 0.02;
    double height = 0.02;

    bool operator==(const EntityGeometry&) const = default;
};

struct Tolerance {
    double xy = 0.01;
    double yaw = 15.0 * std::numbers::pi / 180.0;

    bool operator==(const Tolerance&) const = default;
};

// Indexed like the vocabulary's positions and entities.
struct LayoutSpec {
    Workspace workspace;
    std::vector<PositionLayout> positions;
    std::vector<EntityGeometry> entities;
    Tolerance tolerance;

    bool operator==(const LayoutSpec&) const = default;
};

} // namespace smsl
