#pragma once

#include "smsl/ids.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace smsl {

struct PositionDecl {
    std::string name;
    // Stack order at this position is part of the state.
    bool ordered = false;
    // Human-readable text for goal templates; empty means derive from name.
    std::string label;

    bool operator==(const PositionDecl&) const = default;
};

struct EntityDecl {
    std::string name;
    std::string label;

    bool operator==(const EntityDecl&) const = default;
};

/// Declared positions and entities of a domain, in declaration order.
///
/// Declaration order is significant: unordered stacks are sorted by entity
/// index and state codes are ranked with entity 0 most significant.
class Vocabulary {
public:
    // Throws InvalidDomain on empty lists, empty or duplicate names.
    Vocabulary(std::vector<PositionDecl> positions, std::vector<EntityDecl> entities);

    [[nodiscard]] std::size_t position_count() const { return positions_.size(); }
    [[nodiscard]] std::size_t entity_count() const { return entities_.size(); }

    [[nodiscard]] const PositionDecl& position(PositionIndex p) const { return positions_.at(p.value()); }
    [[nodiscard]] const EntityDecl& entity(EntityIndex e) const { return entities_.at(e.value()); }
    [[nodiscard]] const std::vector<PositionDecl>& positions() const { return positions_; }
    [[nodiscard]] const std::vector<EntityDecl>& entities() const { return entities_; }

    [[nodiscard]] bool is_ordered(PositionIndex p) const { return position(p).ordered; }

    [[nodiscard]] std::optional<PositionIndex> find_position(std::string_view name) const;
    [[nodiscard]] std::optional<EntityIndex> find_entity(std::string_view name) const;

    // Lookup that throws MalformedExpression naming the missing identifier.
    [[nodiscard]] PositionIndex position_index(std::string_view name) const;
    [[nodiscard]] EntityIndex entity_index(std::string_view name) const;

    [[nodiscard]] std::string position_label(PositionIndex p) const;
    [[nodiscard]] std::string entity_label(EntityIndex e) const;

    // Same names and ordered flags; labels ignored.
    [[nodiscard]] bool same_structure(const Vocabulary& other) const;

    bool operator==(const Vocabulary& other) const
    {
        return positions_ == other.positions_ && entities_ == other.entities_;
    }

private:
    std::vector<PositionDecl> positions_;
    std::vector<EntityDecl> entities_;
    std::unordered_map<std::string, PositionIndex> position_lookup_;
    std::unordered_map<std::string, EntityIndex> entity_lookup_;
};

} // namespace smsl
