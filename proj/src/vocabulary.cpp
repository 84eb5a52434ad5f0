#include "smsl/vocabulary.hpp"

#include "smsl/errors.hpp"

#include <algorithm>

namespace smsl {

namespace {

std::string humanize(std::string name)
{
    std::replace(name.begin(), name.end(), '_', ' ');
    return name;
}

} // namespace

Vocabulary::Vocabulary(std::vector<PositionDecl> positions, std::vector<EntityDecl> entities)
    : positions_{std::move(positions)}, entities_{std::move(entities)}
{
    if (positions_.empty())
        throw InvalidDomain("domain declares no positions");
    if (entities_.empty())
        throw InvalidDomain("domain declares no entities");

    for (std::uint32_t i = 0; i < positions_.size(); ++i) {
        const auto& name = positions_[i].name;
        if (name.empty())
            throw InvalidDomain("position " + std::to_string(i) + " has an empty name");
        if (!position_lookup_.emplace(name, PositionIndex{i}).second)
            throw InvalidDomain("duplicate position '" + name + "'");
    }
    for (std::uint32_t i = 0; i < entities_.size(); ++i) {
        const auto& name = entities_[i].name;
        if (name.empty())
            throw InvalidDomain("entity " + std::to_string(i) + " has an empty name");
        if (!entity_lookup_.emplace(name, EntityIndex{i}).second)
            throw InvalidDomain("duplicate entity '" + name + "'");
    }
}

std::optional<PositionIndex> Vocabulary::find_position(std::string_view name) const
{
    auto it = position_lookup_.find(std::string{name});
    if (it == position_lookup_.end())
        return std::nullopt;
    return it->second;
}

std::optional<EntityIndex> Vocabulary::find_entity(std::string_view name) const
{
    auto it = entity_lookup_.find(std::string{name});
    if (it == entity_lookup_.end())
        return std::nullopt;
    return it->second;
}

PositionIndex Vocabulary::position_index(std::string_view name) const
{
    if (auto p = find_position(name))
        return *p;
    throw MalformedExpression("undeclared position '" + std::string{name} + "'");
}

EntityIndex Vocabulary::entity_index(std::string_view name) const
{
    if (auto e = find_entity(name))
        return *e;
    throw MalformedExpression("undeclared entity '" + std::string{name} + "'");
}

std::string Vocabulary::position_label(PositionIndex p) const
{
    const auto& decl = position(p);
    return decl.label.empty() ? humanize(decl.name) : decl.label;
}

std::string Vocabulary::entity_label(EntityIndex e) const
{
    const auto& decl = entity(e);
    return decl.label.empty() ? humanize(decl.name) : decl.label;
}

bool Vocabulary::same_structure(const Vocabulary& other) const
{
    auto same_position = [](const PositionDecl& a, const PositionDecl& b) {
        return a.name == b.name && a.ordered == b.ordered;
    };
    auto same_entity = [](const EntityDecl& a, const EntityDecl& b) { return a.name == b.name; };
    return std::equal(positions_.begin(), positions_.end(), other.positions_.begin(), other.positions_.end(),
                      same_position)
           && std::equal(entities_.begin(), entities_.end(), other.entities_.begin(), other.entities_.end(),
                         same_entity);
}

} // namespace smsl
