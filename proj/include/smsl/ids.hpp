#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace smsl {

// Index into one of the vocabulary's declaration lists. The tag keeps
// entity and position indices from being mixed up.
template <class Tag>
class Index {
public:
    constexpr Index() = default;
    constexpr explicit Index(std::uint32_t value) : value_{value} {}

    [[nodiscard]] constexpr std::uint32_t value() const { return value_; }

    constexpr auto operator<=>(const Index&) const = default;

private:
    std::uint32_t value_ = 0;
};

using EntityIndex = Index<struct EntityTag>;
using PositionIndex = Index<struct PositionTag>;

// Dense canonical index of a state within its domain's candidate space.
struct StateCode {
    std::uint64_t value = 0;

    constexpr auto operator<=>(const StateCode&) const = default;
};

inline std::string state_id(StateCode code) { return "S" + std::to_string(code.value); }

} // namespace smsl

template <class Tag>
struct std::hash<smsl::Index<Tag>> {
    std::size_t operator()(smsl::Index<Tag> i) const noexcept { return std::hash<std::uint32_t>{}(i.value()); }
};

template <>
struct std::hash<smsl::StateCode> {
    std::size_t operator()(smsl::StateCode c) const noexcept { return std::hash<std::uint64_t>{}(c.value); }
};
