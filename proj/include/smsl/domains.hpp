#pragma once

#include "smsl/domain_spec.hpp"
#include "smsl/fsm.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smsl::domains {

struct DomainManifest {
    DomainSpec spec;
    FsmCounts expected;
    // False when the transition count is a target the rules are not known
    // to reproduce.
    bool transitions_exact = true;
    std::vector<std::string> notes;
};

DomainManifest hanoi();
DomainManifest river_crossing();

enum class ChessMovement {
    rook_slide,      // along a row or column, never across an impassable block
    orthogonal_step, // one block up, down, left or right
    king_step,       // one block in any of eight directions
    free,            // any block
};

struct ChessRules {
    ChessMovement movement = ChessMovement::rook_slide;
    // Block names; pieces may not land on these.
    std::vector<std::string> impassable = {"block2", "block4", "block5"};
};

std::string_view to_string(ChessMovement movement);
std::optional<ChessMovement> chess_movement_from_string(std::string_view name);

DomainManifest chess(const ChessRules& rules = {});

// "hanoi", "river_crossing" (alias "river") or "chess".
std::optional<DomainManifest> builtin(std::string_view name);
std::vector<std::string> builtin_names();

} // namespace smsl::domains
