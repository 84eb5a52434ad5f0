#pragma once

#include "smsl/fsm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smsl {

inline constexpr std::uint64_t kDefaultNodeBudget = 5'000'000;

struct PathStep {
    std::string op;
    StateCode state;

    bool operator==(const PathStep&) const = default;
};

struct CoveragePath {
    StateCode start;
    std::vector<PathStep> steps;

    // start followed by every step's state.
    [[nodiscard]] std::vector<StateCode> visited() const;

    bool operator==(const CoveragePath&) const = default;
};

enum class CoverageMode { single_path, multi_path };

std::string_view to_string(CoverageMode mode);

struct CoveragePlan {
    std::string task;
    CoverageMode mode = CoverageMode::multi_path;
    StateCode start;
    std::vector<CoveragePath> paths;
    std::vector<StateCode> covered;     // ascending
    std::vector<StateCode> unreachable; // ascending

    [[nodiscard]] std::size_t total_steps() const;

    bool operator==(const CoveragePlan&) const = default;
};

/// Depth-first search for a path from `start` visiting every state exactly
/// once, tracking visited states in a bitmask. Successors are tried by
/// destination code, then operation id. Gives up (nullopt) after expanding
/// `node_budget` nodes, or at once if some state is unreachable from start.
std::optional<CoveragePath> single_coverage_path(const FsmModel& fsm, StateCode start,
                                                 std::uint64_t node_budget = kDefaultNodeBudget,
                                                 std::uint64_t* nodes_expanded = nullptr);

/// Greedy cover by shortest paths from `start`: each round runs a BFS and
/// emits the tree path with the most uncovered states (ties: shorter, then
/// lexicographically smaller state sequence).
CoveragePlan multi_path_cover(const FsmModel& fsm, StateCode start);

// Single path when one exists within budget, else the multi-path cover.
CoveragePlan plan_coverage(const FsmModel& fsm, StateCode start, std::uint64_t node_budget = kDefaultNodeBudget);

bool path_valid(const FsmModel& fsm, const CoveragePath& path);

std::string emit_plan(const CoveragePlan& plan);
// Throws SyntaxError or SchemaError.
CoveragePlan parse_plan(std::string_view text);

// Empty when the plan belongs to `fsm`; otherwise the first problem found.
std::optional<std::string> plan_mismatch(const FsmModel& fsm, const CoveragePlan& plan);

} // namespace smsl
