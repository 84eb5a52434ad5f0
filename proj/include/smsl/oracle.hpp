#pragma once

#include "smsl/domains.hpp"
#include "smsl/fsm.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace smsl::oracle {

// Brute-force reference models of the built-in puzzles, written from the
// puzzle rules alone: no expressions, guards, codec or synthesis code.
// States and transitions are compared as text keys such as
// "boat:[sheep]|green_land:[]|red_land:[grass,human,wolf]".

struct Reference {
    std::string domain;
    std::vector<std::string> positions;
    std::vector<bool> ordered; // stack order is part of the key
    std::string initial;
    std::set<std::string> states;
    std::set<std::string> transitions; // "src --op--> dst"
};

Reference hanoi();
Reference river_crossing();
Reference chess(const domains::ChessRules& rules = {});

// By built-in name; throws InvalidDomain for other names.
Reference reference(std::string_view name, const domains::ChessRules& rules = {});

// Re-expresses a synthesized model in the reference's key format.
Reference project(const FsmModel& fsm, const Reference& shape);

struct Diff {
    std::size_t total = 0;
    std::vector<std::string> discrepancies; // first `limit`

    [[nodiscard]] bool identical() const { return total == 0; }
};

Diff compare(const Reference& expected, const Reference& actual, std::size_t limit = 10);

} // namespace smsl::oracle
