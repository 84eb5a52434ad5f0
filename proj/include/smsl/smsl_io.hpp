#pragma once

#include "smsl/fsm.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace smsl {

inline constexpr std::string_view kSmslVersion = "1.0";

// Canonical SMSL text: fixed key order, states by code, operations by id,
// transitions by (src code, op id), 2-space indentation, trailing newline.
std::string emit_smsl(const FsmModel& fsm);

// Throws SyntaxError, SchemaError, ReferenceError or ConsistencyError.
FsmModel parse_smsl(std::string_view text);

enum class FindingKind { syntax, schema, reference, determinism, consistency, unreachable };

std::string_view to_string(FindingKind kind);

struct Finding {
    FindingKind kind;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;
    std::size_t states = 0;
    std::size_t operations = 0;
    std::size_t transitions = 0;

    [[nodiscard]] bool ok() const { return errors.empty(); }
    [[nodiscard]] std::size_t count(FindingKind kind) const;
};

// Never throws on malformed input. States unreachable from the initial
// state are warnings.
ValidationReport validate_smsl(std::string_view text);

std::string format_report(const ValidationReport& report);

} // namespace smsl
