#pragma once

#include "smsl/constraint.hpp"
#include "smsl/state.hpp"

#include <optional>
#include <string>

namespace smsl {

// The geometric content of an operation: lift `entity` and put it on `dest`.
struct Move {
    EntityIndex entity;
    std::optional<PositionIndex> src;
    PositionIndex dest;

    bool operator==(const Move&) const = default;
};

/// A grounded operation. `label_template` may use {entity}, {src}, {dest}.
struct OperationSpec {
    std::string id;
    EntityIndex entity;
    std::optional<PositionIndex> src;
    PositionIndex dest;
    Expr guard;
    std::string label_template;

    [[nodiscard]] Move move() const { return {entity, src, dest}; }
};

bool operator==(const OperationSpec& a, const OperationSpec& b);

// Entity at src (when given), not already at dest, and on top of its stack
// when standing on an ordered position.
bool move_applicable(const Move& move, const State& state);

bool precondition_holds(const OperationSpec& op, const State& state);

// Throws InapplicableOperation when the precondition fails.
State apply_operation(const OperationSpec& op, const State& state);
State apply_move(const Move& move, const State& state);

// Substitutes {entity}, {src} and {dest} with vocabulary labels. {src}
// without a source position, or any other placeholder, is a TemplateError.
std::string render_label(const std::string& label_template, const Vocabulary& vocab, const Move& move);

} // namespace smsl
