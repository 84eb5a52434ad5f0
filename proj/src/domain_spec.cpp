#include "smsl/domain_spec.hpp"

#include "smsl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace smsl {

double wrap_angle(double radians)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::fmod(radians + std::numbers::pi, two_pi);
    if (wrapped < 0)
        wrapped += two_pi;
    return wrapped - std::numbers::pi;
}

const OperationSpec* DomainSpec::find_operation(std::string_view id) const
{
    auto it = std::find_if(operations.begin(), operations.end(), [&](const OperationSpec& op) { return op.id == id; });
    return it == operations.end() ? nullptr : &*it;
}

bool DomainSpec::satisfies_constraints(const State& state) const
{
    return std::all_of(state_constraints.begin(), state_constraints.end(),
                       [&](const Expr& c) { return evaluate(c, state); });
}

namespace {

void validate_layout(const DomainSpec& spec)
{
    const auto& layout = spec.layout;
    const auto& vocab = *spec.vocab;
    if (layout.positions.size() != vocab.position_count())
        throw InvalidDomain("layout describes " + std::to_string(layout.positions.size()) + " positions, domain has "
                            + std::to_string(vocab.position_count()));
    if (layout.entities.size() != vocab.entity_count())
        throw InvalidDomain("layout describes " + std::to_string(layout.entities.size()) + " entities, domain has "
                            + std::to_string(vocab.entity_count()));
    const auto& ws = layout.workspace;
    if (!(ws.max_x > ws.min_x) || !(ws.max_y > ws.min_y))
        throw InvalidDomain("layout workspace is empty");
    if (!(layout.tolerance.xy > 0) || !(layout.tolerance.yaw > 0))
        throw InvalidDomain("layout tolerances must be positive");
    for (std::uint32_t p = 0; p < vocab.position_count(); ++p) {
        const auto& pos = layout.positions[p];
        const auto& name = vocab.position(PositionIndex{p}).name;
        if (!(pos.min_separation > 0))
            throw InvalidDomain("position '" + name + "' needs min_separation > 0");
        if (pos.stack_step < 0)
            throw InvalidDomain("position '" + name + "' has negative stack_step");
        if (vocab.is_ordered(PositionIndex{p}) && !pos.stacked())
            throw InvalidDomain("ordered position '" + name + "' needs stack_step > 0");
        if (!pos.stacked() && pos.slot_offsets.empty())
            throw InvalidDomain("position '" + name + "' has neither slots nor a stack_step");
        if (pos.anchor) {
            const auto& a = *pos.anchor;
            if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z) || !std::isfinite(a.yaw))
                throw InvalidDomain("position '" + name + "' has a non-finite anchor");
        }
    }
    for (const auto& e : layout.entities)
        if (!(e.footprint_radius > 0) || !(e.height > 0))
            throw InvalidDomain("entity geometry must be positive");
}

} // namespace

void validate_domain(const DomainSpec& spec)
{
    if (spec.name.empty())
        throw InvalidDomain("domain has no name");
    if (!spec.vocab)
        throw InvalidDomain("domain has no vocabulary");
    const auto& vocab = *spec.vocab;
    if (!(spec.initial_state.vocabulary() == vocab))
        throw InvalidDomain("initial state belongs to a different vocabulary");
    if (spec.operations.empty())
        throw InvalidDomain("domain declares no operations");

    for (const auto& c : spec.state_constraints)
        check_expr(c, vocab);

    std::unordered_set<std::string> ids;
    for (const auto& op : spec.operations) {
        if (op.id.empty())
            throw InvalidDomain("operation with empty id");
        if (!ids.insert(op.id).second)
            throw InvalidDomain("duplicate operation id '" + op.id + "'");
        if (op.entity.value() >= vocab.entity_count())
            throw InvalidDomain("operation '" + op.id + "' moves an undeclared entity");
        if (op.dest.value() >= vocab.position_count())
            throw InvalidDomain("operation '" + op.id + "' targets an undeclared position");
        if (op.src) {
            if (op.src->value() >= vocab.position_count())
                throw InvalidDomain("operation '" + op.id + "' starts from an undeclared position");
            if (*op.src == op.dest)
                throw InvalidDomain("operation '" + op.id + "' has src == dest");
        }
        check_expr(op.guard, vocab);
        try {
            (void)render_label(op.label_template, vocab, op.move());
        } catch (const TemplateError& e) {
            throw InvalidDomain("operation '" + op.id + "': " + e.what());
        }
    }

    if (!spec.satisfies_constraints(spec.initial_state))
        throw InvalidDomain("initial state " + to_string(spec.initial_state) + " violates the state constraints");
    if (spec.max_states_for_full_enumeration == 0)
        throw InvalidDomain("max_states_for_full_enumeration must be positive");

    validate_layout(spec);
}

bool operator==(const DomainSpec& a, const DomainSpec& b)
{
    return a.name == b.name && *a.vocab == *b.vocab && a.state_constraints == b.state_constraints
           && a.operations == b.operations && a.initial_state == b.initial_state && a.layout == b.layout
           && a.max_states_for_full_enumeration == b.max_states_for_full_enumeration;
}

} // namespace smsl
