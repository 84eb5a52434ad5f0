#include "smsl/operation.hpp"

#include "smsl/errors.hpp"

namespace smsl {

bool operator==(const OperationSpec& a, const OperationSpec& b)
{
    return a.id == b.id && a.entity == b.entity && a.src == b.src && a.dest == b.dest && a.guard == b.guard
           && a.label_template == b.label_template;
}

bool move_applicable(const Move& move, const State& state)
{
    const auto& vocab = state.vocabulary();
    if (move.entity.value() >= vocab.entity_count() || move.dest.value() >= vocab.position_count())
        return false;
    const auto here = state.locus(move.entity);
    if (move.src && here != *move.src)
        return false;
    if (here == move.dest)
        return false;
    if (vocab.is_ordered(here) && !state.is_top(move.entity))
        return false;
    return true;
}

bool precondition_holds(const OperationSpec& op, const State& state)
{
    return move_applicable(op.move(), state) && evaluate(op.guard, state);
}

State apply_move(const Move& move, const State& state)
{
    if (!move_applicable(move, state))
        throw InapplicableOperation("cannot move entity index " + std::to_string(move.entity.value()) + " in state "
                                    + to_string(state));
    return state.moved(move.entity, move.dest);
}

State apply_operation(const OperationSpec& op, const State& state)
{
    if (!precondition_holds(op, state))
        throw InapplicableOperation("operation '" + op.id + "' is not applicable in state " + to_string(state));
    return state.moved(op.entity, op.dest);
}

std::string render_label(const std::string& label_template, const Vocabulary& vocab, const Move& move)
{
    std::string out;
    std::size_t i = 0;
    while (i < label_template.size()) {
        const char c = label_template[i];
        if (c == '}')
            throw TemplateError("unbalanced '}' in template \"" + label_template + "\"");
        if (c != '{') {
            out += c;
            ++i;
            continue;
        }
        const auto close = label_template.find('}', i);
        if (close == std::string::npos)
            throw TemplateError("unterminated placeholder in template \"" + label_template + "\"");
        const auto key = label_template.substr(i + 1, close - i - 1);
        if (key == "entity") {
            out += vocab.entity_label(move.entity);
        } else if (key == "dest") {
            out += vocab.position_label(move.dest);
        } else if (key == "src") {
            if (!move.src)
                throw TemplateError("template uses {src} but the operation has no source position");
            out += vocab.position_label(*move.src);
        } else {
            throw TemplateError("unknown placeholder {" + key + "}");
        }
        i = close + 1;
    }
    return out;
}

} // namespace smsl
