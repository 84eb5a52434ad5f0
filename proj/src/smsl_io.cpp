#include "smsl/smsl_io.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace smsl {

using detail::json;
using detail::ordered_json;

std::string_view to_string(FindingKind kind)
{
    switch (kind) {
    case FindingKind::syntax: return "syntax";
    case FindingKind::schema: return "schema";
    case FindingKind::reference: return "reference";
    case FindingKind::determinism: return "determinism";
    case FindingKind::consistency: return "consistency";
    case FindingKind::unreachable: return "unreachable";
    }
    return "?";
}

std::size_t ValidationReport::count(FindingKind kind) const
{
    auto match = [&](const Finding& f) { return f.kind == kind; };
    return static_cast<std::size_t>(std::count_if(errors.begin(), errors.end(), match)
                                    + std::count_if(warnings.begin(), warnings.end(), match));
}

namespace {

ordered_json state_record(const State& s, StateCode code)
{
    const auto& v = s.vocabulary();
    ordered_json locus = ordered_json::object();
    for (std::uint32_t e = 0; e < v.entity_count(); ++e)
        locus[v.entity(EntityIndex{e}).name] = v.position(s.locus(EntityIndex{e})).name;
    ordered_json stacks = ordered_json::object();
    for (std::uint32_t p = 0; p < v.position_count(); ++p) {
        auto list = ordered_json::array();
        for (auto e : s.stack(PositionIndex{p}))
            list.push_back(v.entity(e).name);
        stacks[v.position(PositionIndex{p}).name] = list;
    }
    return ordered_json{{"id", state_id(code)}, {"locus", locus}, {"stacks", stacks}};
}

// Shared by parse (strict: first error throws) and validate (collects).
class Reader {
public:
    Reader(bool strict, ValidationReport& report) : strict_{strict}, report_{report} {}

    void error(FindingKind kind, const std::string& where, const std::string& message)
    {
        if (strict_) {
            switch (kind) {
            case FindingKind::syntax: throw SyntaxError(message, 0);
            case FindingKind::schema: throw SchemaError(where, message);
            case FindingKind::reference: throw ReferenceError(where + ": " + message);
            case FindingKind::determinism:
            case FindingKind::consistency:
            case FindingKind::unreachable: throw ConsistencyError(where + ": " + message);
            }
        }
        report_.errors.push_back({kind, where, message});
    }

    void warning(FindingKind kind, const std::string& where, const std::string& message)
    {
        report_.warnings.push_back({kind, where, message});
    }

    // Returns false (lenient mode) when the document cannot be read further.
    bool read(const json& doc, FsmModel& out);

private:
    std::optional<std::string> string_field(const json& obj, const std::string& key, const std::string& where)
    {
        if (!obj.is_object()) {
            error(FindingKind::schema, where, "expected an object");
            return std::nullopt;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            error(FindingKind::schema, where + "." + key, "missing field");
            return std::nullopt;
        }
        if (!it->is_string()) {
            error(FindingKind::schema, where + "." + key, "expected a string");
            return std::nullopt;
        }
        return it->get<std::string>();
    }

    const json* array_field(const json& obj, const std::string& key)
    {
        auto it = obj.find(key);
        if (it == obj.end()) {
            error(FindingKind::schema, key, "missing field");
            return nullptr;
        }
        if (!it->is_array()) {
            error(FindingKind::schema, key, "expected a list");
            return nullptr;
        }
        return &*it;
    }

    std::optional<std::pair<StateCode, State>> read_state(const json& j, const std::string& where);

    bool strict_;
    ValidationReport& report_;
    VocabularyPtr vocab_;
    std::optional<StateCodec> codec_;
};

std::optional<std::pair<StateCode, State>> Reader::read_state(const json& j, const std::string& where)
{
    auto id = string_field(j, "id", where);
    if (!id)
        return std::nullopt;
    const auto& v = *vocab_;

    auto stacks_it = j.find("stacks");
    if (stacks_it == j.end() || !stacks_it->is_object()) {
        error(FindingKind::schema, where + ".stacks", "expected an object of position -> entity list");
        return std::nullopt;
    }
    std::vector<Stack> stacks(v.position_count());
    for (const auto& [pos, list] : stacks_it->items()) {
        auto p = v.find_position(pos);
        if (!p) {
            error(FindingKind::schema, where + ".stacks." + pos, "undeclared position");
            return std::nullopt;
        }
        if (!list.is_array()) {
            error(FindingKind::schema, where + ".stacks." + pos, "expected an entity list");
            return std::nullopt;
        }
        for (const auto& e : list) {
            auto ei = e.is_string() ? v.find_entity(e.get<std::string>()) : std::nullopt;
            if (!ei) {
                error(FindingKind::schema, where + ".stacks." + pos, "unknown entity " + e.dump());
                return std::nullopt;
            }
            stacks[p->value()].push_back(*ei);
        }
    }
    if (canonicalize_stacks(v, stacks) != stacks) {
        error(FindingKind::schema, where + ".stacks", "unordered stack is not in canonical order");
        return std::nullopt;
    }
    std::optional<State> state;
    try {
        state = State::from_stacks(vocab_, std::move(stacks));
    } catch (const InvalidDomain& e) {
        error(FindingKind::schema, where + ".stacks", e.what());
        return std::nullopt;
    }

    auto locus_it = j.find("locus");
    if (locus_it == j.end() || !locus_it->is_object() || locus_it->size() != v.entity_count()) {
        error(FindingKind::schema, where + ".locus", "expected one position per entity");
        return std::nullopt;
    }
    for (const auto& [ent, pos] : locus_it->items()) {
        auto ei = v.find_entity(ent);
        if (!ei || !pos.is_string() || v.find_position(pos.get<std::string>()) != state->locus(*ei)) {
            error(FindingKind::schema, where + ".locus." + ent, "inconsistent with stacks");
            return std::nullopt;
        }
    }

    const auto code = codec_->encode(*state);
    if (*id != state_id(code)) {
        error(FindingKind::schema, where + ".id", "'" + *id + "' should be '" + state_id(code) + "'");
        return std::nullopt;
    }
    return std::pair{code, std::move(*state)};
}

bool Reader::read(const json& doc, FsmModel& out)
{
    if (!doc.is_object()) {
        error(FindingKind::schema, "(root)", "expected an object");
        return false;
    }
    auto version = string_field(doc, "smsl_version", "(root)");
    if (!version)
        return false;
    if (*version != kSmslVersion) {
        error(FindingKind::schema, "smsl_version", "unsupported version '" + *version + "'");
        return false;
    }
    auto task = string_field(doc, "task", "(root)");
    if (!task)
        return false;
    out.spec_name = *task;

    const json* jpos = array_field(doc, "positions");
    const json* jent = array_field(doc, "entities");
    if (!jpos || !jent)
        return false;
    std::vector<PositionDecl> positions;
    for (std::size_t i = 0; i < jpos->size(); ++i) {
        const auto where = "positions[" + std::to_string(i) + "]";
        const auto& j = (*jpos)[i];
        auto name = string_field(j, "name", where);
        if (!name)
            return false;
        auto ordered = j.find("ordered");
        if (ordered == j.end() || !ordered->is_boolean()) {
            error(FindingKind::schema, where + ".ordered", "expected a boolean");
            return false;
        }
        positions.push_back({*name, ordered->get<bool>(), {}});
    }
    std::vector<EntityDecl> entities;
    for (std::size_t i = 0; i < jent->size(); ++i) {
        if (!(*jent)[i].is_string()) {
            error(FindingKind::schema, "entities[" + std::to_string(i) + "]", "expected a name");
            return false;
        }
        entities.push_back({(*jent)[i].get<std::string>(), {}});
    }
    try {
        vocab_ = std::make_shared<const Vocabulary>(std::move(positions), std::move(entities));
    } catch (const InvalidDomain& e) {
        error(FindingKind::schema, "positions/entities", e.what());
        return false;
    }
    codec_.emplace(vocab_);
    if (codec_->saturated()) {
        error(FindingKind::schema, "entities", "state space too large to index");
        return false;
    }
    out.vocab = vocab_;

    // States.
    std::map<StateCode, State> states;
    if (const json* jstates = array_field(doc, "states")) {
        for (std::size_t i = 0; i < jstates->size(); ++i) {
            const auto where = "states[" + std::to_string(i) + "]";
            auto st = read_state((*jstates)[i], where);
            if (!st)
                continue;
            if (!states.emplace(st->first, std::move(st->second)).second)
                error(FindingKind::schema, where + ".id", "duplicate state " + state_id(st->first));
        }
    } else {
        return false;
    }

    // Initial state.
    auto init_it = doc.find("initial_state");
    if (init_it == doc.end()) {
        error(FindingKind::schema, "initial_state", "missing field");
    } else if (auto st = read_state(*init_it, "initial_state")) {
        out.initial_state = st->first;
        if (!states.contains(st->first))
            error(FindingKind::reference, "initial_state", state_id(st->first) + " is not among the states");
    }

    // Operations.
    std::map<std::string, OperationRecord> ops;
    if (const json* jops = array_field(doc, "operations")) {
        for (std::size_t i = 0; i < jops->size(); ++i) {
            const auto where = "operations[" + std::to_string(i) + "]";
            const auto& j = (*jops)[i];
            auto id = string_field(j, "id", where);
            auto entity = string_field(j, "entity", where);
            auto dest = string_field(j, "dest", where);
            auto label = string_field(j, "label", where);
            if (!id || !entity || !dest || !label)
                continue;
            auto ei = vocab_->find_entity(*entity);
            auto di = vocab_->find_position(*dest);
            if (!ei || !di) {
                error(FindingKind::reference, where, "unknown entity or destination");
                continue;
            }
            Move move{*ei, std::nullopt, *di};
            if (j.contains("src")) {
                auto src = string_field(j, "src", where);
                if (!src)
                    continue;
                auto si = vocab_->find_position(*src);
                if (!si) {
                    error(FindingKind::reference, where + ".src", "unknown position '" + *src + "'");
                    continue;
                }
                move.src = *si;
            }
            if (!ops.emplace(*id, OperationRecord{*id, move, *label}).second)
                error(FindingKind::schema, where + ".id", "duplicate operation id '" + *id + "'");
        }
    } else {
        return false;
    }

    // Transitions.
    std::vector<Transition> transitions;
    if (const json* jtr = array_field(doc, "transitions")) {
        report_.transitions = jtr->size();
        std::set<std::pair<StateCode, std::string>> seen;
        for (std::size_t i = 0; i < jtr->size(); ++i) {
            const auto where = "transitions[" + std::to_string(i) + "]";
            const auto& j = (*jtr)[i];
            auto src = string_field(j, "src", where);
            auto op = string_field(j, "op", where);
            auto dst = string_field(j, "dst", where);
            if (!src || !op || !dst)
                continue;
            auto lookup = [&](const std::string& id) -> std::optional<StateCode> {
                if (id.size() < 2 || id[0] != 'S' || id.find_first_not_of("0123456789", 1) != std::string::npos)
                    return std::nullopt;
                StateCode code{std::stoull(id.substr(1))};
                if (!states.contains(code))
                    return std::nullopt;
                return code;
            };
            auto s = lookup(*src);
            auto d = lookup(*dst);
            auto o = ops.find(*op);
            if (!s || !d || o == ops.end()) {
                std::string missing = !s ? "source " + *src : !d ? "destination " + *dst : "operation " + *op;
                error(FindingKind::reference, where, "unknown " + missing);
                continue;
            }
            if (!seen.emplace(*s, *op).second) {
                error(FindingKind::determinism, where, "second transition for (" + *src + ", " + *op + ")");
                continue;
            }
            const auto& from = states.at(*s);
            const auto& move = o->second.move;
            if (!move_applicable(move, from) || !(apply_move(move, from) == states.at(*d))) {
                error(FindingKind::consistency, where, *op + " does not lead from " + *src + " to " + *dst);
                continue;
            }
            transitions.push_back({*s, *op, *d});
        }
    } else {
        return false;
    }

    for (auto& [code, state] : states) {
        out.state_codes.push_back(code);
        out.states.push_back(std::move(state));
    }
    for (auto& [id, op] : ops)
        out.operations.push_back(std::move(op));
    std::sort(transitions.begin(), transitions.end(),
              [](const Transition& a, const Transition& b) { return std::tie(a.src, a.op) < std::tie(b.src, b.op); });
    out.transitions = std::move(transitions);
    out.counts = {codec_->candidate_count(), out.states.size(), out.operations.size(), out.transitions.size()};
    report_.states = out.states.size();
    report_.operations = out.operations.size();
    return true;
}

} // namespace

std::string emit_smsl(const FsmModel& fsm)
{
    const auto& v = *fsm.vocab;
    ordered_json doc;
    doc["smsl_version"] = std::string{kSmslVersion};
    doc["task"] = fsm.spec_name;

    auto positions = ordered_json::array();
    for (const auto& p : v.positions())
        positions.push_back({{"name", p.name}, {"ordered", p.ordered}});
    doc["positions"] = positions;
    auto entities = ordered_json::array();
    for (const auto& e : v.entities())
        entities.push_back(e.name);
    doc["entities"] = entities;

    doc["initial_state"] = state_record(fsm.state(fsm.initial_state), fsm.initial_state);

    std::vector<const OperationRecord*> ops;
    for (const auto& op : fsm.operations)
        ops.push_back(&op);
    std::sort(ops.begin(), ops.end(), [](auto* a, auto* b) { return a->id < b->id; });
    auto jops = ordered_json::array();
    for (const auto* op : ops) {
        ordered_json entry;
        entry["id"] = op->id;
        entry["entity"] = v.entity(op->move.entity).name;
        if (op->move.src)
            entry["src"] = v.position(*op->move.src).name;
        entry["dest"] = v.position(op->move.dest).name;
        entry["label"] = op->label;
        jops.push_back(entry);
    }
    doc["operations"] = jops;

    std::vector<std::size_t> order(fsm.states.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return fsm.state_codes[a] < fsm.state_codes[b]; });
    auto jstates = ordered_json::array();
    for (auto i : order)
        jstates.push_back(state_record(fsm.states[i], fsm.state_codes[i]));
    doc["states"] = jstates;

    std::vector<const Transition*> trans;
    for (const auto& t : fsm.transitions)
        trans.push_back(&t);
    std::sort(trans.begin(), trans.end(),
              [](auto* a, auto* b) { return std::tie(a->src, a->op) < std::tie(b->src, b->op); });
    auto jtr = ordered_json::array();
    for (const auto* t : trans)
        jtr.push_back({{"src", state_id(t->src)}, {"op", t->op}, {"dst", state_id(t->dst)}});
    doc["transitions"] = jtr;

    return detail::dump_canonical(doc);
}

FsmModel parse_smsl(std::string_view text)
{
    const auto doc = detail::parse_json_text(text);
    ValidationReport report;
    Reader reader{true, report};
    FsmModel fsm;
    reader.read(doc, fsm);
    check_fsm(fsm);
    return fsm;
}

ValidationReport validate_smsl(std::string_view text)
{
    ValidationReport report;
    json doc;
    try {
        doc = detail::parse_json_text(text);
    } catch (const SyntaxError& e) {
        report.errors.push_back({FindingKind::syntax, "byte " + std::to_string(e.position()), e.what()});
        return report;
    }
    Reader reader{false, report};
    FsmModel fsm;
    try {
        if (!reader.read(doc, fsm))
            return report;
    } catch (const std::exception& e) {
        report.errors.push_back({FindingKind::schema, "(document)", e.what()});
        return report;
    }
    if (fsm.state_index(fsm.initial_state)) {
        const auto reachable = reachable_states(fsm, fsm.initial_state);
        for (auto code : fsm.state_codes)
            if (!std::binary_search(reachable.begin(), reachable.end(), code))
                reader.warning(FindingKind::unreachable, state_id(code), "not reachable from the initial state");
    }
    return report;
}

std::string format_report(const ValidationReport& report)
{
    std::string out;
    out += "states " + std::to_string(report.states) + ", operations " + std::to_string(report.operations)
           + ", transitions " + std::to_string(report.transitions) + "\n";
    out += std::to_string(report.errors.size()) + " error(s), " + std::to_string(report.warnings.size())
           + " warning(s)\n";
    for (const auto& f : report.errors)
        out += "error [" + std::string{to_string(f.kind)} + "] " + f.where + ": " + f.message + "\n";
    for (const auto& f : report.warnings)
        out += "warning [" + std::string{to_string(f.kind)} + "] " + f.where + ": " + f.message + "\n";
    return out;
}

} // namespace smsl
