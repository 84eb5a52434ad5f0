#include "smsl/domain_json.hpp"

#include "json_util.hpp"

#include <cmath>

namespace smsl {

using detail::json;
using detail::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ordered_json expr_to_json(const Expr& e, const Vocabulary& v)
{
    auto ename = [&](EntityIndex i) { return v.entity(i).name; };
    auto pname = [&](PositionIndex i) { return v.position(i).name; };
    return std::visit(
        overloaded{
            [](const expr::Always&) { return ordered_json(true); },
            [&](const expr::At& n) { return ordered_json{{"at", {ename(n.entity), pname(n.position)}}}; },
            [&](const expr::Colocated& n) {
                return ordered_json{{"colocated", {ename(n.first), ename(n.second)}}};
            },
            [&](const expr::TopOfStack& n) { return ordered_json{{"top_of_stack", ename(n.entity)}}; },
            [&](const expr::CountAt& n) {
                return ordered_json{
                    {"count_at", {pname(n.position), std::string{to_symbol(n.cmp)}, n.value}}};
            },
            [&](const expr::CountAtAmong& n) {
                auto among = ordered_json::array();
                for (auto i : n.among)
                    among.push_back(ename(i));
                return ordered_json{
                    {"count_at_among", {pname(n.position), among, std::string{to_symbol(n.cmp)}, n.value}}};
            },
            [&](const expr::Not& n) { return ordered_json{{"not", expr_to_json(n.operand, v)}}; },
            [&](const expr::And& n) {
                auto terms = ordered_json::array();
                for (const auto& t : n.terms)
                    terms.push_back(expr_to_json(t, v));
                return ordered_json{{"and", terms}};
            },
            [&](const expr::Or& n) {
                auto terms = ordered_json::array();
                for (const auto& t : n.terms)
                    terms.push_back(expr_to_json(t, v));
                return ordered_json{{"or", terms}};
            },
            [&](const expr::Implies& n) {
                return ordered_json{{"implies", {expr_to_json(n.premise, v), expr_to_json(n.conclusion, v)}}};
            },
        },
        e.node().value);
}

const json& args_of(const json& j, std::size_t arity, const std::string& tag, const std::string& where)
{
    const auto& a = j.at(tag);
    if (!a.is_array() || a.size() != arity)
        throw MalformedExpression(where + ": '" + tag + "' takes " + std::to_string(arity) + " arguments");
    return a;
}

std::string name_arg(const json& a, const std::string& where)
{
    if (!a.is_string())
        throw MalformedExpression(where + ": expected a name");
    return a.get<std::string>();
}

long int_arg(const json& a, const std::string& where)
{
    if (!a.is_number_integer())
        throw MalformedExpression(where + ": expected an integer");
    return a.get<long>();
}

Expr expr_from_json(const json& j, const Vocabulary& v, const std::string& where)
{
    if (j.is_boolean())
        return j.get<bool>() ? expr::always() : expr::never();
    if (!j.is_object() || j.size() != 1)
        throw MalformedExpression(where + ": expression must be true, false or a single-key object");
    const auto tag = j.begin().key();
    auto entity = [&](const json& a) { return v.entity_index(name_arg(a, where)); };
    auto position = [&](const json& a) { return v.position_index(name_arg(a, where)); };
    auto list = [&]() {
        const auto& a = j.at(tag);
        if (!a.is_array())
            throw MalformedExpression(where + ": '" + tag + "' takes a list");
        std::vector<Expr> terms;
        for (std::size_t i = 0; i < a.size(); ++i)
            terms.push_back(expr_from_json(a[i], v, where + "." + tag + "[" + std::to_string(i) + "]"));
        return terms;
    };

    if (tag == "true")
        return expr::always();
    if (tag == "at") {
        const auto& a = args_of(j, 2, tag, where);
        return expr::at(entity(a[0]), position(a[1]));
    }
    if (tag == "colocated") {
        const auto& a = args_of(j, 2, tag, where);
        return expr::colocated(entity(a[0]), entity(a[1]));
    }
    if (tag == "top_of_stack")
        return expr::top_of_stack(entity(j.at(tag)));
    if (tag == "count_at") {
        const auto& a = args_of(j, 3, tag, where);
        return expr::count_at(position(a[0]), comparator_from_symbol(name_arg(a[1], where)), int_arg(a[2], where));
    }
    if (tag == "count_at_among") {
        const auto& a = args_of(j, 4, tag, where);
        if (!a[1].is_array())
            throw MalformedExpression(where + ": count_at_among needs an entity list");
        std::vector<EntityIndex> among;
        for (const auto& e : a[1])
            among.push_back(entity(e));
        return expr::count_at_among(position(a[0]), std::move(among), comparator_from_symbol(name_arg(a[2], where)),
                                    int_arg(a[3], where));
    }
    if (tag == "not")
        return expr::negate(expr_from_json(j.at(tag), v, where + ".not"));
    if (tag == "and")
        return expr::all_of(list());
    if (tag == "or")
        return expr::any_of(list());
    if (tag == "implies") {
        const auto& a = args_of(j, 2, tag, where);
        return expr::implies(expr_from_json(a[0], v, where + ".implies[0]"),
                             expr_from_json(a[1], v, where + ".implies[1]"));
    }
    throw MalformedExpression(where + ": unknown expression tag '" + tag + "'");
}

ordered_json pose_to_json(const Pose& p) { return ordered_json::array({p.x, p.y, p.z, p.yaw}); }

Pose pose_from_json(const json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 4)
        throw SchemaError(where, "pose must be [x, y, z, yaw]");
    return {detail::as_number(j[0], where), detail::as_number(j[1], where), detail::as_number(j[2], where),
            detail::as_number(j[3], where)};
}

ordered_json stacks_to_json(const State& s)
{
    const auto& v = s.vocabulary();
    ordered_json out = ordered_json::object();
    for (std::uint32_t p = 0; p < v.position_count(); ++p) {
        auto names = ordered_json::array();
        for (auto e : s.stack(PositionIndex{p}))
            names.push_back(v.entity(e).name);
        out[v.position(PositionIndex{p}).name] = names;
    }
    return out;
}

State stacks_from_json(const json& j, const VocabularyPtr& v, const std::string& where)
{
    if (!j.is_object())
        throw SchemaError(where, "expected an object of position -> entity list");
    std::vector<Stack> stacks(v->position_count());
    for (const auto& [pos, list] : j.items()) {
        auto p = v->find_position(pos);
        if (!p)
            throw SchemaError(where + "." + pos, "undeclared position");
        if (!list.is_array())
            throw SchemaError(where + "." + pos, "expected an entity list");
        for (const auto& e : list) {
            if (!e.is_string())
                throw SchemaError(where + "." + pos, "expected entity names");
            auto ei = v->find_entity(e.get<std::string>());
            if (!ei)
                throw SchemaError(where + "." + pos, "undeclared entity '" + e.get<std::string>() + "'");
            stacks[p->value()].push_back(*ei);
        }
    }
    try {
        return State::from_stacks(v, std::move(stacks));
    } catch (const InvalidDomain& e) {
        throw SchemaError(where, e.what());
    }
}

} // namespace

std::string emit_domain(const DomainSpec& spec)
{
    const auto& v = *spec.vocab;
    ordered_json doc;
    doc["name"] = spec.name;

    auto positions = ordered_json::array();
    for (const auto& p : v.positions()) {
        ordered_json entry{{"name", p.name}, {"ordered", p.ordered}};
        if (!p.label.empty())
            entry["label"] = p.label;
        positions.push_back(entry);
    }
    doc["positions"] = positions;

    auto entities = ordered_json::array();
    for (const auto& e : v.entities()) {
        ordered_json entry{{"name", e.name}};
        if (!e.label.empty())
            entry["label"] = e.label;
        entities.push_back(entry);
    }
    doc["entities"] = entities;

    auto constraints = ordered_json::array();
    for (const auto& c : spec.state_constraints)
        constraints.push_back(expr_to_json(c, v));
    doc["state_constraints"] = constraints;

    auto ops = ordered_json::array();
    for (const auto& op : spec.operations) {
        ordered_json entry;
        entry["id"] = op.id;
        entry["entity"] = v.entity(op.entity).name;
        if (op.src)
            entry["src"] = v.position(*op.src).name;
        entry["dest"] = v.position(op.dest).name;
        entry["guard"] = expr_to_json(op.guard, v);
        entry["label"] = op.label_template;
        ops.push_back(entry);
    }
    doc["operations"] = ops;
    doc["initial_state"] = stacks_to_json(spec.initial_state);

    const auto& l = spec.layout;
    ordered_json layout;
    layout["workspace"] = {{"min", {l.workspace.min_x, l.workspace.min_y}},
                           {"max", {l.workspace.max_x, l.workspace.max_y}}};
    ordered_json lpos = ordered_json::object();
    for (std::uint32_t p = 0; p < v.position_count(); ++p) {
        const auto& pl = l.positions[p];
        ordered_json entry;
        entry["anchor"] = pl.anchor ? pose_to_json(*pl.anchor) : ordered_json("randomized");
        auto slots = ordered_json::array();
        for (const auto& s : pl.slot_offsets)
            slots.push_back({s[0], s[1]});
        entry["slot_offsets"] = slots;
        entry["stack_step"] = pl.stack_step;
        entry["min_separation"] = pl.min_separation;
        lpos[v.position(PositionIndex{p}).name] = entry;
    }
    layout["positions"] = lpos;
    ordered_json lent = ordered_json::object();
    for (std::uint32_t e = 0; e < v.entity_count(); ++e)
        lent[v.entity(EntityIndex{e}).name] = {{"footprint_radius", l.entities[e].footprint_radius},
                                              {"height", l.entities[e].height}};
    layout["entities"] = lent;
    layout["tolerance"] = {{"xy", l.tolerance.xy}, {"yaw", l.tolerance.yaw}};
    doc["layout"] = layout;
    doc["max_states_for_full_enumeration"] = spec.max_states_for_full_enumeration;
    return detail::dump_canonical(doc);
}

DomainSpec parse_domain(std::string_view text)
{
    using detail::require;
    using detail::require_string;
    const auto doc = detail::parse_json_text(text);
    if (!doc.is_object())
        throw SchemaError("(root)", "expected an object");

    auto name = require_string(doc, "name", "");

    const auto& jpos = require(doc, "positions", "");
    if (!jpos.is_array() || jpos.empty())
        throw SchemaError("positions", "expected a non-empty list");
    std::vector<PositionDecl> positions;
    for (std::size_t i = 0; i < jpos.size(); ++i) {
        const auto where = "positions[" + std::to_string(i) + "]";
        PositionDecl decl;
        decl.name = require_string(jpos[i], "name", where);
        if (auto it = jpos[i].find("ordered"); it != jpos[i].end()) {
            if (!it->is_boolean())
                throw SchemaError(where + ".ordered", "expected a boolean");
            decl.ordered = it->get<bool>();
        }
        if (jpos[i].contains("label"))
            decl.label = require_string(jpos[i], "label", where);
        positions.push_back(std::move(decl));
    }

    const auto& jent = require(doc, "entities", "");
    if (!jent.is_array() || jent.empty())
        throw SchemaError("entities", "expected a non-empty list");
    std::vector<EntityDecl> entities;
    for (std::size_t i = 0; i < jent.size(); ++i) {
        const auto where = "entities[" + std::to_string(i) + "]";
        EntityDecl decl;
        if (jent[i].is_string()) {
            decl.name = jent[i].get<std::string>();
        } else {
            decl.name = require_string(jent[i], "name", where);
            if (jent[i].contains("label"))
                decl.label = require_string(jent[i], "label", where);
        }
        entities.push_back(std::move(decl));
    }

    auto vocab = std::make_shared<const Vocabulary>(std::move(positions), std::move(entities));

    std::vector<Expr> constraints;
    if (doc.contains("state_constraints")) {
        const auto& jc = doc.at("state_constraints");
        if (!jc.is_array())
            throw SchemaError("state_constraints", "expected a list");
        for (std::size_t i = 0; i < jc.size(); ++i)
            constraints.push_back(expr_from_json(jc[i], *vocab, "state_constraints[" + std::to_string(i) + "]"));
    }

    const auto& jops = require(doc, "operations", "");
    if (!jops.is_array() || jops.empty())
        throw SchemaError("operations", "expected a non-empty list");
    std::vector<OperationSpec> ops;
    for (std::size_t i = 0; i < jops.size(); ++i) {
        const auto where = "operations[" + std::to_string(i) + "]";
        const auto& j = jops[i];
        OperationSpec op;
        op.id = require_string(j, "id", where);
        op.entity = vocab->entity_index(require_string(j, "entity", where));
        if (j.contains("src") && !j.at("src").is_null())
            op.src = vocab->position_index(require_string(j, "src", where));
        op.dest = vocab->position_index(require_string(j, "dest", where));
        if (j.contains("guard"))
            op.guard = expr_from_json(j.at("guard"), *vocab, where + ".guard");
        op.label_template = j.contains("label") ? require_string(j, "label", where) : std::string{"{entity} to {dest}"};
        ops.push_back(std::move(op));
    }

    auto initial = stacks_from_json(require(doc, "initial_state", ""), vocab, "initial_state");

    LayoutSpec layout;
    const auto& jl = require(doc, "layout", "");
    const auto& ws = require(jl, "workspace", "layout");
    const auto& wmin = require(ws, "min", "layout.workspace");
    const auto& wmax = require(ws, "max", "layout.workspace");
    if (!wmin.is_array() || wmin.size() != 2 || !wmax.is_array() || wmax.size() != 2)
        throw SchemaError("layout.workspace", "min and max must be [x, y]");
    layout.workspace = {detail::as_number(wmin[0], "layout.workspace.min"),
                        detail::as_number(wmin[1], "layout.workspace.min"),
                        detail::as_number(wmax[0], "layout.workspace.max"),
                        detail::as_number(wmax[1], "layout.workspace.max")};

    const auto& jlp = require(jl, "positions", "layout");
    layout.positions.resize(vocab->position_count());
    for (std::uint32_t p = 0; p < vocab->position_count(); ++p) {
        const auto& pname = vocab->position(PositionIndex{p}).name;
        const auto where = "layout.positions." + pname;
        const auto& j = require(jlp, pname, "layout.positions");
        auto& pl = layout.positions[p];
        const auto& anchor = require(j, "anchor", where);
        if (anchor.is_string()) {
            if (anchor.get<std::string>() != "randomized")
                throw SchemaError(where + ".anchor", "expected a pose or \"randomized\"");
        } else {
            pl.anchor = pose_from_json(anchor, where + ".anchor");
        }
        if (j.contains("slot_offsets")) {
            for (const auto& s : j.at("slot_offsets")) {
                if (!s.is_array() || s.size() != 2)
                    throw SchemaError(where + ".slot_offsets", "offsets must be [dx, dy]");
                pl.slot_offsets.push_back({detail::as_number(s[0], where), detail::as_number(s[1], where)});
            }
        }
        if (j.contains("stack_step"))
            pl.stack_step = detail::as_number(j.at("stack_step"), where + ".stack_step");
        if (j.contains("min_separation"))
            pl.min_separation = detail::as_number(j.at("min_separation"), where + ".min_separation");
    }
    const auto& jle = require(jl, "entities", "layout");
    layout.entities.resize(vocab->entity_count());
    for (std::uint32_t e = 0; e < vocab->entity_count(); ++e) {
        const auto& ename = vocab->entity(EntityIndex{e}).name;
        const auto where = "layout.entities." + ename;
        const auto& j = require(jle, ename, "layout.entities");
        layout.entities[e] = {detail::as_number(require(j, "footprint_radius", where), where),
                              detail::as_number(require(j, "height", where), where)};
    }
    if (jl.contains("tolerance")) {
        const auto& tol = jl.at("tolerance");
        layout.tolerance = {detail::as_number(require(tol, "xy", "layout.tolerance"), "layout.tolerance.xy"),
                            detail::as_number(require(tol, "yaw", "layout.tolerance"), "layout.tolerance.yaw")};
    }

    std::uint64_t cap = 1'000'000;
    if (doc.contains("max_states_for_full_enumeration")) {
        const auto& c = doc.at("max_states_for_full_enumeration");
        if (!c.is_number_unsigned())
            throw SchemaError("max_states_for_full_enumeration", "expected a positive integer");
        cap = c.get<std::uint64_t>();
    }

    DomainSpec spec{std::move(name), vocab, std::move(constraints), std::move(ops), std::move(initial),
                    std::move(layout), cap};
    validate_domain(spec);
    return spec;
}

} // namespace smsl
