#include "smsl/constraint.hpp"

#include "smsl/errors.hpp"

#include <algorithm>
#include <string>

namespace smsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_entity(EntityIndex e, std::size_t count)
{
    if (e.value() >= count)
        throw MalformedExpression("expression references undeclared entity index " + std::to_string(e.value()));
}

void require_position(PositionIndex p, std::size_t count)
{
    if (p.value() >= count)
        throw MalformedExpression("expression references undeclared position index "
                                  + std::to_string(p.value()));
}

void check_indices(const Expr& expr, std::size_t entities, std::size_t positions)
{
    std::visit(overloaded{
                   [](const expr::Always&) {},
                   [&](const expr::At& n) {
                       require_entity(n.entity, entities);
                       require_position(n.position, positions);
                   },
                   [&](const expr::Colocated& n) {
                       require_entity(n.first, entities);
                       require_entity(n.second, entities);
                   },
                   [&](const expr::TopOfStack& n) { require_entity(n.entity, entities); },
                   [&](const expr::CountAt& n) { require_position(n.position, positions); },
                   [&](const expr::CountAtAmong& n) {
                       require_position(n.position, positions);
                       for (auto e : n.among)
                           require_entity(e, entities);
                   },
                   [&](const expr::Not& n) { check_indices(n.operand, entities, positions); },
                   [&](const expr::And& n) {
                       for (const auto& t : n.terms)
                           check_indices(t, entities, positions);
                   },
                   [&](const expr::Or& n) {
                       for (const auto& t : n.terms)
                           check_indices(t, entities, positions);
                   },
                   [&](const expr::Implies& n) {
                       check_indices(n.premise, entities, positions);
                       check_indices(n.conclusion, entities, positions);
                   },
               },
               expr.node().value);
}

bool eval(const Expr& expr, const State& s)
{
    return std::visit(
        overloaded{
            [](const expr::Always&) { return true; },
            [&](const expr::At& n) { return s.locus(n.entity) == n.position; },
            [&](const expr::Colocated& n) { return s.locus(n.first) == s.locus(n.second); },
            [&](const expr::TopOfStack& n) { return s.is_top(n.entity); },
            [&](const expr::CountAt& n) { return compare(s.count_at(n.position), n.cmp, n.value); },
            [&](const expr::CountAtAmong& n) {
                auto here = static_cast<std::size_t>(std::count_if(
                    n.among.begin(), n.among.end(), [&](EntityIndex e) { return s.locus(e) == n.position; }));
                return compare(here, n.cmp, n.value);
            },
            [&](const expr::Not& n) { return !eval(n.operand, s); },
            [&](const expr::And& n) {
                return std::all_of(n.terms.begin(), n.terms.end(), [&](const Expr& t) { return eval(t, s); });
            },
            [&](const expr::Or& n) {
                return std::any_of(n.terms.begin(), n.terms.end(), [&](const Expr& t) { return eval(t, s); });
            },
            [&](const expr::Implies& n) { return !eval(n.premise, s) || eval(n.conclusion, s); },
        },
        expr.node().value);
}

} // namespace

std::string_view to_symbol(Comparator cmp)
{
    switch (cmp) {
    case Comparator::less: return "<";
    case Comparator::less_equal: return "<=";
    case Comparator::equal: return "==";
    case Comparator::greater_equal: return ">=";
    case Comparator::greater: return ">";
    }
    return "?";
}

Comparator comparator_from_symbol(std::string_view symbol)
{
    if (symbol == "<")
        return Comparator::less;
    if (symbol == "<=")
        return Comparator::less_equal;
    if (symbol == "==")
        return Comparator::equal;
    if (symbol == ">=")
        return Comparator::greater_equal;
    if (symbol == ">")
        return Comparator::greater;
    throw MalformedExpression("unknown comparator '" + std::string{symbol} + "'");
}

bool compare(std::size_t lhs, Comparator cmp, long rhs)
{
    const auto l = static_cast<long>(lhs);
    switch (cmp) {
    case Comparator::less: return l < rhs;
    case Comparator::less_equal: return l <= rhs;
    case Comparator::equal: return l == rhs;
    case Comparator::greater_equal: return l >= rhs;
    case Comparator::greater: return l > rhs;
    }
    return false;
}

Expr::Expr() : node_{std::make_shared<const Node>(Node{expr::Always{}})} {}

namespace expr {

Expr always() { return Expr{}; }
Expr never() { return negate(always()); }
Expr at(EntityIndex e, PositionIndex p) { return ExprFactory::wrap({At{e, p}}); }
Expr colocated(EntityIndex a, EntityIndex b) { return ExprFactory::wrap({Colocated{a, b}}); }
Expr top_of_stack(EntityIndex e) { return ExprFactory::wrap({TopOfStack{e}}); }
Expr count_at(PositionIndex p, Comparator cmp, long value) { return ExprFactory::wrap({CountAt{p, cmp, value}}); }
Expr count_at_among(PositionIndex p, std::vector<EntityIndex> among, Comparator cmp, long value)
{
    return ExprFactory::wrap({CountAtAmong{p, std::move(among), cmp, value}});
}
Expr negate(Expr operand) { return ExprFactory::wrap({Not{std::move(operand)}}); }
Expr all_of(std::vector<Expr> terms) { return ExprFactory::wrap({And{std::move(terms)}}); }
Expr any_of(std::vector<Expr> terms) { return ExprFactory::wrap({Or{std::move(terms)}}); }
Expr implies(Expr premise, Expr conclusion)
{
    return ExprFactory::wrap({Implies{std::move(premise), std::move(conclusion)}});
}

} // namespace expr

bool evaluate(const Expr& expr, const State& state)
{
    check_indices(expr, state.vocabulary().entity_count(), state.vocabulary().position_count());
    return eval(expr, state);
}

void check_expr(const Expr& expr, const Vocabulary& vocab)
{
    check_indices(expr, vocab.entity_count(), vocab.position_count());
}

bool operator==(const Expr& a, const Expr& b)
{
    if (&a.node() == &b.node())
        return true;
    const auto& va = a.node().value;
    const auto& vb = b.node().value;
    if (va.index() != vb.index())
        return false;
    return std::visit(
        overloaded{
            [](const expr::Always&) { return true; },
            [&](const expr::At& n) {
                const auto& o = std::get<expr::At>(vb);
                return n.entity == o.entity && n.position == o.position;
            },
            [&](const expr::Colocated& n) {
                const auto& o = std::get<expr::Colocated>(vb);
                return n.first == o.first && n.second == o.second;
            },
            [&](const expr::TopOfStack& n) { return n.entity == std::get<expr::TopOfStack>(vb).entity; },
            [&](const expr::CountAt& n) {
                const auto& o = std::get<expr::CountAt>(vb);
                return n.position == o.position && n.cmp == o.cmp && n.value == o.value;
            },
            [&](const expr::CountAtAmong& n) {
                const auto& o = std::get<expr::CountAtAmong>(vb);
                return n.position == o.position && n.among == o.among && n.cmp == o.cmp && n.value == o.value;
            },
            [&](const expr::Not& n) { return n.operand == std::get<expr::Not>(vb).operand; },
            [&](const expr::And& n) { return n.terms == std::get<expr::And>(vb).terms; },
            [&](const expr::Or& n) { return n.terms == std::get<expr::Or>(vb).terms; },
            [&](const expr::Implies& n) {
                const auto& o = std::get<expr::Implies>(vb);
                return n.premise == o.premise && n.conclusion == o.conclusion;
            },
        },
        va);
}

} // namespace smsl
