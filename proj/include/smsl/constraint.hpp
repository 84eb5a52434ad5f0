#pragma once

#include "smsl/ids.hpp"
#include "smsl/state.hpp"

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

namespace smsl {

enum class Comparator { less, less_equal, equal, greater_equal, greater };

std::string_view to_symbol(Comparator cmp);
// Accepts "<", "<=", "==", ">=", ">". Throws MalformedExpression otherwise.
Comparator comparator_from_symbol(std::string_view symbol);
bool compare(std::size_t lhs, Comparator cmp, long rhs);

/// Immutable boolean expression over a symbolic state. Copies share nodes.
class Expr {
public:
    struct Node;

    // Default-constructed expression is True.
    Expr();

    [[nodiscard]] const Node& node() const { return *node_; }

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_{std::move(node)} {}

    std::shared_ptr<const Node> node_;

    friend struct ExprFactory;
};

namespace expr {

struct Always {};
struct At {
    EntityIndex entity;
    PositionIndex position;
};
struct Colocated {
    EntityIndex first;
    EntityIndex second;
};
struct TopOfStack {
    EntityIndex entity;
};
struct CountAt {
    PositionIndex position;
    Comparator cmp;
    long value;
};
struct CountAtAmong {
    PositionIndex position;
    std::vector<EntityIndex> among;
    Comparator cmp;
    long value;
};
struct Not {
    Expr operand;
};
struct And {
    std::vector<Expr> terms;
};
struct Or {
    std::vector<Expr> terms;
};
struct Implies {
    Expr premise;
    Expr conclusion;
};

Expr always();
Expr never();
Expr at(EntityIndex e, PositionIndex p);
Expr colocated(EntityIndex a, EntityIndex b);
Expr top_of_stack(EntityIndex e);
Expr count_at(PositionIndex p, Comparator cmp, long value);
Expr count_at_among(PositionIndex p, std::vector<EntityIndex> among, Comparator cmp, long value);
Expr negate(Expr operand);
Expr all_of(std::vector<Expr> terms);
Expr any_of(std::vector<Expr> terms);
Expr implies(Expr premise, Expr conclusion);

} // namespace expr

struct Expr::Node {
    std::variant<expr::Always, expr::At, expr::Colocated, expr::TopOfStack, expr::CountAt, expr::CountAtAmong,
                 expr::Not, expr::And, expr::Or, expr::Implies>
        value;
};

struct ExprFactory {
    static Expr wrap(Expr::Node node) { return Expr{std::make_shared<const Expr::Node>(std::move(node))}; }
};

// Pure. Throws MalformedExpression if an index is out of the state's range.
bool evaluate(const Expr& expr, const State& state);

// Throws MalformedExpression on references outside `vocab`.
void check_expr(const Expr& expr, const Vocabulary& vocab);

// Structural equality.
bool operator==(const Expr& a, const Expr& b);

} // namespace smsl
