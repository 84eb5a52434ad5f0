#include "smsl/constraint.hpp"
#include "smsl/errors.hpp"
#include "smsl/synthesis.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace smsl;

namespace {

// Every assignment of the four river entities to the three banks.
std::vector<State> river_candidates()
{
    return enumerate_candidates(test::manifest("river_crossing").spec);
}

struct RiverIdx {
    EntityIndex human, sheep, wolf, grass;
    PositionIndex red, boat, green;
};

RiverIdx river_idx()
{
    const auto& v = *test::manifest("river_crossing").spec.vocab;
    return {v.entity_index("human"), v.entity_index("sheep"), v.entity_index("wolf"), v.entity_index("grass"),
            v.position_index("red_land"), v.position_index("boat"), v.position_index("green_land")};
}

} // namespace

TEST(Comparator, SymbolsRoundTrip)
{
    for (auto c : {Comparator::less, Comparator::less_equal, Comparator::equal, Comparator::greater_equal,
                   Comparator::greater})
        EXPECT_EQ(comparator_from_symbol(to_symbol(c)), c);
    EXPECT_THROW(comparator_from_symbol("!="), MalformedExpression);
    EXPECT_TRUE(compare(2, Comparator::less_equal, 2));
    EXPECT_FALSE(compare(3, Comparator::less, 3));
    EXPECT_TRUE(compare(0, Comparator::greater, -1));
}

TEST(Constraint, SafetyAgreesWithDirectRule)
{
    const auto i = river_idx();
    const auto safety = test::manifest("river_crossing").spec.state_constraints.at(0);
    for (const auto& s : river_candidates()) {
        const bool sheep_wolf = s.locus(i.sheep) == s.locus(i.wolf);
        const bool sheep_grass = s.locus(i.sheep) == s.locus(i.grass);
        const bool watched = s.locus(i.human) == s.locus(i.sheep);
        EXPECT_EQ(evaluate(safety, s), (!sheep_wolf || watched) && (!sheep_grass || watched)) << to_string(s);
    }
}

TEST(Constraint, FilterKeepsFortyOfEightyOne)
{
    const auto& spec = test::manifest("river_crossing").spec;
    const auto i = river_idx();
    const auto candidates = river_candidates();
    ASSERT_EQ(candidates.size(), 81u);
    std::size_t expected = 0;
    for (const auto& s : candidates) {
        int aboard = 0;
        for (auto e : {i.human, i.sheep, i.wolf, i.grass})
            aboard += s.locus(e) == i.boat;
        const bool watched = s.locus(i.human) == s.locus(i.sheep);
        const bool safe = (s.locus(i.sheep) != s.locus(i.wolf) || watched)
                          && (s.locus(i.sheep) != s.locus(i.grass) || watched);
        const bool fits = aboard <= 2 && (aboard < 2 || s.locus(i.human) == i.boat);
        expected += safe && fits;
        EXPECT_EQ(spec.satisfies_constraints(s), safe && fits) << to_string(s);
    }
    EXPECT_EQ(expected, 40u);
    EXPECT_EQ(filter_states(candidates, spec.state_constraints).size(), 40u);
}

TEST(Constraint, OverloadedBoatIsInvalid)
{
    const auto& spec = test::manifest("river_crossing").spec;
    const auto i = river_idx();
    auto s = State::from_stacks(spec.vocab, {{i.human}, {i.sheep, i.wolf, i.grass}, {}});
    EXPECT_FALSE(spec.satisfies_constraints(s));
}

TEST(Constraint, ImpliesMatchesNotOr)
{
    const auto i = river_idx();
    const std::vector<Expr> atoms = {expr::at(i.human, i.boat), expr::colocated(i.sheep, i.wolf),
                                     expr::count_at(i.red, Comparator::greater_equal, 2), expr::top_of_stack(i.grass),
                                     expr::never()};
    for (const auto& s : river_candidates())
        for (const auto& a : atoms)
            for (const auto& b : atoms)
                EXPECT_EQ(evaluate(expr::implies(a, b), s), evaluate(expr::any_of({expr::negate(a), b}), s));
}

TEST(Constraint, EmptyConnectives)
{
    const auto s = river_candidates().front();
    EXPECT_TRUE(evaluate(expr::all_of({}), s));
    EXPECT_FALSE(evaluate(expr::any_of({}), s));
    EXPECT_TRUE(evaluate(expr::always(), s));
    EXPECT_FALSE(evaluate(expr::never(), s));
}

TEST(Constraint, CountAmongCountsOnlyListed)
{
    const auto i = river_idx();
    const auto& spec = test::manifest("river_crossing").spec;
    auto s = State::from_stacks(spec.vocab, {{i.grass}, {i.human, i.sheep}, {i.wolf}});
    EXPECT_TRUE(evaluate(expr::count_at_among(i.boat, {i.sheep, i.wolf}, Comparator::equal, 1), s));
    EXPECT_TRUE(evaluate(expr::count_at(i.boat, Comparator::equal, 2), s));
    EXPECT_FALSE(evaluate(expr::count_at(i.green, Comparator::greater, 1), s));
}

TEST(Constraint, UndeclaredReferencesAreMalformed)
{
    const auto& spec = test::manifest("river_crossing").spec;
    const auto bad = expr::at(EntityIndex{9}, PositionIndex{0});
    EXPECT_THROW(check_expr(bad, *spec.vocab), MalformedExpression);
    EXPECT_THROW(evaluate(bad, river_candidates().front()), MalformedExpression);
    EXPECT_THROW(check_expr(expr::negate(expr::count_at(PositionIndex{7}, Comparator::less, 1)), *spec.vocab),
                 MalformedExpression);
}

TEST(Constraint, StructuralEquality)
{
    const auto i = river_idx();
    EXPECT_EQ(expr::implies(expr::at(i.human, i.boat), expr::never()),
              expr::implies(expr::at(i.human, i.boat), expr::never()));
    EXPECT_NE(expr::at(i.human, i.boat), expr::at(i.human, i.red));
    EXPECT_NE(expr::all_of({}), expr::any_of({}));
}
