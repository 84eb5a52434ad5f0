#include "smsl/errors.hpp"
#include "smsl/oracle.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace smsl;

TEST(Oracle, ReferenceCounts)
{
    EXPECT_EQ(oracle::hanoi().states.size(), 27u);
    EXPECT_EQ(oracle::hanoi().transitions.size(), 78u);
    EXPECT_EQ(oracle::river_crossing().states.size(), 40u);
    EXPECT_EQ(oracle::river_crossing().transitions.size(), 92u);
    EXPECT_EQ(oracle::chess().states.size(), 90u);
    EXPECT_EQ(oracle::chess().transitions.size(), 324u);
}

TEST(Oracle, BuiltinsMatchExactly)
{
    for (auto name : test::kBuiltins) {
        const auto expected = oracle::reference(name);
        const auto diff = oracle::compare(expected, oracle::project(test::fsm(name), expected));
        EXPECT_TRUE(diff.identical()) << name << ": " << (diff.discrepancies.empty() ? "" : diff.discrepancies[0]);
    }
}

TEST(Oracle, ChessVariantsMatch)
{
    const domains::ChessRules variants[] = {
        {domains::ChessMovement::free, {"block2", "block4", "block5"}},
        {domains::ChessMovement::king_step, {"block2", "block4", "block5"}},
        {domains::ChessMovement::orthogonal_step, {"block1", "block9"}},
        {domains::ChessMovement::rook_slide, {}},
    };
    for (const auto& rules : variants) {
        const auto expected = oracle::chess(rules);
        const auto diff = oracle::compare(expected, oracle::project(synthesize(domains::chess(rules).spec), expected));
        EXPECT_TRUE(diff.identical()) << to_string(rules.movement);
    }
}

TEST(Oracle, DetectsPerturbation)
{
    auto fsm = test::fsm("river_crossing");
    fsm.transitions.pop_back();
    const auto expected = oracle::river_crossing();
    auto diff = oracle::compare(expected, oracle::project(fsm, expected));
    EXPECT_EQ(diff.total, 1u);
    ASSERT_EQ(diff.discrepancies.size(), 1u);
    EXPECT_EQ(diff.discrepancies[0].rfind("missing transition", 0), 0u);

    // Loosened rules give many differences; only ten are listed.
    auto loose = test::manifest("hanoi").spec;
    for (auto& op : loose.operations)
        op.guard = expr::always();
    const auto h = oracle::hanoi();
    diff = oracle::compare(h, oracle::project(synthesize(loose), h));
    EXPECT_GT(diff.total, 10u);
    EXPECT_EQ(diff.discrepancies.size(), 10u);
}

TEST(Oracle, UnknownDomain)
{
    EXPECT_THROW((void)oracle::reference("sokoban"), InvalidDomain);
}
