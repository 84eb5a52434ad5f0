#include "smsl/errors.hpp"
#include "smsl/state.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace smsl;

namespace {

VocabularyPtr two_blocks()
{
    return std::make_shared<const Vocabulary>(
        std::vector<PositionDecl>{{"left", true, ""}, {"right", false, ""}},
        std::vector<EntityDecl>{{"a", ""}, {"b", ""}, {"c", ""}});
}

} // namespace

TEST(Vocabulary, RejectsDuplicatesAndEmptyLists)
{
    EXPECT_THROW(Vocabulary({{"p", false, ""}, {"p", false, ""}}, {{"e", ""}}), InvalidDomain);
    EXPECT_THROW(Vocabulary({{"p", false, ""}}, {{"e", ""}, {"e", ""}}), InvalidDomain);
    EXPECT_THROW(Vocabulary({}, {{"e", ""}}), InvalidDomain);
    EXPECT_THROW(Vocabulary({{"p", false, ""}}, {}), InvalidDomain);
    EXPECT_THROW(Vocabulary({{"", false, ""}}, {{"e", ""}}), InvalidDomain);
}

TEST(Vocabulary, LabelsFallBackToNames)
{
    Vocabulary v({{"red_land", false, ""}, {"boat", false, "the boat"}}, {{"e", ""}});
    EXPECT_EQ(v.position_label(PositionIndex{0}), "red land");
    EXPECT_EQ(v.position_label(PositionIndex{1}), "the boat");
    EXPECT_THROW((void)v.position_index("sea"), MalformedExpression);
}

TEST(State, UnorderedStacksAreCanonical)
{
    auto v = two_blocks();
    EntityIndex a{0}, b{1}, c{2};
    auto s1 = State::from_stacks(v, {{}, {c, a, b}});
    auto s2 = State::from_stacks(v, {{}, {b, c, a}});
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(std::vector<EntityIndex>(s1.stack(PositionIndex{1}).begin(), s1.stack(PositionIndex{1}).end()),
              (std::vector<EntityIndex>{a, b, c}));
}

TEST(State, OrderedStacksKeepOrder)
{
    auto v = two_blocks();
    EntityIndex a{0}, b{1}, c{2};
    auto s1 = State::from_stacks(v, {{a, b}, {c}});
    auto s2 = State::from_stacks(v, {{b, a}, {c}});
    EXPECT_NE(s1, s2);
    EXPECT_TRUE(s1.is_top(b));
    EXPECT_FALSE(s1.is_top(a));
    EXPECT_EQ(s1.level(b), 1u);
    EXPECT_EQ(s1.locus(c), PositionIndex{1});
}

TEST(State, RejectsMissingOrRepeatedEntities)
{
    auto v = two_blocks();
    EntityIndex a{0}, b{1};
    EXPECT_THROW(State::from_stacks(v, {{a}, {b}}), InvalidDomain);
    EXPECT_THROW(State::from_stacks(v, {{a, a}, {b, EntityIndex{2}}}), InvalidDomain);
    EXPECT_THROW(State::from_stacks(v, {{a, b, EntityIndex{2}}}), InvalidDomain);
}

TEST(State, MovedLiftsOntoTop)
{
    auto v = two_blocks();
    EntityIndex a{0}, b{1}, c{2};
    auto s = State::from_stacks(v, {{a}, {b, c}});
    auto t = s.moved(c, PositionIndex{0});
    EXPECT_EQ(t, State::from_stacks(v, {{a, c}, {b}}));
}

TEST(StateCodec, ChessCodesAreDenseAndInvertible)
{
    const auto& spec = test::manifest("chess").spec;
    StateCodec codec{spec.vocab};
    ASSERT_EQ(codec.candidate_count(), 90u);
    // 9*8 placements on distinct blocks plus 9*2 stacked orders.
    EXPECT_EQ(codec.candidate_count(), 9u * 8u + 9u * 2u);
    std::set<std::vector<Stack>> seen;
    for (std::uint64_t code = 0; code < 90; ++code) {
        auto s = codec.decode(StateCode{code});
        EXPECT_EQ(codec.encode(s).value, code);
        seen.insert(s.stacks());
    }
    EXPECT_EQ(seen.size(), 90u);
    EXPECT_THROW((void)codec.decode(StateCode{90}), RangeError);
}

TEST(StateCodec, CandidateCountsMatchClosedForms)
{
    EXPECT_EQ(StateCodec{test::manifest("hanoi").spec.vocab}.candidate_count(), 27u);
    EXPECT_EQ(StateCodec{test::manifest("river_crossing").spec.vocab}.candidate_count(), 81u);

    // k entities on n ordered positions: n (n+1) ... (n+k-1).
    std::vector<PositionDecl> positions;
    for (int i = 0; i < 4; ++i)
        positions.push_back({"p" + std::to_string(i), true, ""});
    std::vector<EntityDecl> entities;
    for (int i = 0; i < 5; ++i)
        entities.push_back({"e" + std::to_string(i), ""});
    EXPECT_EQ(StateCodec{std::make_shared<const Vocabulary>(positions, entities)}.candidate_count(),
              4u * 5u * 6u * 7u * 8u);
}

TEST(StateCodec, SaturatesOnHugeSpaces)
{
    std::vector<PositionDecl> positions;
    for (int i = 0; i < 40; ++i)
        positions.push_back({"p" + std::to_string(i), true, ""});
    std::vector<EntityDecl> entities;
    for (int i = 0; i < 40; ++i)
        entities.push_back({"e" + std::to_string(i), ""});
    StateCodec codec{std::make_shared<const Vocabulary>(positions, entities)};
    EXPECT_TRUE(codec.saturated());
    EXPECT_EQ(codec.candidate_count(), std::numeric_limits<std::uint64_t>::max());
}

TEST(Ids, StateIdFormat)
{
    EXPECT_EQ(state_id(StateCode{0}), "S0");
    EXPECT_EQ(state_id(StateCode{417}), "S417");
}
