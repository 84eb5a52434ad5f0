#pragma once

#include "smsl/ids.hpp"
#include "smsl/vocabulary.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace smsl {

using VocabularyPtr = std::shared_ptr<const Vocabulary>;
using Stack = std::vector<EntityIndex>;

// Sorts the stacks of unordered positions by entity index. Ordered stacks
// are left as given.
std::vector<Stack> canonicalize_stacks(const Vocabulary& vocab, std::vector<Stack> stacks);

/// Symbolic configuration: where every entity is and, per position, the
/// stack of entities bottom to top. Always canonical.
class State {
public:
    // Throws InvalidDomain unless every entity appears in exactly one stack.
    static State from_stacks(VocabularyPtr vocab, std::vector<Stack> stacks);

    // Entities sharing a position are stacked in declaration order.
    static State from_locus(VocabularyPtr vocab, const std::vector<PositionIndex>& locus);

    [[nodiscard]] const Vocabulary& vocabulary() const { return *vocab_; }
    [[nodiscard]] const VocabularyPtr& vocabulary_ptr() const { return vocab_; }

    [[nodiscard]] PositionIndex locus(EntityIndex e) const { return locus_.at(e.value()); }
    [[nodiscard]] const std::vector<PositionIndex>& loci() const { return locus_; }
    [[nodiscard]] std::span<const EntityIndex> stack(PositionIndex p) const { return stacks_.at(p.value()); }
    [[nodiscard]] const std::vector<Stack>& stacks() const { return stacks_; }

    [[nodiscard]] std::size_t count_at(PositionIndex p) const { return stack(p).size(); }
    [[nodiscard]] bool is_top(EntityIndex e) const;
    // Index within its stack, 0 = bottom.
    [[nodiscard]] std::size_t level(EntityIndex e) const;

    // Lifts `e` off its stack and puts it on top of `dest`.
    [[nodiscard]] State moved(EntityIndex e, PositionIndex dest) const;

    bool operator==(const State& other) const { return stacks_ == other.stacks_; }

private:
    State(VocabularyPtr vocab, std::vector<Stack> stacks);

    VocabularyPtr vocab_;
    std::vector<Stack> stacks_;
    std::vector<PositionIndex> locus_;
};

std::string to_string(const State& state);

/// Bijection between canonical states and [0, candidate_count).
///
/// States are ranked by inserting entities in declaration order: each entity
/// picks a position and, at ordered positions, a slot among the entities
/// already stacked there. Choices are ordered by position then slot.
class StateCodec {
public:
    explicit StateCodec(VocabularyPtr vocab);

    // Saturates at UINT64_MAX.
    [[nodiscard]] std::uint64_t candidate_count() const { return completions_[0][0]; }
    [[nodiscard]] bool saturated() const { return saturated_; }

    [[nodiscard]] StateCode encode(const State& state) const;
    // Throws RangeError when the code is outside the candidate space.
    [[nodiscard]] State decode(StateCode code) const;

    [[nodiscard]] const VocabularyPtr& vocabulary_ptr() const { return vocab_; }

private:
    // Number of ways to place entities i.. given m entities already sit on
    // ordered positions.
    [[nodiscard]] std::uint64_t completions(std::size_t i, std::size_t m) const { return completions_[i][m]; }

    VocabularyPtr vocab_;
    std::size_t unordered_positions_ = 0;
    std::size_t ordered_positions_ = 0;
    std::vector<std::vector<std::uint64_t>> completions_;
    bool saturated_ = false;
};

} // namespace smsl
