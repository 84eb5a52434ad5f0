#include "smsl/state.hpp"

#include "smsl/errors.hpp"

#include <algorithm>
#include <limits>

namespace smsl {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b)
{
    return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

} // namespace

std::vector<Stack> canonicalize_stacks(const Vocabulary& vocab, std::vector<Stack> stacks)
{
    for (std::uint32_t p = 0; p < stacks.size() && p < vocab.position_count(); ++p)
        if (!vocab.is_ordered(PositionIndex{p}))
            std::sort(stacks[p].begin(), stacks[p].end());
    return stacks;
}

State::State(VocabularyPtr vocab, std::vector<Stack> stacks)
    : vocab_{std::move(vocab)}, stacks_{std::move(stacks)}
{
}

State State::from_stacks(VocabularyPtr vocab, std::vector<Stack> stacks)
{
    if (!vocab)
        throw InvalidDomain("state without vocabulary");
    if (stacks.size() != vocab->position_count())
        throw InvalidDomain("state has " + std::to_string(stacks.size()) + " stacks, domain declares "
                            + std::to_string(vocab->position_count()) + " positions");

    std::vector<PositionIndex> locus(vocab->entity_count());
    std::vector<bool> seen(vocab->entity_count(), false);
    for (std::uint32_t p = 0; p < stacks.size(); ++p) {
        for (auto e : stacks[p]) {
            if (e.value() >= vocab->entity_count())
                throw InvalidDomain("state references entity index " + std::to_string(e.value()));
            if (seen[e.value()])
                throw InvalidDomain("entity '" + vocab->entity(e).name + "' appears more than once");
            seen[e.value()] = true;
            locus[e.value()] = PositionIndex{p};
        }
    }
    for (std::uint32_t e = 0; e < seen.size(); ++e)
        if (!seen[e])
            throw InvalidDomain("entity '" + vocab->entity(EntityIndex{e}).name + "' is not placed");

    auto canonical = canonicalize_stacks(*vocab, std::move(stacks));
    State state{std::move(vocab), std::move(canonical)};
    state.locus_ = std::move(locus);
    return state;
}

State State::from_locus(VocabularyPtr vocab, const std::vector<PositionIndex>& locus)
{
    if (!vocab)
        throw InvalidDomain("state without vocabulary");
    if (locus.size() != vocab->entity_count())
        throw InvalidDomain("locus size does not match entity count");
    std::vector<Stack> stacks(vocab->position_count());
    for (std::uint32_t e = 0; e < locus.size(); ++e) {
        if (locus[e].value() >= stacks.size())
            throw InvalidDomain("locus references position index " + std::to_string(locus[e].value()));
        stacks[locus[e].value()].push_back(EntityIndex{e});
    }
    return from_stacks(std::move(vocab), std::move(stacks));
}

bool State::is_top(EntityIndex e) const
{
    auto s = stack(locus(e));
    return !s.empty() && s.back() == e;
}

std::size_t State::level(EntityIndex e) const
{
    auto s = stack(locus(e));
    return static_cast<std::size_t>(std::find(s.begin(), s.end(), e) - s.begin());
}

State State::moved(EntityIndex e, PositionIndex dest) const
{
    auto stacks = stacks_;
    auto& from = stacks.at(locus(e).value());
    from.erase(std::find(from.begin(), from.end(), e));
    stacks.at(dest.value()).push_back(e);
    auto next = State{vocab_, canonicalize_stacks(*vocab_, std::move(stacks))};
    next.locus_ = locus_;
    next.locus_[e.value()] = dest;
    return next;
}

std::string to_string(const State& state)
{
    const auto& vocab = state.vocabulary();
    std::string out;
    for (std::uint32_t p = 0; p < vocab.position_count(); ++p) {
        if (p)
            out += ' ';
        out += vocab.position(PositionIndex{p}).name + ":[";
        bool first = true;
        for (auto e : state.stack(PositionIndex{p})) {
            if (!first)
                out += ',';
            first = false;
            out += vocab.entity(e).name;
        }
        out += ']';
    }
    return out;
}

StateCodec::StateCodec(VocabularyPtr vocab) : vocab_{std::move(vocab)}
{
    for (const auto& p : vocab_->positions())
        (p.ordered ? ordered_positions_ : unordered_positions_) += 1;

    const auto n = vocab_->entity_count();
    completions_.assign(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t m = 0; m <= n; ++m)
        completions_[n][m] = 1;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t m = 0; m <= i; ++m) {
            auto unordered = mul_sat(unordered_positions_, completions_[i + 1][m]);
            auto ordered = mul_sat(ordered_positions_ + m, completions_[i + 1][m + 1]);
            completions_[i][m] = add_sat(unordered, ordered);
        }
    }
    saturated_ = completions_[0][0] == kSaturated;
}

StateCode StateCodec::encode(const State& state) const
{
    if (saturated_)
        throw RangeError("candidate space too large to encode");
    const auto& vocab = *vocab_;
    if (state.stacks().size() != vocab.position_count() || state.loci().size() != vocab.entity_count())
        throw RangeError("state does not belong to this domain");

    std::vector<std::size_t> placed(vocab.position_count(), 0);
    std::size_t on_ordered = 0;
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < vocab.entity_count(); ++i) {
        const EntityIndex e{i};
        const auto target = state.locus(e);
        for (std::uint32_t p = 0; p < target.value(); ++p) {
            if (vocab.is_ordered(PositionIndex{p}))
                rank += (placed[p] + 1) * completions(i + 1, on_ordered + 1);
            else
                rank += completions(i + 1, on_ordered);
        }
        if (vocab.is_ordered(target)) {
            // Slot = number of earlier-declared entities below e.
            std::size_t slot = 0;
            for (auto other : state.stack(target)) {
                if (other == e)
                    break;
                if (other.value() < i)
                    ++slot;
            }
            rank += slot * completions(i + 1, on_ordered + 1);
            ++on_ordered;
        }
        ++placed[target.value()];
    }
    return StateCode{rank};
}

State StateCodec::decode(StateCode code) const
{
    if (saturated_)
        throw RangeError("candidate space too large to decode");
    if (code.value >= candidate_count())
        throw RangeError("state code " + std::to_string(code.value) + " outside [0, "
                         + std::to_string(candidate_count()) + ")");
    const auto& vocab = *vocab_;
    std::vector<Stack> stacks(vocab.position_count());
    std::size_t on_ordered = 0;
    std::uint64_t rest = code.value;
    for (std::uint32_t i = 0; i < vocab.entity_count(); ++i) {
        bool placed = false;
        for (std::uint32_t p = 0; p < vocab.position_count() && !placed; ++p) {
            if (vocab.is_ordered(PositionIndex{p})) {
                const auto block = completions(i + 1, on_ordered + 1);
                const auto slots = stacks[p].size() + 1;
                if (rest < slots * block) {
                    // Insert above `slot` earlier-declared entities; every
                    // entity already stacked here was declared earlier.
                    const auto slot = rest / block;
                    rest %= block;
                    stacks[p].insert(stacks[p].begin() + static_cast<std::ptrdiff_t>(slot), EntityIndex{i});
                    ++on_ordered;
                    placed = true;
                } else {
                    rest -= slots * block;
                }
            } else {
                const auto block = completions(i + 1, on_ordered);
                if (rest < block) {
                    stacks[p].push_back(EntityIndex{i});
                    placed = true;
                } else {
                    rest -= block;
                }
            }
        }
        if (!placed)
            throw RangeError("state code " + std::to_string(code.value) + " did not decode");
    }
    return State::from_stacks(vocab_, std::move(stacks));
}

} // namespace smsl
