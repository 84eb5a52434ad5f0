#include "smsl/oracle.hpp"

#include "smsl/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace smsl::oracle {

namespace {

using Stacks = std::map<std::string, std::vector<std::string>>; // position -> bottom..top

std::string key(const Reference& ref, Stacks stacks)
{
    std::string out;
    for (std::size_t p = 0; p < ref.positions.size(); ++p) {
        auto here = stacks[ref.positions[p]];
        if (!ref.ordered[p])
            std::sort(here.begin(), here.end());
        if (!out.empty())
            out += '|';
        out += ref.positions[p] + ":[";
        for (std::size_t i = 0; i < here.size(); ++i)
            out += (i ? "," : "") + here[i];
        out += ']';
    }
    return out;
}

std::string edge(const std::string& src, const std::string& op, const std::string& dst)
{
    return src + " --" + op + "--> " + dst;
}

} // namespace

Reference hanoi()
{
    Reference ref{"hanoi", {"stand_blue", "stand_brown", "stand_red"}, {true, true, true}, {}, {}, {}};
    const std::vector<std::string> rings = {"gray", "yellow", "green"}; // small to large

    // Rings on a stand always rest largest at the bottom.
    const auto build = [&](const std::vector<std::size_t>& where) {
        Stacks s;
        for (const auto& p : ref.positions)
            s[p];
        for (std::size_t r = rings.size(); r-- > 0;)
            s[ref.positions[where[r]]].push_back(rings[r]);
        return s;
    };

    std::vector<std::size_t> where(rings.size(), 0);
    ref.initial = key(ref, build({1, 1, 1}));
    for (int code = 0; code < 27; ++code) {
        for (std::size_t r = 0, c = code; r < rings.size(); ++r, c /= 3)
            where[r] = c % 3;
        const auto src = key(ref, build(where));
        ref.states.insert(src);
        for (std::size_t r = 0; r < rings.size(); ++r)
            for (std::size_t t = 0; t < 3; ++t) {
                if (t == where[r])
                    continue;
                bool blocked = false;
                for (std::size_t smaller = 0; smaller < r; ++smaller)
                    blocked = blocked || where[smaller] == where[r] || where[smaller] == t;
                if (blocked)
                    continue;
                auto next = where;
                next[r] = t;
                ref.transitions.insert(edge(src, "move_" + rings[r] + "_to_" + ref.positions[t], key(ref, build(next))));
            }
    }
    return ref;
}

Reference river_crossing()
{
    Reference ref{"river_crossing", {"boat", "green_land", "red_land"}, {false, false, false}, {}, {}, {}};
    enum Bank { red, boat, green };
    const char* bank_names[] = {"red_land", "boat", "green_land"};
    const std::vector<std::string> who = {"human", "sheep", "wolf", "grass"};

    const auto safe = [](const std::array<int, 4>& at) {
        const int h = at[0], s = at[1], w = at[2], g = at[3];
        if (s == w && h != s)
            return false;
        if (s == g && h != s)
            return false;
        const int aboard = (h == boat) + (s == boat) + (w == boat) + (g == boat);
        return aboard < 2 || (aboard == 2 && h == boat);
    };
    const auto build = [&](const std::array<int, 4>& at) {
        Stacks st;
        for (const auto& p : ref.positions)
            st[p];
        for (int e = 0; e < 4; ++e)
            st[bank_names[at[e]]].push_back(who[e]);
        return key(ref, st);
    };

    const std::pair<int, int> legs[] = {{red, boat}, {boat, red}, {boat, green}, {green, boat}};
    ref.initial = build({red, red, red, red});
    for (int code = 0; code < 81; ++code) {
        std::array<int, 4> at{};
        for (int e = 0, c = code; e < 4; ++e, c /= 3)
            at[e] = c % 3;
        if (!safe(at))
            continue;
        ref.states.insert(build(at));
        for (int e = 0; e < 4; ++e)
            for (auto [from, to] : legs) {
                if (at[e] != from)
                    continue;
                // The human rows; anyone else needs the human at one end of the leg.
                if (e != 0 && at[0] != from && at[0] != to)
                    continue;
                auto next = at;
                next[e] = to;
                if (!safe(next))
                    continue;
                ref.transitions.insert(edge(build(at),
                                            "move_" + who[e] + "_" + bank_names[from] + "_to_" + bank_names[to],
                                            build(next)));
            }
    }
    return ref;
}

Reference chess(const domains::ChessRules& rules)
{
    Reference ref{"chess", {}, {}, {}, {}, {}};
    for (int b = 1; b <= 9; ++b) {
        ref.positions.push_back("block" + std::to_string(b));
        ref.ordered.push_back(true);
    }
    std::sort(ref.positions.begin(), ref.positions.end());
    const auto blocked = [&](int b) {
        return std::find(rules.impassable.begin(), rules.impassable.end(), "block" + std::to_string(b))
               != rules.impassable.end();
    };
    const auto legal = [&](int from, int to) {
        const int r0 = (from - 1) / 3, c0 = (from - 1) % 3, r1 = (to - 1) / 3, c1 = (to - 1) % 3;
        const int dr = std::abs(r1 - r0), dc = std::abs(c1 - c0);
        switch (rules.movement) {
        case domains::ChessMovement::free:
            return true;
        case domains::ChessMovement::king_step:
            return std::max(dr, dc) == 1;
        case domains::ChessMovement::orthogonal_step:
            return dr + dc == 1;
        case domains::ChessMovement::rook_slide:
            if (dr != 0 && dc != 0)
                return false;
            for (int k = 1; k < dr + dc; ++k) {
                const int r = r0 + k * (r1 > r0 ? 1 : r1 < r0 ? -1 : 0);
                const int c = c0 + k * (c1 > c0 ? 1 : c1 < c0 ? -1 : 0);
                if (blocked(r * 3 + c + 1))
                    return false;
            }
            return true;
        }
        return false;
    };

    // (block, height) per piece; height 1 means resting on the other piece.
    struct Piece {
        int block;
        int height;
    };
    const std::vector<std::string> pieces = {"star", "circle"};
    const auto build = [&](const std::array<Piece, 2>& at) {
        Stacks st;
        for (const auto& p : ref.positions)
            st[p];
        for (int h = 0; h < 2; ++h)
            for (int i = 0; i < 2; ++i)
                if (at[i].height == h)
                    st["block" + std::to_string(at[i].block)].push_back(pieces[i]);
        return key(ref, st);
    };

    std::vector<std::array<Piece, 2>> all;
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b) {
            if (a != b)
                all.push_back({Piece{a, 0}, Piece{b, 0}});
            else {
                all.push_back({Piece{a, 0}, Piece{b, 1}});
                all.push_back({Piece{a, 1}, Piece{b, 0}});
            }
        }
    ref.initial = build({Piece{7, 0}, Piece{9, 0}});
    for (const auto& at : all) {
        const auto src = build(at);
        ref.states.insert(src);
        for (int i = 0; i < 2; ++i) {
            const auto& me = at[i];
            const auto& other = at[1 - i];
            if (other.block == me.block && other.height > me.height)
                continue; // buried
            for (int t = 1; t <= 9; ++t) {
                if (t == me.block || blocked(t) || !legal(me.block, t))
                    continue;
                auto next = at;
                next[i] = {t, other.block == t ? 1 : 0};
                if (other.block == me.block)
                    next[1 - i].height = 0;
                ref.transitions.insert(edge(src, "move_" + pieces[i] + "_to_block" + std::to_string(t), build(next)));
            }
        }
    }
    return ref;
}

Reference reference(std::string_view name, const domains::ChessRules& rules)
{
    if (name == "hanoi")
        return hanoi();
    if (name == "river_crossing" || name == "river")
        return river_crossing();
    if (name == "chess")
        return oracle::chess(rules);
    throw InvalidDomain("no reference model for '" + std::string(name) + "'");
}

Reference project(const FsmModel& fsm, const Reference& shape)
{
    Reference out{fsm.spec_name, shape.positions, shape.ordered, {}, {}, {}};
    const auto& vocab = *fsm.vocab;
    const auto stacks_of = [&](const State& s) {
        Stacks st;
        for (const auto& p : shape.positions)
            st[p];
        for (std::uint32_t p = 0; p < vocab.position_count(); ++p) {
            auto& here = st[vocab.position(PositionIndex{p}).name];
            for (auto e : s.stack(PositionIndex{p}))
                here.push_back(vocab.entity(e).name);
        }
        return st;
    };
    std::map<StateCode, std::string> keys;
    for (std::size_t i = 0; i < fsm.states.size(); ++i) {
        keys[fsm.state_codes[i]] = key(out, stacks_of(fsm.states[i]));
        out.states.insert(keys[fsm.state_codes[i]]);
    }
    out.initial = keys.at(fsm.initial_state);
    for (const auto& t : fsm.transitions)
        out.transitions.insert(edge(keys.at(t.src), t.op, keys.at(t.dst)));
    return out;
}

Diff compare(const Reference& expected, const Reference& actual, std::size_t limit)
{
    Diff diff;
    const auto note = [&](std::string line) {
        ++diff.total;
        if (diff.discrepancies.size() < limit)
            diff.discrepancies.push_back(std::move(line));
    };
    if (expected.initial != actual.initial)
        note("initial state: expected " + expected.initial + ", got " + actual.initial);
    const auto one_side = [&](const std::set<std::string>& a, const std::set<std::string>& b, const std::string& what) {
        for (const auto& k : a)
            if (!b.contains(k))
                note(what + k);
    };
    one_side(expected.states, actual.states, "missing state ");
    one_side(actual.states, expected.states, "extra state ");
    one_side(expected.transitions, actual.transitions, "missing transition ");
    one_side(actual.transitions, expected.transitions, "extra transition ");
    return diff;
}

} // namespace smsl::oracle
