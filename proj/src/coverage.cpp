#include "smsl/coverage.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <tuple>

namespace smsl {

using detail::json;
using detail::ordered_json;

namespace {

class Bitmask {
public:
    explicit Bitmask(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    [[nodiscard]] std::size_t count() const
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Edge {
    std::size_t to;
    const std::string* op;
};

// Outgoing edges per state index, ordered by destination code then op id.
std::vector<std::vector<Edge>> ordered_edges(const FsmModel& fsm)
{
    std::vector<std::vector<Edge>> out(fsm.states.size());
    for (const auto& t : fsm.transitions) {
        auto s = fsm.state_index(t.src);
        auto d = fsm.state_index(t.dst);
        if (s && d)
            out[*s].push_back({*d, &t.op});
    }
    for (auto& edges : out)
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return std::tie(a.to, *a.op) < std::tie(b.to, *b.op); });
    return out;
}

std::vector<StateCode> codes_of(const FsmModel& fsm, const Bitmask& mask)
{
    std::vector<StateCode> out;
    for (std::size_t i = 0; i < fsm.states.size(); ++i)
        if (mask.test(i))
            out.push_back(fsm.state_codes[i]);
    return out;
}

} // namespace

std::string_view to_string(CoverageMode mode)
{
    return mode == CoverageMode::single_path ? "single-path" : "multi-path";
}

std::vector<StateCode> CoveragePath::visited() const
{
    std::vector<StateCode> out{start};
    for (const auto& s : steps)
        out.push_back(s.state);
    return out;
}

std::size_t CoveragePlan::total_steps() const
{
    std::size_t n = 0;
    for (const auto& p : paths)
        n += p.steps.size();
    return n;
}

std::optional<CoveragePath> single_coverage_path(const FsmModel& fsm, StateCode start, std::uint64_t node_budget,
                                                 std::uint64_t* nodes_expanded)
{
    if (nodes_expanded)
        *nodes_expanded = 0;
    auto first = fsm.state_index(start);
    if (!first || node_budget == 0)
        return std::nullopt;
    if (reachable_states(fsm, start).size() != fsm.states.size())
        return std::nullopt;

    const auto edges = ordered_edges(fsm);
    const auto n = fsm.states.size();
    Bitmask visited{n};
    visited.set(*first);

    struct Frame {
        std::size_t state;
        std::size_t next_edge;
    };
    std::vector<Frame> stack{{*first, 0}};
    std::vector<const Edge*> taken;
    std::uint64_t nodes = 1;

    while (!stack.empty()) {
        if (stack.size() == n)
            break;
        auto& top = stack.back();
        const auto& out = edges[top.state];
        while (top.next_edge < out.size() && visited.test(out[top.next_edge].to))
            ++top.next_edge;
        if (top.next_edge == out.size()) {
            visited.reset(top.state);
            stack.pop_back();
            if (!taken.empty())
                taken.pop_back();
            continue;
        }
        if (nodes >= node_budget) {
            if (nodes_expanded)
                *nodes_expanded = nodes;
            return std::nullopt;
        }
        const auto* edge = &out[top.next_edge++];
        visited.set(edge->to);
        taken.push_back(edge);
        stack.push_back({edge->to, 0});
        ++nodes;
    }
    if (nodes_expanded)
        *nodes_expanded = nodes;
    if (stack.size() != n || visited.count() != n)
        return std::nullopt;

    CoveragePath path{start, {}};
    for (const auto* e : taken)
        path.steps.push_back({*e->op, fsm.state_codes[e->to]});
    return path;
}

CoveragePlan multi_path_cover(const FsmModel& fsm, StateCode start)
{
    CoveragePlan plan;
    plan.task = fsm.spec_name;
    plan.mode = CoverageMode::multi_path;
    plan.start = start;
    auto first = fsm.state_index(start);
    const auto n = fsm.states.size();
    Bitmask covered{n};
    Bitmask reachable{n};
    if (first) {
        for (auto code : reachable_states(fsm, start))
            reachable.set(*fsm.state_index(code));
    }

    const auto edges = ordered_edges(fsm);
    std::size_t remaining = reachable.count();
    while (first && remaining > 0) {
        // BFS tree with first-discovery parents.
        constexpr auto kNone = static_cast<std::size_t>(-1);
        std::vector<std::size_t> parent(n, kNone);
        std::vector<const Edge*> via(n, nullptr);
        std::vector<std::size_t> order{*first};
        std::vector<bool> seen(n, false);
        seen[*first] = true;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const auto s = order[head];
            for (const auto& e : edges[s]) {
                if (seen[e.to])
                    continue;
                seen[e.to] = true;
                parent[e.to] = s;
                via[e.to] = &e;
                order.push_back(e.to);
            }
        }

        auto trace = [&](std::size_t v) {
            std::vector<std::size_t> nodes;
            for (auto u = v; u != kNone; u = parent[u])
                nodes.push_back(u);
            std::reverse(nodes.begin(), nodes.end());
            return nodes;
        };
        auto fresh = [&](const std::vector<std::size_t>& nodes) {
            return static_cast<std::size_t>(
                std::count_if(nodes.begin(), nodes.end(), [&](std::size_t u) { return !covered.test(u); }));
        };

        std::vector<std::size_t> best;
        std::size_t best_fresh = 0;
        for (auto v : order) {
            auto nodes = trace(v);
            const auto f = fresh(nodes);
            bool better = false;
            if (best.empty() || f > best_fresh) {
                better = true;
            } else if (f == best_fresh) {
                if (nodes.size() != best.size())
                    better = nodes.size() < best.size();
                else
                    better = nodes < best; // state index order is code order
            }
            if (better) {
                best = std::move(nodes);
                best_fresh = f;
            }
        }

        CoveragePath path{start, {}};
        for (std::size_t i = 1; i < best.size(); ++i)
            path.steps.push_back({*via[best[i]]->op, fsm.state_codes[best[i]]});
        for (auto u : best) {
            if (!covered.test(u)) {
                covered.set(u);
                --remaining;
            }
        }
        plan.paths.push_back(std::move(path));
    }

    plan.covered = codes_of(fsm, covered);
    for (std::size_t i = 0; i < n; ++i)
        if (!reachable.test(i))
            plan.unreachable.push_back(fsm.state_codes[i]);
    return plan;
}

CoveragePlan plan_coverage(const FsmModel& fsm, StateCode start, std::uint64_t node_budget)
{
    if (auto path = single_coverage_path(fsm, start, node_budget)) {
        CoveragePlan plan;
        plan.task = fsm.spec_name;
        plan.mode = CoverageMode::single_path;
        plan.start = start;
        plan.covered = fsm.state_codes;
        plan.paths.push_back(std::move(*path));
        return plan;
    }
    return multi_path_cover(fsm, start);
}

bool path_valid(const FsmModel& fsm, const CoveragePath& path)
{
    if (!fsm.state_index(path.start))
        return false;
    auto at = path.start;
    for (const auto& step : path.steps) {
        const auto* t = fsm.find_transition(at, step.op);
        if (!t || t->dst != step.state)
            return false;
        at = step.state;
    }
    return true;
}

std::string emit_plan(const CoveragePlan& plan)
{
    ordered_json doc;
    doc["task"] = plan.task;
    doc["mode"] = std::string{to_string(plan.mode)};
    doc["start"] = state_id(plan.start);
    auto paths = ordered_json::array();
    for (const auto& p : plan.paths) {
        auto steps = ordered_json::array();
        for (const auto& s : p.steps)
            steps.push_back({{"op", s.op}, {"state", state_id(s.state)}});
        paths.push_back({{"start", state_id(p.start)}, {"steps", steps}});
    }
    doc["paths"] = paths;
    auto ids = [](const std::vector<StateCode>& codes) {
        auto out = ordered_json::array();
        for (auto c : codes)
            out.push_back(state_id(c));
        return out;
    };
    doc["covered"] = ids(plan.covered);
    doc["unreachable"] = ids(plan.unreachable);
    return detail::dump_canonical(doc);
}

namespace {

StateCode code_from_id(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw SchemaError(where, "expected a state id");
    const auto id = j.get<std::string>();
    if (id.size() < 2 || id[0] != 'S' || id.find_first_not_of("0123456789", 1) != std::string::npos)
        throw SchemaError(where, "malformed state id '" + id + "'");
    return StateCode{std::stoull(id.substr(1))};
}

std::vector<StateCode> code_list(const json& doc, const std::string& key)
{
    const auto& arr = detail::require(doc, key, "");
    if (!arr.is_array())
        throw SchemaError(key, "expected a list");
    std::vector<StateCode> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(code_from_id(arr[i], key + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

CoveragePlan parse_plan(std::string_view text)
{
    const auto doc = detail::parse_json_text(text);
    CoveragePlan plan;
    plan.task = detail::require_string(doc, "task", "");
    const auto mode = detail::require_string(doc, "mode", "");
    if (mode == "single-path")
        plan.mode = CoverageMode::single_path;
    else if (mode == "multi-path")
        plan.mode = CoverageMode::multi_path;
    else
        throw SchemaError("mode", "unknown mode '" + mode + "'");
    plan.start = code_from_id(detail::require(doc, "start", ""), "start");
    const auto& paths = detail::require(doc, "paths", "");
    if (!paths.is_array())
        throw SchemaError("paths", "expected a list");
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto where = "paths[" + std::to_string(i) + "]";
        CoveragePath path;
        path.start = code_from_id(detail::require(paths[i], "start", where), where + ".start");
        const auto& steps = detail::require(paths[i], "steps", where);
        if (!steps.is_array())
            throw SchemaError(where + ".steps", "expected a list");
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const auto sw = where + ".steps[" + std::to_string(k) + "]";
            path.steps.push_back({detail::require_string(steps[k], "op", sw),
                                  code_from_id(detail::require(steps[k], "state", sw), sw + ".state")});
        }
        plan.paths.push_back(std::move(path));
    }
    plan.covered = code_list(doc, "covered");
    plan.unreachable = code_list(doc, "unreachable");
    return plan;
}

std::optional<std::string> plan_mismatch(const FsmModel& fsm, const CoveragePlan& plan)
{
    if (plan.task != fsm.spec_name)
        return "plan is for task '" + plan.task + "', SMSL describes '" + fsm.spec_name + "'";
    if (plan.start != fsm.initial_state)
        return "plan starts at " + state_id(plan.start) + ", SMSL initial state is " + state_id(fsm.initial_state);
    for (std::size_t i = 0; i < plan.paths.size(); ++i) {
        if (plan.paths[i].start != fsm.initial_state)
            return "path " + std::to_string(i) + " does not start at the initial state";
        if (!path_valid(fsm, plan.paths[i]))
            return "path " + std::to_string(i) + " does not follow the SMSL transitions";
    }
    for (auto c : plan.unreachable)
        if (!fsm.state_index(c))
            return "plan lists unknown state " + state_id(c);
    return std::nullopt;
}

} // namespace smsl
