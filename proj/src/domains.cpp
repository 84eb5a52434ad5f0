#include "smsl/domains.hpp"

#include "smsl/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace smsl::domains {

namespace {

// Tabletop in front of the robot: 0.5 m deep, 1.0 m wide.
constexpr Workspace kTabletop{0.25, -0.5, 0.75, 0.5};
constexpr double kDegree = std::numbers::pi / 180.0;

} // namespace

DomainManifest hanoi()
{
    // Rings are declared largest first so that sorting a stand's stack by
    // declaration order yields the physical bottom-to-top order.
    const std::array<std::string, 3> rings{"green", "yellow", "gray"};
    const std::array<std::string, 3> stands{"blue", "red", "brown"};

    std::vector<PositionDecl> positions;
    for (const auto& s : stands)
        positions.push_back({"stand_" + s, false, s});
    std::vector<EntityDecl> entities;
    for (const auto& r : rings)
        entities.push_back({r, r});
    auto vocab = std::make_shared<const Vocabulary>(std::move(positions), std::move(entities));

    std::vector<OperationSpec> ops;
    for (std::uint32_t r = 0; r < rings.size(); ++r) {
        for (std::uint32_t t = 0; t < stands.size(); ++t) {
            std::vector<Expr> guard;
            for (std::uint32_t smaller = r + 1; smaller < rings.size(); ++smaller) {
                guard.push_back(expr::negate(expr::colocated(EntityIndex{r}, EntityIndex{smaller})));
                guard.push_back(expr::negate(expr::at(EntityIndex{smaller}, PositionIndex{t})));
            }
            ops.push_back({"move_" + rings[r] + "_to_stand_" + stands[t], EntityIndex{r}, std::nullopt,
                           PositionIndex{t}, guard.empty() ? expr::always() : expr::all_of(std::move(guard)),
                           "move the {entity} ring to the {dest} stand"});
        }
    }

    auto initial = State::from_locus(vocab, {PositionIndex{2}, PositionIndex{2}, PositionIndex{2}});

    LayoutSpec layout;
    layout.workspace = kTabletop;
    for (std::size_t i = 0; i < stands.size(); ++i)
        layout.positions.push_back({std::nullopt, {}, 0.02, 0.15});
    layout.entities = {{0.05, 0.02}, {0.04, 0.02}, {0.03, 0.02}};
    layout.tolerance = {0.01, 15 * kDegree};

    DomainManifest m{
        DomainSpec{"hanoi", vocab, {}, std::move(ops), std::move(initial), std::move(layout), 100'000},
        {27, 27, 9, 78},
        true,
        {"27 valid states: every ring-to-stand placement, stacking order forced by size",
         "9 operations: 3 rings x 3 stands",
         "78 transitions: 3 corner states with 2 moves, 24 states with 3 moves"},
    };
    validate_domain(m.spec);
    return m;
}

DomainManifest river_crossing()
{
    auto vocab = std::make_shared<const Vocabulary>(
        std::vector<PositionDecl>{{"red_land", false, "red land"}, {"boat", false, "boat"},
                                  {"green_land", false, "green land"}},
        std::vector<EntityDecl>{{"human", "human"}, {"sheep", "sheep"}, {"wolf", "wolf"}, {"grass", "grass"}});
    const EntityIndex human{0}, sheep{1}, wolf{2}, grass{3};
    const PositionIndex red{0}, boat{1}, green{2};

    // Sheep may share a place with wolf or grass only when the human is there.
    auto safety = expr::all_of({
        expr::implies(expr::colocated(sheep, wolf), expr::colocated(human, sheep)),
        expr::implies(expr::colocated(sheep, grass), expr::colocated(human, sheep)),
    });
    // At most two aboard, and a full boat carries the human.
    auto capacity = expr::all_of({
        expr::count_at(boat, Comparator::less_equal, 2),
        expr::implies(expr::count_at(boat, Comparator::equal, 2), expr::at(human, boat)),
    });

    const std::array<std::pair<PositionIndex, PositionIndex>, 4> legs{
        {{red, boat}, {boat, red}, {boat, green}, {green, boat}}};
    std::vector<OperationSpec> ops;
    for (std::uint32_t e = 0; e < vocab->entity_count(); ++e) {
        for (auto [src, dest] : legs) {
            const EntityIndex entity{e};
            // Anything but the human is moved only with the human beside it.
            auto guard = entity == human ? expr::always()
                                         : expr::any_of({expr::at(human, src), expr::at(human, dest)});
            ops.push_back({"move_" + vocab->entity(entity).name + "_" + vocab->position(src).name + "_to_"
                               + vocab->position(dest).name,
                           entity, src, dest, std::move(guard), "move the {entity} from the {src} to the {dest}"});
        }
    }

    auto initial = State::from_locus(vocab, {red, red, red, red});

    LayoutSpec layout;
    layout.workspace = kTabletop;
    const std::vector<PlanarOffset> land_slots{{-0.02, -0.02}, {-0.02, 0.02}, {0.02, -0.02}, {0.02, 0.02}};
    const std::vector<PlanarOffset> boat_slots{{0.0, -0.02}, {0.0, 0.02}};
    layout.positions = {{std::nullopt, land_slots, 0.0, 0.2},
                        {std::nullopt, boat_slots, 0.0, 0.2},
                        {std::nullopt, land_slots, 0.0, 0.2}};
    layout.entities.assign(4, {0.02, 0.05});
    layout.tolerance = {0.06, 15 * kDegree};

    DomainManifest m{
        DomainSpec{"river_crossing", vocab, {safety, capacity}, std::move(ops), std::move(initial),
                   std::move(layout), 100'000},
        {81, 40, 16, 92},
        true,
        {"81 candidates: 3 places ^ 4 entities",
         "40 valid states after safety and capacity filtering",
         "16 operations: 4 entities x 4 adjacent legs",
         "92 transitions: non-human moves require the human at the source or destination"},
    };
    validate_domain(m.spec);
    return m;
}

std::string_view to_string(ChessMovement movement)
{
    switch (movement) {
    case ChessMovement::rook_slide: return "rook_slide";
    case ChessMovement::orthogonal_step: return "orthogonal_step";
    case ChessMovement::king_step: return "king_step";
    case ChessMovement::free: return "free";
    }
    return "?";
}

std::optional<ChessMovement> chess_movement_from_string(std::string_view name)
{
    for (auto m : {ChessMovement::rook_slide, ChessMovement::orthogonal_step, ChessMovement::king_step,
                   ChessMovement::free})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

DomainManifest chess(const ChessRules& rules)
{
    // Blocks are numbered 1..9 row-major from the top-left corner.
    constexpr int kSide = 3;
    const std::array<std::string, 3> rows{"top", "middle", "bottom"};
    const std::array<std::string, 3> cols{"left", "middle", "right"};

    std::vector<PositionDecl> positions;
    for (int b = 0; b < kSide * kSide; ++b) {
        const auto r = b / kSide, c = b % kSide;
        auto label = (r == 1 && c == 1) ? std::string{"center"} : rows[r] + " " + cols[c];
        positions.push_back({"block" + std::to_string(b + 1), true, label + " block"});
    }
    auto vocab = std::make_shared<const Vocabulary>(
        std::move(positions), std::vector<EntityDecl>{{"star", "star piece"}, {"circle", "circle piece"}});

    std::array<bool, kSide * kSide> blocked{};
    for (const auto& name : rules.impassable) {
        auto p = vocab->find_position(name);
        if (!p)
            throw InvalidDomain("impassable block '" + name + "' is not a block");
        blocked[p->value()] = true;
    }

    auto reaches = [&](int from, int to) {
        const int fr = from / kSide, fc = from % kSide, tr = to / kSide, tc = to % kSide;
        const int dr = std::abs(fr - tr), dc = std::abs(fc - tc);
        switch (rules.movement) {
        case ChessMovement::orthogonal_step: return dr + dc == 1;
        case ChessMovement::king_step: return std::max(dr, dc) == 1;
        case ChessMovement::free: return true;
        case ChessMovement::rook_slide: {
            if (fr != tr && fc != tc)
                return false;
            const int sr = (tr > fr) - (tr < fr), sc = (tc > fc) - (tc < fc);
            for (int r = fr + sr, c = fc + sc; r != tr || c != tc; r += sr, c += sc)
                if (blocked[r * kSide + c])
                    return false;
            return true;
        }
        }
        return false;
    };

    std::vector<OperationSpec> ops;
    for (std::uint32_t e = 0; e < vocab->entity_count(); ++e) {
        for (int to = 0; to < kSide * kSide; ++to) {
            std::vector<Expr> sources;
            if (!blocked[to])
                for (int from = 0; from < kSide * kSide; ++from)
                    if (from != to && reaches(from, to))
                        sources.push_back(expr::at(EntityIndex{e}, PositionIndex{static_cast<std::uint32_t>(from)}));
            ops.push_back({"move_" + vocab->entity(EntityIndex{e}).name + "_to_block" + std::to_string(to + 1),
                           EntityIndex{e}, std::nullopt, PositionIndex{static_cast<std::uint32_t>(to)},
                           sources.empty() ? expr::never() : expr::any_of(std::move(sources)),
                           "move the {entity} to the {dest}"});
        }
    }

    auto initial = State::from_locus(vocab, {PositionIndex{6}, PositionIndex{8}});

    LayoutSpec layout;
    layout.workspace = kTabletop;
    for (int b = 0; b < kSide * kSide; ++b) {
        const double x = 0.5 + 0.1 * (b / kSide - 1);
        const double y = 0.1 * (b % kSide - 1);
        layout.positions.push_back({Pose{x, y, 0.0, 0.0}, {}, 0.03, 0.08});
    }
    layout.entities.assign(2, {0.03, 0.03});
    layout.tolerance = {0.01, 15 * kDegree};

    const auto documented = ChessRules{}.impassable;
    const bool default_rules = rules.movement == ChessMovement::rook_slide
                               && std::is_permutation(rules.impassable.begin(), rules.impassable.end(),
                                                      documented.begin(), documented.end());
    DomainManifest m{
        DomainSpec{"chess", vocab, {}, std::move(ops), std::move(initial), std::move(layout), 100'000},
        {90, 90, 18, 324},
        default_rules,
        {"90 states: 9*8 separate placements + 9*2 stacked orders",
         "18 operations: 2 pieces x 9 blocks",
         "324 transitions under the default rule "
         "(rook slides, no landing on or crossing blocks 2, 4, 5)"},
    };
    validate_domain(m.spec);
    return m;
}

std::optional<DomainManifest> builtin(std::string_view name)
{
    if (name == "hanoi")
        return hanoi();
    if (name == "river_crossing" || name == "river")
        return river_crossing();
    if (name == "chess")
        return chess();
    return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"hanoi", "river_crossing", "chess"}; }

} // namespace smsl::domains
