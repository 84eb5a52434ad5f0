#include "smsl/domain_json.hpp"
#include "smsl/errors.hpp"

#include "support.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace smsl;
using nlohmann::json;

namespace {

std::string read(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string river_text() { return emit_domain(test::manifest("river_crossing").spec); }

} // namespace

TEST(DomainJson, BuiltinsRoundTrip)
{
    for (auto name : test::kBuiltins) {
        const auto& spec = test::manifest(name).spec;
        const auto text = emit_domain(spec);
        const auto back = parse_domain(text);
        EXPECT_EQ(back, spec) << name;
        EXPECT_EQ(emit_domain(back), text) << name;
    }
}

TEST(DomainJson, ShippedFilesMatchBuiltins)
{
    for (auto name : test::kBuiltins) {
        const auto text = read(std::string(SMSL_DOMAINS_DIR) + "/" + name + ".domain.json");
        ASSERT_FALSE(text.empty()) << name;
        EXPECT_EQ(text, emit_domain(test::manifest(name).spec)) << name;
        EXPECT_EQ(synthesize(parse_domain(text)).counts, test::manifest(name).expected) << name;
    }
}

TEST(DomainJson, ImplicationIsNestedTaggedObjects)
{
    const auto doc = json::parse(river_text());
    const auto& safety = doc.at("state_constraints").at(0);
    EXPECT_EQ(safety.at("and").at(0),
              json::parse(R"({"implies": [{"colocated": ["sheep", "wolf"]}, {"colocated": ["human", "sheep"]}]})"));
}

TEST(DomainJson, SyntaxErrorReportsOffset)
{
    try {
        (void)parse_domain("{\"name\": \"x\",");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_GT(e.position(), 0u);
    }
}

TEST(DomainJson, EmptyObjectIsSchemaError)
{
    EXPECT_THROW((void)parse_domain("{}"), SchemaError);
    EXPECT_THROW((void)parse_domain("[]"), SchemaError);
}

TEST(DomainJson, UnknownNamesAreRejected)
{
    auto doc = json::parse(river_text());
    doc["state_constraints"][0] = json::parse(R"({"at": ["dragon", "boat"]})");
    EXPECT_THROW((void)parse_domain(doc.dump()), MalformedExpression);

    doc = json::parse(river_text());
    doc["state_constraints"][0] = json::parse(R"({"xor": [true, false]})");
    EXPECT_THROW((void)parse_domain(doc.dump()), MalformedExpression);

    doc = json::parse(river_text());
    doc["initial_state"]["sea"] = json::array();
    EXPECT_THROW((void)parse_domain(doc.dump()), SchemaError);
}

TEST(DomainJson, BadTemplateIsRejected)
{
    auto doc = json::parse(river_text());
    doc["operations"][0]["label"] = "move the {thing}";
    EXPECT_THROW((void)parse_domain(doc.dump()), InvalidDomain);
}

TEST(DomainJson, InitialStateMustSatisfyConstraints)
{
    auto doc = json::parse(river_text());
    doc["initial_state"] = json::parse(R"({"red_land": ["human"], "boat": ["sheep", "wolf", "grass"], "green_land": []})");
    EXPECT_THROW((void)parse_domain(doc.dump()), InvalidDomain);
}

TEST(DomainJson, OrderedPositionNeedsStackStep)
{
    auto doc = json::parse(emit_domain(test::manifest("chess").spec));
    doc["layout"]["positions"]["block1"]["stack_step"] = 0;
    EXPECT_THROW((void)parse_domain(doc.dump()), InvalidDomain);
}

TEST(DomainJson, UserDomainFromScratch)
{
    const auto text = R"({
      "name": "two_cups",
      "positions": [{"name": "left", "ordered": false}, {"name": "right", "ordered": false}],
      "entities": ["cup_a", "cup_b"],
      "state_constraints": [{"count_at": ["right", "<=", 1]}],
      "operations": [
        {"id": "a_right", "entity": "cup_a", "src": "left", "dest": "right", "guard": true, "label": "put {entity} on the {dest}"},
        {"id": "b_right", "entity": "cup_b", "src": "left", "dest": "right", "guard": true, "label": "put {entity} on the {dest}"}
      ],
      "initial_state": {"left": ["cup_a", "cup_b"]},
      "layout": {
        "workspace": {"min": [0, 0], "max": [1, 1]},
        "positions": {
          "left": {"anchor": [0.3, 0.5, 0, 0], "slot_offsets": [[0, -0.05], [0, 0.05]]},
          "right": {"anchor": [0.7, 0.5, 0, 0], "slot_offsets": [[0, -0.05], [0, 0.05]]}
        },
        "entities": {"cup_a": {"footprint_radius": 0.02, "height": 0.05}, "cup_b": {"footprint_radius": 0.02, "height": 0.05}}
      }
    })";
    const auto spec = parse_domain(text);
    const auto fsm = synthesize(spec);
    EXPECT_EQ(fsm.counts, (FsmCounts{4, 3, 2, 2}));
}
