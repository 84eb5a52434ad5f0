#pragma once

// SMSL fixtures for round-trip checks: a canonicalizer that works on the
// JSON document alone, and a mutator that respells a document without
// changing the machine it describes.

#include "json.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace smsl::test {

using nlohmann::ordered_json;


inline std::uint64_t id_number(const ordered_json& id) { return std::stoull(id.get<std::string>().substr(1)); }

// Canonical form computed from the document alone.
inline ordered_json canonicalize(const ordered_json& d)
{
    ordered_json out;
    out["smsl_version"] = d.at("smsl_version");
    out["task"] = d.at("task");
    out["positions"] = ordered_json::array();
    for (const auto& p : d.at("positions"))
        out["positions"].push_back({{"name", p.at("name")}, {"ordered", p.at("ordered")}});
    out["entities"] = d.at("entities");

    const auto state = [&](const ordered_json& s) {
        ordered_json c;
        c["id"] = s.at("id");
        c["locus"] = ordered_json::object();
        for (const auto& e : d.at("entities"))
            c["locus"][e.get<std::string>()] = s.at("locus").at(e.get<std::string>());
        c["stacks"] = ordered_json::object();
        for (const auto& p : d.at("positions"))
            c["stacks"][p.at("name").get<std::string>()] = s.at("stacks").at(p.at("name").get<std::string>());
        return c;
    };
    out["initial_state"] = state(d.at("initial_state"));

    std::vector<ordered_json> ops(d.at("operations").begin(), d.at("operations").end());
    std::sort(ops.begin(), ops.end(), [](const ordered_json& a, const ordered_json& b) { return a.at("id") < b.at("id"); });
    out["operations"] = ordered_json::array();
    for (const auto& o : ops) {
        ordered_json c;
        c["id"] = o.at("id");
        c["entity"] = o.at("entity");
        if (o.contains("src"))
            c["src"] = o.at("src");
        c["dest"] = o.at("dest");
        c["label"] = o.at("label");
        out["operations"].push_back(c);
    }

    std::vector<ordered_json> states(d.at("states").begin(), d.at("states").end());
    std::sort(states.begin(), states.end(),
              [](const ordered_json& a, const ordered_json& b) { return id_number(a.at("id")) < id_number(b.at("id")); });
    out["states"] = ordered_json::array();
    for (const auto& s : states)
        out["states"].push_back(state(s));

    std::vector<ordered_json> ts(d.at("transitions").begin(), d.at("transitions").end());
    std::sort(ts.begin(), ts.end(), [](const ordered_json& a, const ordered_json& b) {
        return std::pair(id_number(a.at("src")), a.at("op").get<std::string>())
               < std::pair(id_number(b.at("src")), b.at("op").get<std::string>());
    });
    out["transitions"] = ordered_json::array();
    for (const auto& t : ts)
        out["transitions"].push_back({{"src", t.at("src")}, {"op", t.at("op")}, {"dst", t.at("dst")}});
    return out;
}

inline ordered_json shuffle_keys(const ordered_json& j, std::mt19937_64& rng)
{
    if (j.is_array()) {
        ordered_json out = ordered_json::array();
        for (const auto& v : j)
            out.push_back(shuffle_keys(v, rng));
        return out;
    }
    if (!j.is_object())
        return j;
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    std::shuffle(keys.begin(), keys.end(), rng);
    ordered_json out = ordered_json::object();
    for (const auto& k : keys)
        out[k] = shuffle_keys(j.at(k), rng);
    return out;
}

inline void shuffle_array(ordered_json& arr, std::mt19937_64& rng)
{
    std::vector<ordered_json> items(arr.begin(), arr.end());
    std::shuffle(items.begin(), items.end(), rng);
    arr = ordered_json(items);
}

// Same machine, different spelling: reordered arrays and keys, relabelled
// operations, other indentation.
inline std::string mutate(const std::string& text, std::mt19937_64& rng)
{
    auto d = ordered_json::parse(text);
    if (rng() % 2)
        shuffle_array(d["states"], rng);
    if (rng() % 2)
        shuffle_array(d["operations"], rng);
    if (rng() % 2)
        shuffle_array(d["transitions"], rng);
    if (rng() % 2 && !d["operations"].empty()) {
        auto& op = d["operations"][rng() % d["operations"].size()];
        op["label"] = op["label"].get<std::string>() + " carefully";
    }
    if (rng() % 2)
        d = shuffle_keys(d, rng);
    const int indents[] = {-1, 0, 1, 4};
    return d.dump(indents[rng() % 4]);
}


} // namespace smsl::test
