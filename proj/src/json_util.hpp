#pragma once

#include "smsl/errors.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace smsl::detail {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

inline json parse_json_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.what(), e.byte);
    }
}

inline std::string dump_canonical(const ordered_json& doc) { return doc.dump(2) + "\n"; }

inline const json& require(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object())
        throw SchemaError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw SchemaError(where.empty() ? key : where + "." + key, "missing field");
    return *it;
}

inline std::string require_string(const json& obj, const std::string& key, const std::string& where)
{
    const auto& v = require(obj, key, where);
    if (!v.is_string())
        throw SchemaError(where.empty() ? key : where + "." + key, "expected a string");
    return v.get<std::string>();
}

inline double as_number(const json& v, const std::string& where)
{
    if (!v.is_number())
        throw SchemaError(where, "expected a number");
    return v.get<double>();
}

} // namespace smsl::detail
