#pragma once

// Just enough JSON-Schema to validate the shipped output schemas: type,
// required, properties, additionalProperties, items, enum, pattern,
// minimum/maximum, minItems/maxItems.

#include <json.hpp>

#include <regex>
#include <string>

namespace satlab::testing {

inline bool schema_validate(const nlohmann::json& schema, const nlohmann::json& value,
    std::string& why)
{
    using nlohmann::json;
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        const bool ok = (type == "object" && value.is_object())
            || (type == "array" && value.is_array())
            || (type == "string" && value.is_string())
            || (type == "integer" && value.is_number_integer())
            || (type == "number" && value.is_number())
            || (type == "boolean" && value.is_boolean());
        if (!ok) {
            why = "expected type " + type + ", got " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& cand : schema["enum"])
            hit = hit || cand == value;
        if (!hit) {
            why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (schema.contains("pattern") && value.is_string()) {
        const std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re)) {
            why = "value " + value.dump() + " fails pattern " + schema["pattern"].dump();
            return false;
        }
    }
    if (value.is_number()) {
        if (schema.contains("minimum") && value.get<double>() < schema["minimum"].get<double>()) {
            why = "value " + value.dump() + " below minimum";
            return false;
        }
        if (schema.contains("maximum") && value.get<double>() > schema["maximum"].get<double>()) {
            why = "value " + value.dump() + " above maximum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.dump();
                    return false;
                }
        const auto& props = schema.contains("properties") ? schema["properties"]
                                                          : json::object();
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!schema_validate(props[it.key()], it.value(), why))
                    return false;
            } else if (schema.contains("additionalProperties")
                && schema["additionalProperties"].is_boolean()
                && !schema["additionalProperties"].get<bool>()) {
                why = "unexpected key " + it.key();
                return false;
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
            why = "array too short";
            return false;
        }
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>()) {
            why = "array too long";
            return false;
        }
        if (schema.contains("items"))
            for (const auto& item : value)
                if (!schema_validate(schema["items"], item, why))
                    return false;
    }
    return true;
}

} // namespace satlab::testing
