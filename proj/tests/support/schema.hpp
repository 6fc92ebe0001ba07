#pragma once

#include <fstream>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

namespace cfknot::testing {

using nlohmann::json;

/// Structural validator for the JSON Schema subset the CLI contracts use:
/// type (string or list of strings), required, properties,
/// additionalProperties (boolean), items, const, enum, pattern.
inline void validate_schema(const json& schema, const json& value,
                            const std::string& path,
                            std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto matches = [&](const std::string& type) {
      if (type == "object") return value.is_object();
      if (type == "array") return value.is_array();
      if (type == "string") return value.is_string();
      if (type == "integer") return value.is_number_integer();
      if (type == "number") return value.is_number();
      if (type == "boolean") return value.is_boolean();
      if (type == "null") return value.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& type : schema["type"]) {
        ok = ok || matches(type.get<std::string>());
      }
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch");
      return;
    }
  }
  if (schema.contains("const") && value != schema["const"]) {
    errors.push_back(path + ": const mismatch");
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) {
      found = found || value == option;
    }
    if (!found) {
      errors.push_back(path + ": value not in enum");
    }
  }
  if (schema.contains("pattern") && value.is_string()) {
    const std::regex pattern(schema["pattern"].get<std::string>());
    if (!std::regex_search(value.get<std::string>(), pattern)) {
      errors.push_back(path + ": pattern mismatch");
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          errors.push_back(path + ": missing required key '" +
                           key.get<std::string>() + "'");
        }
      }
    }
    const json properties = schema.value("properties", json::object());
    const bool allow_extra = schema.value("additionalProperties", true);
    for (const auto& [key, sub_value] : value.items()) {
      if (properties.contains(key)) {
        validate_schema(properties[key], sub_value, path + "/" + key, errors);
      } else if (!allow_extra) {
        errors.push_back(path + ": unexpected key '" + key + "'");
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      validate_schema(schema["items"], value[i],
                      path + "/" + std::to_string(i), errors);
    }
  }
}

inline std::vector<std::string> validate_schema(const json& schema,
                                                const json& value) {
  std::vector<std::string> errors;
  validate_schema(schema, value, "$", errors);
  return errors;
}

inline json load_json_file(const std::string& path) {
  std::ifstream file(path);
  return json::parse(file);
}

}  // namespace cfknot::testing
