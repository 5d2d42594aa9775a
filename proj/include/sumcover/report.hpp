#pragma once

// Machine-readable command reports. One schema for every CLI command:
//
//   { "command": <name>, "input": <set literal or parameter summary>,
//     "status": "ok" | "none" | "error", ["error": <message>,]
//     "result": { ... command-specific record ... } }
//
// Integer sequences serialize as JSON arrays; there are no floating-point
// values anywhere (exact quotients are reported as numerator/denominator
// plus their ceiling).

#include <string>

#include <json.hpp>

#include "sumcover/intset.hpp"

namespace sumcover {

struct Report {
  std::string command;
  std::string input;
  std::string status = "ok";  // "ok" | "none" | "error"
  std::string error;          // set iff status == "error"
  nlohmann::ordered_json result = nlohmann::ordered_json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["status"] = r.status;
  if (r.status == "error") j["error"] = r.error;
  j["result"] = r.result;
  return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.status = j.at("status").get<std::string>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  r.result = j.at("result");
  return r;
}

inline nlohmann::ordered_json set_to_json(const IntSet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto v : s) arr.push_back(v);
  return arr;
}

namespace detail {

inline std::string scalar_to_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace detail

/// Human-readable rendering: one "key: value" line per result entry, with
/// arrays of records (e.g. per-h certificates) expanded one record per line.
inline std::string render_table(const Report& r) {
  std::string out;
  out += "command: " + r.command + "\n";
  out += "input: " + r.input + "\n";
  out += "status: " + r.status + "\n";
  if (r.status == "error") out += "error: " + r.error + "\n";
  for (const auto& [key, val] : r.result.items()) {
    if (val.is_array() && !val.empty() && val.front().is_object()) {
      for (const auto& rec : val) {
        out += key + ":";
        for (const auto& [k2, v2] : rec.items()) out += " " + k2 + "=" + detail::scalar_to_text(v2);
        out += "\n";
      }
    } else if (val.is_object()) {
      out += key + ":";
      for (const auto& [k2, v2] : val.items()) out += " " + k2 + "=" + detail::scalar_to_text(v2);
      out += "\n";
    } else {
      out += key + ": " + detail::scalar_to_text(val) + "\n";
    }
  }
  return out;
}

}  // namespace sumcover
