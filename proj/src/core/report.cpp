#include "quotkit/report.hpp"

namespace quotkit {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["params"] = params;
  j["expected"] = expected;
  j["computed"] = computed;
  j["pass"] = pass;
  j["equal"] = pass;
  j["elapsed_ms"] = elapsed_ms;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string CheckReport::to_json_line(bool include_timing) const {
  auto j = to_json();
  if (!include_timing) j["elapsed_ms"] = 0;
  return j.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string param_or_empty(const nlohmann::ordered_json& params, const char* key) {
  if (!params.contains(key)) return "";
  const auto& v = params[key];
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string CheckReport::csv_header() { return "r,d,spec,expected,computed,pass,ms"; }

std::string CheckReport::to_csv_row() const {
  std::string spec = check;
  // Everything except r and d goes into the spec column.
  nlohmann::ordered_json rest = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params.items()) {
    if (k != "r" && k != "d") rest[k] = v;
  }
  if (!rest.empty()) spec += " " + rest.dump();
  return param_or_empty(params, "r") + "," + param_or_empty(params, "d") + "," +
         csv_escape(spec) + "," + csv_escape(expected) + "," + csv_escape(computed) + "," +
         (pass ? "true" : "false") + "," + std::to_string(elapsed_ms);
}

std::string CheckReport::to_plain() const {
  std::string out = (pass ? "PASS " : "FAIL ") + check + " " + params.dump() +
                    " expected=" + expected + " computed=" + computed;
  if (!note.empty()) out += " note=" + note;
  return out;
}

}  // namespace quotkit
