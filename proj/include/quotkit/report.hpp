#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace quotkit {

/// One verification record. Reports are append-only values.
struct CheckReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string expected;
  std::string computed;
  bool pass = false;
  std::int64_t elapsed_ms = 0;
  std::string note;  // error text or convention remark; omitted when empty

  nlohmann::ordered_json to_json() const;
  /// JSON with elapsed_ms forced to zero, for determinism comparisons.
  std::string to_json_line(bool include_timing = true) const;
  std::string to_csv_row() const;
  static std::string csv_header();
  std::string to_plain() const;
};

/// Milliseconds since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace quotkit
