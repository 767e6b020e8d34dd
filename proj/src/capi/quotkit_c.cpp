#include "quotkit.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "quotkit/error.hpp"
#include "quotkit/loop_algebra.hpp"
#include "quotkit/suites.hpp"

struct qk_config {
  quotkit::SuiteConfig config;
};

struct qk_results {
  std::vector<quotkit::CheckReport> reports;
  std::vector<std::string> json;
  std::vector<std::string> json_untimed;
  std::vector<std::string> csv;
  std::vector<std::string> plain;
};

namespace {

thread_local std::string last_error;

qk_status fail(qk_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
qk_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return QK_OK;
  } catch (const quotkit::Error& e) {
    return fail(static_cast<qk_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QK_INTERNAL, e.what());
  }
}

qk_results* wrap(std::vector<quotkit::CheckReport> reports) {
  auto* out = new qk_results;
  out->reports = std::move(reports);
  for (const auto& r : out->reports) {
    out->json.push_back(r.to_json_line(true));
    out->json_untimed.push_back(r.to_json_line(false));
    out->csv.push_back(r.to_csv_row());
    out->plain.push_back(r.to_plain());
  }
  return out;
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw quotkit::Error(quotkit::ErrorCode::invalid_argument, std::string(what) + " is null");
}

bool valid(const qk_results* results, size_t index) {
  return results != nullptr && index < results->reports.size();
}

}  // namespace

extern "C" {

const char* qk_version(void) { return "1.0.0"; }

const char* qk_status_name(qk_status status) {
  if (status == QK_INTERNAL) return "internal_error";
  if (status < QK_OK || status > QK_INVALID_ARGUMENT) return "unknown_status";
  return quotkit::error_code_name(static_cast<quotkit::ErrorCode>(static_cast<int>(status)));
}

const char* qk_last_error(void) { return last_error.c_str(); }

size_t qk_suite_count(void) { return quotkit::suite_names().size(); }

const char* qk_suite_name(size_t index) {
  const auto& names = quotkit::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

qk_status qk_config_new(const char* suite, qk_config** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    *out = new qk_config;
    (*out)->config.suite = suite;
  });
}

void qk_config_free(qk_config* config) { delete config; }

qk_status qk_config_set_range(qk_config* config, const char* key, const char* range) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(range, "range");
    config->config.ranges[key] = quotkit::Range::parse(range);
  });
}

qk_status qk_config_set_threads(qk_config* config, int threads) {
  return guarded([&] {
    require(config, "config");
    if (threads < 1) throw quotkit::Error(quotkit::ErrorCode::bad_config, "threads must be at least 1");
    config->config.threads = threads;
  });
}

qk_status qk_config_set_seed(qk_config* config, uint64_t seed) {
  return guarded([&] {
    require(config, "config");
    config->config.seed = seed;
  });
}

qk_status qk_run_suite(const qk_config* config, qk_results** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = wrap(quotkit::run_suite(config->config));
  });
}

qk_status qk_run_counts(const qk_config* config, qk_results** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = wrap(quotkit::run_counts(config->config));
  });
}

qk_status qk_chi(int r, int d, const int* splitting, size_t splitting_len, const char* spec, qk_results** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    if (splitting_len > 0) require(splitting, "splitting");
    std::vector<int> split(splitting, splitting + splitting_len);
    *out = wrap({quotkit::chi_report(r, d, split, spec)});
  });
}

qk_status qk_run_batch(const char* json, int threads, qk_results** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    if (threads < 1) throw quotkit::Error(quotkit::ErrorCode::bad_config, "threads must be at least 1");
    *out = wrap(quotkit::run_batch(json, threads));
  });
}

void qk_results_free(qk_results* results) { delete results; }

size_t qk_results_count(const qk_results* results) { return results ? results->reports.size() : 0; }

int qk_results_all_pass(const qk_results* results) {
  if (results == nullptr) return 0;
  for (const auto& r : results->reports) {
    if (!r.pass) return 0;
  }
  return 1;
}

int qk_result_pass(const qk_results* results, size_t index) {
  return valid(results, index) && results->reports[index].pass ? 1 : 0;
}

const char* qk_result_check(const qk_results* results, size_t index) {
  return valid(results, index) ? results->reports[index].check.c_str() : nullptr;
}

const char* qk_result_expected(const qk_results* results, size_t index) {
  return valid(results, index) ? results->reports[index].expected.c_str() : nullptr;
}

const char* qk_result_computed(const qk_results* results, size_t index) {
  return valid(results, index) ? results->reports[index].computed.c_str() : nullptr;
}

const char* qk_result_json(const qk_results* results, size_t index, int include_timing) {
  if (!valid(results, index)) return nullptr;
  return include_timing ? results->json[index].c_str() : results->json_untimed[index].c_str();
}

const char* qk_result_csv(const qk_results* results, size_t index) {
  return valid(results, index) ? results->csv[index].c_str() : nullptr;
}

const char* qk_result_plain(const qk_results* results, size_t index) {
  return valid(results, index) ? results->plain[index].c_str() : nullptr;
}

const char* qk_csv_header(void) {
  static const std::string header = quotkit::CheckReport::csv_header();
  return header.c_str();
}

qk_status qk_explain(const char* name, char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = duplicate(quotkit::explain(name));
  });
}

qk_status qk_normal_form(int r, const char* expression, char** out) {
  return guarded([&] {
    require(expression, "expression");
    require(out, "out");
    *out = duplicate(quotkit::LoopAlgebra(r).parse(expression).to_string());
  });
}

void qk_string_free(char* text) { delete[] text; }

}  // extern "C"
