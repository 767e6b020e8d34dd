#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quotkit.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

enum class Format { lines_and_summary, json, csv, plain };

struct ResultsDeleter {
  void operator()(qk_results* r) const { qk_results_free(r); }
};
using Results = std::unique_ptr<qk_results, ResultsDeleter>;

struct ConfigDeleter {
  void operator()(qk_config* c) const { qk_config_free(c); }
};

struct BadConfig {
  std::string message;
};

void check(qk_status status) {
  if (status == QK_OK) return;
  const std::string message = std::string(qk_status_name(status)) + ": " + qk_last_error();
  if (status == QK_BAD_CONFIG || status == QK_PARSE_ERROR || status == QK_INVALID_ARGUMENT ||
      status == QK_UNKNOWN_CHECK) {
    throw BadConfig{message};
  }
  throw std::runtime_error(message);
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (flag == 0) throw BadConfig{"--threads must be at least 1"};
  const char* env = std::getenv("QUOTKIT_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw BadConfig{"QUOTKIT_THREADS must be a positive integer"};
  return static_cast<int>(v);
}

int emit(const qk_results* results, Format format, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw BadConfig{"cannot open " + out_path};
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  const std::size_t n = qk_results_count(results);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < n; ++i) failed += qk_result_pass(results, i) ? 0 : 1;

  if (format == Format::json || format == Format::lines_and_summary) {
    for (std::size_t i = 0; i < n; ++i) out << qk_result_json(results, i, 1) << '\n';
  }
  if (format == Format::csv || format == Format::lines_and_summary) {
    out << qk_csv_header() << '\n';
    for (std::size_t i = 0; i < n; ++i) out << qk_result_csv(results, i) << '\n';
  }
  if (format == Format::plain) {
    for (std::size_t i = 0; i < n; ++i) out << qk_result_plain(results, i) << '\n';
    out << n << " checks, " << failed << " failed\n";
  }
  out.flush();
  return failed == 0 ? kExitPass : kExitFail;
}

// Joins an option to a following value that starts with a minus sign, such as "-6..3".
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < argc) {
      const std::string next = argv[i + 1];
      if (next.size() > 1 && next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) != 0)) {
        args.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    args.push_back(a);
  }
  std::reverse(args.begin(), args.end());
  return args;
}

struct Common {
  std::map<std::string, std::string> ranges;
  int threads = -1;
  std::uint64_t seed = 0;
  bool json = false;
  bool csv = false;
  bool plain = false;
  std::string out;

  Format format() const {
    if (json) return Format::json;
    if (csv) return Format::csv;
    if (plain) return Format::plain;
    return Format::lines_and_summary;
  }
};

const std::vector<std::string> kRangeKeys{"r", "d", "l", "m", "k", "l1", "m1", "l2", "m2", "bound", "order", "trials", "len"};

void add_output_flags(CLI::App* app, Common& c) {
  app->add_option("--threads", c.threads, "worker threads (default QUOTKIT_THREADS or 1)");
  app->add_option("--seed", c.seed, "random seed");
  auto* j = app->add_flag("--json", c.json, "JSON lines only");
  auto* s = app->add_flag("--csv", c.csv, "CSV table only");
  auto* p = app->add_flag("--plain", c.plain, "human-readable lines");
  j->excludes(s, p);
  s->excludes(p);
  app->add_option("--out", c.out, "write output to FILE");
}

void add_range_flags(CLI::App* app, Common& c, const std::vector<std::string>& keys) {
  for (const auto& key : keys) {
    app->add_option_function<std::string>(
        "--" + key, [&c, key](const std::string& v) { c.ranges[key] = v; }, "value n or range lo..hi");
  }
}

std::unique_ptr<qk_config, ConfigDeleter> make_config(const std::string& suite, const Common& c) {
  qk_config* raw = nullptr;
  check(qk_config_new(suite.c_str(), &raw));
  std::unique_ptr<qk_config, ConfigDeleter> config(raw);
  for (const auto& [k, v] : c.ranges) check(qk_config_set_range(config.get(), k.c_str(), v.c_str()));
  check(qk_config_set_threads(config.get(), resolve_threads(c.threads)));
  check(qk_config_set_seed(config.get(), c.seed));
  return config;
}

std::vector<int> parse_splitting(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw BadConfig{"malformed splitting '" + text + "'"};
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact verification of K-theoretic identities for Quot schemes on P^1", "quotkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qk_version());

  Common common;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_help = "one of:";
  for (std::size_t i = 0; i < qk_suite_count(); ++i) suite_help += std::string(" ") + qk_suite_name(i);
  verify->add_option("suite", suite, suite_help)->required();
  add_range_flags(verify, common, kRangeKeys);
  add_output_flags(verify, common);

  auto* counts = app.add_subcommand("counts", "fixed-point counts against binomials");
  add_range_flags(counts, common, {"r", "d"});
  add_output_flags(counts, common);

  auto* chi = app.add_subcommand("chi", "Euler characteristic of a tautological class by localization");
  int chi_r = 0;
  int chi_d = 0;
  std::string splitting;
  std::string spec = "1";
  std::string batch;
  auto* opt_r = chi->add_option("--r", chi_r, "rank");
  auto* opt_d = chi->add_option("--d", chi_d, "length");
  chi->add_option("--splitting", splitting, "comma-separated twists a_1..a_r");
  chi->add_option("--spec", spec, "class such as wedge[1](0)^v*wedge[2](1)");
  auto* opt_batch = chi->add_option("--batch", batch, "JSON file with a list of {r, d, splitting, spec}");
  opt_batch->excludes(opt_r)->excludes(opt_d);
  add_output_flags(chi, common);

  auto* explain = app.add_subcommand("explain", "describe a suite or check");
  std::string name;
  explain->add_option("name", name, "suite or check name")->required();

  auto args = normalize_args(argc, argv);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  if (*explain) {
    char* text = nullptr;
    check(qk_explain(name.c_str(), &text));
    std::cout << text << '\n';
    qk_string_free(text);
    return kExitPass;
  }

  qk_results* raw = nullptr;
  if (*verify) {
    auto config = make_config(suite, common);
    check(qk_run_suite(config.get(), &raw));
  } else if (*counts) {
    auto config = make_config("counts", common);
    check(qk_run_counts(config.get(), &raw));
  } else {
    if (!batch.empty()) {
      std::ifstream in(batch);
      if (!in) throw BadConfig{"cannot read " + batch};
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      check(qk_run_batch(text.c_str(), resolve_threads(common.threads), &raw));
    } else {
      if (opt_r->count() == 0 || opt_d->count() == 0) throw BadConfig{"chi needs --r and --d, or --batch"};
      const auto split = parse_splitting(splitting);
      check(qk_chi(chi_r, chi_d, split.data(), split.size(), spec.c_str(), &raw));
    }
  }
  Results results(raw);
  return emit(results.get(), common.format(), common.out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BadConfig& e) {
    std::cerr << "quotkit: " << e.message << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "quotkit: " << e.what() << '\n';
    return kExitFail;
  }
}
