#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "quotkit/error.hpp"
#include "quotkit/suites.hpp"

using namespace quotkit;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::int64_t limit_ms;
  std::function<std::vector<CheckReport>()> run;
};

SuiteConfig suite(const std::string& name, std::map<std::string, std::string> ranges, int threads,
                  std::uint64_t seed = 2024) {
  SuiteConfig c;
  c.suite = name;
  c.threads = threads;
  c.seed = seed;
  for (const auto& [k, v] : ranges) c.ranges[k] = Range::parse(v);
  return c;
}

std::vector<CheckReport> only(std::vector<CheckReport> reports, const std::function<bool(const std::string&)>& keep) {
  std::vector<CheckReport> out;
  for (auto& r : reports) {
    if (keep(r.check)) out.push_back(std::move(r));
  }
  return out;
}

bool is_commutator(const std::string& check) { return check.rfind("commutator_div", 0) == 0; }

int worker_count() {
  if (const char* env = std::getenv("QUOTKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main() {
  const int threads = worker_count();
  const std::vector<Criterion> criteria{
      {1, "pushforward closed forms, r <= 4, -2r-2 <= k <= 4", 10000,
       [&] { return run_suite(suite("pushforward", {{"r", "1..4"}}, threads)); }},
      {2, "compact residue form of alpha, r <= 3, -r-3 <= l <= 3", 30000,
       [&] { return run_suite(suite("alpha-compact", {{"r", "1..3"}}, threads)); }},
      {3, "loop relations and reordering identity on |i|,|j| <= 3, 201 fuzz trials of length <= 5", 60000,
       [&] {
         auto out = only(run_suite(suite("loop-relations", {{"r", "1..3"}, {"bound", "3"}, {"trials", "0"}}, threads)),
                         [](const std::string& c) { return !is_commutator(c); });
         auto fuzz = run_suite(suite("associativity-fuzz", {{"r", "1..3"}, {"trials", "67"}, {"len", "5"}}, threads));
         out.insert(out.end(), fuzz.begin(), fuzz.end());
         return out;
       }},
      {4, "commutators divisible by 1-q on generator pairs and 100 random word pairs", 30000,
       [&] {
         return only(run_suite(suite("loop-relations", {{"r", "1..3"}, {"bound", "3"}, {"trials", "100"}, {"len", "4"}},
                                     threads)),
                     is_commutator);
       }},
      {5, "h-series leading terms and series identity to order 8, r <= 3", 10000,
       [&] { return run_suite(suite("h-series", {{"r", "1..3"}, {"order", "8"}}, threads)); }},
      {6, "fixed-point count equals sod rank, r <= 3, d <= 6", 1000,
       [&] { return run_counts(suite("counts", {{"r", "1..3"}, {"d", "0..6"}}, threads)); }},
      {7, "localization collapses and matches the Ext closed form, r <= 3, d <= 4, m <= 2", 300000,
       [&] { return run_suite(suite("taut-euler", {{"r", "1..3"}, {"d", "0..4"}, {"m", "0..2"}}, threads)); }},
      {8, "order-reversing bijection of sequences and compositions, r <= 4, d <= 6", 1000,
       [&] {
         return only(run_suite(suite("counts", {{"r", "1..4"}, {"d", "0..6"}}, threads)),
                     [](const std::string& c) { return c == "order_reversal"; });
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Stopwatch sw;
    std::vector<CheckReport> reports;
    std::string error;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const std::int64_t ms = sw.elapsed_ms();
    std::size_t passed = 0;
    const CheckReport* first_failure = nullptr;
    for (const auto& r : reports) {
      if (r.pass) {
        ++passed;
      } else if (first_failure == nullptr) {
        first_failure = &r;
      }
    }
    const bool ok = error.empty() && !reports.empty() && passed == reports.size() && ms <= c.limit_ms;
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << passed << "/"
              << reports.size() << " checks, " << ms << " ms (limit " << c.limit_ms << " ms)";
    if (!error.empty()) std::cout << "; error: " << error;
    if (first_failure != nullptr) {
      std::cout << "; first failure " << first_failure->check << " " << first_failure->params.dump()
                << " expected " << first_failure->expected << " computed " << first_failure->computed;
    }
    if (error.empty() && ms > c.limit_ms) std::cout << "; time limit exceeded";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
