#include "quotkit/var.hpp"

#include <charconv>

#include "quotkit/error.hpp"

namespace quotkit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ok: return "Ok";
    case ErrorCode::non_expandable: return "NonExpandable";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::degenerate_weights: return "DegenerateWeights";
    case ErrorCode::non_collapse: return "NonCollapse";
    case ErrorCode::bad_config: return "BadConfig";
    case ErrorCode::unknown_check: return "UnknownCheck";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace var {
namespace {

// Layout of the alphabet: four scalars, then six indexed families.
constexpr int kScalars = 4;
constexpr int kU = kScalars;
constexpr int kEps = kU + kMaxRank;
constexpr int kV = kEps + kMaxRank;
constexpr int kW = kV + kMaxRank;
constexpr int kM = kW + kMaxRank;
constexpr int kP = kM + kMaxRank;
constexpr int kEnd = kP + kMaxRank + 1;

struct Family {
  const char* prefix;
  int base;
  int first;  // first admissible index
  int last;
};

constexpr Family kFamilies[] = {
    {"u", kU, 1, kMaxRank},   {"eps", kEps, 1, kMaxRank},
    {"v", kV, 1, kMaxRank},   {"w", kW, 1, kMaxRank},
    {"m", kM, 1, kMaxRank},   {"p", kP, 0, kMaxRank},
};

VarId indexed(const Family& fam, int i) {
  if (i < fam.first || i > fam.last) {
    throw Error(ErrorCode::invalid_argument,
                std::string("variable index out of range for ") + fam.prefix +
                    ": " + std::to_string(i));
  }
  return {static_cast<std::uint16_t>(fam.base + i - fam.first)};
}

}  // namespace

VarId u(int i) { return indexed(kFamilies[0], i); }
VarId eps(int i) { return indexed(kFamilies[1], i); }
VarId v(int i) { return indexed(kFamilies[2], i); }
VarId w(int i) { return indexed(kFamilies[3], i); }
VarId m(int i) { return indexed(kFamilies[4], i); }
VarId p(int i) { return indexed(kFamilies[5], i); }

int alphabet_size() { return kEnd; }

std::string name(VarId v) {
  switch (v.id) {
    case 0: return "z";
    case 1: return "q";
    case 2: return "kappa";
    case 3: return "t";
    default: break;
  }
  for (const auto& fam : kFamilies) {
    const int span = fam.last - fam.first + 1;
    if (v.id >= fam.base && v.id < fam.base + span) {
      return fam.prefix + std::to_string(v.id - fam.base + fam.first);
    }
  }
  return "?" + std::to_string(v.id);
}

std::optional<VarId> parse(std::string_view text) {
  if (text == "z") return z();
  if (text == "q") return q();
  if (text == "kappa") return kappa();
  if (text == "t") return t();
  // Families are listed longest prefix first.
  for (const auto& fam : kFamilies) {
    std::string_view prefix(fam.prefix);
    if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix)
      continue;
    auto digits = text.substr(prefix.size());
    int idx = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) continue;
    if (idx < fam.first || idx > fam.last) return std::nullopt;
    return VarId{static_cast<std::uint16_t>(fam.base + idx - fam.first)};
  }
  return std::nullopt;
}

}  // namespace var
}  // namespace quotkit
