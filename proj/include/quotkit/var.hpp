#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace quotkit {

/// Largest rank supported by the fixed variable alphabet.
inline constexpr int kMaxRank = 8;

/// A symbol from the fixed alphabet
///   z, q, kappa, t, u1..u8, eps1..eps8, v1..v8, w1..w8, m1..m8, p0..p8.
/// The id doubles as the interning order: smaller ids are larger variables in
/// lexicographic comparisons.
struct VarId {
  std::uint16_t id = 0;
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

namespace var {

constexpr VarId z() { return {0}; }
constexpr VarId q() { return {1}; }
constexpr VarId kappa() { return {2}; }
constexpr VarId t() { return {3}; }
VarId u(int i);    // 1-based
VarId eps(int i);  // 1-based
VarId v(int i);    // 1-based
VarId w(int i);    // 1-based
VarId m(int i);    // 1-based
VarId p(int i);    // 0-based

std::string name(VarId v);
std::optional<VarId> parse(std::string_view text);
int alphabet_size();

}  // namespace var
}  // namespace quotkit
