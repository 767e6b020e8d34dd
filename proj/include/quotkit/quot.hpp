#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quotkit/laurent.hpp"
#include "quotkit/report.hpp"

namespace quotkit {

using Integer = mpz_class;

/// Quot scheme of length-d quotients of V = O(a_1) + ... + O(a_r) on P^1,
/// with frame weights u_1..u_r and tangent weight t at 0.
struct QuotSetup {
  int r = 1;
  int d = 0;
  std::vector<int> splitting;  // empty means all a_i = 0

  static QuotSetup trivial(int r, int d);
  int twist(int i) const { return splitting.empty() ? 0 : splitting[static_cast<std::size_t>(i)]; }
  bool is_trivial() const;
  /// Error(invalid_argument) unless 1 <= r <= kMaxRank, d >= 0 and the
  /// splitting has r entries.
  void validate() const;
};

/// Torus-fixed kernel: orders[i] = (vanishing order at 0, at infinity) of the
/// i-th summand, with total d.
struct FixedPoint {
  std::vector<std::pair<int, int>> orders;

  std::string to_string() const;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

struct Composition {
  std::vector<int> parts;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

enum class TautSide { plain, dual };

/// One factor wedge^wedge(O(twist)^[d]), dualized when side is dual.
struct TautFactor {
  int twist = 0;
  int wedge = 0;
  TautSide side = TautSide::plain;
};

/// Tensor product of tautological factors; empty for the structure sheaf.
/// Text form: "1" or factors joined by '*', each "wedge[l](m)" with an
/// optional "^v" for the dual.
struct TautSpec {
  std::vector<TautFactor> factors;

  std::string to_string() const;
  static TautSpec parse(std::string_view text);
  /// Error(invalid_argument) unless 0 <= wedge <= d and there are at most
  /// r - 1 dual factors.
  void validate(const QuotSetup& setup) const;
};

/// All fixed points in lexicographic order of their order pairs.
std::vector<FixedPoint> enumerate_fixed_points(const QuotSetup& setup);

Integer binomial(long n, long k);

/// Non-decreasing sequence in {0..r-1} of length d to its multiplicity vector.
Composition sequence_to_composition(int r, const std::vector<int>& seq);
std::vector<int> composition_to_sequence(const Composition& c);
std::vector<Composition> compositions(int r, int d);
/// Exhaustive check that sequences and compositions are in bijection and
/// that the bijection reverses lexicographic order.
CheckReport seq_comp_roundtrip(int r, int d);

/// Sum over compositions of prod (d_i + 1).
Integer sod_rank(int r, int d);

/// Character of Hom(E, V/E) at p in the variables u_i and t.
/// Error(degenerate_weights) if a trivial weight occurs.
LaurentPoly tangent_character(const QuotSetup& setup, const FixedPoint& p);
/// Character of the fiber of O(m)^[d] at p.
LaurentPoly taut_fiber_character(const QuotSetup& setup, const FixedPoint& p, int m);

/// Localization engine for one setup. The torus is restricted to the
/// one-parameter subgroup u_i = t^(i K) and t = 1 + eps; each fixed-point
/// term is a power series times eps^(-rd). The sum must have no pole at
/// eps = 0, and chi is its constant term. Per-point data is cached, so reuse
/// one instance for many specs. Safe to share across threads.
class Localizer {
 public:
  explicit Localizer(QuotSetup setup);
  ~Localizer();
  Localizer(Localizer&&) noexcept;
  Localizer& operator=(Localizer&&) noexcept;

  const QuotSetup& setup() const;
  std::size_t fixed_point_count() const;
  /// Error(non_collapse) if a pole survives; Error(invalid_argument) on a bad spec.
  Integer chi(const TautSpec& spec) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Integer localize_chi(const QuotSetup& setup, const TautSpec& spec);

/// Closed form for chi(Ext(tensor of wedge^l_i O(m_i)^[d], wedge^l O(m)^[d])):
/// prod dim S^l_i H(O(m - m_i)) * dim wedge^(l - sum l_i) H(V(m)), that is
/// prod binom(m - m_i + l_i, l_i) * binom(r(m+1), l - sum l_i), zero when
/// sum l_i > l.
Integer ext_closed_form(int r, const std::vector<std::pair<int, int>>& duals, int m, int l);

/// Compares localization with ext_closed_form. duals holds (m_i, l_i) pairs.
/// Requires a trivial splitting, fewer than r duals and m >= m_i >= 0.
CheckReport verify_ext_euler(const Localizer& loc, const std::vector<std::pair<int, int>>& duals,
                               int m, int l);
CheckReport verify_ext_euler(const QuotSetup& setup, const std::vector<std::pair<int, int>>& duals,
                               int m, int l);

/// Fixed-point count against binom(d + 2r - 1, 2r - 1) and sod_rank.
CheckReport count_check(int r, int d);

}  // namespace quotkit
