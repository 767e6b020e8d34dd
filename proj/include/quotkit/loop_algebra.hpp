#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quotkit/laurent.hpp"
#include "quotkit/qfrac.hpp"
#include "quotkit/report.hpp"

namespace quotkit {

enum class GeneratorKind { e, f, m, m_r_inv, p, p_inv };

/// A single algebra generator. e and f take any integer index, m takes
/// 1..r, p takes 0..r. Inverses exist for m_r, p_0 and p_r only.
struct Generator {
  GeneratorKind kind = GeneratorKind::e;
  int index = 0;

  static Generator e(int i) { return {GeneratorKind::e, i}; }
  static Generator f(int i) { return {GeneratorKind::f, i}; }
  static Generator m(int j) { return {GeneratorKind::m, j}; }
  static Generator m_r_inv(int r) { return {GeneratorKind::m_r_inv, r}; }
  static Generator p(int j) { return {GeneratorKind::p, j}; }
  static Generator p_inv(int j) { return {GeneratorKind::p_inv, j}; }

  friend bool operator==(const Generator&, const Generator&) = default;
  std::string to_string() const;
};

using Word = std::vector<Generator>;

/// Basis word f-block, Cartan block, e-block. f indices are non-increasing
/// and e indices non-decreasing. m_exps[j-1] is the exponent of m_j (the
/// last entry may be negative); p_exps[j] is the exponent of p_j.
struct NormalWord {
  std::vector<int> f_part;
  std::vector<int> m_exps;
  std::vector<int> p_exps;
  std::vector<int> e_part;

  static NormalWord identity(int r);
  bool is_cartan() const { return f_part.empty() && e_part.empty(); }
  /// Expands back into generators: f letters, Cartan letters, e letters.
  Word letters() const;
  /// "f[1]*m[1]^2*p[0]*e[0]", or "1" for the empty word.
  std::string to_string() const;

  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

/// Finite Q(q)-linear combination of normal words with no zero coefficients.
class AlgebraElement {
 public:
  using TermMap = std::map<NormalWord, QFrac>;

  AlgebraElement() = default;
  AlgebraElement(const NormalWord& w, const QFrac& c = QFrac(1));

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a word, zero when absent.
  QFrac coefficient(const NormalWord& w) const;
  void add_term(const NormalWord& w, const QFrac& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const QFrac& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const QFrac& c) { return a *= c; }
  friend AlgebraElement operator*(const QFrac& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// True when every coefficient lies in Z[q, q^-1].
  bool is_integral() const;
  /// Terms joined by " + ", each "(coef)*word" or just "word" for coefficient 1.
  std::string to_string() const;

 private:
  TermMap terms_;
};

enum class HSign { plus, minus };

struct DividedPowerResult {
  AlgebraElement element;
  /// Per basis word: coefficient lies in Z[q, q^-1].
  std::vector<std::pair<NormalWord, bool>> integrality;
  bool all_integral = true;
};

/// The shifted quantum loop algebra of rank r as a rewriting system.
/// normal_form is deterministic: the leftmost reducible adjacent pair is
/// rewritten first. Reductions are memoized and safe to share across threads.
class LoopAlgebra {
 public:
  explicit LoopAlgebra(int r);
  ~LoopAlgebra();
  LoopAlgebra(LoopAlgebra&&) noexcept;
  LoopAlgebra& operator=(LoopAlgebra&&) noexcept;

  int rank() const;

  AlgebraElement normal_form(std::span<const Generator> word) const;
  AlgebraElement normal_form(std::initializer_list<Generator> word) const {
    return normal_form(std::span<const Generator>(word.begin(), word.size()));
  }
  /// Normal form of the product of two elements.
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Normal form of (xy - yx) / (1 - q). Error(not_divisible) if a
  /// coefficient of xy - yx does not vanish at q = 1.
  AlgebraElement commutator_div(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Coefficient of z^-k (plus) or z^k (minus) of m_r P(z) / (m(z) m(zq)),
  /// as a commutative polynomial in q, m_1..m_r and p_0..p_r. Error(out_of_range)
  /// when k < 0 (plus) or k < r (minus).
  LaurentPoly h_coeff_poly(HSign sign, int k) const;
  AlgebraElement h_coeff(HSign sign, int k) const;
  /// The Cartan element appearing in [e_i, f_j] = (1 - q) H_{i+j}.
  AlgebraElement commutator_cartan(int l) const;

  DividedPowerResult divided_power_product(int i, int n, int j, int m) const;

  /// Normal form of e_{i+1}e_j - q e_i e_{j+1} - q e_j e_{i+1} + e_{j+1} e_i.
  AlgebraElement quadratic_defect(int i, int j) const;

  /// Random words u, v, w of length 1..max_len; checks (uv)w = u(vw) after
  /// normalization, then the quadratic identity on the index box.
  CheckReport fuzz_associativity(int max_len, int index_bound, int trials, std::uint64_t seed,
                                 int threads = 1) const;

  /// Every defining relation instantiated on the index box, one report each.
  std::vector<CheckReport> verify_relations(int index_bound) const;
  /// m(z) m(zq) h(z) = m_r P(z) at both expansion points up to the given order.
  std::vector<CheckReport> verify_h_series(int order) const;

  std::vector<Generator> parse_word(std::string_view text) const;
  /// Parses "(coef)*word + ..." and normalizes.
  AlgebraElement parse(std::string_view text) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Product of (1 + q + ... + q^{k-1}) for k = 1..n, as a polynomial in q.
LaurentPoly q_factorial(int n);

}  // namespace quotkit
