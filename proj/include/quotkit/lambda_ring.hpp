#pragma once

#include <string>
#include <vector>

#include "quotkit/laurent.hpp"
#include "quotkit/report.hpp"
#include "quotkit/series.hpp"

namespace quotkit {

/// A virtual K-theory class in Chern-root form: positive roots minus negative
/// roots, each root a monomial character free of z.
class KClass {
 public:
  KClass() = default;
  KClass(std::vector<LaurentPoly> positive, std::vector<LaurentPoly> negative = {});

  /// Honest class with roots prefix1..prefixN, e.g. roots(var::v, 2) = {v1, v2}.
  static KClass roots(VarId (*family)(int), int rank);
  static KClass line(const LaurentPoly& character);

  const std::vector<LaurentPoly>& positive() const { return positive_; }
  const std::vector<LaurentPoly>& negative() const { return negative_; }
  int rank() const { return static_cast<int>(positive_.size()) - static_cast<int>(negative_.size()); }
  bool is_honest() const { return negative_.empty(); }

  KClass dual() const;
  /// Determinant character: product of positive roots over product of negative.
  LaurentPoly det() const;
  /// Tensor with a line bundle of the given character.
  KClass twist(const LaurentPoly& character) const;

  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass operator-() const;
  KClass operator*(const KClass& o) const;

  std::string to_string() const;

 private:
  std::vector<LaurentPoly> positive_;
  std::vector<LaurentPoly> negative_;
};

/// Total exterior series: prod_pos (1 - r/z) / prod_neg (1 - r/z).
RationalFunction wedge_total(const KClass& k);

/// Virtual exterior / symmetric powers, read off the series coefficients of
/// wedge_total and its reciprocal at z = infinity.
LaurentPoly wedge_power(const KClass& k, int degree);
LaurentPoly sym_power(const KClass& k, int degree);

/// Pushforward of O(k) from the projectivization of an honest bundle,
/// computed as int_{inf-0} z^k wedge_total(-V).
LaurentPoly push_projective(const KClass& v, int k);
/// Three-case closed form with the shift [-r+1] realized as (-1)^(r-1).
LaurentPoly push_projective_closed(const KClass& v, int k);

/// Pushforward of O(k) from the virtual projectivization P(V - W) with
/// rank V = rank W, computed as int_{inf-0} z^k wedge_total(W - V).
LaurentPoly push_virtual(const KClass& v, const KClass& w, int k);
/// Alternating K-class of the Koszul-type complexes; the k < 0 row carries an
/// overall minus sign, pinned by the residue formula.
LaurentPoly push_virtual_closed(const KClass& v, const KClass& w, int k);

/// Closed two-branch formula for the e/f commutator kernel, with the canonical
/// class of the curve as the character kappa.
LaurentPoly alpha_class(int l, const KClass& e, const KClass& v);
/// int_{inf-0} z^l wedge(zq/V) / (wedge(E/z) wedge(zq/E)).
LaurentPoly alpha_compact(int l, const KClass& e, const KClass& v);

/// Compares alpha_class (kappa -> q) against alpha_compact for each l in
/// [l_lo, l_hi], with formal roots eps1..epsr and v1..vr.
std::vector<CheckReport> verify_alpha_compact(int r, int l_lo, int l_hi);

}  // namespace quotkit
