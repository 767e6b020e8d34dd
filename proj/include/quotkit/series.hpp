#pragma once

#include <map>
#include <string>

#include "quotkit/laurent.hpp"

namespace quotkit {

/// Quotient of two Laurent polynomials. Normalization is lazy: equality is
/// decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(LaurentPoly num);  // NOLINT: polynomials are rational functions
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);

  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Exact quotient num/den when the denominator divides the numerator.
  std::optional<LaurentPoly> as_polynomial() const;
  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

enum class ExpansionPoint { zero, infinity };

/// A window of z-expansion coefficients. Coefficients are free of z. At
/// infinity the window runs from the leading degree (or 0) down to -order; at
/// zero from the lowest degree (or 0) up to order.
struct SeriesSlice {
  ExpansionPoint point = ExpansionPoint::infinity;
  std::map<int, LaurentPoly> window;
  int order = 0;

  /// Coefficient at a degree inside the window, zero above the leading term.
  LaurentPoly at(int degree) const;
};

/// Laurent expansion of f in z around the chosen point. The extremal
/// z-coefficient of the denominator must be a unit (a single monomial term);
/// otherwise Error(non_expandable).
SeriesSlice expand_at(const RationalFunction& f, ExpansionPoint point, int order);

/// Constant term at infinity minus constant term at zero.
LaurentPoly int_infty_minus_0(const RationalFunction& f);

}  // namespace quotkit
