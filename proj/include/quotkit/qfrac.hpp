#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quotkit/laurent.hpp"

namespace quotkit {

/// Dense polynomial in q over the rationals. coefficient(i) is the q^i term.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT
  QPoly(int c) : QPoly(Rational(c)) {}   // NOLINT

  static QPoly monomial(int degree, const Rational& c = 1);
  /// 1 - q
  static QPoly one_minus_q();

  bool is_zero() const { return coef_.empty(); }
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const Rational& coefficient(int i) const;
  const Rational& lead() const { return coef_.back(); }
  const std::vector<Rational>& coefficients() const { return coef_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  static QPoly gcd(QPoly a, QPoly b);
  QPoly monic() const;
  Rational evaluate(const Rational& x) const;
  /// Largest k with q^k dividing this polynomial.
  int low_degree() const;
  bool has_integer_coefficients() const;
  /// Divides by q^k; the low k coefficients must be zero.
  void shift_down(int k);

  LaurentPoly to_laurent() const;

 private:
  void trim();
  std::vector<Rational> coef_;
};

/// Element of Q(q) in lowest terms with a monic denominator.
class QFrac {
 public:
  QFrac() : den_(1) {}
  QFrac(QPoly num);  // NOLINT
  QFrac(const Rational& c) : QFrac(QPoly(c)) {}  // NOLINT
  QFrac(long c) : QFrac(QPoly(c)) {}             // NOLINT
  QFrac(int c) : QFrac(QPoly(c)) {}              // NOLINT
  QFrac(QPoly num, QPoly den);

  /// q^k for any integer k.
  static QFrac q_power(int k);
  /// Converts a Laurent polynomial in the single variable q.
  static QFrac from_laurent(const LaurentPoly& p);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QFrac& operator+=(const QFrac& o);
  QFrac& operator-=(const QFrac& o);
  QFrac& operator*=(const QFrac& o);
  QFrac& operator/=(const QFrac& o);
  friend QFrac operator+(QFrac a, const QFrac& b) { return a += b; }
  friend QFrac operator-(QFrac a, const QFrac& b) { return a -= b; }
  friend QFrac operator*(QFrac a, const QFrac& b) { return a *= b; }
  friend QFrac operator/(QFrac a, const QFrac& b) { return a /= b; }
  friend QFrac operator-(QFrac a);
  friend bool operator==(const QFrac&, const QFrac&) = default;

  /// Order of vanishing at q = 1 (negative for a pole).
  int valuation_at_one() const;
  /// True when the value lies in Z[q, q^-1].
  bool is_integral_laurent() const;

  /// Laurent form ("q^-1 - 1") when the denominator is a power of q,
  /// "(num)/(den)" otherwise.
  std::string to_string() const;
  /// Accepts "expr" or "(expr)/(expr)" with expr a Laurent polynomial in q.
  static QFrac parse(std::string_view text);

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace quotkit
