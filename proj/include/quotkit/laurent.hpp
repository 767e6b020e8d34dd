#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quotkit/var.hpp"

namespace quotkit {

using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// A Laurent monomial: sorted (variable, nonzero exponent) pairs.
class Monomial {
 public:
  struct Factor {
    VarId var;
    int exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial of(VarId v, int exp = 1);

  bool is_one() const { return factors_.empty(); }
  int exponent(VarId v) const;
  int total_degree() const;
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int n) const;
  /// Drops the variable entirely.
  Monomial without(VarId v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded-lex: total degree first, then lexicographic on the exponent
  /// vector with smaller VarId as the more significant variable. This is a
  /// group order on the lattice of Laurent monomials.
  static int compare(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

struct MonomialGradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

/// Multivariate Laurent polynomial over the rationals. Terms are kept in
/// graded-lex order with no stored zeros, so equal polynomials have equal
/// representations.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGradedLex>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT
  LaurentPoly(const Monomial& m, const Rational& c = 1);

  static LaurentPoly variable(VarId v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Rational> constant_value() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Highest term in graded-lex order. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }
  const std::pair<const Monomial, Rational>& trailing() const { return *terms_.begin(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int n) const;
  /// Inverse of a unit (single term). Throws otherwise.
  LaurentPoly unit_inverse() const;

  int min_degree(VarId v) const;
  int max_degree(VarId v) const;
  bool contains(VarId v) const;
  /// Splits by powers of v; the returned coefficients are free of v.
  std::map<int, LaurentPoly> coefficients_in(VarId v) const;
  LaurentPoly coefficient(VarId v, int degree) const;

  /// Replaces v by image; negative exponents require a unit image.
  LaurentPoly substitute(VarId v, const LaurentPoly& image) const;
  /// Sends every variable to 1.
  Rational evaluate_at_one() const;
  bool has_integer_coefficients() const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Elementary symmetric polynomial e_k of the given roots.
LaurentPoly elementary_symmetric(const std::vector<LaurentPoly>& roots, int k);
/// Complete homogeneous symmetric polynomial h_k of the given roots.
LaurentPoly complete_homogeneous(const std::vector<LaurentPoly>& roots, int k);

}  // namespace quotkit
