#include "quotkit/qfrac.hpp"

#include <algorithm>
#include <cctype>

#include "quotkit/error.hpp"

namespace quotkit {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

}  // namespace

QPoly::QPoly(const Rational& c) {
  if (c != 0) coef_.push_back(c);
}

QPoly QPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw Error(ErrorCode::invalid_argument, "negative degree in QPoly");
  QPoly p;
  if (c == 0) return p;
  p.coef_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coef_.back() = c;
  return p;
}

QPoly QPoly::one_minus_q() { return QPoly(1) - monomial(1); }

const Rational& QPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coef_.size())) return zero_rational();
  return coef_[static_cast<std::size_t>(i)];
}

void QPoly::shift_down(int k) {
  coef_.erase(coef_.begin(), coef_.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(coef_.size())));
}

void QPoly::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) out.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  out.trim();
  return out;
}

QPoly operator-(QPoly a) {
  for (auto& c : a.coef_) c = -c;
  return a;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  quot = QPoly();
  rem = a;
  const int db = b.degree();
  if (rem.degree() < db) return;
  quot.coef_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Rational factor = rem.lead() / b.lead();
    quot.coef_[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= db; ++i) {
      rem.coef_[static_cast<std::size_t>(i + shift)] -= factor * b.coef_[static_cast<std::size_t>(i)];
    }
    rem.trim();
  }
  quot.trim();
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly quot;
    QPoly rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a.is_zero() ? a : a.monic();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly out = *this;
  const Rational inv = 1 / lead();
  for (auto& c : out.coef_) c *= inv;
  return out;
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPoly::low_degree() const {
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (coef_[i] != 0) return static_cast<int>(i);
  return 0;
}

bool QPoly::has_integer_coefficients() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

LaurentPoly QPoly::to_laurent() const {
  LaurentPoly out;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] != 0) out.add_term(Monomial::of(var::q(), static_cast<int>(i)), coef_[i]);
  }
  return out;
}

// ------------------------------------------------------------------ QFrac

QFrac::QFrac(QPoly num) : num_(std::move(num)), den_(1) {}

QFrac::QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::invalid_argument, "zero denominator in Q(q)");
  normalize();
}

void QFrac::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() == den_.low_degree()) {
    const int shift = std::min(num_.low_degree(), den_.degree());
    if (shift > 0) {
      num_.shift_down(shift);
      den_.shift_down(shift);
    }
  } else {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly quot;
      QPoly rem;
      QPoly::divmod(num_, g, quot, rem);
      num_ = std::move(quot);
      QPoly::divmod(den_, g, quot, rem);
      den_ = std::move(quot);
    }
  }
  if (den_.lead() != 1) {
    const Rational inv = 1 / den_.lead();
    num_ = num_ * QPoly(inv);
    den_ = den_ * QPoly(inv);
  }
}

QFrac QFrac::q_power(int k) {
  if (k >= 0) return QFrac(QPoly::monomial(k));
  return QFrac(QPoly(1), QPoly::monomial(-k));
}

QFrac QFrac::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return QFrac();
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) {
      if (f.var != var::q()) {
        throw Error(ErrorCode::parse_error, "coefficient must only involve q: " + p.to_string());
      }
    }
  }
  const int low = p.min_degree(var::q());
  QPoly num;
  for (const auto& [m, c] : p.terms()) num += QPoly::monomial(m.exponent(var::q()) - low, c);
  if (low >= 0) return QFrac(num * QPoly::monomial(low));
  return QFrac(num, QPoly::monomial(-low));
}

QFrac& QFrac::operator+=(const QFrac& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QFrac& QFrac::operator-=(const QFrac& o) { return *this += -o; }

QFrac& QFrac::operator*=(const QFrac& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QFrac& QFrac::operator/=(const QFrac& o) {
  if (o.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero in Q(q)");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

QFrac operator-(QFrac a) {
  a.num_ = -a.num_;
  return a;
}

namespace {

int multiplicity_of_one(QPoly p) {
  if (p.is_zero()) return 0;
  const QPoly root = QPoly::monomial(1) - QPoly(1);
  int k = 0;
  while (p.evaluate(1) == 0) {
    QPoly quot;
    QPoly rem;
    QPoly::divmod(p, root, quot, rem);
    p = std::move(quot);
    ++k;
  }
  return k;
}

bool den_is_q_power(const QPoly& den) { return den.degree() == den.low_degree(); }

}  // namespace

int QFrac::valuation_at_one() const {
  if (is_zero()) return 0;
  return multiplicity_of_one(num_) - multiplicity_of_one(den_);
}

bool QFrac::is_integral_laurent() const {
  return den_is_q_power(den_) && num_.has_integer_coefficients();
}

std::string QFrac::to_string() const {
  if (den_is_q_power(den_)) {
    LaurentPoly lp = num_.to_laurent() * LaurentPoly::variable(var::q(), -den_.degree());
    return lp.to_string();
  }
  return "(" + num_.to_laurent().to_string() + ")/(" + den_.to_laurent().to_string() + ")";
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Index of the ')' matching the '(' at open, or npos.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace

QFrac QFrac::parse(std::string_view text) {
  text = trim_view(text);
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty coefficient");
  if (text.front() == '(') {
    const auto close = matching_paren(text, 0);
    if (close == std::string_view::npos) throw Error(ErrorCode::parse_error, "unbalanced parentheses");
    auto rest = trim_view(text.substr(close + 1));
    const QFrac num = parse(text.substr(1, close - 1));
    if (rest.empty()) return num;
    if (rest.front() != '/') throw Error(ErrorCode::parse_error, "expected '/' in coefficient");
    rest = trim_view(rest.substr(1));
    if (rest.empty() || rest.front() != '(' || matching_paren(rest, 0) != rest.size() - 1) {
      throw Error(ErrorCode::parse_error, "denominator must be parenthesized");
    }
    const QFrac den = parse(rest.substr(1, rest.size() - 2));
    if (den.is_zero()) throw Error(ErrorCode::parse_error, "zero denominator");
    return num / den;
  }
  return from_laurent(LaurentPoly::parse(text));
}

}  // namespace quotkit
