#include "quotkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "quotkit/error.hpp"

namespace quotkit {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error(ErrorCode::parse_error, "bad rational: '" + s + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::parse_error, "zero denominator: " + s);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, int exp) {
  Monomial m;
  if (exp != 0) m.factors_.push_back({v, exp});
  return m;
}

int Monomial::exponent(VarId v) const {
  for (const auto& f : factors_)
    if (f.var == v) return f.exp;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      const int e = a->exp + b->exp;
      if (e != 0) out.factors_.push_back({a->var, e});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int n) const {
  Monomial out;
  if (n == 0) return out;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.exp *= n;
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.var != v) out.factors_.push_back(f);
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    int ea = 0;
    int eb = 0;
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->var < ib->var)) {
      ea = ia->exp;
      ++ia;
    } else if (ia == a.factors_.end() || ib->var < ia->var) {
      eb = ib->exp;
      ++ib;
    } else {
      ea = ia->exp;
      eb = ib->exp;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    out += var::name(f.var);
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::variable(VarId v, int exp) { return LaurentPoly(Monomial::of(v, exp)); }

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) return unit_inverse().pow(-n);
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_monomial()) {
    throw Error(ErrorCode::invalid_argument, "not a unit: " + to_string());
  }
  const auto& [m, c] = *terms_.begin();
  return LaurentPoly(m.inverse(), 1 / c);
}

int LaurentPoly::min_degree(VarId v) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

int LaurentPoly::max_degree(VarId v) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

bool LaurentPoly::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return t.first.exponent(v) != 0; });
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(VarId v) const {
  std::map<int, LaurentPoly> out;
  for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
  return out;
}

LaurentPoly LaurentPoly::coefficient(VarId v, int degree) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == degree) out.add_term(m.without(v), c);
  return out;
}

LaurentPoly LaurentPoly::substitute(VarId v, const LaurentPoly& image) const {
  std::map<int, LaurentPoly> powers;
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, image.pow(e)).first;
    out += LaurentPoly(m.without(v), c) * it->second;
  }
  return out;
}

Rational LaurentPoly::evaluate_at_one() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Rational mag = abs(c);
    std::string body;
    if (m.is_one()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = m.to_string();
    } else {
      body = mag.get_str() + "*" + m.to_string();
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

LaurentPoly parse_term(std::string_view term) {
  term = trim(term);
  if (term.empty()) throw Error(ErrorCode::parse_error, "empty term");
  Rational coef = 1;
  Monomial mono;
  std::size_t start = 0;
  while (start <= term.size()) {
    std::size_t star = term.find('*', start);
    if (star == std::string_view::npos) star = term.size();
    auto factor = trim(term.substr(start, star - start));
    if (factor.empty()) throw Error(ErrorCode::parse_error, "empty factor in '" + std::string(term) + "'");
    if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
      coef *= parse_rational(factor);
    } else {
      auto caret = factor.find('^');
      auto name = trim(factor.substr(0, caret));
      auto v = var::parse(name);
      if (!v) throw Error(ErrorCode::parse_error, "unknown variable '" + std::string(name) + "'");
      int exp = 1;
      if (caret != std::string_view::npos) {
        auto digits = trim(factor.substr(caret + 1));
        if (!digits.empty() && digits.front() == '(' && digits.back() == ')') {
          digits = trim(digits.substr(1, digits.size() - 2));
        }
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw Error(ErrorCode::parse_error, "bad exponent in '" + std::string(factor) + "'");
        }
      }
      mono = mono * Monomial::of(*v, exp);
    }
    start = star + 1;
  }
  return LaurentPoly(mono, coef);
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty polynomial");
  LaurentPoly out;
  bool negative = false;
  std::size_t pos = 0;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    pos = 1;
  }
  std::size_t term_start = pos;
  for (std::size_t i = pos; i <= text.size(); ++i) {
    const bool at_end = i == text.size();
    const char ch = at_end ? '\0' : text[i];
    // A sign splits terms unless it belongs to an exponent such as v1^-2.
    bool split = at_end;
    if (!at_end && (ch == '+' || ch == '-')) {
      std::size_t j = i;
      while (j > term_start && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
      split = !(j > term_start && (text[j - 1] == '^' || text[j - 1] == '('));
    }
    if (!split) continue;
    LaurentPoly term = parse_term(text.substr(term_start, i - term_start));
    if (negative) term = -term;
    out += term;
    if (!at_end) {
      negative = ch == '-';
      term_start = i + 1;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// --------------------------------------------------------------- division

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) return a * b.unit_inverse();

  // Every quotient exponent is confined to a box derived from the per-variable
  // degree ranges of a and b; leaving it proves the division is not exact.
  std::map<VarId, std::pair<int, int>> box;
  auto collect = [](const LaurentPoly& p, std::map<VarId, std::pair<int, int>>& lohi) {
    for (const auto& [m, c] : p.terms())
      for (const auto& f : m.factors()) lohi.emplace(f.var, std::pair{0, 0});
  };
  collect(a, box);
  collect(b, box);
  for (auto& [v, range] : box) {
    range = {a.min_degree(v) - b.max_degree(v), a.max_degree(v) - b.min_degree(v)};
  }
  auto inside = [&box](const Monomial& m) {
    for (const auto& f : m.factors()) {
      auto it = box.find(f.var);
      if (it == box.end()) return false;
      if (f.exp < it->second.first || f.exp > it->second.second) return false;
    }
    for (const auto& [v, range] : box) {
      const int e = m.exponent(v);
      if (e < range.first || e > range.second) return false;
    }
    return true;
  };

  const auto& [lead_m, lead_c] = b.leading();
  const Monomial lead_inv = lead_m.inverse();
  LaurentPoly remainder = a;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading();
    Monomial qm = rm * lead_inv;
    if (!inside(qm)) return std::nullopt;
    Rational qc = rc / lead_c;
    LaurentPoly step(qm, qc);
    quotient.add_term(qm, qc);
    remainder -= step * b;
  }
  return quotient;
}

// ------------------------------------------------------ symmetric functions

LaurentPoly elementary_symmetric(const std::vector<LaurentPoly>& roots, int k) {
  if (k < 0 || k > static_cast<int>(roots.size())) return LaurentPoly();
  // e[j] after processing a prefix of the roots.
  std::vector<LaurentPoly> e(static_cast<std::size_t>(k) + 1);
  e[0] = LaurentPoly(1);
  for (const auto& root : roots) {
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * root;
  }
  return e[k];
}

LaurentPoly complete_homogeneous(const std::vector<LaurentPoly>& roots, int k) {
  if (k < 0) return LaurentPoly();
  std::vector<LaurentPoly> h(static_cast<std::size_t>(k) + 1);
  h[0] = LaurentPoly(1);
  for (const auto& root : roots) {
    // h_j(x_1..x_n) = sum_i x_n^i h_{j-i}(x_1..x_{n-1}), computed in place.
    for (int j = 1; j <= k; ++j) h[j] += h[j - 1] * root;
  }
  return h[k];
}

}  // namespace quotkit
