#include "quotkit/quot.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "quotkit/error.hpp"

namespace quotkit {

QuotSetup QuotSetup::trivial(int r, int d) {
  QuotSetup s;
  s.r = r;
  s.d = d;
  return s;
}

bool QuotSetup::is_trivial() const {
  return std::all_of(splitting.begin(), splitting.end(), [](int a) { return a == 0; });
}

void QuotSetup::validate() const {
  if (r < 1 || r > kMaxRank) {
    throw Error(ErrorCode::invalid_argument, "rank must lie in 1.." + std::to_string(kMaxRank));
  }
  if (d < 0) throw Error(ErrorCode::invalid_argument, "length d must be nonnegative");
  if (!splitting.empty() && static_cast<int>(splitting.size()) != r) {
    throw Error(ErrorCode::invalid_argument, "splitting must list r twists");
  }
}

std::string FixedPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(orders[i].first) + "," + std::to_string(orders[i].second) + ")";
  }
  return out + "]";
}

// ------------------------------------------------------------ TautSpec

std::string TautSpec::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += "wedge[" + std::to_string(f.wedge) + "](" + std::to_string(f.twist) + ")";
    if (f.side == TautSide::dual) out += "^v";
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::parse_error, "bad integer in '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

TautSpec TautSpec::parse(std::string_view text) {
  text = trim(text);
  TautSpec spec;
  if (text == "1" || text == "O") return spec;
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty spec");
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view f = trim(text.substr(start, end - start));
    constexpr std::string_view head = "wedge[";
    if (f.substr(0, head.size()) != head) {
      throw Error(ErrorCode::parse_error, "expected wedge[l](m) in '" + std::string(f) + "'");
    }
    const auto close = f.find(']');
    const auto open_paren = f.find('(', close);
    const auto close_paren = f.find(')', open_paren);
    if (close == std::string_view::npos || open_paren != close + 1 || close_paren == std::string_view::npos) {
      throw Error(ErrorCode::parse_error, "expected wedge[l](m) in '" + std::string(f) + "'");
    }
    TautFactor factor;
    factor.wedge = to_int(f.substr(head.size(), close - head.size()), f);
    factor.twist = to_int(f.substr(open_paren + 1, close_paren - open_paren - 1), f);
    const auto tail = trim(f.substr(close_paren + 1));
    if (tail == "^v") {
      factor.side = TautSide::dual;
    } else if (!tail.empty()) {
      throw Error(ErrorCode::parse_error, "unexpected '" + std::string(tail) + "' in spec");
    }
    spec.factors.push_back(factor);
    start = end + 1;
  }
  return spec;
}

void TautSpec::validate(const QuotSetup& setup) const {
  int duals = 0;
  for (const auto& f : factors) {
    if (f.wedge < 0 || f.wedge > setup.d) {
      throw Error(ErrorCode::invalid_argument, "wedge degree must lie in 0..d in " + to_string());
    }
    if (f.side == TautSide::dual) ++duals;
  }
  if (duals > setup.r - 1) {
    throw Error(ErrorCode::invalid_argument, "at most r - 1 dual factors are allowed");
  }
}

// ------------------------------------------------------ combinatorics

std::vector<FixedPoint> enumerate_fixed_points(const QuotSetup& setup) {
  setup.validate();
  std::vector<FixedPoint> out;
  std::vector<int> slots(static_cast<std::size_t>(2 * setup.r), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == slots.size()) {
      slots[pos] = left;
      FixedPoint p;
      for (int i = 0; i < setup.r; ++i) {
        p.orders.emplace_back(slots[static_cast<std::size_t>(2 * i)], slots[static_cast<std::size_t>(2 * i + 1)]);
      }
      out.push_back(std::move(p));
      return;
    }
    for (int v = left; v >= 0; --v) {
      slots[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, setup.d);
  std::sort(out.begin(), out.end());
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Composition sequence_to_composition(int r, const std::vector<int>& seq) {
  Composition c;
  c.parts.assign(static_cast<std::size_t>(r), 0);
  for (int v : seq) {
    if (v < 0 || v >= r) throw Error(ErrorCode::invalid_argument, "sequence entry out of range");
    c.parts[static_cast<std::size_t>(v)] += 1;
  }
  return c;
}

std::vector<int> composition_to_sequence(const Composition& c) {
  std::vector<int> seq;
  for (std::size_t i = 0; i < c.parts.size(); ++i) seq.insert(seq.end(), static_cast<std::size_t>(c.parts[i]), static_cast<int>(i));
  return seq;
}

std::vector<Composition> compositions(int r, int d) {
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == parts.size()) {
      parts[pos] = left;
      out.push_back({parts});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (r >= 1 && d >= 0) rec(rec, 0, d);
  return out;
}

namespace {

std::vector<std::vector<int>> nondecreasing_sequences(int r, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == d) {
      out.push_back(seq);
      return;
    }
    for (int v = lo; v < r; ++v) {
      seq[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

CheckReport seq_comp_roundtrip(int r, int d) {
  if (r < 1 || d < 0) throw Error(ErrorCode::invalid_argument, "need r >= 1 and d >= 0");
  Stopwatch sw;
  const auto seqs = nondecreasing_sequences(r, d);
  const auto comps = compositions(r, d);
  std::vector<Composition> images;
  bool roundtrip = true;
  for (const auto& s : seqs) {
    images.push_back(sequence_to_composition(r, s));
    roundtrip = roundtrip && composition_to_sequence(images.back()) == s;
  }
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  const bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                         sorted == comps;
  std::size_t violations = 0;
  for (std::size_t a = 0; a < seqs.size(); ++a) {
    for (std::size_t b = a + 1; b < seqs.size(); ++b) {
      // seqs is in increasing lex order, so images must strictly decrease.
      if (!(seqs[a] < seqs[b]) || !(images[a] > images[b])) ++violations;
    }
  }
  CheckReport rep;
  rep.check = "order_reversal";
  rep.params["r"] = r;
  rep.params["d"] = d;
  rep.expected = std::to_string(comps.size()) + " pairs, order reversed";
  rep.computed = std::to_string(seqs.size()) + " pairs, " +
                 (violations == 0 ? std::string("order reversed") : std::to_string(violations) + " violations");
  rep.pass = roundtrip && bijective && violations == 0;
  if (!roundtrip) rep.note = "round trip failed";
  if (!bijective) rep.note += std::string(rep.note.empty() ? "" : "; ") + "not a bijection";
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

Integer sod_rank(int r, int d) {
  Integer total = 0;
  for (const auto& c : compositions(r, d)) {
    Integer block = 1;
    for (int part : c.parts) block *= part + 1;
    total += block;
  }
  return total;
}

CheckReport count_check(int r, int d) {
  Stopwatch sw;
  const auto points = enumerate_fixed_points(QuotSetup::trivial(r, d));
  const Integer expected = binomial(d + 2 * r - 1, 2 * r - 1);
  const Integer rank = sod_rank(r, d);
  const Integer count = static_cast<unsigned long>(points.size());
  CheckReport rep;
  rep.check = "counts";
  rep.params["r"] = r;
  rep.params["d"] = d;
  rep.expected = expected.get_str();
  rep.computed = count == rank ? count.get_str()
                               : "fixed points " + count.get_str() + ", sod_rank " + rank.get_str();
  rep.pass = count == expected && rank == expected;
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------- characters

namespace {

LaurentPoly weight(int j, int i, int t_exp) {
  Monomial mono = Monomial::of(var::t(), t_exp);
  if (i != j) mono = mono * Monomial::of(var::u(j + 1), 1) * Monomial::of(var::u(i + 1), -1);
  LaurentPoly out;
  out.add_term(mono, 1);
  return out;
}

}  // namespace

LaurentPoly tangent_character(const QuotSetup& setup, const FixedPoint& p) {
  setup.validate();
  LaurentPoly out;
  for (int i = 0; i < setup.r; ++i) {
    const auto [z_i, inf_i] = p.orders[static_cast<std::size_t>(i)];
    for (int j = 0; j < setup.r; ++j) {
      const auto [z_j, inf_j] = p.orders[static_cast<std::size_t>(j)];
      for (int k = 0; k < z_j; ++k) out += weight(j, i, k - z_i);
      for (int k = 0; k < inf_j; ++k) {
        out += weight(j, i, setup.twist(j) - setup.twist(i) + inf_i - k);
      }
    }
  }
  for (const auto& [mono, c] : out.terms()) {
    if (mono.is_one()) {
      throw Error(ErrorCode::degenerate_weights, "trivial tangent weight at " + p.to_string());
    }
  }
  return out;
}

LaurentPoly taut_fiber_character(const QuotSetup& setup, const FixedPoint& p, int m) {
  setup.validate();
  LaurentPoly out;
  for (int j = 0; j < setup.r; ++j) {
    const auto [z_j, inf_j] = p.orders[static_cast<std::size_t>(j)];
    const LaurentPoly u = LaurentPoly::variable(var::u(j + 1));
    for (int k = 0; k < z_j; ++k) out += u * LaurentPoly::variable(var::t(), k);
    for (int k = 0; k < inf_j; ++k) out += u * LaurentPoly::variable(var::t(), setup.twist(j) + m - k);
  }
  return out;
}

// ---------------------------------------------------------- localization

namespace {

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inverse(const Series& a) {
  const std::size_t n = a.size();
  Series out(n, Rational(0));
  const Rational inv = 1 / a[0];
  out[0] = inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc * inv;
  }
  return out;
}

// (1 + eps)^e truncated to n coefficients.
Series binomial_series(long e, std::size_t n) {
  Series out(n, Rational(0));
  if (n == 0) return out;
  out[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    out[k] = out[k - 1] * Rational(e - static_cast<long>(k) + 1) / Rational(static_cast<long>(k));
  }
  return out;
}

// Specialized exponent of a monomial in u_i and t.
long specialize(const Monomial& mono, long spacing) {
  long e = 0;
  for (const auto& f : mono.factors()) {
    if (f.var == var::t()) {
      e += f.exp;
      continue;
    }
    for (int i = 1; i <= kMaxRank; ++i) {
      if (f.var == var::u(i)) e += static_cast<long>(f.exp) * (i - 1) * spacing;
    }
  }
  return e;
}

}  // namespace

struct Localizer::Impl {
  QuotSetup setup;
  std::vector<FixedPoint> points;
  long spacing = 1;
  std::size_t order = 1;  // number of series coefficients, r d + 1
  std::vector<Series> inverse_euler;

  mutable std::mutex mutex;
  // (twist, side) -> per point -> per wedge degree
  mutable std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::vector<Series>>>> wedges;

  std::shared_ptr<const std::vector<std::vector<Series>>> wedge_table(int twist, TautSide side) const {
    const std::pair<int, int> key{twist, side == TautSide::dual ? 1 : 0};
    {
      std::lock_guard lock(mutex);
      auto it = wedges.find(key);
      if (it != wedges.end()) return it->second;
    }
    auto table = std::make_shared<std::vector<std::vector<Series>>>();
    const int d = setup.d;
    for (const auto& p : points) {
      std::vector<Series> w(static_cast<std::size_t>(d) + 1, Series(order, Rational(0)));
      w[0][0] = 1;
      int filled = 0;
      const LaurentPoly fiber = taut_fiber_character(setup, p, twist);
      for (const auto& [mono, c] : fiber.terms()) {
        long e = specialize(mono, spacing);
        if (side == TautSide::dual) e = -e;
        const Series x = binomial_series(e, order);
        for (mpz_class copies = c.get_num(); copies > 0; --copies) {
          ++filled;
          for (int l = std::min(filled, d); l >= 1; --l) {
            const Series prod = series_mul(w[static_cast<std::size_t>(l - 1)], x);
            for (std::size_t k = 0; k < order; ++k) w[static_cast<std::size_t>(l)][k] += prod[k];
          }
        }
      }
      table->push_back(std::move(w));
    }
    std::lock_guard lock(mutex);
    return wedges.emplace(key, std::move(table)).first->second;
  }
};

Localizer::Localizer(QuotSetup setup) : impl_(std::make_unique<Impl>()) {
  setup.validate();
  auto& im = *impl_;
  im.setup = std::move(setup);
  im.points = enumerate_fixed_points(im.setup);
  const auto& s = im.setup;
  int spread = 0;
  if (!s.splitting.empty()) {
    spread = *std::max_element(s.splitting.begin(), s.splitting.end()) -
             *std::min_element(s.splitting.begin(), s.splitting.end());
  }
  im.spacing = 2L * s.d + spread + 1;
  im.order = static_cast<std::size_t>(s.r * s.d) + 1;
  for (const auto& p : im.points) {
    Series euler(im.order, Rational(0));
    euler[0] = 1;
    const LaurentPoly tangent = tangent_character(s, p);
    for (const auto& [mono, c] : tangent.terms()) {
      const long e = specialize(mono, im.spacing);
      if (e == 0) {
        throw Error(ErrorCode::degenerate_weights, "specialization kills a weight at " + p.to_string());
      }
      // (1 - (1 + eps)^(-e)) / eps
      const Series shifted = binomial_series(-e, im.order + 1);
      Series factor(im.order, Rational(0));
      for (std::size_t k = 0; k < im.order; ++k) factor[k] = -shifted[k + 1];
      for (mpz_class copies = c.get_num(); copies > 0; --copies) euler = series_mul(euler, factor);
    }
    im.inverse_euler.push_back(series_inverse(euler));
  }
}

Localizer::~Localizer() = default;
Localizer::Localizer(Localizer&&) noexcept = default;
Localizer& Localizer::operator=(Localizer&&) noexcept = default;

const QuotSetup& Localizer::setup() const { return impl_->setup; }
std::size_t Localizer::fixed_point_count() const { return impl_->points.size(); }

Integer Localizer::chi(const TautSpec& spec) const {
  const auto& im = *impl_;
  spec.validate(im.setup);
  std::vector<std::shared_ptr<const std::vector<std::vector<Series>>>> tables;
  for (const auto& f : spec.factors) tables.push_back(im.wedge_table(f.twist, f.side));
  Series total(im.order, Rational(0));
  for (std::size_t p = 0; p < im.points.size(); ++p) {
    Series acc = im.inverse_euler[p];
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
      acc = series_mul(acc, (*tables[f])[p][static_cast<std::size_t>(spec.factors[f].wedge)]);
    }
    for (std::size_t k = 0; k < im.order; ++k) total[k] += acc[k];
  }
  for (std::size_t k = 0; k + 1 < im.order; ++k) {
    if (total[k] != 0) {
      throw Error(ErrorCode::non_collapse,
                  "pole of order " + std::to_string(im.order - 1 - k) + " survives for " + spec.to_string());
    }
  }
  const Rational& value = total.back();
  if (value.get_den() != 1) {
    throw Error(ErrorCode::non_collapse, "non-integral value " + value.get_str() + " for " + spec.to_string());
  }
  return value.get_num();
}

Integer localize_chi(const QuotSetup& setup, const TautSpec& spec) { return Localizer(setup).chi(spec); }

Integer ext_closed_form(int r, const std::vector<std::pair<int, int>>& duals, int m, int l) {
  Integer out = 1;
  int used = 0;
  for (const auto& [mi, li] : duals) {
    out *= binomial(m - mi + li, li);
    used += li;
  }
  if (used > l) return 0;
  return out * binomial(static_cast<long>(r) * (m + 1), l - used);
}

CheckReport verify_ext_euler(const Localizer& loc, const std::vector<std::pair<int, int>>& duals, int m,
                               int l) {
  Stopwatch sw;
  const auto& s = loc.setup();
  if (!s.is_trivial()) throw Error(ErrorCode::invalid_argument, "the closed form needs a trivial splitting");
  if (static_cast<int>(duals.size()) >= s.r) throw Error(ErrorCode::invalid_argument, "need k < r");
  if (m < 0) throw Error(ErrorCode::invalid_argument, "need m >= 0");
  for (const auto& [mi, li] : duals) {
    if (mi < 0 || mi > m) throw Error(ErrorCode::invalid_argument, "need m >= m_i >= 0");
  }
  TautSpec spec;
  CheckReport rep;
  rep.check = "taut_euler";
  rep.params["r"] = s.r;
  rep.params["d"] = s.d;
  rep.params["k"] = duals.size();
  for (std::size_t i = 0; i < duals.size(); ++i) {
    rep.params["m" + std::to_string(i + 1)] = duals[i].first;
    rep.params["l" + std::to_string(i + 1)] = duals[i].second;
    spec.factors.push_back({duals[i].first, duals[i].second, TautSide::dual});
  }
  rep.params["m"] = m;
  rep.params["l"] = l;
  spec.factors.push_back({m, l, TautSide::plain});
  rep.expected = ext_closed_form(s.r, duals, m, l).get_str();
  try {
    rep.computed = loc.chi(spec).get_str();
    rep.pass = rep.computed == rep.expected;
  } catch (const Error& e) {
    rep.computed = error_code_name(e.code());
    rep.note = e.what();
    rep.pass = false;
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

CheckReport verify_ext_euler(const QuotSetup& setup, const std::vector<std::pair<int, int>>& duals, int m,
                               int l) {
  return verify_ext_euler(Localizer(setup), duals, m, l);
}

}  // namespace quotkit
