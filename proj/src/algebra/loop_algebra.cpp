#include "quotkit/loop_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "quotkit/error.hpp"
#include "quotkit/series.hpp"

namespace quotkit {

// ---------------------------------------------------------------- Generator

std::string Generator::to_string() const {
  const std::string idx = "[" + std::to_string(index) + "]";
  switch (kind) {
    case GeneratorKind::e:
      return "e" + idx;
    case GeneratorKind::f:
      return "f" + idx;
    case GeneratorKind::m:
      return "m" + idx;
    case GeneratorKind::m_r_inv:
      return "m" + idx + "^-1";
    case GeneratorKind::p:
      return "p" + idx;
    case GeneratorKind::p_inv:
      return "p" + idx + "^-1";
  }
  return "?";
}

// --------------------------------------------------------------- NormalWord

NormalWord NormalWord::identity(int r) {
  NormalWord w;
  w.m_exps.assign(static_cast<std::size_t>(r), 0);
  w.p_exps.assign(static_cast<std::size_t>(r) + 1, 0);
  return w;
}

Word NormalWord::letters() const {
  Word out;
  const int r = static_cast<int>(m_exps.size());
  for (int i : f_part) out.push_back(Generator::f(i));
  for (int j = 1; j <= r; ++j) {
    const int e = m_exps[static_cast<std::size_t>(j - 1)];
    for (int k = 0; k < e; ++k) out.push_back(Generator::m(j));
    for (int k = 0; k < -e; ++k) out.push_back(Generator::m_r_inv(j));
  }
  for (std::size_t j = 0; j < p_exps.size(); ++j) {
    const int e = p_exps[j];
    for (int k = 0; k < e; ++k) out.push_back(Generator::p(static_cast<int>(j)));
    for (int k = 0; k < -e; ++k) out.push_back(Generator::p_inv(static_cast<int>(j)));
  }
  for (int i : e_part) out.push_back(Generator::e(i));
  return out;
}

std::string NormalWord::to_string() const {
  std::vector<std::string> parts;
  auto power = [&parts](const std::string& base, int e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? base : base + "^" + std::to_string(e));
  };
  for (int i : f_part) parts.push_back("f[" + std::to_string(i) + "]");
  for (std::size_t j = 0; j < m_exps.size(); ++j) power("m[" + std::to_string(j + 1) + "]", m_exps[j]);
  for (std::size_t j = 0; j < p_exps.size(); ++j) power("p[" + std::to_string(j) + "]", p_exps[j]);
  for (int i : e_part) parts.push_back("e[" + std::to_string(i) + "]");
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += "*" + parts[k];
  return out;
}

// ----------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(const NormalWord& w, const QFrac& c) { add_term(w, c); }

QFrac AlgebraElement::coefficient(const NormalWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QFrac() : it->second;
}

void AlgebraElement::add_term(const NormalWord& w, const QFrac& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const QFrac& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

bool AlgebraElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_integral_laurent(); });
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c == QFrac(1)) {
      out += w.to_string();
    } else if (w.is_cartan() && w.to_string() == "1") {
      out += "(" + c.to_string() + ")";
    } else {
      out += "(" + c.to_string() + ")*" + w.to_string();
    }
  }
  return out;
}

// ----------------------------------------------------------- rewriting core

namespace {

// Internal alphabet without the central p generators.
enum Kind : std::int8_t { kF = 0, kM = 1, kMInv = 2, kE = 3 };

struct Letter {
  Kind kind;
  int index;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Letters = std::vector<Letter>;

struct LettersHash {
  std::size_t operator()(const Letters& w) const {
    std::size_t h = w.size();
    for (const auto& l : w) {
      const std::size_t v = static_cast<std::size_t>(l.kind) * 1000003u +
                            static_cast<std::size_t>(static_cast<unsigned>(l.index));
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Rewrite {
  Letters replacement;
  std::vector<int> p_shift;  // empty when no central factor
  QFrac coefficient;
};

QFrac one_minus_q() { return QFrac(QPoly::one_minus_q()); }

AlgebraElement shift_p(const AlgebraElement& x, const std::vector<int>& p_shift) {
  bool trivial = std::all_of(p_shift.begin(), p_shift.end(), [](int e) { return e == 0; });
  if (trivial) return x;
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    NormalWord nw = w;
    for (std::size_t j = 0; j < p_shift.size(); ++j) nw.p_exps[j] += p_shift[j];
    out.add_term(nw, c);
  }
  return out;
}

}  // namespace

struct LoopAlgebra::Impl {
  int r;

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<Letters, AlgebraElement, LettersHash> cache;

  mutable std::mutex h_mutex;
  mutable std::map<std::pair<int, int>, LaurentPoly> h_cache;  // (sign, k)
  mutable std::map<int, SeriesSlice> h_slices;                // sign -> slice
  mutable std::map<int, AlgebraElement> cartan_cache;

  explicit Impl(int rank) : r(rank) {}

  Letters cartan_letters(const NormalWord& w) const {
    Letters out;
    for (int j = 1; j <= r; ++j) {
      const int e = w.m_exps[static_cast<std::size_t>(j - 1)];
      for (int k = 0; k < e; ++k) out.push_back({kM, j});
      for (int k = 0; k < -e; ++k) out.push_back({kMInv, r});
    }
    return out;
  }

  int m_key(const Letter& l) const { return l.kind == kMInv ? r + 1 : l.index; }

  LaurentPoly h_poly(HSign sign, int k) const;
  AlgebraElement cartan_element(const LaurentPoly& p) const;
  AlgebraElement commutator_cartan(int l) const;

  // Rewrites for the pair (a, b), or false when the pair is already ordered.
  bool rule(const Letter& a, const Letter& b, std::vector<Rewrite>& out) const {
    const QFrac omq = one_minus_q();
    auto m_or_nothing = [](int j) { return j > 0 ? Letters{{kM, j}} : Letters{}; };
    const bool a_cartan = a.kind == kM || a.kind == kMInv;
    const bool b_cartan = b.kind == kM || b.kind == kMInv;

    if (a.kind == kE && b.kind == kE) {
      if (a.index <= b.index) return false;
      const int hi = a.index;
      const int lo = b.index;
      out.push_back({{b, a}, {}, QFrac::q_power(1)});
      for (int k = lo + 1; k <= hi - 1; ++k) out.push_back({{{kE, k}, {kE, hi + lo - k}}, {}, -omq});
      return true;
    }
    if (a.kind == kF && b.kind == kF) {
      if (a.index >= b.index) return false;
      const int i = a.index;
      const int j = b.index;
      out.push_back({{b, a}, {}, QFrac::q_power(1)});
      for (int k = i + 1; k <= j - 1; ++k) out.push_back({{{kF, i + j - k}, {kF, k}}, {}, -omq});
      return true;
    }
    if (a_cartan && b_cartan) {
      const bool cancels = (a.kind == kMInv && b.kind == kM && b.index == r) ||
                           (b.kind == kMInv && a.kind == kM && a.index == r);
      if (cancels) {
        out.push_back({{}, {}, QFrac(1)});
        return true;
      }
      if (m_key(a) <= m_key(b)) return false;
      out.push_back({{b, a}, {}, QFrac(1)});
      return true;
    }
    if (a.kind == kE && b_cartan) {
      if (b.kind == kMInv) {
        out.push_back({{b, a}, {}, QFrac::q_power(1)});
      } else if (b.index == r) {
        out.push_back({{b, a}, {}, QFrac::q_power(-1)});
      } else {
        const int j = b.index;
        out.push_back({{b, a}, {}, QFrac(1)});
        for (int k = 1; k <= j; ++k) {
          Letters repl{{kE, a.index + k}};
          auto tail = m_or_nothing(j - k);
          repl.insert(repl.end(), tail.begin(), tail.end());
          out.push_back({repl, {}, k % 2 == 1 ? omq : -omq});
        }
      }
      return true;
    }
    if (a_cartan && b.kind == kF) {
      if (a.kind == kMInv) {
        out.push_back({{b, a}, {}, QFrac::q_power(1)});
      } else if (a.index == r) {
        out.push_back({{b, a}, {}, QFrac::q_power(-1)});
      } else {
        const int j = a.index;
        out.push_back({{b, a}, {}, QFrac(1)});
        for (int k = 1; k <= j; ++k) {
          Letters repl = m_or_nothing(j - k);
          repl.push_back({kF, b.index + k});
          out.push_back({repl, {}, k % 2 == 1 ? omq : -omq});
        }
      }
      return true;
    }
    if (a.kind == kE && b.kind == kF) {
      out.push_back({{b, a}, {}, QFrac(1)});
      const AlgebraElement h = commutator_cartan(a.index + b.index);
      for (const auto& [w, c] : h.terms()) out.push_back({cartan_letters(w), w.p_exps, omq * c});
      return true;
    }
    return false;
  }

  NormalWord to_normal(const Letters& w) const {
    NormalWord nw = NormalWord::identity(r);
    for (const auto& l : w) {
      switch (l.kind) {
        case kF:
          nw.f_part.push_back(l.index);
          break;
        case kM:
          nw.m_exps[static_cast<std::size_t>(l.index - 1)] += 1;
          break;
        case kMInv:
          nw.m_exps[static_cast<std::size_t>(r - 1)] -= 1;
          break;
        case kE:
          nw.e_part.push_back(l.index);
          break;
      }
    }
    return nw;
  }

  AlgebraElement reduce(const Letters& w, std::size_t& steps, std::size_t budget) const {
    {
      std::lock_guard lock(cache_mutex);
      auto it = cache.find(w);
      if (it != cache.end()) return it->second;
    }
    if (++steps > budget) {
      throw std::logic_error("rewriting exceeded its step bound; the reduction order is broken");
    }
    AlgebraElement result;
    std::vector<Rewrite> rewrites;
    std::size_t pos = 0;
    for (; pos + 1 < w.size(); ++pos) {
      if (rule(w[pos], w[pos + 1], rewrites)) break;
    }
    if (rewrites.empty()) {
      result = AlgebraElement(to_normal(w));
    } else {
      for (const auto& rw : rewrites) {
        Letters next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rw.replacement.begin(), rw.replacement.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        AlgebraElement sub = reduce(next, steps, budget);
        if (!rw.p_shift.empty()) sub = shift_p(sub, rw.p_shift);
        result += sub * rw.coefficient;
      }
    }
    std::lock_guard lock(cache_mutex);
    cache.emplace(w, result);
    return result;
  }

  // Lexicographic termination measure, flattened to a single size bound:
  // (e,f)-inversions, Cartan weight on the wrong side, index spread.
  std::size_t step_budget(const Letters& w) const {
    std::size_t inversions = 0;
    std::size_t weight = 0;
    std::size_t spread = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t b = a + 1; b < w.size(); ++b) {
        if (w[a].kind > w[b].kind) ++inversions;
        if ((w[a].kind == kE || w[a].kind == kF) && w[a].kind == w[b].kind) {
          spread += static_cast<std::size_t>(std::abs(w[a].index - w[b].index));
        }
      }
      if (w[a].kind == kM) weight += static_cast<std::size_t>(w[a].index);
    }
    const std::size_t measure = 1 + inversions + weight + spread;
    return 2'000'000 * measure;
  }

  AlgebraElement normal_form(const Letters& w, const std::vector<int>& p_exps) const {
    std::size_t steps = 0;
    return shift_p(reduce(w, steps, step_budget(w)), p_exps);
  }

  void split(std::span<const Generator> word, Letters& letters, std::vector<int>& p_exps) const;
};

// ------------------------------------------------------------- h-series

LaurentPoly LoopAlgebra::Impl::h_poly(HSign sign, int k) const {
  const int s = sign == HSign::plus ? 0 : 1;
  if (sign == HSign::plus && k < 0) {
    throw Error(ErrorCode::out_of_range, "h+ has no coefficient at z^" + std::to_string(-k));
  }
  if (sign == HSign::minus && k < r) {
    throw Error(ErrorCode::out_of_range,
                "h- starts at z^" + std::to_string(r) + "; no coefficient at z^" + std::to_string(k));
  }
  std::lock_guard lock(h_mutex);
  auto cached = h_cache.find({s, k});
  if (cached != h_cache.end()) return cached->second;

  auto slice_it = h_slices.find(s);
  if (slice_it == h_slices.end() || slice_it->second.order < k) {
    const LaurentPoly q = LaurentPoly::variable(var::q());
    LaurentPoly m_z;
    LaurentPoly m_zq;
    LaurentPoly p_z;
    for (int j = 0; j <= r; ++j) {
      const LaurentPoly mj = j == 0 ? LaurentPoly(1) : LaurentPoly::variable(var::m(j));
      const LaurentPoly zj = LaurentPoly::variable(var::z(), -j);
      const LaurentPoly sign_j(j % 2 == 0 ? 1 : -1);
      m_z += sign_j * mj * zj;
      m_zq += sign_j * mj * zj * q.pow(-j);
      p_z += LaurentPoly::variable(var::p(j)) * zj;
    }
    const RationalFunction h(LaurentPoly::variable(var::m(r)) * p_z, m_z * m_zq);
    const int order = std::max(k, slice_it == h_slices.end() ? 8 : 2 * slice_it->second.order);
    SeriesSlice slice =
        expand_at(h, sign == HSign::plus ? ExpansionPoint::infinity : ExpansionPoint::zero, order);
    slice_it = h_slices.insert_or_assign(s, std::move(slice)).first;
  }
  LaurentPoly value = slice_it->second.at(sign == HSign::plus ? -k : k);
  h_cache.emplace(std::pair{s, k}, value);
  return value;
}

AlgebraElement LoopAlgebra::Impl::cartan_element(const LaurentPoly& p) const {
  AlgebraElement out;
  for (const auto& [mono, c] : p.terms()) {
    NormalWord w = NormalWord::identity(r);
    int q_exp = 0;
    for (const auto& f : mono.factors()) {
      if (f.var == var::q()) {
        q_exp = f.exp;
        continue;
      }
      bool matched = false;
      for (int j = 1; j <= r && !matched; ++j) {
        if (f.var == var::m(j)) {
          if (f.exp < 0 && j != r) {
            throw Error(ErrorCode::invalid_argument, "only m_r is invertible");
          }
          w.m_exps[static_cast<std::size_t>(j - 1)] = f.exp;
          matched = true;
        }
      }
      for (int j = 0; j <= r && !matched; ++j) {
        if (f.var == var::p(j)) {
          if (f.exp < 0 && j != 0 && j != r) {
            throw Error(ErrorCode::invalid_argument, "only p_0 and p_r are invertible");
          }
          w.p_exps[static_cast<std::size_t>(j)] = f.exp;
          matched = true;
        }
      }
      if (!matched) {
        throw Error(ErrorCode::invalid_argument, "not a Cartan monomial: " + mono.to_string());
      }
    }
    out.add_term(w, QFrac(c) * QFrac::q_power(q_exp));
  }
  return out;
}

AlgebraElement LoopAlgebra::Impl::commutator_cartan(int l) const {
  {
    std::lock_guard lock(h_mutex);
    auto it = cartan_cache.find(l);
    if (it != cartan_cache.end()) return it->second;
  }
  AlgebraElement value;
  if (l >= 0) {
    value = cartan_element(h_poly(HSign::plus, l));
  } else if (l <= -r) {
    value = AlgebraElement() - cartan_element(h_poly(HSign::minus, -l));
  }
  std::lock_guard lock(h_mutex);
  return cartan_cache.emplace(l, std::move(value)).first->second;
}

void LoopAlgebra::Impl::split(std::span<const Generator> word, Letters& letters,
                              std::vector<int>& p_exps) const {
  p_exps.assign(static_cast<std::size_t>(r) + 1, 0);
  for (const auto& g : word) {
    switch (g.kind) {
      case GeneratorKind::e:
        letters.push_back({kE, g.index});
        break;
      case GeneratorKind::f:
        letters.push_back({kF, g.index});
        break;
      case GeneratorKind::m:
        if (g.index < 0 || g.index > r) {
          throw Error(ErrorCode::invalid_argument, "m index out of range: " + g.to_string());
        }
        if (g.index > 0) letters.push_back({kM, g.index});
        break;
      case GeneratorKind::m_r_inv:
        if (g.index != r) throw Error(ErrorCode::invalid_argument, "only m_r is invertible");
        letters.push_back({kMInv, r});
        break;
      case GeneratorKind::p:
        if (g.index < 0 || g.index > r) {
          throw Error(ErrorCode::invalid_argument, "p index out of range: " + g.to_string());
        }
        p_exps[static_cast<std::size_t>(g.index)] += 1;
        break;
      case GeneratorKind::p_inv:
        if (g.index != 0 && g.index != r) {
          throw Error(ErrorCode::invalid_argument, "only p_0 and p_r are invertible");
        }
        p_exps[static_cast<std::size_t>(g.index)] -= 1;
        break;
    }
  }
}

// -------------------------------------------------------------- LoopAlgebra

LoopAlgebra::LoopAlgebra(int r) {
  if (r < 1 || r > kMaxRank) {
    throw Error(ErrorCode::invalid_argument, "rank must lie in 1.." + std::to_string(kMaxRank));
  }
  impl_ = std::make_unique<Impl>(r);
}

LoopAlgebra::~LoopAlgebra() = default;
LoopAlgebra::LoopAlgebra(LoopAlgebra&&) noexcept = default;
LoopAlgebra& LoopAlgebra::operator=(LoopAlgebra&&) noexcept = default;

int LoopAlgebra::rank() const { return impl_->r; }

AlgebraElement LoopAlgebra::normal_form(std::span<const Generator> word) const {
  Letters letters;
  std::vector<int> p_exps;
  impl_->split(word, letters, p_exps);
  return impl_->normal_form(letters, p_exps);
}

AlgebraElement LoopAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      Word word = wx.letters();
      const Word tail = wy.letters();
      word.insert(word.end(), tail.begin(), tail.end());
      out += normal_form(word) * (cx * cy);
    }
  }
  return out;
}

AlgebraElement LoopAlgebra::commutator_div(const AlgebraElement& x, const AlgebraElement& y) const {
  const AlgebraElement diff = multiply(x, y) - multiply(y, x);
  const QFrac omq = one_minus_q();
  AlgebraElement out;
  for (const auto& [w, c] : diff.terms()) {
    if (c.valuation_at_one() < 1) {
      throw Error(ErrorCode::not_divisible,
                  "coefficient " + c.to_string() + " of " + w.to_string() + " is not a multiple of 1 - q");
    }
    out.add_term(w, c / omq);
  }
  return out;
}

LaurentPoly LoopAlgebra::h_coeff_poly(HSign sign, int k) const { return impl_->h_poly(sign, k); }

AlgebraElement LoopAlgebra::h_coeff(HSign sign, int k) const {
  return impl_->cartan_element(impl_->h_poly(sign, k));
}

AlgebraElement LoopAlgebra::commutator_cartan(int l) const { return impl_->commutator_cartan(l); }

LaurentPoly q_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "q_factorial needs n >= 0");
  const LaurentPoly q = LaurentPoly::variable(var::q());
  LaurentPoly out(1);
  LaurentPoly bracket;
  LaurentPoly q_power(1);
  for (int k = 1; k <= n; ++k) {
    bracket += q_power;
    q_power *= q;
    out *= bracket;
  }
  return out;
}

DividedPowerResult LoopAlgebra::divided_power_product(int i, int n, int j, int m) const {
  if (n < 0 || m < 0) throw Error(ErrorCode::invalid_argument, "divided powers need n, m >= 0");
  Word word(static_cast<std::size_t>(n), Generator::e(i));
  word.insert(word.end(), static_cast<std::size_t>(m), Generator::e(j));
  const QFrac norm = QFrac::from_laurent(q_factorial(n) * q_factorial(m));
  DividedPowerResult out;
  out.element = normal_form(word) * (QFrac(1) / norm);
  for (const auto& [w, c] : out.element.terms()) {
    const bool integral = c.is_integral_laurent();
    out.integrality.emplace_back(w, integral);
    out.all_integral = out.all_integral && integral;
  }
  return out;
}

AlgebraElement LoopAlgebra::quadratic_defect(int i, int j) const {
  const QFrac q = QFrac::q_power(1);
  AlgebraElement out = normal_form({Generator::e(i + 1), Generator::e(j)});
  out -= normal_form({Generator::e(i), Generator::e(j + 1)}) * q;
  out -= normal_form({Generator::e(j), Generator::e(i + 1)}) * q;
  out += normal_form({Generator::e(j + 1), Generator::e(i)});
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += "*";
    out += g.to_string();
  }
  return out;
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

CheckReport LoopAlgebra::fuzz_associativity(int max_len, int index_bound, int trials,
                                            std::uint64_t seed, int threads) const {
  if (max_len < 1 || index_bound < 0 || trials < 0) {
    throw Error(ErrorCode::invalid_argument, "fuzz needs max_len >= 1, index_bound >= 0, trials >= 0");
  }
  Stopwatch sw;
  const int r = rank();
  CheckReport rep;
  rep.check = "associativity_fuzz";
  rep.params["r"] = r;
  rep.params["max_len"] = max_len;
  rep.params["index_bound"] = index_bound;
  rep.params["trials"] = trials;
  rep.params["seed"] = seed;

  auto random_word = [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> idx(-index_bound, index_bound);
    std::uniform_int_distribution<int> m_idx(1, r);
    std::uniform_int_distribution<int> p_idx(0, r);
    Word w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      switch (kind(rng)) {
        case 0:
          w.push_back(Generator::e(idx(rng)));
          break;
        case 1:
          w.push_back(Generator::f(idx(rng)));
          break;
        case 2:
          w.push_back(Generator::m(m_idx(rng)));
          break;
        case 3:
          w.push_back(Generator::m_r_inv(r));
          break;
        default:
          w.push_back(Generator::p(p_idx(rng)));
          break;
      }
    }
    return w;
  };

  std::vector<char> ok(static_cast<std::size_t>(trials), 0);
  std::vector<std::string> witness(static_cast<std::size_t>(trials));
  parallel_for(trials, threads, [&](int t) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(t))));
    const Word u = random_word(rng);
    const Word v = random_word(rng);
    const Word w = random_word(rng);
    const AlgebraElement nu = normal_form(u);
    const AlgebraElement nv = normal_form(v);
    const AlgebraElement nw = normal_form(w);
    const AlgebraElement left = multiply(multiply(nu, nv), nw);
    const AlgebraElement right = multiply(nu, multiply(nv, nw));
    ok[static_cast<std::size_t>(t)] = left == right;
    if (!(left == right)) {
      witness[static_cast<std::size_t>(t)] =
          "(" + word_text(u) + ")(" + word_text(v) + ")(" + word_text(w) + ")";
    }
  });
  const int passed = static_cast<int>(std::count(ok.begin(), ok.end(), 1));

  int quad_total = 0;
  int quad_passed = 0;
  std::string quad_witness;
  for (int i = -index_bound; i <= index_bound; ++i) {
    for (int j = -index_bound; j <= index_bound; ++j) {
      ++quad_total;
      const AlgebraElement d = quadratic_defect(i, j);
      if (d.is_zero()) {
        ++quad_passed;
      } else if (quad_witness.empty()) {
        quad_witness = "quadratic identity fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
      }
    }
  }

  rep.expected = "associative on " + std::to_string(trials) + " trials; quadratic identity on " +
                 std::to_string(quad_total) + " pairs";
  rep.computed = std::to_string(passed) + "/" + std::to_string(trials) + " associative; " +
                 std::to_string(quad_passed) + "/" + std::to_string(quad_total) + " quadratic";
  rep.pass = passed == trials && quad_passed == quad_total;
  std::string note;
  for (int t = 0; t < trials; ++t) {
    if (!ok[static_cast<std::size_t>(t)]) {
      note = "first non-associative triple (trial " + std::to_string(t) + "): " +
             witness[static_cast<std::size_t>(t)];
      break;
    }
  }
  if (!quad_witness.empty()) note += (note.empty() ? "" : "; ") + quad_witness;
  rep.note = note;
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

std::vector<CheckReport> LoopAlgebra::verify_relations(int index_bound) const {
  const int r = rank();
  const QFrac omq = one_minus_q();
  const QFrac q = QFrac::q_power(1);
  std::vector<CheckReport> out;
  auto nf = [this](std::initializer_list<Generator> w) { return normal_form(w); };
  auto record = [&](const std::string& name, int i, int j, const AlgebraElement& defect, Stopwatch& sw) {
    CheckReport rep;
    rep.check = name;
    rep.params["r"] = r;
    rep.params["i"] = i;
    rep.params["j"] = j;
    rep.expected = "0";
    rep.computed = defect.to_string();
    rep.pass = defect.is_zero();
    rep.elapsed_ms = sw.elapsed_ms();
    out.push_back(std::move(rep));
  };
  auto m_gen = [r](int j) { return j == 0 ? Word{} : Word{Generator::m(j)}; };
  auto join = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      Stopwatch sw;
      record("rel0", i, j, nf({Generator::m(i), Generator::m(j)}) - nf({Generator::m(j), Generator::m(i)}), sw);
    }
  }
  {
    Stopwatch sw;
    const AlgebraElement one(NormalWord::identity(r));
    record("rel0", r, -r, nf({Generator::m(r), Generator::m_r_inv(r)}) - one, sw);
    record("rel0", -r, r, nf({Generator::m_r_inv(r), Generator::m(r)}) - one, sw);
  }

  for (int i = -index_bound; i <= index_bound; ++i) {
    for (int j = i; j <= index_bound; ++j) {
      Stopwatch sw;
      AlgebraElement d = nf({Generator::e(i), Generator::e(j)}) - nf({Generator::e(j), Generator::e(i)});
      for (int k = i; k <= j - 1; ++k) d -= nf({Generator::e(k), Generator::e(i + j - k)}) * omq;
      record("rel1", i, j, d, sw);
    }
  }
  for (int i = -index_bound; i <= index_bound; ++i) {
    for (int j = i; j <= index_bound; ++j) {
      Stopwatch sw;
      AlgebraElement d = nf({Generator::f(j), Generator::f(i)}) - nf({Generator::f(i), Generator::f(j)});
      for (int k = i; k <= j - 1; ++k) d -= nf({Generator::f(i + j - k), Generator::f(k)}) * omq;
      record("rel2", i, j, d, sw);
    }
  }
  for (int i = -index_bound; i <= index_bound; ++i) {
    for (int j = 0; j <= r; ++j) {
      Stopwatch sw;
      AlgebraElement d = normal_form(join({Generator::e(i)}, m_gen(j))) -
                         normal_form(join(m_gen(j), {Generator::e(i)}));
      for (int k = 1; k <= j; ++k) {
        const QFrac c = k % 2 == 1 ? omq : -omq;
        d -= normal_form(join({Generator::e(i + k)}, m_gen(j - k))) * c;
      }
      record("rel3", i, j, d, sw);
    }
  }
  for (int i = -index_bound; i <= index_bound; ++i) {
    for (int j = 0; j <= r; ++j) {
      Stopwatch sw;
      AlgebraElement d = normal_form(join(m_gen(j), {Generator::f(i)})) -
                         normal_form(join({Generator::f(i)}, m_gen(j)));
      for (int k = 1; k <= j; ++k) {
        const QFrac c = k % 2 == 1 ? omq : -omq;
        d -= normal_form(join(m_gen(j - k), {Generator::f(i + k)})) * c;
      }
      record("rel4", i, j, d, sw);
    }
  }
  for (int i = -index_bound; i <= index_bound; ++i) {
    Stopwatch sw;
    record("rel5", i, r, nf({Generator::m(r), Generator::e(i)}) - nf({Generator::e(i), Generator::m(r)}) * q, sw);
  }
  for (int i = -index_bound; i <= index_bound; ++i) {
    Stopwatch sw;
    record("rel6", i, r, nf({Generator::f(i), Generator::m(r)}) - nf({Generator::m(r), Generator::f(i)}) * q, sw);
  }
  for (int i = -index_bound; i <= index_bound; ++i) {
    for (int j = -index_bound; j <= index_bound; ++j) {
      Stopwatch sw;
      AlgebraElement d = nf({Generator::e(i), Generator::f(j)}) - nf({Generator::f(j), Generator::e(i)});
      d -= commutator_cartan(i + j) * omq;
      record("rel7", i, j, d, sw);
    }
  }
  return out;
}

std::vector<CheckReport> LoopAlgebra::verify_h_series(int order) const {
  const int r = rank();
  std::vector<CheckReport> out;
  const LaurentPoly q = LaurentPoly::variable(var::q());
  LaurentPoly m_z;
  LaurentPoly m_zq;
  LaurentPoly target;
  for (int j = 0; j <= r; ++j) {
    const LaurentPoly mj = j == 0 ? LaurentPoly(1) : LaurentPoly::variable(var::m(j));
    const LaurentPoly zj = LaurentPoly::variable(var::z(), -j);
    const LaurentPoly sign_j(j % 2 == 0 ? 1 : -1);
    m_z += sign_j * mj * zj;
    m_zq += sign_j * mj * zj * q.pow(-j);
    target += LaurentPoly::variable(var::m(r)) * LaurentPoly::variable(var::p(j)) * zj;
  }
  const LaurentPoly denominator = m_z * m_zq;
  auto make = [&](const std::string& name, const std::string& expected, const std::string& computed,
                  bool pass, Stopwatch& sw) {
    CheckReport rep;
    rep.check = name;
    rep.params["r"] = r;
    rep.params["order"] = order;
    rep.expected = expected;
    rep.computed = computed;
    rep.pass = pass;
    rep.elapsed_ms = sw.elapsed_ms();
    out.push_back(std::move(rep));
  };

  {
    Stopwatch sw;
    const LaurentPoly h0 = h_coeff_poly(HSign::plus, 0);
    const LaurentPoly expected = LaurentPoly::variable(var::m(r)) * LaurentPoly::variable(var::p(0));
    make("h_plus_leading", expected.to_string(), h0.to_string(), h0 == expected, sw);
  }
  {
    Stopwatch sw;
    bool shifted = true;
    for (int k = 0; k < r; ++k) {
      try {
        h_coeff_poly(HSign::minus, k);
        shifted = false;
      } catch (const Error& e) {
        shifted = shifted && e.code() == ErrorCode::out_of_range;
      }
    }
    const LaurentPoly lead = h_coeff_poly(HSign::minus, r);
    const LaurentPoly expected = LaurentPoly::variable(var::p(r)) * q.pow(r) *
                                 LaurentPoly::variable(var::m(r), -1);
    make("h_minus_leading", "starts at z^" + std::to_string(r) + " with " + expected.to_string(),
         (shifted ? "starts at z^" + std::to_string(r) + " with " : "nonzero below z^" + std::to_string(r) + "; ") +
             lead.to_string(),
         shifted && lead == expected, sw);
  }
  {
    Stopwatch sw;
    LaurentPoly series;
    for (int k = 0; k <= order; ++k) {
      series += h_coeff_poly(HSign::plus, k) * LaurentPoly::variable(var::z(), -k);
    }
    const auto product = (denominator * series).coefficients_in(var::z());
    const auto goal = target.coefficients_in(var::z());
    bool pass = true;
    int bad = 1;
    for (int d = 0; d <= order && pass; ++d) {
      auto pi = product.find(-d);
      auto gi = goal.find(-d);
      const LaurentPoly pv = pi == product.end() ? LaurentPoly() : pi->second;
      const LaurentPoly gv = gi == goal.end() ? LaurentPoly() : gi->second;
      if (!(pv == gv)) {
        pass = false;
        bad = -d;
      }
    }
    make("h_plus_series", "m(z)m(zq)h+(z) = m_r P(z) through z^-" + std::to_string(order),
         pass ? "equal through z^-" + std::to_string(order) : "differs at z^" + std::to_string(bad), pass, sw);
  }
  {
    Stopwatch sw;
    LaurentPoly series;
    const int top = order + 2 * r;
    for (int k = r; k <= top; ++k) {
      series += h_coeff_poly(HSign::minus, k) * LaurentPoly::variable(var::z(), k);
    }
    const auto product = (denominator * series).coefficients_in(var::z());
    const auto goal = target.coefficients_in(var::z());
    bool pass = true;
    int bad = 0;
    for (int d = -r; d <= order && pass; ++d) {
      auto pi = product.find(d);
      auto gi = goal.find(d);
      const LaurentPoly pv = pi == product.end() ? LaurentPoly() : pi->second;
      const LaurentPoly gv = gi == goal.end() ? LaurentPoly() : gi->second;
      if (!(pv == gv)) {
        pass = false;
        bad = d;
      }
    }
    make("h_minus_series", "m(z)m(zq)h-(z) = m_r P(z) through z^" + std::to_string(order),
         pass ? "equal through z^" + std::to_string(order) : "differs at z^" + std::to_string(bad), pass, sw);
  }
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::parse_error, "bad integer in '" + std::string(context) + "'");
  }
  return value;
}

// Splits at top-level occurrences of sep (outside () and []).
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw Error(ErrorCode::parse_error, "unbalanced brackets");
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorCode::parse_error, "unbalanced brackets");
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

std::vector<Generator> LoopAlgebra::parse_word(std::string_view text) const {
  const int r = rank();
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty word");
  Word out;
  if (text == "1") return out;
  for (auto factor : split_top(text, '*')) {
    factor = trim(factor);
    const auto open = factor.find('[');
    const auto close = factor.find(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      throw Error(ErrorCode::parse_error, "expected name[index] in '" + std::string(factor) + "'");
    }
    const auto name = trim(factor.substr(0, open));
    const int index = parse_int(factor.substr(open + 1, close - open - 1), factor);
    int power = 1;
    auto rest = trim(factor.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '^') throw Error(ErrorCode::parse_error, "expected '^' in '" + std::string(factor) + "'");
      power = parse_int(rest.substr(1), factor);
    }
    auto repeat = [&](Generator g, int times) {
      for (int k = 0; k < times; ++k) out.push_back(g);
    };
    if (name == "e" || name == "f") {
      if (power < 0) throw Error(ErrorCode::parse_error, "e and f are not invertible");
      repeat(name == "e" ? Generator::e(index) : Generator::f(index), power);
    } else if (name == "m") {
      if (index < 0 || index > r) throw Error(ErrorCode::parse_error, "m index out of range in '" + std::string(factor) + "'");
      if (power < 0 && index != r) throw Error(ErrorCode::parse_error, "only m[r] is invertible");
      if (index == 0) continue;
      if (power >= 0) {
        repeat(Generator::m(index), power);
      } else {
        repeat(Generator::m_r_inv(r), -power);
      }
    } else if (name == "p") {
      if (index < 0 || index > r) throw Error(ErrorCode::parse_error, "p index out of range in '" + std::string(factor) + "'");
      if (power < 0 && index != 0 && index != r) {
        throw Error(ErrorCode::parse_error, "only p[0] and p[r] are invertible");
      }
      if (power >= 0) {
        repeat(Generator::p(index), power);
      } else {
        repeat(Generator::p_inv(index), -power);
      }
    } else {
      throw Error(ErrorCode::parse_error, "unknown generator '" + std::string(name) + "'");
    }
  }
  return out;
}

AlgebraElement LoopAlgebra::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty element");
  if (text == "0") return AlgebraElement();
  // Terms are separated by top-level '+' or '-' signs.
  std::vector<std::pair<bool, std::string_view>> terms;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\0';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool exponent_sign = c == '-' && i > 0 && text[i - 1] == '^';
    if (i == text.size() || (depth == 0 && !exponent_sign && (c == '+' || c == '-'))) {
      auto piece = trim(text.substr(start, i - start));
      if (!piece.empty()) {
        terms.emplace_back(negative, piece);
      } else if (i != 0 && i != text.size()) {
        throw Error(ErrorCode::parse_error, "empty term in '" + std::string(text) + "'");
      }
      negative = c == '-';
      start = i + 1;
    }
  }
  AlgebraElement out;
  for (const auto& [neg, term] : terms) {
    QFrac coef(1);
    std::string_view word = term;
    if (term.front() == '(') {
      int d = 0;
      std::size_t close = 0;
      for (std::size_t i = 0; i < term.size(); ++i) {
        if (term[i] == '(') ++d;
        if (term[i] == ')' && --d == 0) {
          close = i;
          break;
        }
      }
      if (close == 0) throw Error(ErrorCode::parse_error, "unbalanced coefficient in '" + std::string(term) + "'");
      coef = QFrac::parse(term.substr(1, close - 1));
      auto rest = trim(term.substr(close + 1));
      if (rest.empty()) {
        word = "1";
      } else if (rest.front() == '*') {
        word = rest.substr(1);
      } else if (rest.front() == '/') {
        // "(num)/(den)" without a word
        coef = QFrac::parse(term);
        word = "1";
      } else {
        throw Error(ErrorCode::parse_error, "expected '*' after coefficient in '" + std::string(term) + "'");
      }
    }
    if (neg) coef = -coef;
    out += normal_form(parse_word(word)) * coef;
  }
  return out;
}

}  // namespace quotkit
