#include <ostream>
#include <random>

#include "doctest.h"
#include "quotkit/error.hpp"
#include "quotkit/series.hpp"

using namespace quotkit;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

// Random Laurent polynomial in the given variables with small exponents.
LaurentPoly random_poly(std::mt19937& rng, const std::vector<VarId>& vars, int terms, int lo,
                        int hi) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  LaurentPoly out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (auto v : vars) m = m * Monomial::of(v, exp(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

TEST_CASE("variables intern and print stably") {
  CHECK(var::name(var::eps(3)) == "eps3");
  CHECK(var::name(var::p(0)) == "p0");
  CHECK(var::parse("kappa") == var::kappa());
  CHECK(var::parse("w8") == var::w(8));
  CHECK_FALSE(var::parse("w9").has_value());
  CHECK_FALSE(var::parse("x").has_value());
  CHECK(var::z() < var::q());
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
  const auto a = P("v1 + v2");
  const auto b = P("v2 + v1");
  CHECK(a == b);
  CHECK((a * a).to_string() == "v1^2 + 2*v1*v2 + v2^2");
  CHECK((a - b).is_zero());
  CHECK(P("1/2*v1 - 1/2*v1").is_zero());
  CHECK(P("v1^-1*v1").to_string() == "1");
  CHECK(P("3/6").to_string() == "1/2");
  CHECK(P("v1^-2 - 2").to_string() == "-2 + v1^-2");
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(LaurentPoly::parse("x1 + 1"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse(""), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("v1^"), Error);
}

TEST_CASE("print/parse round trip on random polynomials") {
  std::mt19937 rng(11);
  const std::vector<VarId> vars{var::z(), var::q(), var::v(1), var::eps(2), var::p(0)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, vars, 1 + trial % 6, -3, 3);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("exact division recovers factors and rejects non-divisors") {
  std::mt19937 rng(5);
  const std::vector<VarId> vars{var::u(1), var::t()};
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, vars, 4, -2, 2);
    auto b = random_poly(rng, vars, 3, -2, 2);
    if (b.is_zero()) continue;
    const auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(divide_exact(P("1"), P("1 - t")).has_value());
  CHECK_FALSE(divide_exact(P("t + 2"), P("1 - t")).has_value());
  CHECK(*divide_exact(P("1 - t^3"), P("1 - t")) == P("1 + t + t^2"));
}

TEST_CASE("expand_at: worked examples") {
  const RationalFunction one(LaurentPoly(1));
  auto s = expand_at(one, ExpansionPoint::infinity, 0);
  CHECK(s.window.size() == 1);
  CHECK(s.at(0) == LaurentPoly(1));

  const RationalFunction geo(LaurentPoly(1), P("1 - v1*z^-1"));
  s = expand_at(geo, ExpansionPoint::infinity, 2);
  CHECK(s.window.size() == 3);
  // Geometric-series oracle: coefficient of z^-k is v1^k.
  for (int k = 0; k <= 2; ++k) CHECK(s.at(-k) == LaurentPoly::variable(var::v(1), k));

  s = expand_at(geo, ExpansionPoint::zero, 1);
  CHECK(s.window.size() == 2);
  CHECK(s.at(0).is_zero());
  CHECK(s.at(1) == P("-v1^-1"));
}

TEST_CASE("expand_at: truncated series times denominator reproduces numerator") {
  std::mt19937 rng(3);
  const std::vector<VarId> vars{var::z(), var::v(1)};
  for (int trial = 0; trial < 40; ++trial) {
    const auto num = random_poly(rng, vars, 3, -2, 2);
    // Denominators with unit extremal coefficients at both points.
    const auto den = P("1 - v1*z^-1") * P("2 - 3*z*v1^-1") + LaurentPoly::variable(var::v(1));
    const RationalFunction f(num, den);
    for (auto pt : {ExpansionPoint::infinity, ExpansionPoint::zero}) {
      const int order = 5;
      const auto s = expand_at(f, pt, order);
      LaurentPoly series;
      for (const auto& [deg, c] : s.window) series += c * LaurentPoly::variable(var::z(), deg);
      const auto lhs = (series * den).coefficients_in(var::z());
      const auto rhs = num.coefficients_in(var::z());
      // Degrees unaffected by truncation: at infinity those above -order +
      // (top degree of den); at zero those below order + (bottom degree).
      const int limit = pt == ExpansionPoint::infinity ? -order + den.max_degree(var::z())
                                                        : order + den.min_degree(var::z());
      for (int d = -12; d <= 12; ++d) {
        const bool safe = pt == ExpansionPoint::infinity ? d >= limit : d <= limit;
        if (!safe) continue;
        auto li = lhs.find(d);
        auto ri = rhs.find(d);
        const LaurentPoly lv = li == lhs.end() ? LaurentPoly() : li->second;
        const LaurentPoly rv = ri == rhs.end() ? LaurentPoly() : ri->second;
        CHECK(lv == rv);
      }
    }
  }
}

TEST_CASE("expand_at: multiplicative on random inputs") {
  std::mt19937 rng(17);
  const std::vector<VarId> vars{var::z(), var::w(1)};
  const auto den_f = P("1 - w1*z^-1");
  const auto den_g = P("1 - 2*z*w1^-1");
  for (int trial = 0; trial < 25; ++trial) {
    const RationalFunction f(random_poly(rng, vars, 3, -1, 1), den_f);
    const RationalFunction g(random_poly(rng, vars, 3, -1, 1), den_g);
    for (auto pt : {ExpansionPoint::infinity, ExpansionPoint::zero}) {
      const int order = 4;
      const auto sf = expand_at(f, pt, order + 4);
      const auto sg = expand_at(g, pt, order + 4);
      const auto sfg = expand_at(f * g, pt, order);
      for (const auto& [deg, c] : sfg.window) {
        LaurentPoly conv;
        for (const auto& [a, ca] : sf.window) {
          const int b = deg - a;
          if (sg.window.count(b)) conv += ca * sg.window.at(b);
        }
        CHECK(conv == c);
      }
    }
  }
}

TEST_CASE("expand_at: non-unit extremal coefficient is NonExpandable") {
  const RationalFunction f(LaurentPoly(1), P("v1 + w1 - z^-1"));
  try {
    expand_at(f, ExpansionPoint::infinity, 2);
    FAIL("expected NonExpandable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_expandable);
  }
  CHECK_NOTHROW(expand_at(f, ExpansionPoint::zero, 2));
}

TEST_CASE("int_infty_minus_0: worked examples and properties") {
  CHECK(int_infty_minus_0(RationalFunction(LaurentPoly(1))).is_zero());
  CHECK(int_infty_minus_0(RationalFunction(P("z^-1"), P("1 - v1*z^-1"))) == P("v1^-1"));
  CHECK(int_infty_minus_0(RationalFunction(P("1 - w1*z^-1"), P("1 - v1*z^-1"))) ==
        P("1 - w1*v1^-1"));

  std::mt19937 rng(23);
  const std::vector<VarId> zv{var::z(), var::v(1), var::q()};
  for (int trial = 0; trial < 30; ++trial) {
    // Laurent polynomials in z integrate to zero.
    CHECK(int_infty_minus_0(RationalFunction(random_poly(rng, zv, 4, -3, 3))).is_zero());
    // Linearity over z-free coefficients.
    const auto den = P("1 - v1*z^-1") * P("1 - q*z");
    const RationalFunction f(random_poly(rng, zv, 3, -2, 2), den);
    const RationalFunction g(random_poly(rng, zv, 3, -2, 2), den);
    const auto a = random_poly(rng, {var::v(1), var::q()}, 2, -1, 1);
    const auto b = random_poly(rng, {var::v(1), var::q()}, 2, -1, 1);
    const auto lhs = int_infty_minus_0(RationalFunction(a) * f + RationalFunction(b) * g);
    const auto rhs = a * int_infty_minus_0(f) + b * int_infty_minus_0(g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rational functions compare by cross-multiplication") {
  const RationalFunction a(P("1 - v1^2"), P("1 - v1"));
  const RationalFunction b(P("1 + v1"));
  CHECK(a == b);
  CHECK(*a.as_polynomial() == P("1 + v1"));
}
