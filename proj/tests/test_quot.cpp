#include <functional>

#include "doctest.h"
#include "quotkit/error.hpp"
#include "quotkit/quot.hpp"
#include "quotkit/series.hpp"

using namespace quotkit;

namespace {

// Pascal's rule, independent of the GMP binomial.
long pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = next;
  }
  return row[static_cast<std::size_t>(k)];
}

// Elementary symmetric polynomial of the terms of a character.
LaurentPoly wedge(const LaurentPoly& chi, int l, bool dual) {
  std::vector<LaurentPoly> e{LaurentPoly(1)};
  for (const auto& [mono, c] : chi.terms()) {
    LaurentPoly w;
    w.add_term(mono, 1);
    if (dual) w = w.unit_inverse();
    for (int copy = 0; copy < c; ++copy) {
      e.push_back(LaurentPoly());
      for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * w;
    }
  }
  return l < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(l)] : LaurentPoly();
}

// Unrestricted multivariate localization sum, collapsed by exact division.
LaurentPoly equivariant_chi(const QuotSetup& s, const TautSpec& spec) {
  RationalFunction total;
  for (const auto& p : enumerate_fixed_points(s)) {
    LaurentPoly num(1);
    for (const auto& f : spec.factors) {
      num *= wedge(taut_fiber_character(s, p, f.twist), f.wedge, f.side == TautSide::dual);
    }
    LaurentPoly den(1);
    const LaurentPoly tangent = tangent_character(s, p);
    for (const auto& [mono, c] : tangent.terms()) {
      LaurentPoly w;
      w.add_term(mono, 1);
      for (int copy = 0; copy < c; ++copy) den *= LaurentPoly(1) - w.unit_inverse();
    }
    total += RationalFunction(num, den);
  }
  const auto poly = total.as_polynomial();
  REQUIRE(poly.has_value());
  return *poly;
}

}  // namespace

TEST_CASE("fixed point counts") {
  CHECK(enumerate_fixed_points(QuotSetup::trivial(1, 2)).size() == 3);
  CHECK(enumerate_fixed_points(QuotSetup::trivial(2, 1)).size() == 4);
  CHECK(enumerate_fixed_points(QuotSetup::trivial(2, 2)).size() == 10);
  for (int r = 1; r <= 3; ++r) {
    for (int d = 0; d <= 6; ++d) {
      const auto pts = enumerate_fixed_points(QuotSetup::trivial(r, d));
      CHECK(static_cast<long>(pts.size()) == pascal(d + 2 * r - 1, 2 * r - 1));
      CHECK(sod_rank(r, d) == pascal(d + 2 * r - 1, 2 * r - 1));
      for (const auto& p : pts) {
        int total = 0;
        for (auto [a, b] : p.orders) total += a + b;
        CHECK(total == d);
      }
      CHECK(count_check(r, d).pass);
    }
  }
  CHECK(count_check(2, 2).expected == "10");
  CHECK(count_check(2, 2).computed == "10");
}

TEST_CASE("sod_rank examples") {
  for (int d = 0; d <= 5; ++d) CHECK(sod_rank(1, d) == d + 1);
  CHECK(sod_rank(2, 2) == 10);
  CHECK(sod_rank(3, 2) == 21);
}

TEST_CASE("sequences and compositions") {
  CHECK(sequence_to_composition(2, {0, 0, 1}).parts == std::vector<int>{2, 1});
  CHECK(composition_to_sequence({{2, 1}}) == std::vector<int>{0, 0, 1});
  CHECK(sequence_to_composition(2, {0, 1}) > sequence_to_composition(2, {1, 1}));
  CHECK(compositions(1, 4).size() == 1);
  for (int r = 1; r <= 4; ++r)
    for (int d = 0; d <= 6; ++d) CHECK_MESSAGE(seq_comp_roundtrip(r, d).pass, seq_comp_roundtrip(r, d).to_plain());
}

TEST_CASE("tangent characters") {
  const auto s11 = QuotSetup::trivial(1, 1);
  const auto t11 = tangent_character(s11, FixedPoint{{{1, 0}}});
  CHECK(t11.terms().size() == 1);
  CHECK(t11.evaluate_at_one() == 1);

  // Quot_1(O^2) is P^1 x P^1: curve weight at 0 and the frame weight of the line.
  const auto s21 = QuotSetup::trivial(2, 1);
  CHECK(tangent_character(s21, FixedPoint{{{1, 0}, {0, 0}}}) == LaurentPoly::parse("t^-1 + u1*u2^-1"));
  CHECK(tangent_character(s21, FixedPoint{{{0, 1}, {0, 0}}}) == LaurentPoly::parse("t + u1*u2^-1"));
  CHECK(tangent_character(s21, FixedPoint{{{0, 0}, {1, 0}}}) == LaurentPoly::parse("t^-1 + u2*u1^-1"));

  for (int r = 1; r <= 3; ++r) {
    for (int d = 0; d <= 3; ++d) {
      QuotSetup s = QuotSetup::trivial(r, d);
      s.splitting.assign(static_cast<std::size_t>(r), 0);
      s.splitting[0] = 2;
      for (const auto& p : enumerate_fixed_points(s)) {
        const auto chi = tangent_character(s, p);
        CHECK(chi.evaluate_at_one() == r * d);
        for (const auto& [mono, c] : chi.terms()) CHECK_FALSE(mono.is_one());
      }
    }
  }
}

TEST_CASE("tautological fiber characters") {
  const auto s = QuotSetup::trivial(1, 2);
  CHECK(taut_fiber_character(s, FixedPoint{{{2, 0}}}, 0) == LaurentPoly::parse("u1 + u1*t"));
  CHECK(taut_fiber_character(QuotSetup::trivial(1, 1), FixedPoint{{{1, 0}}}, 0).terms().size() == 1);
  for (const auto& p : enumerate_fixed_points(QuotSetup::trivial(3, 3))) {
    CHECK(taut_fiber_character(QuotSetup::trivial(3, 3), p, 2).evaluate_at_one() == 3);
  }
}

TEST_CASE("localization examples") {
  CHECK(localize_chi(QuotSetup::trivial(1, 1), TautSpec{}) == 1);
  CHECK(localize_chi(QuotSetup::trivial(2, 1), TautSpec::parse("wedge[1](0)")) == 2);
  CHECK(localize_chi(QuotSetup::trivial(1, 2), TautSpec::parse("wedge[2](1)")) == 1);
  CHECK(verify_ext_euler(QuotSetup::trivial(2, 2), {}, 0, 0).computed == "1");
  const auto eight = verify_ext_euler(QuotSetup::trivial(2, 2), {{0, 1}}, 1, 2);
  CHECK(eight.expected == "8");
  CHECK(eight.computed == "8");
  const auto zero = verify_ext_euler(QuotSetup::trivial(2, 1), {{0, 1}}, 0, 0);
  CHECK(zero.expected == "0");
  CHECK(zero.pass);
}

TEST_CASE("restricted torus agrees with the full multivariate sum") {
  const std::vector<std::pair<QuotSetup, const char*>> cases{
      {QuotSetup::trivial(2, 1), "wedge[1](1)"},
      {QuotSetup::trivial(2, 2), "wedge[1](0)^v*wedge[2](1)"},
      {QuotSetup::trivial(1, 3), "wedge[2](2)"},
      {QuotSetup{2, 2, {1, -1}}, "wedge[1](0)"},
  };
  for (const auto& [s, text] : cases) {
    const auto spec = TautSpec::parse(text);
    const LaurentPoly full = equivariant_chi(s, spec);
    CHECK(full.evaluate_at_one() == Rational(localize_chi(s, spec)));
  }
}

TEST_CASE("structure sheaf and exterior powers") {
  for (int r = 1; r <= 3; ++r) {
    for (int d = 0; d <= 3; ++d) {
      const Localizer loc(QuotSetup::trivial(r, d));
      CHECK(loc.chi(TautSpec{}) == 1);
      for (int m = 0; m <= 2; ++m) {
        for (int l = 0; l <= d; ++l) {
          CHECK(loc.chi(TautSpec{{{m, l, TautSide::plain}}}) == pascal(r * (m + 1), l));
        }
      }
    }
  }
  CHECK(localize_chi(QuotSetup{2, 2, {1, -2}}, TautSpec{}) == 1);
}

TEST_CASE("Ext closed form") {
  CHECK(ext_closed_form(2, {{0, 2}}, 0, 2) == 1);
  CHECK(ext_closed_form(3, {{0, 1}, {1, 1}}, 1, 1) == 0);
  for (int d = 0; d <= 3; ++d) {
    const Localizer loc(QuotSetup::trivial(3, d));
    for (int m = 0; m <= 1; ++m)
      for (int m1 = 0; m1 <= m; ++m1)
        for (int l1 = 0; l1 <= d; ++l1)
          for (int l = 0; l <= d; ++l) CHECK_MESSAGE(verify_ext_euler(loc, {{m1, l1}}, m, l).pass, d);
  }
}

TEST_CASE("class syntax and validation") {
  const auto spec = TautSpec::parse("wedge[1](0)^v * wedge[2](3)");
  CHECK(spec.to_string() == "wedge[1](0)^v*wedge[2](3)");
  CHECK(TautSpec::parse(spec.to_string()).to_string() == spec.to_string());
  CHECK(TautSpec::parse("1").factors.empty());
  CHECK_THROWS_AS(TautSpec::parse("wedge(1)"), Error);
  CHECK_THROWS_AS(TautSpec::parse("wedge[1](x)"), Error);
  CHECK_THROWS_AS(localize_chi(QuotSetup::trivial(2, 1), TautSpec::parse("wedge[2](0)")), Error);
  CHECK_THROWS_AS(localize_chi(QuotSetup::trivial(2, 1), TautSpec::parse("wedge[1](0)^v*wedge[1](0)^v")), Error);
  CHECK_THROWS_AS(Localizer(QuotSetup{2, 1, {1}}), Error);
  CHECK_THROWS_AS(verify_ext_euler(QuotSetup{2, 1, {1, 0}}, {}, 0, 0), Error);
  CHECK_THROWS_AS(verify_ext_euler(QuotSetup::trivial(2, 1), {{1, 0}}, 0, 0), Error);
}
