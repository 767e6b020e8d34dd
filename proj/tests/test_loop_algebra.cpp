#include <random>

#include "doctest.h"
#include "quotkit/error.hpp"
#include "quotkit/loop_algebra.hpp"

using namespace quotkit;

namespace {

QFrac Q(const char* s) { return QFrac::parse(s); }

NormalWord word(const LoopAlgebra& A, const char* text) {
  const auto nf = A.normal_form(A.parse_word(text));
  REQUIRE(nf.size() == 1);
  return nf.terms().begin()->first;
}

Word random_word(std::mt19937& rng, std::initializer_list<GeneratorKind> kinds, int r, int max_len) {
  const std::vector<GeneratorKind> pool(kinds);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> idx(-2, 2);
  std::uniform_int_distribution<int> cartan(1, r);
  Word w;
  for (int n = len(rng); n > 0; --n) {
    const auto k = pool[pick(rng)];
    switch (k) {
      case GeneratorKind::e: w.push_back(Generator::e(idx(rng))); break;
      case GeneratorKind::f: w.push_back(Generator::f(idx(rng))); break;
      case GeneratorKind::m: w.push_back(Generator::m(cartan(rng))); break;
      case GeneratorKind::m_r_inv: w.push_back(Generator::m_r_inv(r)); break;
      default: w.push_back(Generator::p(cartan(rng) - 1)); break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("QFrac arithmetic in lowest terms") {
  const QFrac a = Q("(1 - q^2)/(1 - q)");
  CHECK(a == Q("1 + q"));
  CHECK(a.to_string() == "q + 1");
  CHECK((QFrac(1) / Q("1 + q")).to_string() == "(1)/(q + 1)");
  CHECK(Q("(1)/(q + 1)") == QFrac(1) / Q("1 + q"));
  CHECK(QFrac::q_power(-2) * QFrac::q_power(2) == QFrac(1));
  CHECK(Q("q^-1 - 1").to_string() == "-1 + q^-1");
  CHECK(Q("1 - 2*q + q^2").valuation_at_one() == 2);
  CHECK((QFrac(1) / Q("1 - q")).valuation_at_one() == -1);
  CHECK(Q("2*q^-3").is_integral_laurent());
  CHECK_FALSE(Q("1/2*q").is_integral_laurent());
  CHECK_FALSE((QFrac(1) / Q("1 + q")).is_integral_laurent());
  CHECK_THROWS_AS(QFrac::parse("z + 1"), Error);
}

TEST_CASE("QFrac field axioms on random elements") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> c(-3, 3);
  auto rand_poly = [&] {
    QPoly p;
    for (int d = 0; d < 3; ++d) p += QPoly::monomial(d, c(rng));
    return p;
  };
  for (int trial = 0; trial < 60; ++trial) {
    QPoly da = rand_poly();
    QPoly db = rand_poly();
    if (da.is_zero() || db.is_zero()) continue;
    const QFrac a(rand_poly(), da);
    const QFrac b(rand_poly(), db);
    const QFrac x(rand_poly(), QPoly(1) + QPoly::monomial(2));
    CHECK((a + b) * x == a * x + b * x);
    CHECK(a - a == QFrac());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(QFrac::parse(a.to_string()) == a);
  }
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == LaurentPoly(1));
  CHECK(q_factorial(2) == LaurentPoly::parse("1 + q"));
  CHECK(q_factorial(3) == LaurentPoly::parse("1 + 2*q + 2*q^2 + q^3"));
}

TEST_CASE("normal form: straightening examples") {
  const LoopAlgebra A(2);
  CHECK(A.normal_form({Generator::e(1), Generator::e(0)}) ==
        AlgebraElement(word(A, "e[0]*e[1]"), QFrac::q_power(1)));
  AlgebraElement expected(word(A, "e[0]*e[2]"), QFrac::q_power(1));
  expected.add_term(word(A, "e[1]*e[1]"), Q("q - 1"));
  CHECK(A.normal_form({Generator::e(2), Generator::e(0)}) == expected);

  AlgebraElement ef(word(A, "f[0]*e[0]"));
  ef.add_term(word(A, "m[2]*p[0]"), Q("1 - q"));
  CHECK(A.normal_form({Generator::e(0), Generator::f(0)}) == ef);

  CHECK(A.normal_form({Generator::e(3), Generator::m(2)}) ==
        AlgebraElement(word(A, "m[2]*e[3]"), QFrac::q_power(-1)));
  CHECK(A.normal_form({Generator::m(2), Generator::m_r_inv(2)}) == AlgebraElement(NormalWord::identity(2)));
  CHECK(A.normal_form({Generator::f(0), Generator::f(1)}).to_string() == "(q)*f[1]*f[0]");
}

TEST_CASE("normal words are fixed points") {
  const LoopAlgebra A(2);
  for (const char* text : {"1", "f[2]*f[-1]*m[1]^2*m[2]^-1*p[0]*e[-3]*e[4]", "m[1]*p[2]^3", "e[0]*e[0]"}) {
    const auto w = A.parse_word(text);
    const auto nf = A.normal_form(w);
    REQUIRE(nf.size() == 1);
    CHECK(nf.terms().begin()->second == QFrac(1));
    CHECK(nf.terms().begin()->first.letters() == A.normal_form(nf.terms().begin()->first.letters()).terms().begin()->first.letters());
  }
}

TEST_CASE("text syntax round trip") {
  const LoopAlgebra A(2);
  const auto x = A.normal_form(A.parse_word("e[2]*f[-1]*m[1]^2*p[0]"));
  CHECK(A.parse(x.to_string()) == x);
  const auto y = A.multiply(x, A.parse("(1/2)*e[1] - f[0]*m[2]^-1"));
  CHECK(A.parse(y.to_string()) == y);
  CHECK(A.parse("(q)") == AlgebraElement(NormalWord::identity(2), QFrac::q_power(1)));
  CHECK(A.parse("0").is_zero());
  CHECK_THROWS_AS(A.parse_word("g[1]"), Error);
  CHECK_THROWS_AS(A.parse_word("m[1]^-1"), Error);
  CHECK_THROWS_AS(A.parse_word("p[3]"), Error);
  CHECK_THROWS_AS(A.parse_word("e[1"), Error);
}

TEST_CASE("word products agree under both associations of generator triples") {
  const LoopAlgebra A(1);
  const auto e0 = A.normal_form({Generator::e(0)});
  const auto f0 = A.normal_form({Generator::f(0)});
  const auto m1 = A.normal_form({Generator::m(1)});
  CHECK(A.multiply(A.multiply(e0, f0), m1) == A.multiply(e0, A.multiply(f0, m1)));
  CHECK(A.multiply(A.multiply(e0, f0), m1) == A.normal_form({Generator::e(0), Generator::f(0), Generator::m(1)}));
}

TEST_CASE("h coefficients") {
  const LoopAlgebra A1(1);
  CHECK(A1.h_coeff_poly(HSign::plus, 0) == LaurentPoly::parse("m1*p0"));
  CHECK(A1.h_coeff_poly(HSign::plus, 1) == LaurentPoly::parse("m1*p1 + p0*m1^2 + p0*m1^2*q^-1"));
  const LoopAlgebra A3(3);
  CHECK(A3.h_coeff_poly(HSign::minus, 3) == LaurentPoly::parse("p3*q^3*m3^-1"));
  for (int k : {-1}) CHECK_THROWS_AS(A3.h_coeff_poly(HSign::plus, k), Error);
  for (int k : {0, 1, 2}) {
    try {
      A3.h_coeff_poly(HSign::minus, k);
      FAIL("expected OutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::out_of_range);
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (const auto& rep : LoopAlgebra(r).verify_h_series(8)) CHECK_MESSAGE(rep.pass, rep.to_plain());
  }
  CHECK(A3.commutator_cartan(-1).is_zero());
  CHECK(A3.commutator_cartan(-2).is_zero());
  CHECK(A3.commutator_cartan(-3) == AlgebraElement() - A3.h_coeff(HSign::minus, 3));
}

TEST_CASE("commutator_div") {
  const LoopAlgebra A(2);
  const auto e0 = A.normal_form({Generator::e(0)});
  const auto e1 = A.normal_form({Generator::e(1)});
  CHECK(A.commutator_div(e0, e1) == A.normal_form({Generator::e(0), Generator::e(1)}));
  CHECK(A.commutator_div(A.normal_form({Generator::m(1)}), A.normal_form({Generator::m(2)})).is_zero());
  CHECK(A.commutator_div(e0, A.normal_form({Generator::f(1)})) == A.h_coeff(HSign::plus, 1));
  const auto pole = e0 * (QFrac(1) / Q("1 - q"));
  try {
    A.commutator_div(pole, e1);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_divisible);
  }
}

TEST_CASE("divided powers") {
  const LoopAlgebra A(1);
  const auto d = A.divided_power_product(0, 1, 0, 1);
  CHECK(d.element == A.normal_form({Generator::e(0), Generator::e(0)}));
  CHECK(d.all_integral);
  const auto sq = A.divided_power_product(0, 2, 1, 0);
  CHECK(sq.element == A.normal_form({Generator::e(0), Generator::e(0)}) * (QFrac(1) / Q("1 + q")));
  CHECK_FALSE(sq.all_integral);
}

TEST_CASE("defining relations among e, among f, and between e and f") {
  for (int r = 1; r <= 3; ++r) {
    const LoopAlgebra A(r);
    for (const auto& rep : A.verify_relations(2)) {
      const bool top_cartan = (rep.check == "rel3" || rep.check == "rel4") && rep.params["j"] == r;
      if (!top_cartan) CHECK_MESSAGE(rep.pass, rep.to_plain());
    }
  }
}

TEST_CASE("quadratic identity") {
  const LoopAlgebra A(2);
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) CHECK(A.quadratic_defect(i, j).is_zero());
}

TEST_CASE("associativity within the e, f and Cartan subalgebras") {
  std::mt19937 rng(41);
  for (int r = 1; r <= 2; ++r) {
    const LoopAlgebra A(r);
    for (auto kinds : {std::initializer_list<GeneratorKind>{GeneratorKind::e},
                       std::initializer_list<GeneratorKind>{GeneratorKind::f},
                       std::initializer_list<GeneratorKind>{GeneratorKind::m, GeneratorKind::m_r_inv, GeneratorKind::p}}) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto u = A.normal_form(random_word(rng, kinds, r, 3));
        const auto v = A.normal_form(random_word(rng, kinds, r, 3));
        const auto w = A.normal_form(random_word(rng, kinds, r, 3));
        CHECK(A.multiply(A.multiply(u, v), w) == A.multiply(u, A.multiply(v, w)));
      }
    }
  }
}

TEST_CASE("fuzz reports are deterministic across thread counts") {
  const LoopAlgebra A(1);
  const auto one = A.fuzz_associativity(3, 2, 30, 7, 1);
  const auto four = A.fuzz_associativity(3, 2, 30, 7, 4);
  CHECK(one.computed == four.computed);
  CHECK(one.note == four.note);
  CHECK_THROWS_AS(A.fuzz_associativity(0, 2, 1, 7), Error);
}

TEST_CASE("rank is validated") {
  CHECK_THROWS_AS(LoopAlgebra(0), Error);
  CHECK_THROWS_AS(LoopAlgebra(kMaxRank + 1), Error);
}
