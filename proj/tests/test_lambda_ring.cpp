#include "doctest.h"
#include "quotkit/error.hpp"
#include "quotkit/lambda_ring.hpp"

using namespace quotkit;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
KClass V(int r) { return KClass::roots(var::v, r); }
KClass W(int r) { return KClass::roots(var::w, r); }
KClass E(int r) { return KClass::roots(var::eps, r); }

}  // namespace

TEST_CASE("wedge_total examples") {
  CHECK(wedge_total(V(1)) == RationalFunction(P("1 - v1*z^-1")));
  CHECK(wedge_total(V(2)) == RationalFunction(P("1 - v1*z^-1 - v2*z^-1 + v1*v2*z^-2")));
  CHECK(wedge_total(V(1) - W(1)) == RationalFunction(P("1 - v1*z^-1"), P("1 - w1*z^-1")));
}

TEST_CASE("wedge_total is multiplicative") {
  const KClass a = V(2) - W(1);
  const KClass b = E(1) + KClass::line(P("q*v1"));
  CHECK(wedge_total(a + b) == wedge_total(a) * wedge_total(b));
}

TEST_CASE("sym and wedge powers") {
  CHECK(sym_power(E(1), 3) == P("eps1^3"));
  CHECK(wedge_power(V(2), 2) == P("v1*v2"));
  CHECK(sym_power(V(1) - W(1), 1) == P("v1 - w1"));
  CHECK(wedge_power(V(3), 4).is_zero());
  // Honest classes: series coefficients agree with symmetric functions.
  for (int k = 0; k <= 4; ++k) {
    CHECK(sym_power(V(3), k) == complete_homogeneous(V(3).positive(), k));
    CHECK(wedge_power(V(3), k) == elementary_symmetric(V(3).positive(), k));
  }
}

TEST_CASE("push_projective examples and closed form") {
  CHECK(push_projective(V(2), 1) == P("v1 + v2"));
  CHECK(push_projective(V(2), -1).is_zero());
  CHECK(push_projective(V(2), -2) == P("-v1^-1*v2^-1"));
  for (int r = 1; r <= 3; ++r)
    for (int k = -2 * r - 2; k <= 4; ++k)
      CHECK(push_projective(V(r), k) == push_projective_closed(V(r), k));
}

TEST_CASE("push_projective rank of S^k V") {
  // Setting all roots to 1 gives binom(k + r - 1, r - 1).
  CHECK(push_projective(V(3), 2).evaluate_at_one() == 6);
  CHECK(push_projective(V(4), 3).evaluate_at_one() == 20);
}

TEST_CASE("push_virtual examples, closed form and rank mismatch") {
  CHECK(push_virtual(V(1), W(1), 0) == P("1 - w1*v1^-1"));
  CHECK(push_virtual(V(1), W(1), 1) == P("v1 - w1"));
  CHECK(push_virtual(V(1), W(1), -1) == P("v1^-1 - w1*v1^-2"));
  for (int r = 1; r <= 3; ++r)
    for (int k = -2 * r - 2; k <= 4; ++k)
      CHECK(push_virtual(V(r), W(r), k) == push_virtual_closed(V(r), W(r), k));
  try {
    push_virtual(V(2), W(1), 0);
    FAIL("expected RankMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::rank_mismatch);
  }
}

TEST_CASE("alpha_class examples") {
  CHECK(alpha_class(-1, E(2), V(2)).is_zero());
  CHECK(alpha_class(0, E(2), V(2)) == P("eps1*eps2*v1^-1*v2^-1"));
  // eps (eps - v) / (v kappa) + eps^2 / v
  CHECK(alpha_class(1, E(1), V(1)) ==
        P("eps1^2*v1^-1*kappa^-1 - eps1*kappa^-1 + eps1^2*v1^-1"));
}

TEST_CASE("alpha compact form examples") {
  auto reps = verify_alpha_compact(1, 0, 0);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].pass);
  CHECK(reps[0].computed == "eps1*v1^-1");
  reps = verify_alpha_compact(2, -1, -1);
  CHECK(reps[0].pass);
  CHECK(reps[0].computed == "0");
  reps = verify_alpha_compact(1, -1, -1);
  CHECK(reps[0].pass);
  CHECK(reps[0].computed == "eps1^-1");
}
