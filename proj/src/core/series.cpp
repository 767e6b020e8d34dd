#include "quotkit/series.hpp"

#include <algorithm>

#include "quotkit/error.hpp"

namespace quotkit {

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::invalid_argument, "zero denominator");
  if (num_.is_zero()) den_ = LaurentPoly(1);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  if (num_.is_zero()) den_ = LaurentPoly(1);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  if (num_.is_zero()) den_ = LaurentPoly(1);
  return *this;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  if (num_.is_zero()) den_ = LaurentPoly(1);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  if (num_.is_zero()) den_ = LaurentPoly(1);
  return *this;
}

std::optional<LaurentPoly> RationalFunction::as_polynomial() const {
  return divide_exact(num_, den_);
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentPoly SeriesSlice::at(int degree) const {
  auto it = window.find(degree);
  if (it != window.end()) return it->second;
  const bool beyond_leading = point == ExpansionPoint::infinity
                                  ? (window.empty() || degree > window.rbegin()->first)
                                  : (window.empty() || degree < window.begin()->first);
  if (beyond_leading) return LaurentPoly();
  throw Error(ErrorCode::out_of_range,
              "degree " + std::to_string(degree) + " outside the computed window");
}

SeriesSlice expand_at(const RationalFunction& f, ExpansionPoint point, int order) {
  const VarId z = var::z();
  SeriesSlice out;
  out.point = point;
  out.order = order;

  const auto num = f.num().coefficients_in(z);
  const auto den = f.den().coefficients_in(z);
  const bool at_inf = point == ExpansionPoint::infinity;

  // Extremal denominator coefficient: top degree at infinity, bottom at zero.
  const auto& [d_lead_deg, d_lead] = at_inf ? *den.rbegin() : *den.begin();
  if (d_lead.is_zero()) {
    throw Error(ErrorCode::non_expandable, "denominator vanishes identically");
  }
  if (!d_lead.is_monomial()) {
    throw Error(ErrorCode::non_expandable,
                "extremal coefficient of the denominator is not a unit: " + d_lead.to_string());
  }
  const LaurentPoly d_inv = d_lead.unit_inverse();

  // Degrees run in the direction of the expansion: step = -1 at infinity.
  const int step = at_inf ? -1 : 1;
  int first = 0;
  if (!num.empty()) {
    const int n_lead_deg = at_inf ? num.rbegin()->first : num.begin()->first;
    first = n_lead_deg - d_lead_deg;
  }
  const int start = at_inf ? std::max(first, 0) : std::min(first, 0);
  if ((at_inf && start < -order) || (!at_inf && start > order)) {
    return out;  // empty window: requested order lies before the expansion starts
  }

  auto num_at = [&num](int deg) -> const LaurentPoly* {
    auto it = num.find(deg);
    return it == num.end() ? nullptr : &it->second;
  };

  // c_n = (N_{n+B} - sum_{b != B} D_b c_{n+B-b}) / D_B, where only already
  // computed coefficients (earlier in the expansion direction) contribute.
  for (int n = start;; n += step) {
    LaurentPoly acc;
    if (!num.empty() && ((at_inf && n <= first) || (!at_inf && n >= first))) {
      if (const auto* nc = num_at(n + d_lead_deg)) acc = *nc;
      for (const auto& [b, db] : den) {
        if (b == d_lead_deg) continue;
        const int prev = n + d_lead_deg - b;
        auto it = out.window.find(prev);
        if (it != out.window.end() && !it->second.is_zero()) acc -= db * it->second;
      }
      acc *= d_inv;
    }
    out.window.emplace(n, std::move(acc));
    if (n == (at_inf ? -order : order)) break;
  }
  return out;
}

LaurentPoly int_infty_minus_0(const RationalFunction& f) {
  const auto at_inf = expand_at(f, ExpansionPoint::infinity, 0);
  const auto at_zero = expand_at(f, ExpansionPoint::zero, 0);
  return at_inf.at(0) - at_zero.at(0);
}

}  // namespace quotkit
