#include "quotkit/lambda_ring.hpp"

#include <algorithm>

#include "quotkit/error.hpp"

namespace quotkit {

namespace {

void require_root(const LaurentPoly& r) {
  if (!r.is_monomial() || r.contains(var::z())) {
    throw Error(ErrorCode::invalid_argument,
                "Chern root must be a z-free monomial character: " + r.to_string());
  }
}

std::vector<LaurentPoly> inverted(const std::vector<LaurentPoly>& roots) {
  std::vector<LaurentPoly> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.unit_inverse());
  return out;
}

LaurentPoly product(const std::vector<LaurentPoly>& roots) {
  LaurentPoly p(1);
  for (const auto& r : roots) p *= r;
  return p;
}

LaurentPoly sign(int exponent) { return LaurentPoly(exponent % 2 == 0 ? 1 : -1); }

}  // namespace

KClass::KClass(std::vector<LaurentPoly> positive, std::vector<LaurentPoly> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  for (const auto& r : positive_) require_root(r);
  for (const auto& r : negative_) require_root(r);
}

KClass KClass::roots(VarId (*family)(int), int rank) {
  std::vector<LaurentPoly> pos;
  for (int i = 1; i <= rank; ++i) pos.push_back(LaurentPoly::variable(family(i)));
  return KClass(std::move(pos));
}

KClass KClass::line(const LaurentPoly& character) { return KClass({character}); }

KClass KClass::dual() const { return KClass(inverted(positive_), inverted(negative_)); }

LaurentPoly KClass::det() const { return product(positive_) * product(negative_).unit_inverse(); }

KClass KClass::twist(const LaurentPoly& character) const {
  require_root(character);
  KClass out = *this;
  for (auto& r : out.positive_) r *= character;
  for (auto& r : out.negative_) r *= character;
  return out;
}

KClass KClass::operator+(const KClass& o) const {
  KClass out = *this;
  out.positive_.insert(out.positive_.end(), o.positive_.begin(), o.positive_.end());
  out.negative_.insert(out.negative_.end(), o.negative_.begin(), o.negative_.end());
  return out;
}

KClass KClass::operator-() const {
  KClass out;
  out.positive_ = negative_;
  out.negative_ = positive_;
  return out;
}

KClass KClass::operator-(const KClass& o) const { return *this + (-o); }

KClass KClass::operator*(const KClass& o) const {
  KClass out;
  auto cross = [](const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b,
                  std::vector<LaurentPoly>& into) {
    for (const auto& x : a)
      for (const auto& y : b) into.push_back(x * y);
  };
  cross(positive_, o.positive_, out.positive_);
  cross(negative_, o.negative_, out.positive_);
  cross(positive_, o.negative_, out.negative_);
  cross(negative_, o.positive_, out.negative_);
  return out;
}

std::string KClass::to_string() const {
  auto join = [](const std::vector<LaurentPoly>& roots) {
    std::string s = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i) s += ",";
      s += roots[i].to_string();
    }
    return s + "}";
  };
  if (negative_.empty()) return join(positive_);
  return join(positive_) + "-" + join(negative_);
}

RationalFunction wedge_total(const KClass& k) {
  const LaurentPoly zinv = LaurentPoly::variable(var::z(), -1);
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (const auto& r : k.positive()) num *= LaurentPoly(1) - r * zinv;
  for (const auto& r : k.negative()) den *= LaurentPoly(1) - r * zinv;
  return RationalFunction(num, den);
}

LaurentPoly wedge_power(const KClass& k, int degree) {
  if (degree < 0) return LaurentPoly();
  const auto slice = expand_at(wedge_total(k), ExpansionPoint::infinity, degree);
  return sign(degree) * slice.at(-degree);
}

LaurentPoly sym_power(const KClass& k, int degree) {
  if (degree < 0) return LaurentPoly();
  const auto slice = expand_at(wedge_total(-k), ExpansionPoint::infinity, degree);
  return slice.at(-degree);
}

LaurentPoly push_projective(const KClass& v, int k) {
  if (!v.is_honest() || v.rank() < 1) {
    throw Error(ErrorCode::invalid_argument, "push_projective needs an honest class of rank >= 1");
  }
  const RationalFunction zk(LaurentPoly::variable(var::z(), k));
  return int_infty_minus_0(zk * wedge_total(-v));
}

LaurentPoly push_projective_closed(const KClass& v, int k) {
  const int r = v.rank();
  if (k >= 0) return complete_homogeneous(v.positive(), k);
  if (k > -r) return LaurentPoly();
  const KClass vd = v.dual();
  return sign(r - 1) * complete_homogeneous(vd.positive(), -k - r) * vd.det();
}

namespace {

void check_equal_rank(const KClass& v, const KClass& w) {
  if (!v.is_honest() || !w.is_honest()) {
    throw Error(ErrorCode::invalid_argument, "push_virtual expects honest V and W");
  }
  if (v.rank() != w.rank()) {
    throw Error(ErrorCode::rank_mismatch, "rank V = " + std::to_string(v.rank()) +
                                              " but rank W = " + std::to_string(w.rank()));
  }
}

}  // namespace

LaurentPoly push_virtual(const KClass& v, const KClass& w, int k) {
  check_equal_rank(v, w);
  const RationalFunction zk(LaurentPoly::variable(var::z(), k));
  return int_infty_minus_0(zk * wedge_total(w - v));
}

LaurentPoly push_virtual_closed(const KClass& v, const KClass& w, int k) {
  check_equal_rank(v, w);
  const int r = v.rank();
  const LaurentPoly ratio = w.det() * v.det().unit_inverse();
  if (k == 0) return LaurentPoly(1) - ratio;
  LaurentPoly total;
  if (k > 0) {
    // ... -> S^{k-1}V (x) W -> S^k V, with S^k V in degree 0.
    for (int j = 0; j <= std::min(k, r); ++j) {
      total += sign(j) * complete_homogeneous(v.positive(), k - j) *
               elementary_symmetric(w.positive(), j);
    }
    return total;
  }
  const KClass vd = v.dual();
  const KClass wd = w.dual();
  for (int j = 0; j <= std::min(-k, r); ++j) {
    total += sign(j) * complete_homogeneous(vd.positive(), -k - j) *
             elementary_symmetric(wd.positive(), j);
  }
  return -(total * ratio);
}

LaurentPoly alpha_class(int l, const KClass& e, const KClass& v) {
  const int r = e.rank();
  const LaurentPoly kappa = LaurentPoly::variable(var::kappa());
  LaurentPoly total;
  if (l >= 0) {
    const LaurentPoly ratio = e.det() * v.det().unit_inverse();
    for (int k = 0; k <= l; ++k) {
      LaurentPoly inner;
      for (int kp = 0; kp <= l - k; ++kp) {
        inner += sign(kp) * complete_homogeneous(e.positive(), l - k - kp) *
                 elementary_symmetric(v.positive(), kp);
      }
      total += complete_homogeneous(e.positive(), k) * inner * kappa.pow(-l + k);
    }
    return total * ratio;
  }
  const KClass ed = e.dual();
  const KClass vd = v.dual();
  const LaurentPoly det_e_inv = e.det().unit_inverse();
  for (int k = r; k <= -l; ++k) {
    LaurentPoly inner;
    for (int kp = 0; kp <= -l - k; ++kp) {
      inner += sign(kp) * complete_homogeneous(ed.positive(), -k - kp - l) *
               elementary_symmetric(vd.positive(), kp);
    }
    total += complete_homogeneous(ed.positive(), k - r) * det_e_inv * inner * kappa.pow(-l - k);
  }
  return sign(r - 1) * total;
}

LaurentPoly alpha_compact(int l, const KClass& e, const KClass& v) {
  const LaurentPoly z = LaurentPoly::variable(var::z());
  const LaurentPoly zinv = LaurentPoly::variable(var::z(), -1);
  const LaurentPoly zq = z * LaurentPoly::variable(var::q());
  LaurentPoly num = LaurentPoly::variable(var::z(), l);
  LaurentPoly den(1);
  for (const auto& root : v.positive()) num *= LaurentPoly(1) - zq * root.unit_inverse();
  for (const auto& root : e.positive()) {
    den *= LaurentPoly(1) - root * zinv;
    den *= LaurentPoly(1) - zq * root.unit_inverse();
  }
  return int_infty_minus_0(RationalFunction(num, den));
}

std::vector<CheckReport> verify_alpha_compact(int r, int l_lo, int l_hi) {
  if (r < 1 || r > kMaxRank) throw Error(ErrorCode::bad_config, "rank out of range");
  const KClass e = KClass::roots(var::eps, r);
  const KClass v = KClass::roots(var::v, r);
  std::vector<CheckReport> out;
  for (int l = l_lo; l <= l_hi; ++l) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "alpha_compact";
    rep.params["r"] = r;
    rep.params["l"] = l;
    const LaurentPoly closed =
        alpha_class(l, e, v).substitute(var::kappa(), LaurentPoly::variable(var::q()));
    const LaurentPoly residue = alpha_compact(l, e, v);
    rep.expected = closed.to_string();
    rep.computed = residue.to_string();
    rep.pass = closed == residue;
    rep.elapsed_ms = sw.elapsed_ms();
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace quotkit
