#include "capelli/ratfunc.hpp"

#include <sstream>

namespace capelli {

namespace {

// Split p into c * p_u(u) * p_v(v); throws if impossible.
void separable_split(const BiPoly& p, BiPoly& out_u, BiPoly& out_v) {
  if (p.is_zero()) throw DivisionByZero();
  if (p.is_constant()) {
    out_u = BiPoly(p.constant_value());
    out_v = BiPoly(Rat(1));
    return;
  }
  BiPoly cu = content(p, Var::U);
  BiPoly rest = divide_exact(p, cu, Var::U);
  BiPoly cv = content(rest, Var::V);
  BiPoly q = divide_exact(rest, cv, Var::V);
  if (!q.is_constant()) throw NonSeparableDenominator(p.to_string());
  cu *= q.constant_value();
  out_u = cu;
  out_v = cv;
}

}  // namespace

RatFunc::RatFunc(BiPoly num, const BiPoly& den) : num_(std::move(num)) {
  separable_split(den, den_u_, den_v_);
  normalize();
}

RatFunc RatFunc::inv_linear(Var var, const Rat& shift) {
  return RatFunc(BiPoly(Rat(1)), BiPoly::linear(var, shift));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_u_ = BiPoly(Rat(1));
    den_v_ = BiPoly(Rat(1));
    return;
  }
  if (!den_u_.is_constant()) {
    const BiPoly g = gcd_univar(content(num_, Var::U), den_u_, Var::U);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g, Var::U);
      den_u_ = divide_exact(den_u_, g, Var::U);
    }
  }
  if (!den_v_.is_constant()) {
    const BiPoly g = gcd_univar(content(num_, Var::V), den_v_, Var::V);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g, Var::V);
      den_v_ = divide_exact(den_v_, g, Var::V);
    }
  }
  const Rat scale = den_u_.leading_coeff() * den_v_.leading_coeff();
  if (!scale.is_one()) {
    den_u_ *= den_u_.leading_coeff().inverse();
    den_v_ *= den_v_.leading_coeff().inverse();
    num_ *= scale.inverse();
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  r.den_u_ = lcm_univar(a.den_u_, b.den_u_, Var::U);
  r.den_v_ = lcm_univar(a.den_v_, b.den_v_, Var::V);
  const BiPoly fa = divide_exact(r.den_u_, a.den_u_, Var::U) * divide_exact(r.den_v_, a.den_v_, Var::V);
  const BiPoly fb = divide_exact(r.den_u_, b.den_u_, Var::U) * divide_exact(r.den_v_, b.den_v_, Var::V);
  r.num_ = a.num_ * fa + b.num_ * fb;
  r.normalize();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.den_u_ = a.den_u_ * b.den_u_;
  r.den_v_ = a.den_v_ * b.den_v_;
  r.normalize();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  BiPoly bu, bv;
  separable_split(b.num_, bu, bv);  // throws NonSeparableDenominator when mixed
  RatFunc r;
  r.num_ = a.num_ * b.den_u_ * b.den_v_;
  r.den_u_ = a.den_u_ * bu;
  r.den_v_ = a.den_v_ * bv;
  r.normalize();
  return r;
}

RatFunc RatFunc::derivative(Var var) const {
  RatFunc r;
  if (var == Var::U) {
    r.num_ = num_.derivative(Var::U) * den_u_ - num_ * den_u_.derivative(Var::U);
    r.den_u_ = den_u_ * den_u_;
    r.den_v_ = den_v_;
  } else {
    r.num_ = num_.derivative(Var::V) * den_v_ - num_ * den_v_.derivative(Var::V);
    r.den_u_ = den_u_;
    r.den_v_ = den_v_ * den_v_;
  }
  r.normalize();
  return r;
}

RatFunc RatFunc::eval(std::optional<Rat> at_u, std::optional<Rat> at_v) const {
  RatFunc r = *this;
  if (at_u) {
    const Rat du = r.den_u_.eval(*at_u, Rat(0));
    if (du.is_zero()) throw PoleAtPoint("u = " + at_u->to_string());
    r.num_ = r.num_.eval(Var::U, *at_u);
    r.num_ *= du.inverse();
    r.den_u_ = BiPoly(Rat(1));
  }
  if (at_v) {
    const Rat dv = r.den_v_.eval(Rat(0), *at_v);
    if (dv.is_zero()) throw PoleAtPoint("v = " + at_v->to_string());
    r.num_ = r.num_.eval(Var::V, *at_v);
    r.num_ *= dv.inverse();
    r.den_v_ = BiPoly(Rat(1));
  }
  r.normalize();
  return r;
}

Rat RatFunc::eval_full(const Rat& at_u, const Rat& at_v) const {
  const RatFunc r = eval(at_u, at_v);
  return r.constant_value();
}

std::string RatFunc::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  if (!den_u_.is_one() || !den_v_.is_one()) {
    os << "/(";
    if (!den_u_.is_one()) {
      os << den_u_.to_string();
      if (!den_v_.is_one()) os << ")*(" << den_v_.to_string();
    } else {
      os << den_v_.to_string();
    }
    os << ")";
  }
  return os.str();
}

}  // namespace capelli
