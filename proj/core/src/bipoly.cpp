#include "capelli/bipoly.hpp"

#include <cassert>
#include <sstream>

namespace capelli {

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term({ea.du + eb.du, ea.dv + eb.dv}, ca * cb);
  return r;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, v] : t_) v *= c;
  return *this;
}

BiPoly BiPoly::derivative(Var var) const {
  BiPoly r;
  for (const auto& [e, c] : t_) {
    if (var == Var::U) {
      if (e.du > 0) r.add_term({e.du - 1, e.dv}, c * Rat(e.du));
    } else {
      if (e.dv > 0) r.add_term({e.du, e.dv - 1}, c * Rat(e.dv));
    }
  }
  return r;
}

BiPoly BiPoly::eval(Var var, const Rat& value) const {
  BiPoly r;
  for (const auto& [e, c] : t_) {
    const int d = var == Var::U ? e.du : e.dv;
    const Exp rest = var == Var::U ? Exp{0, e.dv} : Exp{e.du, 0};
    r.add_term(rest, c * value.pow(static_cast<unsigned>(d)));
  }
  return r;
}

Rat BiPoly::eval(const Rat& at_u, const Rat& at_v) const {
  Rat r(0);
  for (const auto& [e, c] : t_)
    r += c * at_u.pow(static_cast<unsigned>(e.du)) * at_v.pow(static_cast<unsigned>(e.dv));
  return r;
}

std::map<int, BiPoly> BiPoly::coeffs_by(Var var) const {
  std::map<int, BiPoly> r;
  for (const auto& [e, c] : t_) {
    const int d = var == Var::U ? e.du : e.dv;
    const Exp rest = var == Var::U ? Exp{0, e.dv} : Exp{e.du, 0};
    r[d].add_term(rest, c);
  }
  return r;
}

BiPoly BiPoly::swapped_vars() const {
  BiPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(Exp{e.dv, e.du}, c);
  return r;
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // graded-lex descending: leading term first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else if (a.sign() < 0) {
      os << "-";
      a = -a;
    } else {
      os << "+";
    }
    const bool has_vars = e.du > 0 || e.dv > 0;
    if (!has_vars) {
      os << a.to_string();
    } else {
      if (!a.is_one()) {
        if (a.is_integer())
          os << a.to_string() << "*";
        else
          os << "(" << a.to_string() << ")*";
      }
      bool star = false;
      if (e.du > 0) {
        os << "u";
        if (e.du > 1) os << "^" << e.du;
        star = true;
      }
      if (e.dv > 0) {
        if (star) os << "*";
        os << "v";
        if (e.dv > 1) os << "^" << e.dv;
      }
    }
  }
  return os.str();
}

namespace {

// Dense univariate helpers; coefficient index = exponent.
using Dense = std::vector<Rat>;

void strip(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  strip(r);
  return r;
}

// Remainder of a mod b (b nonzero), over the rational field.
Dense dense_rem(Dense a, const Dense& b) {
  assert(!b.empty());
  const Rat inv_lead = b.back().inverse();
  while (a.size() >= b.size()) {
    const Rat f = a.back() * inv_lead;
    const size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    strip(a);
    if (a.empty()) break;
  }
  return a;
}

// Exact quotient a / b; throws on nonzero remainder.
Dense dense_div_exact(Dense a, const Dense& b) {
  assert(!b.empty());
  Dense q(a.empty() ? 0 : (a.size() >= b.size() ? a.size() - b.size() + 1 : 0), Rat(0));
  const Rat inv_lead = b.back().inverse();
  while (a.size() >= b.size()) {
    const Rat f = a.back() * inv_lead;
    const size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    strip(a);
  }
  if (!a.empty()) throw Error("internal: inexact polynomial division");
  strip(q);
  return q;
}

Dense dense_gcd(Dense a, Dense b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    // keep remainders monic to tame coefficient growth
    if (!r.empty()) {
      const Rat inv = r.back().inverse();
      for (auto& c : r) c *= inv;
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rat inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

BiPoly from_dense(const Dense& p, Var var) {
  BiPoly r;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    r.add_term(var == Var::U ? Exp{static_cast<int>(i), 0} : Exp{0, static_cast<int>(i)}, p[i]);
  }
  return r;
}

}  // namespace

std::vector<Rat> dense_coeffs(const BiPoly& p, Var var) {
  const Var other = var == Var::U ? Var::V : Var::U;
  if (p.depends_on(other)) throw Error("internal: dense_coeffs on a genuinely bivariate polynomial");
  Dense d(static_cast<size_t>(std::max(0, p.degree(var) + 1)), Rat(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(var == Var::U ? e.du : e.dv)] = c;
  return d;
}

BiPoly gcd_univar(const BiPoly& a, const BiPoly& b, Var var) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return from_dense(dense_gcd(dense_coeffs(a, var), dense_coeffs(b, var)), var);
}

BiPoly lcm_univar(const BiPoly& a, const BiPoly& b, Var var) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  const BiPoly g = gcd_univar(a, b, var);
  BiPoly l = divide_exact(a * b, g, var);
  const Rat lead = l.leading_coeff();
  l *= lead.inverse();
  return l;
}

BiPoly content(const BiPoly& p, Var var) {
  if (p.is_zero()) return BiPoly();
  const Var other = var == Var::U ? Var::V : Var::U;
  Dense g;
  for (const auto& [d, coeff] : p.coeffs_by(other)) {
    (void)d;
    g = dense_gcd(g, dense_coeffs(coeff, var));
    if (g.size() == 1) break;  // gcd already constant
  }
  return from_dense(g, var);
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& divisor, Var var) {
  if (divisor.is_zero()) throw DivisionByZero();
  if (divisor.is_constant()) {
    BiPoly r = p;
    r *= divisor.constant_value().inverse();
    return r;
  }
  const Var other = var == Var::U ? Var::V : Var::U;
  const Dense d = dense_coeffs(divisor, var);
  BiPoly result;
  for (const auto& [deg_other, coeff] : p.coeffs_by(other)) {
    const Dense q = dense_div_exact(dense_coeffs(coeff, var), d);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      Exp e = var == Var::U ? Exp{static_cast<int>(i), deg_other} : Exp{deg_other, static_cast<int>(i)};
      result.add_term(e, q[i]);
    }
  }
  return result;
}

}  // namespace capelli
