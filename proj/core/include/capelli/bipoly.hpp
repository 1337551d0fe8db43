#pragma once

#include <map>
#include <string>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

enum class Var { U, V };

/// Exponent pair of a bivariate monomial u^du * v^dv, ordered graded-lex with u > v.
struct Exp {
  int du = 0;
  int dv = 0;
  friend bool operator==(Exp a, Exp b) { return a.du == b.du && a.dv == b.dv; }
  friend bool operator<(Exp a, Exp b) {
    const int ta = a.du + a.dv, tb = b.du + b.dv;
    if (ta != tb) return ta < tb;
    return a.du < b.du;
  }
};

/// Exact polynomial in u and v over Rat. No zero coefficients are ever stored;
/// iteration order is graded-lex ascending (leading term = rbegin).
class BiPoly {
 public:
  using TermMap = std::map<Exp, Rat>;

  BiPoly() = default;
  BiPoly(const Rat& c) { add_term({0, 0}, c); }
  BiPoly(long c) : BiPoly(Rat(c)) {}

  static BiPoly variable(Var var) { return monomial(var == Var::U ? 1 : 0, var == Var::U ? 0 : 1, Rat(1)); }
  static BiPoly monomial(int du, int dv, const Rat& c) {
    BiPoly p;
    p.add_term({du, dv}, c);
    return p;
  }
  /// (var - shift), the building block of every denominator in this project.
  static BiPoly linear(Var var, const Rat& shift) {
    BiPoly p = variable(var);
    p.add_term({0, 0}, -shift);
    return p;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0}); }
  Rat constant_value() const { return t_.empty() ? Rat(0) : t_.begin()->second; }
  bool is_one() const { return is_constant() && constant_value().is_one(); }

  bool depends_on(Var var) const {
    for (const auto& [e, c] : t_)
      if ((var == Var::U ? e.du : e.dv) > 0) return true;
    return false;
  }

  int degree(Var var) const {
    int d = -1;  // -1 for the zero polynomial
    for (const auto& [e, c] : t_) d = std::max(d, var == Var::U ? e.du : e.dv);
    return d;
  }
  int total_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.du + t_.rbegin()->first.dv; }

  /// Coefficient of the graded-lex leading term.
  Rat leading_coeff() const { return t_.empty() ? Rat(0) : t_.rbegin()->second; }

  void add_term(Exp e, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly& operator*=(const Rat& c);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BiPoly derivative(Var var) const;

  /// Substitute var = value; the result depends only on the other variable.
  BiPoly eval(Var var, const Rat& value) const;
  Rat eval(const Rat& at_u, const Rat& at_v) const;

  /// Group terms by the exponent of var; values are polynomials in the other variable.
  std::map<int, BiPoly> coeffs_by(Var var) const;

  /// Swap the roles of u and v.
  BiPoly swapped_vars() const;

  std::string to_string() const;

 private:
  TermMap t_;
};

/// gcd of two polynomials that are both univariate in `var` (monic Euclid).
BiPoly gcd_univar(const BiPoly& a, const BiPoly& b, Var var);
/// lcm, monic, of two polynomials univariate in `var`.
BiPoly lcm_univar(const BiPoly& a, const BiPoly& b, Var var);
/// Largest (monic) polynomial in `var` alone dividing p.
BiPoly content(const BiPoly& p, Var var);
/// Exact division of p by a divisor that is univariate in `var`; throws on nonzero remainder.
BiPoly divide_exact(const BiPoly& p, const BiPoly& divisor, Var var);
/// Dense coefficient vector (ascending) of a polynomial univariate in `var`.
std::vector<Rat> dense_coeffs(const BiPoly& p, Var var);

inline std::string to_string(const BiPoly& p) { return p.to_string(); }

}  // namespace capelli
