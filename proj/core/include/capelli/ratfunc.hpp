#pragma once

#include <optional>
#include <string>

#include "capelli/bipoly.hpp"

namespace capelli {

/// Canonical reduced rational function num / (den_u(u) * den_v(v)).
///
/// Every denominator arising from the matrices in this project is a product of
/// (u - z_a) and (v - lambda_b) powers, so the separable split den_u * den_v is
/// enforced as an invariant: den_u is v-free and monic, den_v is u-free and monic,
/// and gcd(num, den_u) = gcd(num, den_v) = 1. A division that would require a
/// mixed-variable denominator factor throws NonSeparableDenominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_u_(Rat(1)), den_v_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_u_(Rat(1)), den_v_(Rat(1)) {}
  RatFunc(long c) : RatFunc(Rat(c)) {}
  RatFunc(BiPoly p) : num_(std::move(p)), den_u_(Rat(1)), den_v_(Rat(1)) {}
  /// num / den; den must split as den_u(u) * den_v(v) up to a constant.
  RatFunc(BiPoly num, const BiPoly& den);

  static RatFunc variable(Var var) { return RatFunc(BiPoly::variable(var)); }
  /// 1 / (var - shift)
  static RatFunc inv_linear(Var var, const Rat& shift);

  const BiPoly& num() const { return num_; }
  const BiPoly& den_u() const { return den_u_; }
  const BiPoly& den_v() const { return den_v_; }
  BiPoly den() const { return den_u_ * den_v_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_u_.is_one() && den_v_.is_one(); }
  Rat constant_value() const { return num_.constant_value(); }
  bool is_polynomial() const { return den_u_.is_one() && den_v_.is_one(); }
  bool depends_on(Var var) const {
    return num_.depends_on(var) || den_u_.depends_on(var) || den_v_.depends_on(var);
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_u_ == b.den_u_ && a.den_v_ == b.den_v_;
  }

  RatFunc derivative(Var var) const;

  /// Partial or full evaluation; throws PoleAtPoint if a substituted point
  /// annihilates the denominator.
  RatFunc eval(std::optional<Rat> at_u, std::optional<Rat> at_v) const;
  Rat eval_full(const Rat& at_u, const Rat& at_v) const;

  std::string to_string() const;

 private:
  void normalize();

  BiPoly num_, den_u_, den_v_;
};

inline std::string to_string(const RatFunc& f) { return f.to_string(); }

}  // namespace capelli
