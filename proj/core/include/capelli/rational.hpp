#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "capelli/errors.hpp"

namespace capelli {

/// Arbitrary-precision rational in canonical form: gcd-reduced, denominator > 0,
/// zero stored as 0/1. Thin value wrapper around GMP's mpq_class.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(static_cast<signed long>(n)) {}
  Rat(int n) : q_(n) {}
  Rat(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "p", "p/q", optional leading '-'.
  static Rat parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ConfigError("cannot parse rational '" + text + "'");
    if (mpz_sgn(q.get_den().get_mpz_t()) == 0) throw DivisionByZero();
    q.canonicalize();
    return Rat(std::move(q));
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rat(mpq_class(1) / q_);
  }

  Rat pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den().get_mpz_t(), e);
    return Rat(std::move(r));  // canonical since num/den coprime
  }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  double to_double() const { return q_.get_d(); }

  std::string to_string() const { return q_.get_str(); }

  static Rat binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(mpq_class(b));
  }
  static Rat factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

inline std::string to_string(const Rat& r) { return r.to_string(); }

}  // namespace capelli
