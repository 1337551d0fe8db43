#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capelli/ratfunc.hpp"

namespace capelli {

/// Fixed parameters of one Weyl algebra instance. Elements built against
/// different signatures never mix.
struct AlgebraSignature {
  int M = 1;
  int N = 1;
  Rat h = Rat(1);
  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    return a.M == b.M && a.N == b.N && a.h == b.h;
  }
};

/// Exponents of one normally ordered monomial
///   x^xe * p^pe * p_u^pu * p_v^pv
/// (the coefficient function of u,v lives in the term map, to the left).
/// xe and pe are M*N grids, row-major, 0-based.
struct Monomial {
  std::vector<int32_t> xe, pe;
  int32_t pu = 0;
  int32_t pv = 0;

  static Monomial unit(int M, int N) {
    Monomial m;
    m.xe.assign(static_cast<size_t>(M) * N, 0);
    m.pe.assign(static_cast<size_t>(M) * N, 0);
    return m;
  }
  bool is_unit() const {
    if (pu != 0 || pv != 0) return false;
    for (int32_t e : xe)
      if (e) return false;
    for (int32_t e : pe)
      if (e) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.pu == b.pu && a.pv == b.pv && a.xe == b.xe && a.pe == b.pe;
  }
  // Canonical order: x exponents lex (x_11 most significant), then p, then pu, pv.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.xe != b.xe) return a.xe < b.xe;
    if (a.pe != b.pe) return a.pe < b.pe;
    if (a.pu != b.pu) return a.pu < b.pu;
    return a.pv < b.pv;
  }
};

enum class MulPolicy {
  standard,
  /// Negative control for CI: the p_ij·x_ij rewrite uses (-h)^k instead of h^k,
  /// corrupting the commutator sign. Must make the h-independence check fail.
  flipped_px,
};

/// Element of the normally ordered Weyl algebra: finite sum
/// coeff(u,v) * x^a * p^b * p_u^j * p_v^k, stored as a canonical term map with
/// no zero coefficients. Values are immutable in spirit: all operations are pure.
class WeylElement {
 public:
  using TermMap = std::map<Monomial, RatFunc>;

  explicit WeylElement(AlgebraSignature sig) : sig_(std::move(sig)) {}

  static WeylElement zero(const AlgebraSignature& sig) { return WeylElement(sig); }
  static WeylElement one(const AlgebraSignature& sig) { return from_coeff(sig, RatFunc(Rat(1))); }
  static WeylElement from_coeff(const AlgebraSignature& sig, const RatFunc& c);
  /// Generators; i, j are 0-based: x(sig, 0, 0) is x_11.
  static WeylElement x(const AlgebraSignature& sig, int i, int j);
  static WeylElement p(const AlgebraSignature& sig, int i, int j);
  static WeylElement p_u(const AlgebraSignature& sig);
  static WeylElement p_v(const AlgebraSignature& sig);
  static WeylElement from_term(const AlgebraSignature& sig, const Monomial& m, const RatFunc& c);

  const AlgebraSignature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const RatFunc& c);

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

  /// Scale by a coefficient function (equivalently, left-multiply: coefficients
  /// sit leftmost in the normal form).
  WeylElement scaled(const RatFunc& c) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  AlgebraSignature sig_;
  TermMap terms_;
};

/// Exact product in normal form, by the rewrite rules
///   p_ij^b x_ij^a   = sum_k C(b,k) C(a,k) k! h^k x_ij^{a-k} p_ij^{b-k}
///   p_u^j f(u,v)    = sum_k C(j,k) h^k (d^k f/du^k) p_u^{j-k}   (p_v symmetric)
/// with every other variable pair commuting.
WeylElement multiply(const WeylElement& a, const WeylElement& b,
                     MulPolicy policy = MulPolicy::standard);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

/// Commutator a*b - b*a.
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// The linear map e: replaces the trailing factor p_u^j p_v^k of each normally
/// ordered monomial by the coefficient multiplier v^j u^k; identity elsewhere.
WeylElement e_map(const WeylElement& a);

/// The linear map alpha_s: identity off p_u, alpha_s(a·u·p_u) = s·alpha_s(a).
/// On a normal monomial f(u) x^a p^b p_u^k it evaluates to
/// f(u) u^{-k} prod_{t<k}(s - t h) x^a p^b. Input must be v- and p_v-free.
WeylElement alpha_s(const WeylElement& a, const Rat& s);

/// Group the terms of a u-polynomial, v-free, p_v-free element by
/// (power of u in the coefficient, power of p_u); each bucket is a pure x/p
/// element with constant coefficients.
std::map<std::pair<int, int>, WeylElement> strip_coeff_grid(const WeylElement& a);

/// Group terms by the power of p_u: a = sum_b parts[b] * p_u^b.
std::map<int, WeylElement> split_by_pu(const WeylElement& a);

/// Rename (M,N,u,p_u,x,p) -> (N,M,v,p_v,x^T,p^T): transposes both exponent
/// grids, swaps pu<->pv and u<->v in coefficients. Realizes the substitution
/// behind H_h = G_h(N,M,v,p_v,lambda,z,X^T,P^T).
WeylElement swap_uv_transpose(const WeylElement& a);

/// Term maps literally identical (monomials and coefficients), ignoring the
/// signatures' h. Used by the h-independence check.
bool equal_ignoring_h(const WeylElement& a, const WeylElement& b);

/// First mismatching monomial in canonical order, serialized for both sides
/// ("0" for an absent term); nullopt when equal. Ignores the signatures' h.
std::optional<std::pair<std::string, std::string>> first_mismatch(const WeylElement& a,
                                                                  const WeylElement& b);

/// Plain-text form, grammar documented in docs/serialization.md,
/// e.g. "(3/2)/(u-2)*x[1,1]*p[1,2]*pu^2 + (1)".
std::string to_string(const WeylElement& a);
std::string to_string(const AlgebraSignature& sig, const Monomial& m, const RatFunc& coeff);

}  // namespace capelli
