#pragma once

#include "capelli/prng.hpp"
#include "capelli/weyl.hpp"

namespace capelli::testutil {

struct GenOptions {
  int max_terms = 3;
  int max_exp = 2;
  bool allow_v = true;
  bool allow_pu = true;
  bool allow_pv = true;
  bool rational_coeffs = true;  // allow 1/(u - c) style coefficient factors
};

inline RatFunc random_coeff(SplitMix64& rng, const GenOptions& opt) {
  Rat c = rng.next_rat();
  while (c.is_zero()) c = rng.next_rat();
  RatFunc f(c);
  const int kind = static_cast<int>(rng.next_in(0, 3));
  if (kind == 1) f = f * RatFunc(BiPoly::linear(Var::U, rng.next_rat()));
  if (kind == 2 && opt.rational_coeffs) f = f / RatFunc(BiPoly::linear(Var::U, rng.next_rat()));
  if (kind == 3 && opt.allow_v) f = f * RatFunc(BiPoly::variable(Var::V));
  return f;
}

inline WeylElement random_element(const AlgebraSignature& sig, SplitMix64& rng,
                                  const GenOptions& opt = {}) {
  WeylElement e = WeylElement::zero(sig);
  const int terms = 1 + static_cast<int>(rng.next_in(0, opt.max_terms - 1));
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::unit(sig.M, sig.N);
    for (auto& v : m.xe) v = static_cast<int32_t>(rng.next_in(0, opt.max_exp));
    for (auto& v : m.pe) v = static_cast<int32_t>(rng.next_in(0, opt.max_exp));
    if (opt.allow_pu) m.pu = static_cast<int32_t>(rng.next_in(0, opt.max_exp));
    if (opt.allow_pv) m.pv = static_cast<int32_t>(rng.next_in(0, opt.max_exp));
    e.add_term(m, random_coeff(rng, opt));
  }
  return e;
}

}  // namespace capelli::testutil
