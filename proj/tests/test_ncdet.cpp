#include <doctest.h>

#include "capelli/builders.hpp"
#include "test_util.hpp"

using namespace capelli;
using testutil::random_element;

namespace {

WeylElement coeff_elem(const AlgebraSignature& sig, const RatFunc& f) {
  return WeylElement::from_coeff(sig, f);
}

}  // namespace

TEST_CASE("rdet basics") {
  const AlgebraSignature sig{2, 2, Rat(7, 5)};
  // commuting entries: [[x11, x12],[x21, x22]]
  WeylMatrix m(sig, 2, 2);
  m.set(0, 0, WeylElement::x(sig, 0, 0));
  m.set(0, 1, WeylElement::x(sig, 0, 1));
  m.set(1, 0, WeylElement::x(sig, 1, 0));
  m.set(1, 1, WeylElement::x(sig, 1, 1));
  WeylElement expected = multiply(WeylElement::x(sig, 0, 0), WeylElement::x(sig, 1, 1));
  expected -= multiply(WeylElement::x(sig, 0, 1), WeylElement::x(sig, 1, 0));
  CHECK(rdet(m) == expected);
  CHECK(det_comm(m) == expected);

  // [[p_u, x11],[p11, u]] -> u p_u + h - x11 p11 (row order matters)
  WeylMatrix n(sig, 2, 2);
  n.set(0, 0, WeylElement::p_u(sig));
  n.set(0, 1, WeylElement::x(sig, 0, 0));
  n.set(1, 0, WeylElement::p(sig, 0, 0));
  n.set(1, 1, coeff_elem(sig, RatFunc::variable(Var::U)));
  WeylElement want = WeylElement::p_u(sig).scaled(RatFunc::variable(Var::U));
  want += coeff_elem(sig, RatFunc(sig.h));
  want -= multiply(WeylElement::x(sig, 0, 0), WeylElement::p(sig, 0, 0));
  CHECK(rdet(n) == want);

  // 1x1 and 0x0
  WeylMatrix one(sig, 1, 1);
  one.set(0, 0, WeylElement::p_u(sig));
  CHECK(rdet(one) == WeylElement::p_u(sig));
  CHECK(rdet(WeylMatrix(sig, 0, 0)) == WeylElement::one(sig));
  CHECK_THROWS_AS(rdet(WeylMatrix(sig, 2, 3)), NotSquare);
}

TEST_CASE("rdet is multilinear where scaling commutes past earlier rows") {
  const AlgebraSignature sig{2, 2, Rat(7, 5)};
  SplitMix64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    WeylMatrix m(sig, 3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.set(r, c, random_element(sig, rng));
    // scaling the first row by any coefficient function scales rdet
    const RatFunc f = testutil::random_coeff(rng, {});
    WeylMatrix scaled = m;
    for (int c = 0; c < 3; ++c) scaled.set(0, c, m.at(0, c).scaled(f));
    CHECK(rdet(scaled) == rdet(m).scaled(f));
    // scaling a deeper row by a rational constant scales rdet
    const Rat q = rng.next_rat();
    WeylMatrix scaled2 = m;
    for (int c = 0; c < 3; ++c) scaled2.set(2, c, m.at(2, c).scaled(RatFunc(q)));
    CHECK(rdet(scaled2) == rdet(m).scaled(RatFunc(q)));
  }
}

TEST_CASE("rdet with h = 0 equals the commutative determinant") {
  const AlgebraSignature sig{2, 2, Rat(0)};
  SplitMix64 rng(11);
  for (int t = 0; t < 10; ++t) {
    WeylMatrix m(sig, 3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.set(r, c, random_element(sig, rng));
    CHECK(rdet(m) == det_comm(m));
  }
}

TEST_CASE("build_G entries") {
  // M=N=1: [[p_u - l1 - x11 p11 / (u - z1)]]
  ProblemData d{1, 1, {Rat(2)}, {Rat(3)}, Rat(1)};
  const AlgebraSignature sig = d.sig();
  const WeylMatrix g = build_G(d);
  WeylElement e = WeylElement::p_u(sig);
  e -= coeff_elem(sig, RatFunc(Rat(3)));
  e -= multiply(WeylElement::x(sig, 0, 0), WeylElement::p(sig, 0, 0))
           .scaled(RatFunc::inv_linear(Var::U, Rat(2)));
  CHECK(g.at(0, 0) == e);

  // M=2, N=1: entry (1,2) = -x21 p11/(u - z1)
  ProblemData d21{2, 1, {Rat(5)}, {Rat(1), Rat(2)}, Rat(1)};
  const AlgebraSignature s21 = d21.sig();
  const WeylMatrix g21 = build_G(d21);
  const WeylElement want12 = -multiply(WeylElement::x(s21, 1, 0), WeylElement::p(s21, 0, 0))
                                  .scaled(RatFunc::inv_linear(Var::U, Rat(5)));
  CHECK(g21.at(0, 1) == want12);

  // M=2, N=2: entry (2,2) = p_u - l2 - x21 p21/(u-z1) - x22 p22/(u-z2)
  ProblemData d22{2, 2, {Rat(0), Rat(1)}, {Rat(0), Rat(5)}, Rat(1)};
  const AlgebraSignature s22 = d22.sig();
  WeylElement w22 = WeylElement::p_u(s22);
  w22 -= coeff_elem(s22, RatFunc(Rat(5)));
  w22 -= multiply(WeylElement::x(s22, 1, 0), WeylElement::p(s22, 1, 0))
             .scaled(RatFunc::inv_linear(Var::U, Rat(0)));
  w22 -= multiply(WeylElement::x(s22, 1, 1), WeylElement::p(s22, 1, 1))
             .scaled(RatFunc::inv_linear(Var::U, Rat(1)));
  CHECK(build_G(d22).at(1, 1) == w22);
}

TEST_CASE("build_H entries and transpose consistency") {
  ProblemData d{1, 1, {Rat(2)}, {Rat(3)}, Rat(1)};
  const AlgebraSignature sig = d.sig();
  WeylElement e = WeylElement::p_v(sig);
  e -= coeff_elem(sig, RatFunc(Rat(2)));
  e -= multiply(WeylElement::x(sig, 0, 0), WeylElement::p(sig, 0, 0))
           .scaled(RatFunc::inv_linear(Var::V, Rat(3)));
  CHECK(build_H(d).at(0, 0) == e);

  // M=2, N=1: single entry p_v - z1 - x11p11/(v-l1) - x21p21/(v-l2)
  ProblemData d21{2, 1, {Rat(5)}, {Rat(1), Rat(2)}, Rat(1)};
  const AlgebraSignature s21 = d21.sig();
  WeylElement w = WeylElement::p_v(s21);
  w -= coeff_elem(s21, RatFunc(Rat(5)));
  w -= multiply(WeylElement::x(s21, 0, 0), WeylElement::p(s21, 0, 0))
           .scaled(RatFunc::inv_linear(Var::V, Rat(1)));
  w -= multiply(WeylElement::x(s21, 1, 0), WeylElement::p(s21, 1, 0))
           .scaled(RatFunc::inv_linear(Var::V, Rat(2)));
  CHECK(build_H(d21).at(0, 0) == w);

  // H_h = G_h(N, M, v, p_v, lambda, z, X^T, P^T): entrywise via the renaming map
  for (const auto& dd : {d, d21, ProblemData{2, 3, {Rat(0), Rat(1), Rat(4)}, {Rat(2), Rat(7)}, Rat(7, 5)}}) {
    const WeylMatrix h = build_H(dd);
    const WeylMatrix gt = build_G(transpose(dd));
    REQUIRE(h.rows() == gt.rows());
    for (int r = 0; r < h.rows(); ++r)
      for (int c = 0; c < h.cols(); ++c) CHECK(h.at(r, c) == swap_uv_transpose(gt.at(r, c)));
  }
}

TEST_CASE("build_W blocks") {
  ProblemData d{1, 1, {Rat(2)}, {Rat(3)}, Rat(1)};
  const AlgebraSignature sig = d.sig();
  const WeylMatrix w = build_W(d);
  CHECK(w.rows() == 2);
  CHECK(w.at(0, 0) == coeff_elem(sig, RatFunc(BiPoly::linear(Var::U, Rat(2)))));
  CHECK(w.at(0, 1) == WeylElement::x(sig, 0, 0));
  CHECK(w.at(1, 0) == WeylElement::p(sig, 0, 0));
  WeylElement corner = WeylElement::p_u(sig);
  corner -= coeff_elem(sig, RatFunc(Rat(3)));
  CHECK(w.at(1, 1) == corner);

  // M=2, N=1: X^t block row = [x11, x21]; diagonal of the lower-right block
  ProblemData d21{2, 1, {Rat(5)}, {Rat(1), Rat(2)}, Rat(1)};
  const AlgebraSignature s21 = d21.sig();
  const WeylMatrix w21 = build_W(d21);
  CHECK(w21.at(0, 1) == WeylElement::x(s21, 0, 0));
  CHECK(w21.at(0, 2) == WeylElement::x(s21, 1, 0));
  for (int i = 0; i < 2; ++i) {
    WeylElement diag = WeylElement::p_u(s21);
    diag -= coeff_elem(s21, RatFunc(d21.lambda[static_cast<size_t>(i)]));
    CHECK(w21.at(1 + i, 1 + i) == diag);
    CHECK(w21.at(1 + i, 0) == WeylElement::p(s21, i, 0));
  }
}

TEST_CASE("theorem_main_rhs hand expansions") {
  // M=N=1: (u - z)(p_u - l) - x p
  ProblemData d{1, 1, {Rat(2)}, {Rat(3)}, Rat(1)};
  const AlgebraSignature sig = d.sig();
  WeylElement want = WeylElement::p_u(sig);
  want -= coeff_elem(sig, RatFunc(Rat(3)));
  want = want.scaled(RatFunc(BiPoly::linear(Var::U, Rat(2))));
  want -= multiply(WeylElement::x(sig, 0, 0), WeylElement::p(sig, 0, 0));
  CHECK(theorem_main_rhs(d) == want);

  // M=1, N=2: (u-z1)(u-z2)(p_u-l1) - (u-z2) x11 p11 - (u-z1) x12 p12
  ProblemData d12{1, 2, {Rat(2), Rat(5)}, {Rat(3)}, Rat(1)};
  const AlgebraSignature s12 = d12.sig();
  WeylElement t0 = WeylElement::p_u(s12);
  t0 -= coeff_elem(s12, RatFunc(Rat(3)));
  t0 = t0.scaled(RatFunc(BiPoly::linear(Var::U, Rat(2)) * BiPoly::linear(Var::U, Rat(5))));
  t0 -= multiply(WeylElement::x(s12, 0, 0), WeylElement::p(s12, 0, 0))
            .scaled(RatFunc(BiPoly::linear(Var::U, Rat(5))));
  t0 -= multiply(WeylElement::x(s12, 0, 1), WeylElement::p(s12, 0, 1))
            .scaled(RatFunc(BiPoly::linear(Var::U, Rat(2))));
  CHECK(theorem_main_rhs(d12) == t0);

  // subset pair count for M=N=2 is 1 + 4 + 1 = 6
  CHECK(subset_pair_count(2, 2) == 6);
  CHECK(subset_pair_count(3, 3) == 20);
}

TEST_CASE("theorem_main_rhs degenerates to prod(u-z) prod(p_u-lambda)") {
  // setting all x to zero keeps only the empty-subset term
  ProblemData d{2, 2, {Rat(2), Rat(-1, 3)}, {Rat(3), Rat(1, 2)}, Rat(7, 5)};
  const AlgebraSignature sig = d.sig();
  const WeylElement rhs = theorem_main_rhs(d);
  WeylElement x_free = WeylElement::zero(sig);
  for (const auto& [m, c] : rhs.terms()) {
    bool has_x = false;
    for (int32_t e : m.xe) has_x = has_x || e != 0;
    if (!has_x) x_free.add_term(m, c);
  }
  WeylElement want = coeff_elem(
      sig, RatFunc(BiPoly::linear(Var::U, d.z[0]) * BiPoly::linear(Var::U, d.z[1])));
  for (const Rat& lam : d.lambda) {
    WeylElement f = WeylElement::p_u(sig);
    f -= coeff_elem(sig, RatFunc(lam));
    want = multiply(want, f);
  }
  CHECK(x_free == want);

  // M = 0: empty G block, the expansion is just prod(u - z_a)
  ProblemData d0{0, 2, {Rat(2), Rat(5)}, {}, Rat(1)};
  const AlgebraSignature s0 = d0.sig();
  CHECK(rdet(build_G(d0)) == WeylElement::one(s0));
  CHECK(theorem_main_rhs(d0) ==
        WeylElement::from_coeff(
            s0, RatFunc(BiPoly::linear(Var::U, Rat(2)) * BiPoly::linear(Var::U, Rat(5)))));
}

TEST_CASE("capelli builders") {
  // M=N=1, s=0: matrix [[-x p]], rhs = s - x p at s=0
  const WeylMatrix m = capelli_matrix(1, 1, Rat(0), Rat(1));
  const AlgebraSignature sig = m.signature();
  CHECK(m.at(0, 0) == -multiply(WeylElement::x(sig, 0, 0), WeylElement::p(sig, 0, 0)));
  CHECK(capelli_rhs(1, 1, Rat(0), Rat(1)) ==
        -multiply(WeylElement::x(sig, 0, 0), WeylElement::p(sig, 0, 0)));

  // h = 0: rhs collapses to sum (-1)^|A| s^{M-|A|} det x det p
  const Rat s(3);
  const WeylElement rhs0 = capelli_rhs(2, 2, s, Rat(0));
  const AlgebraSignature s22{2, 2, Rat(0)};
  WeylElement want = coeff_elem(s22, RatFunc(s * s));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      want -= multiply(WeylElement::x(s22, i, j), WeylElement::p(s22, i, j)).scaled(RatFunc(s));
  want += multiply(det_X(s22), det_P(s22));
  CHECK(rhs0 == want);
}

TEST_CASE("row_permute") {
  ProblemData d{3, 2, {Rat(0), Rat(1)}, {Rat(2), Rat(3), Rat(5)}, Rat(1)};
  const WeylMatrix g = build_G(d);
  CHECK(rdet(row_permute(g, {0, 1, 2})) == rdet(g));
  // 3-cycle is even
  CHECK(permutation_sign({1, 2, 0}) == 1);
  CHECK(rdet(row_permute(g, {1, 2, 0})) == rdet(g));
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK_THROWS_AS(row_permute(g, {0, 1}), BadPermutation);
  CHECK_THROWS_AS(row_permute(g, {0, 0, 1}), BadPermutation);
}
