#include "capelli/builders.hpp"

#include <cmath>

namespace capelli {

namespace {

bool pairwise_distinct(const std::vector<Rat>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

std::vector<int> mask_to_indices(uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// Commutative minor det over rows A, cols B of the x-grid (or p-grid).
WeylElement minor_det(const AlgebraSignature& sig, const std::vector<int>& rows,
                      const std::vector<int>& cols, bool use_p) {
  const int k = static_cast<int>(rows.size());
  WeylMatrix m(sig, k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      m.set(r, c, use_p ? WeylElement::p(sig, rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)])
                        : WeylElement::x(sig, rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)]));
  return det_comm(m);
}

}  // namespace

bool ProblemData::distinct_z() const { return pairwise_distinct(z); }
bool ProblemData::distinct_lambda() const { return pairwise_distinct(lambda); }

ProblemData transpose(const ProblemData& d) { return ProblemData{d.N, d.M, d.lambda, d.z, d.h}; }

BiPoly clearing_poly(Var var, const std::vector<Rat>& pts, int power) {
  BiPoly p(Rat(1));
  for (const Rat& c : pts)
    for (int k = 0; k < power; ++k) p *= BiPoly::linear(var, c);
  return p;
}

WeylMatrix build_G(const ProblemData& d) {
  const AlgebraSignature sig = d.sig();
  WeylMatrix g(sig, d.M, d.M);
  for (int i = 0; i < d.M; ++i)
    for (int j = 0; j < d.M; ++j) {
      WeylElement e = WeylElement::zero(sig);
      if (i == j) {
        e += WeylElement::p_u(sig);
        e -= WeylElement::from_coeff(sig, RatFunc(d.lambda[static_cast<size_t>(i)]));
      }
      for (int a = 0; a < d.N; ++a) {
        const RatFunc pole = RatFunc::inv_linear(Var::U, d.z[static_cast<size_t>(a)]);
        e -= multiply(WeylElement::x(sig, j, a), WeylElement::p(sig, i, a)).scaled(pole);
      }
      g.set(i, j, std::move(e));
    }
  return g;
}

WeylMatrix build_H(const ProblemData& d) {
  const AlgebraSignature sig = d.sig();
  WeylMatrix h(sig, d.N, d.N);
  for (int i = 0; i < d.N; ++i)
    for (int j = 0; j < d.N; ++j) {
      WeylElement e = WeylElement::zero(sig);
      if (i == j) {
        e += WeylElement::p_v(sig);
        e -= WeylElement::from_coeff(sig, RatFunc(d.z[static_cast<size_t>(i)]));
      }
      for (int b = 0; b < d.M; ++b) {
        const RatFunc pole = RatFunc::inv_linear(Var::V, d.lambda[static_cast<size_t>(b)]);
        e -= multiply(WeylElement::x(sig, b, j), WeylElement::p(sig, b, i)).scaled(pole);
      }
      h.set(i, j, std::move(e));
    }
  return h;
}

WeylMatrix build_W(const ProblemData& d) {
  const AlgebraSignature sig = d.sig();
  const int n = d.M + d.N;
  WeylMatrix w(sig, n, n);
  for (int i = 0; i < d.N; ++i) {
    // (u - Z) block
    WeylElement diag = WeylElement::from_coeff(
        sig, RatFunc(BiPoly::linear(Var::U, d.z[static_cast<size_t>(i)])));
    w.set(i, i, std::move(diag));
    // X^t block: entry (i, N + j) = x_{ji}
    for (int j = 0; j < d.M; ++j) w.set(i, d.N + j, WeylElement::x(sig, j, i));
  }
  for (int i = 0; i < d.M; ++i) {
    // P block: entry (N + i, j) = p_{ij}
    for (int j = 0; j < d.N; ++j) w.set(d.N + i, j, WeylElement::p(sig, i, j));
    // (p_u - Lambda) block
    WeylElement diag = WeylElement::p_u(sig);
    diag -= WeylElement::from_coeff(sig, RatFunc(d.lambda[static_cast<size_t>(i)]));
    w.set(d.N + i, d.N + i, std::move(diag));
  }
  return w;
}

WeylElement theorem_main_rhs(const ProblemData& d) {
  const AlgebraSignature sig = d.sig();
  WeylElement acc = WeylElement::zero(sig);
  for (uint32_t maskA = 0; maskA < (1u << d.M); ++maskA) {
    const auto A = mask_to_indices(maskA, d.M);
    for (uint32_t maskB = 0; maskB < (1u << d.N); ++maskB) {
      const auto B = mask_to_indices(maskB, d.N);
      if (A.size() != B.size()) continue;
      // prod_{a not in B} (u - z_a): a pure coefficient polynomial
      BiPoly upoly(Rat(1));
      for (int a = 0; a < d.N; ++a)
        if (!(maskB & (1u << a))) upoly *= BiPoly::linear(Var::U, d.z[static_cast<size_t>(a)]);
      WeylElement term = WeylElement::from_coeff(sig, RatFunc(upoly));
      // prod_{b not in A} (p_u - lambda_b), ascending b
      for (int b = 0; b < d.M; ++b) {
        if (maskA & (1u << b)) continue;
        WeylElement f = WeylElement::p_u(sig);
        f -= WeylElement::from_coeff(sig, RatFunc(d.lambda[static_cast<size_t>(b)]));
        term = multiply(term, f);
      }
      term = multiply(term, minor_det(sig, A, B, /*use_p=*/false));
      term = multiply(term, minor_det(sig, A, B, /*use_p=*/true));
      if (A.size() % 2)
        acc -= term;
      else
        acc += term;
    }
  }
  return acc;
}

long subset_pair_count(int M, int N) {
  long total = 0;
  const int kmax = std::min(M, N);
  for (int k = 0; k <= kmax; ++k) {
    const Rat c = Rat::binomial(static_cast<unsigned long>(M), static_cast<unsigned long>(k)) *
                  Rat::binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(k));
    total += std::lround(c.to_double());
  }
  return total;
}

namespace {

// Shared shape of the three Capelli-side matrices: diag(i) - sum_a x_{ja} p_{ia}.
WeylMatrix capelli_like(const AlgebraSignature& sig, const std::vector<WeylElement>& diag) {
  WeylMatrix m(sig, sig.M, sig.M);
  for (int i = 0; i < sig.M; ++i)
    for (int j = 0; j < sig.M; ++j) {
      WeylElement e = WeylElement::zero(sig);
      if (i == j) e += diag[static_cast<size_t>(i)];
      for (int a = 0; a < sig.N; ++a)
        e -= multiply(WeylElement::x(sig, j, a), WeylElement::p(sig, i, a));
      m.set(i, j, std::move(e));
    }
  return m;
}

}  // namespace

WeylMatrix euler_capelli_matrix(int M, int N, const Rat& h) {
  const AlgebraSignature sig{M, N, h};
  std::vector<WeylElement> diag;
  for (int i = 1; i <= M; ++i) {
    // u p_u - (M - i) h
    WeylElement e =
        WeylElement::p_u(sig).scaled(RatFunc(BiPoly::variable(Var::U)));
    e -= WeylElement::from_coeff(sig, RatFunc(Rat(M - i) * h));
    diag.push_back(std::move(e));
  }
  return capelli_like(sig, diag);
}

WeylMatrix capelli_matrix(int M, int N, const Rat& s, const Rat& h) {
  const AlgebraSignature sig{M, N, h};
  std::vector<WeylElement> diag;
  for (int i = 1; i <= M; ++i)
    diag.push_back(WeylElement::from_coeff(sig, RatFunc(s - Rat(M - i) * h)));
  return capelli_like(sig, diag);
}

WeylElement capelli_rhs(int M, int N, const Rat& s, const Rat& h) {
  const AlgebraSignature sig{M, N, h};
  WeylElement acc = WeylElement::zero(sig);
  for (uint32_t maskA = 0; maskA < (1u << M); ++maskA) {
    const auto A = mask_to_indices(maskA, M);
    for (uint32_t maskB = 0; maskB < (1u << N); ++maskB) {
      const auto B = mask_to_indices(maskB, N);
      if (A.size() != B.size()) continue;
      Rat scalar(1);
      for (int b = 0; b < M - static_cast<int>(A.size()); ++b) scalar *= s - Rat(b) * h;
      WeylElement term = WeylElement::from_coeff(sig, RatFunc(scalar));
      term = multiply(term, minor_det(sig, A, B, /*use_p=*/false));
      term = multiply(term, minor_det(sig, A, B, /*use_p=*/true));
      if (A.size() % 2)
        acc -= term;
      else
        acc += term;
    }
  }
  return acc;
}

WeylMatrix classical_capelli_matrix(int M, const Rat& h) {
  const AlgebraSignature sig{M, M, h};
  WeylMatrix m(sig, M, M);
  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= M; ++j) {
      WeylElement e = WeylElement::zero(sig);
      if (i == j) e += WeylElement::from_coeff(sig, RatFunc(Rat(M - i) * h));
      for (int a = 0; a < M; ++a)
        e += multiply(WeylElement::x(sig, j - 1, a), WeylElement::p(sig, i - 1, a));
      m.set(i - 1, j - 1, std::move(e));
    }
  return m;
}

WeylElement det_X(const AlgebraSignature& sig) {
  std::vector<int> all;
  for (int i = 0; i < sig.M; ++i) all.push_back(i);
  return minor_det(sig, all, all, /*use_p=*/false);
}

WeylElement det_P(const AlgebraSignature& sig) {
  std::vector<int> all;
  for (int i = 0; i < sig.M; ++i) all.push_back(i);
  return minor_det(sig, all, all, /*use_p=*/true);
}

}  // namespace capelli
