#pragma once

#include <vector>

#include "capelli/weyl_matrix.hpp"

namespace capelli {

/// One problem instance: sizes, evaluation points z, weights lambda, and h.
/// Distinctness of z (and lambda) is only required by the representation layer;
/// the formal identities of the determinant suites hold for arbitrary values.
struct ProblemData {
  int M = 1;
  int N = 1;
  std::vector<Rat> z;       // size N
  std::vector<Rat> lambda;  // size M
  Rat h = Rat(1);

  AlgebraSignature sig() const { return {M, N, h}; }
  ProblemData with_h(const Rat& new_h) const {
    ProblemData d = *this;
    d.h = new_h;
    return d;
  }
  bool distinct_z() const;
  bool distinct_lambda() const;
};

/// Swap the two sides: (M,N,z,lambda) -> (N,M,lambda,z).
ProblemData transpose(const ProblemData& d);

/// prod_a (var - pts[a]) as a polynomial coefficient.
BiPoly clearing_poly(Var var, const std::vector<Rat>& pts, int power = 1);

/// The M x M matrix G_h: entry (i,j) = (p_u - lambda_i) d_ij - sum_a x_{ja} p_{ia} / (u - z_a).
WeylMatrix build_G(const ProblemData& d);

/// The N x N matrix H_h: entry (i,j) = (p_v - z_i) d_ij - sum_b x_{bj} p_{bi} / (v - lambda_b).
WeylMatrix build_H(const ProblemData& d);

/// The (M+N) x (M+N) block matrix [[u - Z, X^t], [P, p_u - Lambda]].
WeylMatrix build_W(const ProblemData& d);

/// Subset expansion: sum over A in {1..M}, B in {1..N} with |A| = |B| of
/// (-1)^|A| prod_{a not in B}(u - z_a) prod_{b not in A}(p_u - lambda_b)
/// det(x_ab) det(p_ab), factors multiplied in exactly this order.
WeylElement theorem_main_rhs(const ProblemData& d);

/// Number of subset pairs contributing to theorem_main_rhs: sum_k C(M,k) C(N,k).
long subset_pair_count(int M, int N);

/// z = lambda = 0 rewriting of u^M rdet(G_h):
/// entries (u p_u - (M-i) h) d_ij - sum_a x_{ja} p_{ia}, 1-based i.
WeylMatrix euler_capelli_matrix(int M, int N, const Rat& h);

/// After alpha_s: entries (s - (M-i) h) d_ij - sum_a x_{ja} p_{ia}.
WeylMatrix capelli_matrix(int M, int N, const Rat& s, const Rat& h);

/// Subset expansion after alpha_s:
/// sum_{A,B,|A|=|B|} (-1)^|A| prod_{b=0}^{M-|A|-1}(s - b h) det(x_ab) det(p_ab).
WeylElement capelli_rhs(int M, int N, const Rat& s, const Rat& h);

/// Classical form (M = N): entries sum_a x_{ja} p_{ia} + h (M-i) d_ij.
WeylMatrix classical_capelli_matrix(int M, const Rat& h);

/// det X and det P over the full index range (M = N), commutative minors.
WeylElement det_X(const AlgebraSignature& sig);
WeylElement det_P(const AlgebraSignature& sig);

}  // namespace capelli
