#pragma once

#include <utility>
#include <vector>

#include "capelli/builders.hpp"
#include "capelli/op_matrix.hpp"
#include "capelli/report.hpp"
#include "capelli/weight_basis.hpp"

namespace capelli {

/// Which of the two dual module structures on C[X] an object belongs to.
/// glM: operators realized via E_ij^{(a)} -> x_{ia} d/dx_{ja};
/// glN: via E_ij^{(a)} -> x_{ai} d/dx_{aj}. Both act on the same monomial
/// basis; the weight-space identification is the identity on monomials.
enum class Side { glM, glN };

/// Matrix of a u-, v-, p_u-, p_v-free element acting on the monomial basis,
/// with x_ij as multiplication and p_ij as d/dx_ij (the h = 1 realization).
/// With transposed = true the element lives in the (N, M)-shaped algebra and
/// its variable (i,j) acts at grid position (j,i) — the glN realization.
/// Every monomial must preserve both weight gradings.
OpMatrix realize(const WeylElement& elem, const WeightBasis& basis, bool transposed = false);

/// Transfer-matrix data realized on one weight space.
struct TransferFamily {
  ProblemData d;      // original orientation, h ignored (realization is at h = 1)
  Side side = Side::glM;
  WeightBasis basis;
  int order = 0;      // M for glM, N for glN: order of the scalar operator
  int n_points = 0;   // N for glM, M for glN: number of clearing points
  std::vector<Rat> clear_points;  // z for glM, lambda for glN
  /// cleared_ops[i-1][k] = coefficient of u^k in \hat G_i = G~_i * prod(u - pts)^i,
  /// i = 1..order. Degree <= i * n_points.
  std::vector<std::vector<OpMatrix>> cleared_ops;
  /// A_grid[a][b], a = 0..N, b = 0..M, from the single-clearing expansion
  /// prod(u - z_a) rdet = sum A_ab u^a d^b (glM) / sum A_ab v^b d^a (glN).
  std::vector<std::vector<OpMatrix>> A_grid;

  /// Exact evaluation of \hat G_i at a rational point.
  OpMatrix eval_cleared(int i, const Rat& at) const;
  int cleared_degree(int i) const { return static_cast<int>(cleared_ops[static_cast<size_t>(i - 1)].size()) - 1; }
};

/// Build the family for one side; requires pairwise-distinct z and lambda.
TransferFamily transfer_family(const ProblemData& d, const WeightBasis& basis, Side side);

/// Gaudin Hamiltonian H_a = sum_{b != a} Omega^{(ab)} / (z_a - z_b) + sum_b lambda_b E_bb^{(a)},
/// realized on the basis; a is 1-based in [1, N]. Side::glN interprets d as the
/// transposed problem and realizes through the glN map.
OpMatrix gaudin_hamiltonian(const ProblemData& d, const WeightBasis& basis, int a,
                            Side side = Side::glM);

/// Dynamical Hamiltonian
/// H^v_a = sum_{b != a} [(sum_i E_ab^{(i)})(sum_i E_ba^{(i)}) - sum_i E_aa^{(i)}]/(lambda_a - lambda_b)
///         + sum_b z_b E_aa^{(b)},  a in [1, M].
OpMatrix dynamical_hamiltonian(const ProblemData& d, const WeightBasis& basis, int a,
                               Side side = Side::glM);

/// [\hat G_i(u0), \hat G_j(v0)] = 0 exactly for all i <= j and all sample pairs.
CheckReport check_commutativity(const TransferFamily& tf,
                                const std::vector<std::pair<Rat, Rat>>& sample_points);

/// Same, on the certifying grid: (deg_i + 1) x (deg_j + 1) rational points per
/// pair, avoiding the clearing points.
CheckReport check_commutativity_certified(const TransferFamily& tf);

/// pi^M H_a(M,N,z,l) = pi^N Hv_a(N,M,l,z) for a = 1..N and
/// pi^M Hv_b(M,N,z,l) = pi^N H_b(N,M,l,z) for b = 1..M, exactly.
CheckReport check_hamiltonian_duality(const ProblemData& d, const std::vector<int>& m,
                                      const std::vector<int>& n);

/// A_ab^(M) = A_ab^(N) entrywise over the full (N+1) x (M+1) grid.
CheckReport check_theorem_dual(const ProblemData& d, const std::vector<int>& m,
                               const std::vector<int>& n);

/// Deterministic rational sample points avoiding `avoid` (small integers 2,3,...).
std::vector<Rat> sample_points(int count, const std::vector<Rat>& avoid);

}  // namespace capelli
