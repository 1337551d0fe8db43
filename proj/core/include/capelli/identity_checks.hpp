#pragma once

#include "capelli/builders.hpp"
#include "capelli/report.hpp"

namespace capelli {

/// prod_a (u - z_a) * rdet(G_h), the left side shared by the main identities.
WeylElement cleared_rdet_G(const ProblemData& d, MulPolicy policy = MulPolicy::standard);

/// Theorem main: prod(u - z_a) rdet(G_h) equals the subset expansion.
CheckReport check_theorem_main(const ProblemData& d);

/// Corollary (M+N): prod(u - z_a) rdet(G_h) = rdet(W).
CheckReport check_cor_mn(const ProblemData& d);

/// Duality relation: e(prod(u - z_a) rdet(G_h)) = e(prod(v - lambda_b) rdet(H_h)).
CheckReport check_duality_rel(const ProblemData& d);

/// Capelli chain, three required sub-checks:
///  (a) with z = lambda = 0: u^M rdet(G_h) = rdet((u p_u - (M-i)h) d_ij - sum_a x_{ja}p_{ia});
///  (b) alpha_s of (a)'s left side = rdet(capelli_matrix) = capelli_rhs;
///  (c) for M = N, s = 0: rdet(sum_a x_{ja}p_{ia} + h(M-i) d_ij) = det X det P,
///      which is (b) with the sign convention moved to the classical form.
CheckReport check_capelli_chain(int M, int N, const Rat& s, const Rat& h);

/// Normal form of rdet(G_h) literally identical across all h in h_values
/// (monomials and coefficients). Requires >= 2 distinct h values.
CheckReport check_h_independence(const ProblemData& d, const std::vector<Rat>& h_values);

/// Negative control: same comparison with the commutator-sign-flipped product
/// rule; passes iff the corrupted engine is detected (the inner check fails).
CheckReport check_h_independence_negative_control(const ProblemData& d,
                                                  const std::vector<Rat>& h_values);

/// rdet(sigma G_h) = sgn(sigma) rdet(G_h); sigma 0-based.
CheckReport check_row_sign(const ProblemData& d, const std::vector<int>& sigma);

/// h = 0 block-determinant factorization: rdet(W) = det(u - Z) det((p_u - L) - P (u-Z)^{-1} X^t),
/// everything commutative. h is forced to 0 internally.
CheckReport check_gauss(const ProblemData& d);

/// Structural invariants of the cleared left side: no denominators survive,
/// u-degree <= N, p_u-degree <= M.
CheckReport check_polynomiality(const ProblemData& d);

nlohmann::json problem_params(const ProblemData& d);

}  // namespace capelli
