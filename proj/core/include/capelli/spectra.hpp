#pragma once

#include <complex>
#include <vector>

#include "capelli/gaudin.hpp"

namespace capelli {

/// Common eigenvectors of a commuting family, found through a seeded random
/// real linear combination. Exactness policy: commutativity of the inputs is
/// verified in exact arithmetic; floats enter only at the eigendecomposition.
struct JointSpectrum {
  int basis_dim = 0;
  /// Accepted unit-norm eigenvectors (complex to cover non-symmetric inputs).
  std::vector<std::vector<std::complex<double>>> vectors;
  /// Per vector: Rayleigh eigenvalue of each input operator.
  std::vector<std::vector<std::complex<double>>> eigen_tuples;
  /// Per vector and operator: ||A w - theta w||.
  std::vector<std::vector<double>> residuals;

  /// Minimum pairwise distance between accepted eigenvalue tuples
  /// (+inf when fewer than two vectors).
  double min_tuple_gap() const;
};

/// Eigendecompose a seeded random combination of `ops`; accept a vector iff its
/// residual against every op is below tol * ||op||_F. Throws NonCommutingInputs
/// when the exact commutators are nonzero, DegenerateCombination after 5 reseeds.
JointSpectrum joint_eigenvectors(const std::vector<OpMatrix>& ops, double tol, uint64_t seed);

/// The monic scalar operator D_w = d^M/du^M + c_1(u) d^{M-1}/du^{M-1} + ... + c_M(u),
/// with c_i = q_i(u) / prod_a (u - z_a)^i; numerators recovered by interpolation
/// from Rayleigh quotients of the cleared transfer operators.
struct ScalarODE {
  int order = 0;
  std::vector<Rat> z;                        // clearing points
  std::vector<std::vector<double>> numer;    // numer[i-1] = coeffs of q_i, ascending
  /// Value of coefficient c_i at a non-pole point.
  double coeff_at(int i, double u) const;
};

/// Builds D_w for an accepted joint eigenvector w of all coefficient matrices
/// of tf. Validates interpolated numerators at 3 held-out points (1e-8 relative)
/// and throws NotAnEigenvector when a residual exceeds tol at any sample point.
ScalarODE build_Dw(const TransferFamily& tf, const std::vector<std::complex<double>>& w,
                   double tol = 1e-9);

/// Joint spectrum of the Hamiltonian family (Gaudin, plus dynamical when lambda
/// is distinct): for each seed, accepted tuple count equals dim and tuples are
/// separated by more than gap_tol. passed iff simplicity == expect_simple, so a
/// constructed degenerate witness reports non-simple without failing the suite.
CheckReport check_simple_spectrum(const ProblemData& d, const std::vector<int>& m,
                                  const std::vector<int>& n, const std::vector<uint64_t>& seeds,
                                  double gap_tol, double residual_tol = 1e-9,
                                  bool expect_simple = true);

/// A_ab acts on w as a scalar on both sides and the two scalars agree within tol,
/// for every grid entry.
CheckReport check_eigen_dual(const TransferFamily& tfM, const TransferFamily& tfN,
                             const std::vector<std::complex<double>>& w, double tol);

/// Kernel property: D_w annihilates p(u) e^{lambda_i u} for a polynomial p of
/// degree m_i. Clears denominators, equates u-power coefficients, and passes iff
/// the linear system in the m_i + 1 unknown coefficients has numerical nullity
/// >= 1 (smallest singular value < tol * largest).
CheckReport check_kernel_property(const ScalarODE& ode, const Rat& lambda_i, int m_i, double tol);

}  // namespace capelli
