#pragma once

#include <map>
#include <string>
#include <vector>

#include "capelli/errors.hpp"

namespace capelli {

/// Monomial basis of the weight subspace of C[x_ij] with row degrees m and
/// column degrees n: all M x N nonnegative integer tables with those margins,
/// sorted lexicographically by flattened (row-major) entries. Table index k
/// encodes the monomial prod x_ij^{t_ij}.
struct WeightBasis {
  int M = 0, N = 0;
  std::vector<int> m, n;
  std::vector<std::vector<int>> tables;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(tables.size()); }
};

/// Enumerate the basis; throws WeightMismatch unless sum(m) == sum(n).
WeightBasis enumerate_basis(int M, int N, const std::vector<int>& m, const std::vector<int>& n);

/// Count tables with the given margins without materializing them
/// (independent dynamic-programming route; used as the enumeration oracle
/// and for the auto-small weight guard).
long count_tables(const std::vector<int>& m, const std::vector<int>& n);

/// The CLI's "auto-small" mode: balanced compositions of k over M (resp. N)
/// parts, starting at k = max(M,N) and shrinking k until the basis dimension
/// fits max_dim (0 = no cap). k = 1 always fits (dimension 1).
void auto_small_weights(int M, int N, std::vector<int>& m, std::vector<int>& n, int max_dim = 0);

}  // namespace capelli
