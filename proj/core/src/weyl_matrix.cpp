#include "capelli/weyl_matrix.hpp"

#include <algorithm>

namespace capelli {

namespace {

void rdet_rec(const WeylMatrix& m, MulPolicy policy, int row, uint32_t used,
              const WeylElement& prefix, int sign, WeylElement& acc) {
  const int n = m.rows();
  if (row == n) {
    if (sign > 0)
      acc += prefix;
    else
      acc -= prefix;
    return;
  }
  for (int col = 0; col < n; ++col) {
    if (used & (1u << col)) continue;
    const WeylElement& entry = m.at(row, col);
    if (entry.is_zero()) continue;
    // inversions contributed by this choice: used columns above col
    const int inv = __builtin_popcount(used >> (col + 1));
    WeylElement next = multiply(prefix, entry, policy);
    if (next.is_zero()) continue;
    rdet_rec(m, policy, row + 1, used | (1u << col), next, (inv % 2) ? -sign : sign, acc);
  }
}

}  // namespace

WeylElement rdet(const WeylMatrix& m, MulPolicy policy) {
  if (m.rows() != m.cols()) throw NotSquare();
  WeylElement acc = WeylElement::zero(m.signature());
  rdet_rec(m, policy, 0, 0, WeylElement::one(m.signature()), 1, acc);
  return acc;
}

WeylElement det_comm(const WeylMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  const int n = m.rows();
  if (n == 0) return WeylElement::one(m.signature());
  if (n == 1) return m.at(0, 0);
  WeylElement acc = WeylElement::zero(m.signature());
  for (int col = 0; col < n; ++col) {
    if (m.at(0, col).is_zero()) continue;
    WeylMatrix minor(m.signature(), n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor.set(r - 1, cc++, m.at(r, c));
      }
    }
    WeylElement term = multiply(m.at(0, col), det_comm(minor));
    if (col % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

WeylMatrix row_permute(const WeylMatrix& m, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != m.rows())
    throw BadPermutation("length " + std::to_string(sigma.size()) + " for " +
                         std::to_string(m.rows()) + " rows");
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || s >= m.rows() || seen[static_cast<size_t>(s)])
      throw BadPermutation("not a permutation of row indices");
    seen[static_cast<size_t>(s)] = true;
  }
  WeylMatrix out(m.signature(), m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, m.at(sigma[static_cast<size_t>(r)], c));
  return out;
}

int permutation_sign(const std::vector<int>& sigma) {
  int inv = 0;
  for (size_t i = 0; i < sigma.size(); ++i)
    for (size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

}  // namespace capelli
