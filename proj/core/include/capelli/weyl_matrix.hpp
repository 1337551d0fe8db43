#pragma once

#include <vector>

#include "capelli/weyl.hpp"

namespace capelli {

/// Rectangular matrix with WeylElement entries, all sharing one signature.
class WeylMatrix {
 public:
  WeylMatrix(const AlgebraSignature& sig, int rows, int cols)
      : sig_(sig), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, WeylElement::zero(sig)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const AlgebraSignature& signature() const { return sig_; }

  const WeylElement& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, WeylElement v) {
    if (!(v.signature() == sig_)) throw SignatureMismatch();
    e_[static_cast<size_t>(r) * cols_ + c] = std::move(v);
  }

 private:
  AlgebraSignature sig_;
  int rows_, cols_;
  std::vector<WeylElement> e_;
};

/// Row determinant: sum over permutations of sgn(sigma) a_{1,s1} ... a_{n,sn},
/// products taken left-to-right in row order. The 0x0 determinant is 1.
/// Evaluated by depth-first expansion so partial row products are shared
/// across permutations with a common prefix.
WeylElement rdet(const WeylMatrix& m, MulPolicy policy = MulPolicy::standard);

/// Determinant of a matrix whose entries mutually commute (x-only blocks,
/// p-only blocks, or the h = 0 algebra); Laplace expansion along the first row.
WeylElement det_comm(const WeylMatrix& m);

/// Rows reordered: result row i is m row sigma[i] (sigma 0-based).
WeylMatrix row_permute(const WeylMatrix& m, const std::vector<int>& sigma);

/// Sign of a permutation given 0-based image vector.
int permutation_sign(const std::vector<int>& sigma);

}  // namespace capelli
