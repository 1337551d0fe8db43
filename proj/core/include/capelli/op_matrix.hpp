#pragma once

#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// Dense square matrix of exact rationals: the image of a differential operator
/// acting on a weight-space monomial basis. Column j holds the coordinates of
/// the image of basis monomial j.
class OpMatrix {
 public:
  OpMatrix() = default;
  explicit OpMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, Rat(0)) {}

  static OpMatrix identity(int dim) {
    OpMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  int dim() const { return dim_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  bool is_zero() const {
    for (const Rat& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  Rat trace() const {
    Rat t(0);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  OpMatrix operator-() const;
  OpMatrix& operator+=(const OpMatrix& o);
  OpMatrix& operator-=(const OpMatrix& o);
  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
  OpMatrix scaled(const Rat& c) const;

  friend bool operator==(const OpMatrix& a, const OpMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

  /// a*b - b*a.
  static OpMatrix commutator(const OpMatrix& a, const OpMatrix& b) { return a * b - b * a; }

  std::vector<double> to_doubles() const;

 private:
  int dim_ = 0;
  std::vector<Rat> a_;
};

}  // namespace capelli
