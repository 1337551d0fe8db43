#include "capelli/op_matrix.hpp"

#include "capelli/errors.hpp"

namespace capelli {

OpMatrix OpMatrix::operator-() const {
  OpMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (dim_ != o.dim_) throw Error("OpMatrix dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
  if (dim_ != o.dim_) throw Error("OpMatrix dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("OpMatrix dimension mismatch");
  const int n = a.dim_;
  OpMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

OpMatrix OpMatrix::scaled(const Rat& c) const {
  OpMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

std::vector<double> OpMatrix::to_doubles() const {
  std::vector<double> out(a_.size());
  for (size_t i = 0; i < a_.size(); ++i) out[i] = a_[i].to_double();
  return out;
}

}  // namespace capelli
