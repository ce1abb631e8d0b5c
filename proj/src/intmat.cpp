#include "gln/intmat.hpp"

#include <stdexcept>

#include "gln/errors.hpp"

namespace gln {

IntMat::IntMat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  r_ = static_cast<int>(rows.size());
  c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(std::size_t(r_) * c_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c_)
      throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
    }
  return m;
}

IntMat IntMat::kron(const IntMat& o) const {
  IntMat m(r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      std::int64_t v = at(i, j);
      if (v == 0) continue;
      for (int p = 0; p < o.r_; ++p)
        for (int q = 0; q < o.c_; ++q)
          m.at(i * o.r_ + p, j * o.c_ + q) = v * o.at(p, q);
    }
  return m;
}

IntMat IntMat::inverse_unitriangular() const {
  if (r_ != c_) throw InternalInconsistency("inverse of non-square matrix");
  int n = r_;
  for (int i = 0; i < n; ++i)
    if (at(i, i) != 1) throw InternalInconsistency("matrix is not unitriangular");
  bool lower = true, upper = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j > i && at(i, j) != 0) lower = false;
      if (j < i && at(i, j) != 0) upper = false;
    }
  if (!lower && !upper) throw InternalInconsistency("matrix is not unitriangular");
  // Forward substitution on columns of the identity.
  IntMat inv = identity(n);
  if (lower) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        std::int64_t acc = (i == j) ? 1 : 0;
        for (int k = 0; k < i; ++k) acc -= at(i, k) * inv.at(k, j);
        inv.at(i, j) = acc;
      }
  } else {
    for (int j = 0; j < n; ++j)
      for (int i = n - 1; i >= 0; --i) {
        std::int64_t acc = (i == j) ? 1 : 0;
        for (int k = i + 1; k < n; ++k) acc -= at(i, k) * inv.at(k, j);
        inv.at(i, j) = acc;
      }
  }
  return inv;
}

bool IntMat::is_zero_one() const {
  for (std::int64_t v : a_)
    if (v != 0 && v != 1) return false;
  return true;
}

std::string IntMat::str() const {
  std::string out;
  for (int i = 0; i < r_; ++i) {
    out += "[";
    for (int j = 0; j < c_; ++j) {
      if (j) out += " ";
      out += std::to_string(at(i, j));
    }
    out += "]\n";
  }
  return out;
}

std::string IntMat::latex() const {
  std::string out = "\\begin{bmatrix}\n";
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) {
      if (j) out += " & ";
      out += std::to_string(at(i, j));
    }
    out += " \\\\\n";
  }
  out += "\\end{bmatrix}\n";
  return out;
}

}  // namespace gln
