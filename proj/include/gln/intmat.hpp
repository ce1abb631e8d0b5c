#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gln {

// Dense integer matrix, exact arithmetic only.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  std::int64_t& at(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  std::int64_t at(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat kron(const IntMat& o) const;

  // Exact inverse for unitriangular matrices (lower or upper); throws
  // InternalInconsistency otherwise.
  IntMat inverse_unitriangular() const;

  bool is_zero_one() const;
  std::string str() const;
  std::string latex() const;

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace gln
