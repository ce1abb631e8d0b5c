#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gln {

// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> oneline);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<std::uint8_t>& word() const { return w_; }

  Permutation inverse() const;
  Permutation reverse_complement() const;  // w0 * w * w0
  // Left multiplication by the simple reflection s_i (swaps values i, i+1).
  Permutation left_s(int i) const;

  long length() const;  // inversion count
  bool left_descent(int i) const { return pos(i) > pos(i + 1); }
  int first_left_descent() const;  // 0 if none

  std::string str() const;  // digits for n <= 9, else comma separated

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& x, const Permutation& y) {
    return x.w_ < y.w_;
  }

 private:
  int pos(int value) const;
  std::vector<std::uint8_t> w_;
};

// Bruhat order via rank-matrix dominance.
bool bruhat_leq(const Permutation& x, const Permutation& w);

Permutation block_diagonal(const std::vector<Permutation>& blocks);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto b : p.word()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace gln
