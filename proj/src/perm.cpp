#include "gln/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace gln {

Permutation::Permutation(std::vector<std::uint8_t> oneline) : w_(std::move(oneline)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (auto v : w_) {
    if (v < 1 || v > w_.size() || seen[v])
      throw std::invalid_argument("not a permutation word");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> w(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(i + 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[w_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::reverse_complement() const {
  int n = size();
  std::vector<std::uint8_t> out(w_.size());
  for (int i = 0; i < n; ++i)
    out[i] = static_cast<std::uint8_t>(n + 1 - w_[n - 1 - i]);
  return Permutation(std::move(out));
}

Permutation Permutation::left_s(int i) const {
  std::vector<std::uint8_t> out = w_;
  for (auto& v : out) {
    if (v == i)
      v = static_cast<std::uint8_t>(i + 1);
    else if (v == i + 1)
      v = static_cast<std::uint8_t>(i);
  }
  return Permutation(std::move(out));
}

long Permutation::length() const {
  long inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

int Permutation::first_left_descent() const {
  for (int i = 1; i < size(); ++i)
    if (left_descent(i)) return i;
  return 0;
}

int Permutation::pos(int value) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] == value) return static_cast<int>(i + 1);
  return 0;
}

std::string Permutation::str() const {
  std::string out;
  bool digits = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!digits && i) out += ",";
    out += std::to_string(static_cast<int>(w_[i]));
  }
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  int n = x.size();
  if (n != w.size()) return false;
  // x <= w iff every northwest rank of x dominates that of w.
  std::vector<int> rx(n + 1, 0), rw(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = x(i); j <= n; ++j) ++rx[j];
    for (int j = w(i); j <= n; ++j) ++rw[j];
    for (int j = 1; j <= n; ++j)
      if (rx[j] < rw[j]) return false;
  }
  return true;
}

Permutation block_diagonal(const std::vector<Permutation>& blocks) {
  std::vector<std::uint8_t> w;
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 1; i <= b.size(); ++i)
      w.push_back(static_cast<std::uint8_t>(offset + b(i)));
    offset += b.size();
  }
  return Permutation(std::move(w));
}

}  // namespace gln
