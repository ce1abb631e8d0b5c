#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gln/halfint.hpp"

namespace gln {

// Infinitesimal parameter: a finite multiset of exponents per line.  Exponents
// on one label that differ by a non-integer are kept on distinct keys.
class InfinitesimalParameter {
 public:
  InfinitesimalParameter() = default;

  static InfinitesimalParameter from_points(
      const std::vector<std::pair<LineId, HalfInt>>& points);

  void add(const LineId& line, HalfInt x);
  void merge(const InfinitesimalParameter& other);

  // Exponents sorted ascending per key.
  const std::map<LineKey, std::vector<HalfInt>>& lines() const { return exps_; }
  long degree() const;
  bool empty() const { return exps_.empty(); }
  int count(const LineKey& k, HalfInt x) const;

  friend bool operator==(const InfinitesimalParameter&,
                         const InfinitesimalParameter&) = default;
  friend bool operator<(const InfinitesimalParameter& x,
                        const InfinitesimalParameter& y) {
    return x.exps_ < y.exps_;
  }

 private:
  std::map<LineKey, std::vector<HalfInt>> exps_;
};

}  // namespace gln
