#include "gln/infparam.hpp"

#include <algorithm>

namespace gln {

InfinitesimalParameter InfinitesimalParameter::from_points(
    const std::vector<std::pair<LineId, HalfInt>>& points) {
  InfinitesimalParameter lambda;
  for (const auto& [line, x] : points) lambda.add(line, x);
  return lambda;
}

void InfinitesimalParameter::add(const LineId& line, HalfInt x) {
  auto& v = exps_[LineKey{line, x.parity()}];
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

void InfinitesimalParameter::merge(const InfinitesimalParameter& other) {
  for (const auto& [key, xs] : other.exps_)
    for (HalfInt x : xs) add(key.line, x);
}

long InfinitesimalParameter::degree() const {
  long n = 0;
  for (const auto& [key, xs] : exps_)
    n += static_cast<long>(key.line.base_degree) * static_cast<long>(xs.size());
  return n;
}

int InfinitesimalParameter::count(const LineKey& k, HalfInt x) const {
  auto it = exps_.find(k);
  if (it == exps_.end()) return 0;
  auto [lo, hi] = std::equal_range(it->second.begin(), it->second.end(), x);
  return static_cast<int>(hi - lo);
}

}  // namespace gln
