#pragma once

#include <vector>

#include "gln/arthur.hpp"
#include "gln/infparam.hpp"

namespace testutil {

// All compositions of n (ordered tuples of positive parts).
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// Lambda on the default line with integer exponents 0..k-1 and the given
// multiplicities.
inline gln::InfinitesimalParameter lambda_of(const std::vector<int>& mult) {
  gln::InfinitesimalParameter lambda;
  for (int i = 0; i < static_cast<int>(mult.size()); ++i)
    for (int c = 0; c < mult[i]; ++c) lambda.add(gln::LineId{}, gln::HalfInt{2 * i});
  return lambda;
}

// All multisets of components (a,b) on the default line with total degree
// exactly n; components listed in non-increasing (a,b) order.
inline void psi_multisets_rec(int remaining, int max_a, int max_b_for_max_a,
                              std::vector<gln::ArthurComponent>& acc,
                              std::vector<gln::ArthurParameter>& out) {
  if (remaining == 0) {
    out.push_back(gln::ArthurParameter(acc));
    return;
  }
  for (int a = max_a; a >= 1; --a) {
    int bmax = remaining / a;
    if (a == max_a) bmax = std::min(bmax, max_b_for_max_a);
    for (int b = bmax; b >= 1; --b) {
      acc.emplace_back(gln::LineId{}, a, b);
      psi_multisets_rec(remaining - a * b, a, b, acc, out);
      acc.pop_back();
    }
  }
}

inline std::vector<gln::ArthurParameter> one_line_psis(int degree) {
  std::vector<gln::ArthurParameter> out;
  std::vector<gln::ArthurComponent> acc;
  psi_multisets_rec(degree, degree, degree, acc, out);
  return out;
}

// Ordered splits of a multiplicity vector into two non-empty halves.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> splits(
    const std::vector<int>& mult) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  int k = static_cast<int>(mult.size());
  std::vector<int> f(k, 0);
  for (;;) {
    int j = 0;
    while (j < k && ++f[j] > mult[j]) f[j++] = 0;
    if (j == k) break;
    bool all = true;
    for (int i = 0; i < k; ++i)
      if (f[i] != mult[i]) all = false;
    if (all) continue;
    std::vector<int> g(k);
    for (int i = 0; i < k; ++i) g[i] = mult[i] - f[i];
    out.emplace_back(f, g);
  }
  return out;
}

}  // namespace testutil
