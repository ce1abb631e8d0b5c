#include "gln/encode.hpp"

#include <map>
#include <string>
#include <vector>

#include "gln/errors.hpp"
#include "gln/textio.hpp"

namespace gln {

Permutation encode(const InfinitesimalParameter& lambda, const Multisegment& ms) {
  if (support(ms) != lambda)
    throw SupportMismatch("multisegment support " + render(support(ms)) +
                          " does not match " + render(lambda));
  std::vector<Permutation> parts;
  for (const auto& [key, exps] : lambda.lines()) {
    std::vector<HalfInt> xs;
    std::vector<int> e;
    for (const HalfInt& x : exps) {
      if (!xs.empty() && xs.back() == x)
        ++e.back();
      else {
        xs.push_back(x);
        e.push_back(1);
      }
    }
    int k = static_cast<int>(xs.size());
    // Coset matrix: each segment [x_s..x_t] closes into a cycle, one cell
    // (u, u+1) per covered adjacent pair plus the wrap cell (t, s).
    std::vector<std::vector<int>> lace(k, std::vector<int>(k, 0));
    for (const Segment& d : ms.segments()) {
      if (d.key() != key) continue;
      int s = -1, t = -1;
      for (int i = 0; i < k; ++i) {
        if (xs[i] == d.a) s = i;
        if (xs[i] == d.b) t = i;
      }
      for (int u = s; u < t; ++u) ++lace[u][u + 1];
      ++lace[t][s];
    }
    for (int i = 0; i < k; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < k; ++j) {
        row += lace[i][j];
        col += lace[j][i];
      }
      if (row != e[i] || col != e[i])
        throw InternalInconsistency("lace matrix margins disagree with " +
                                    render(lambda));
    }
    std::vector<int> col_start(k, 0);
    for (int j = 1; j < k; ++j) col_start[j] = col_start[j - 1] + e[j - 1];
    std::vector<int> avail = e;
    std::vector<std::uint8_t> word;
    for (int i = 0; i < k; ++i)
      for (int j = k - 1; j >= 0; --j)
        for (int c = 0; c < lace[i][j]; ++c)
          word.push_back(static_cast<std::uint8_t>(col_start[j] + avail[j]--));
    parts.push_back(Permutation(std::move(word)));
  }
  return block_diagonal(parts);
}

}  // namespace gln
