#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "gln/errors.hpp"
#include "gln/orbit.hpp"
#include "gln/textio.hpp"

namespace gln {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<BigInt>>;

// Fraction-free row reduction; exact over the integers.
int rank_exact(BigMat m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

long stabilizer_dim_bruteforce(const Multisegment& ms, const GuardOptions& guard) {
  GradedMatrixPoint pt = graded_point(ms);
  for (const auto& block : pt.blocks) {
    int total = 0;
    for (int e : block.mult) total += e;
    if (total > guard.max_bruteforce_points)
      throw GuardExceeded("line " + block.key.line.label + " carries " +
                          std::to_string(total) +
                          " points, above the brute-force limit of " +
                          std::to_string(guard.max_bruteforce_points));
  }
  // Unknowns: one e_x by e_x block of h per exponent; equations demand
  // h_next X = X h_prev for every adjacent map X.
  int unknowns = 0;
  std::vector<std::vector<int>> offset;
  for (const auto& block : pt.blocks) {
    offset.emplace_back();
    for (int e : block.mult) {
      offset.back().push_back(unknowns);
      unknowns += e * e;
    }
  }
  BigMat eqs;
  for (std::size_t b = 0; b < pt.blocks.size(); ++b) {
    const auto& block = pt.blocks[b];
    for (std::size_t i = 0; i + 1 < block.exponents.size(); ++i) {
      const IntMat& X = block.maps[i];
      int ep = block.mult[i], en = block.mult[i + 1];
      int off_p = offset[b][i], off_n = offset[b][i + 1];
      for (int r = 0; r < en; ++r)
        for (int c = 0; c < ep; ++c) {
          std::vector<BigInt> row(unknowns, 0);
          // (h_next X)(r,c) = sum_k h_next(r,k) X(k,c)
          for (int k = 0; k < en; ++k) row[off_n + r * en + k] += X.at(k, c);
          // (X h_prev)(r,c) = sum_k X(r,k) h_prev(k,c)
          for (int k = 0; k < ep; ++k) row[off_p + k * ep + c] -= X.at(r, k);
          eqs.push_back(std::move(row));
        }
    }
  }
  return unknowns - rank_exact(std::move(eqs));
}

long composite_rank(const GradedMatrixPoint& pt, const LineKey& key, HalfInt a,
                    HalfInt b) {
  for (const auto& block : pt.blocks) {
    if (block.key != key) continue;
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(block.exponents.size()); ++i) {
      if (block.exponents[i] == a) ia = i;
      if (block.exponents[i] == b) ib = i;
    }
    if (ia < 0 || ib < 0 || ib < ia) return 0;
    if (ia == ib) return block.mult[ia];
    IntMat m = block.maps[ia];
    for (int i = ia + 1; i < ib; ++i) m = block.maps[i] * m;
    BigMat big(m.rows(), std::vector<BigInt>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) big[r][c] = m.at(r, c);
    return rank_exact(std::move(big));
  }
  return 0;
}

}  // namespace gln
