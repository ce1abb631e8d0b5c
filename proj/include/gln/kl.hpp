#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gln/klpoly.hpp"
#include "gln/perm.hpp"

namespace gln {

// Kazhdan-Lusztig polynomials P_{x,w} for symmetric groups, computed by the
// standard mu-recursion over full lower-interval columns.  Results are exact.
//
// Thread model: get-or-compute-once.  Lookups take a shared lock, insertion an
// exclusive one; two threads may duplicate a computation but the value written
// first wins and every caller sees identical polynomials.
class KlEngine {
 public:
  struct Stats {
    std::size_t pair_hits = 0;
    std::size_t pair_misses = 0;
    std::size_t columns_built = 0;
  };

  // Refuses rank above this without an explicit override.
  explicit KlEngine(int max_points = 12) : max_points_(max_points) {}

  KlPoly poly(const Permutation& x, const Permutation& w);
  std::int64_t poly_at_one(const Permutation& x, const Permutation& w);

  // Cache file format "KLCACHE 1"; loading a foreign version throws
  // VersionMismatch, a malformed body throws CorruptEntry, and neither
  // partially loads.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

  Stats stats() const;

 private:
  struct Column;
  using ColumnPtr = std::shared_ptr<const Column>;

  KlPoly pair_reduced(const Permutation& x, const Permutation& w);
  ColumnPtr column(const Permutation& w);
  ColumnPtr build_column(const Permutation& w);

  int max_points_;
  mutable std::shared_mutex pair_mu_;
  std::unordered_map<std::string, KlPoly> pair_memo_;
  mutable std::shared_mutex col_mu_;
  std::unordered_map<Permutation, ColumnPtr, PermHash> columns_;
  mutable std::shared_mutex stats_mu_;
  Stats stats_;
};

// True when w reverses each of its minimal stable intervals; the lower Bruhat
// interval of such w is the parabolic it generates and every P-value is 1.
bool is_block_reversal(const Permutation& w);

// Canonical reduction of a pair: split common stable intervals, standardize
// each factor, normalize by the inverse/reverse-complement symmetries.
std::vector<std::pair<Permutation, Permutation>> split_stable_blocks(
    const Permutation& x, const Permutation& w);

}  // namespace gln
