#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "gln/arthur.hpp"
#include "gln/infparam.hpp"
#include "gln/intmat.hpp"
#include "gln/multisegment.hpp"

namespace gln {

struct GuardOptions {
  // Orbit spaces refuse lines with more points than this.
  int max_points_per_line = 12;
  // The commutant solver refuses lines with more points than this.
  int max_bruteforce_points = 8;
};

// Interval key (line, a, b) with a <= b; value = number of segments
// containing [a,b], i.e. the rank of the composite map E_a -> E_b.
using RankMap = std::map<std::tuple<LineKey, HalfInt, HalfInt>, int>;

long dim_V(const InfinitesimalParameter& lambda);
long dim_H(const InfinitesimalParameter& lambda);

RankMap rank_invariants(const Multisegment& ms);

// Orbit dimension from the hom formula: dim H minus the endomorphism count
// of the interval-module decomposition.
long orbit_dim(const Multisegment& ms);

// Both arguments must share a support; closure order is pointwise rank
// dominance.
bool closure_leq(const Multisegment& x, const Multisegment& y);

// All H-orbits of V_lambda, indexed by (dimension asc, listing lex).
class OrbitSpace {
 public:
  const InfinitesimalParameter& lambda() const { return lambda_; }
  int size() const { return static_cast<int>(orbits_.size()); }
  const std::vector<Multisegment>& orbits() const { return orbits_; }
  const Multisegment& orbit(int i) const { return orbits_[i]; }
  long dim(int i) const { return dims_[i]; }
  long dim_v() const { return dim_v_; }
  const RankMap& ranks(int i) const { return ranks_[i]; }

  int index_of(const Multisegment& ms) const;      // -1 when absent
  int index_by_ranks(const RankMap& rk) const;     // -1 when absent

 private:
  friend OrbitSpace build_orbit_space(const InfinitesimalParameter&,
                                      const GuardOptions&);
  InfinitesimalParameter lambda_;
  std::vector<Multisegment> orbits_;
  std::vector<long> dims_;
  std::vector<RankMap> ranks_;
  long dim_v_ = 0;
};

OrbitSpace build_orbit_space(const InfinitesimalParameter& lambda,
                             const GuardOptions& guard = {});

// Explicit representative: one 0/1 matrix per adjacent exponent pair per line.
struct GradedMatrixPoint {
  struct LineBlock {
    LineKey key;
    std::vector<HalfInt> exponents;  // distinct, ascending
    std::vector<int> mult;
    // maps[i]: E_{exponents[i]} -> E_{exponents[i+1]}, absent on gaps.
    std::vector<IntMat> maps;
  };
  std::vector<LineBlock> blocks;
};

GradedMatrixPoint graded_point(const Multisegment& ms);

// Commutant dimension of graded_point(ms) by exact nullspace computation;
// independent oracle for dim H - orbit_dim.
long stabilizer_dim_bruteforce(const Multisegment& ms,
                               const GuardOptions& guard = {});

// Rank of the composite map E_a -> E_b of the explicit point, over Q.
long composite_rank(const GradedMatrixPoint& pt, const LineKey& key,
                    HalfInt a, HalfInt b);

// Orbit of y_psi in the dual grading: phi of the SL2-swapped parameter with
// all exponents negated.
Multisegment dual_orbit_of_arthur(const ArthurParameter& psi);

// Tuples (D_1..D_k) of block orbits whose saturation in V_lambda is C,
// computed through rank-invariant addition.  Tuple order is lexicographic in
// the block orbit indices.
std::vector<std::vector<Multisegment>> restrict_orbit(
    const InfinitesimalParameter& lambda,
    const std::vector<InfinitesimalParameter>& blocks, const Multisegment& c,
    const GuardOptions& guard = {});

}  // namespace gln
