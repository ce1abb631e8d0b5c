#include "gln/orbit.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "gln/errors.hpp"
#include "gln/textio.hpp"

namespace gln {

namespace {

// Distinct exponents (ascending) with multiplicities, per line key.
std::map<LineKey, std::vector<std::pair<HalfInt, int>>> counts_by_key(
    const InfinitesimalParameter& lambda) {
  std::map<LineKey, std::vector<std::pair<HalfInt, int>>> out;
  for (const auto& [key, exps] : lambda.lines()) {
    auto& cs = out[key];
    for (const HalfInt& x : exps) {
      if (!cs.empty() && cs.back().first == x)
        ++cs.back().second;
      else
        cs.emplace_back(x, 1);
    }
  }
  return out;
}

int hom_dim(const Segment& d1, const Segment& d2) {
  if (d1.key() != d2.key()) return 0;
  return (d2.a <= d1.a && d1.a <= d2.b && d2.b <= d1.b) ? 1 : 0;
}

// All multisegments on one line with the given exponent multiset; segments
// are chosen in (a asc, b desc) order so each multiset appears once.
void enumerate_line(const std::vector<std::pair<HalfInt, int>>& counts,
                    const LineId& line, std::vector<int>& remaining,
                    int last_start, HalfInt last_end_for_start,
                    std::vector<Segment>& acc,
                    std::vector<std::vector<Segment>>& out) {
  int k = static_cast<int>(counts.size());
  int first = 0;
  while (first < k && remaining[first] == 0) ++first;
  if (first == k) {
    out.push_back(acc);
    return;
  }
  HalfInt a = counts[first].first;
  // Longest consecutive run with stock available.
  int stop = first;
  while (stop + 1 < k && remaining[stop + 1] > 0 &&
         counts[stop + 1].first == counts[stop].first.succ())
    ++stop;
  for (int t = stop; t >= first; --t) {
    HalfInt b = counts[t].first;
    if (first == last_start && last_end_for_start < b) continue;
    for (int u = first; u <= t; ++u) --remaining[u];
    acc.emplace_back(line, a, b);
    enumerate_line(counts, line, remaining, first, b, acc, out);
    acc.pop_back();
    for (int u = first; u <= t; ++u) ++remaining[u];
  }
}

}  // namespace

long dim_V(const InfinitesimalParameter& lambda) {
  long total = 0;
  for (const auto& [key, cs] : counts_by_key(lambda))
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
      if (cs[i + 1].first == cs[i].first.succ())
        total += long(cs[i].second) * cs[i + 1].second;
  return total;
}

long dim_H(const InfinitesimalParameter& lambda) {
  long total = 0;
  for (const auto& [key, cs] : counts_by_key(lambda))
    for (const auto& [x, e] : cs) total += long(e) * e;
  return total;
}

RankMap rank_invariants(const Multisegment& ms) {
  RankMap out;
  for (const Segment& d : ms.segments()) {
    LineKey key = d.key();
    for (HalfInt x = d.a;; x = x.succ()) {
      for (HalfInt y = x;; y = y.succ()) {
        ++out[{key, x, y}];
        if (y == d.b) break;
      }
      if (x == d.b) break;
    }
  }
  return out;
}

long orbit_dim(const Multisegment& ms) {
  long homs = 0;
  for (const Segment& d1 : ms.segments())
    for (const Segment& d2 : ms.segments()) homs += hom_dim(d1, d2);
  return dim_H(support(ms)) - homs;
}

bool closure_leq(const Multisegment& x, const Multisegment& y) {
  if (support(x) != support(y))
    throw SupportMismatch("closure order needs equal supports: " + render(support(x)) +
                          " vs " + render(support(y)));
  RankMap rx = rank_invariants(x), ry = rank_invariants(y);
  for (const auto& [key, r] : rx) {
    auto it = ry.find(key);
    if ((it == ry.end() ? 0 : it->second) < r) return false;
  }
  return true;
}

int OrbitSpace::index_of(const Multisegment& ms) const {
  for (int i = 0; i < size(); ++i)
    if (orbits_[i] == ms) return i;
  return -1;
}

int OrbitSpace::index_by_ranks(const RankMap& rk) const {
  for (int i = 0; i < size(); ++i)
    if (ranks_[i] == rk) return i;
  return -1;
}

OrbitSpace build_orbit_space(const InfinitesimalParameter& lambda,
                             const GuardOptions& guard) {
  auto counts = counts_by_key(lambda);
  for (const auto& [key, cs] : counts) {
    int total = 0;
    for (const auto& [x, e] : cs) total += e;
    if (total > guard.max_points_per_line)
      throw GuardExceeded("line " + key.line.label + " carries " +
                          std::to_string(total) + " points, above the limit of " +
                          std::to_string(guard.max_points_per_line));
  }
  std::vector<Multisegment> all{Multisegment{}};
  for (const auto& [key, cs] : counts) {
    std::vector<int> remaining;
    remaining.reserve(cs.size());
    for (const auto& [x, e] : cs) remaining.push_back(e);
    std::vector<Segment> acc;
    std::vector<std::vector<Segment>> line_ms;
    enumerate_line(cs, key.line, remaining, -1, HalfInt{0}, acc, line_ms);
    std::vector<Multisegment> next;
    next.reserve(all.size() * line_ms.size());
    for (const auto& base : all)
      for (const auto& extra : line_ms) {
        std::vector<Segment> segs = base.segments();
        segs.insert(segs.end(), extra.begin(), extra.end());
        next.push_back(Multisegment(std::move(segs)));
      }
    all = std::move(next);
  }
  OrbitSpace space;
  space.lambda_ = lambda;
  std::stable_sort(all.begin(), all.end(), [](const Multisegment& a, const Multisegment& b) {
    long da = orbit_dim(a), db = orbit_dim(b);
    if (da != db) return da < db;
    return a.lex_less(b);
  });
  space.orbits_ = std::move(all);
  space.dims_.reserve(space.orbits_.size());
  space.ranks_.reserve(space.orbits_.size());
  for (const auto& ms : space.orbits_) {
    space.dims_.push_back(orbit_dim(ms));
    space.ranks_.push_back(rank_invariants(ms));
  }
  space.dim_v_ = dim_V(lambda);
  int zeros = 0, opens = 0;
  for (long d : space.dims_) {
    if (d == 0) ++zeros;
    if (d == space.dim_v_) ++opens;
  }
  if (zeros != 1 || opens != 1)
    throw InternalInconsistency("orbit space of " + render(lambda) +
                                " lacks a unique closed or open orbit");
  return space;
}

GradedMatrixPoint graded_point(const Multisegment& ms) {
  GradedMatrixPoint pt;
  auto counts = counts_by_key(support(ms));
  for (const auto& [key, cs] : counts) {
    GradedMatrixPoint::LineBlock block;
    block.key = key;
    for (const auto& [x, e] : cs) {
      block.exponents.push_back(x);
      block.mult.push_back(e);
    }
    // Basis of E_x: the segments containing x, in multisegment order.
    auto basis = [&](HalfInt x) {
      std::vector<int> segs;
      for (int i = 0; i < static_cast<int>(ms.segments().size()); ++i) {
        const Segment& d = ms.segments()[i];
        if (d.key() == key && d.contains(x)) segs.push_back(i);
      }
      return segs;
    };
    for (std::size_t i = 0; i + 1 < block.exponents.size(); ++i) {
      std::vector<int> src = basis(block.exponents[i]);
      std::vector<int> dst = basis(block.exponents[i + 1]);
      IntMat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
      if (block.exponents[i + 1] == block.exponents[i].succ()) {
        for (int c = 0; c < static_cast<int>(src.size()); ++c)
          for (int r = 0; r < static_cast<int>(dst.size()); ++r)
            if (src[c] == dst[r]) m.at(r, c) = 1;
      }
      block.maps.push_back(std::move(m));
    }
    pt.blocks.push_back(std::move(block));
  }
  return pt;
}

Multisegment dual_orbit_of_arthur(const ArthurParameter& psi) {
  return negate_exponents(phi_of(psi_hat(psi)));
}

std::vector<std::vector<Multisegment>> restrict_orbit(
    const InfinitesimalParameter& lambda,
    const std::vector<InfinitesimalParameter>& blocks, const Multisegment& c,
    const GuardOptions& guard) {
  InfinitesimalParameter merged;
  for (const auto& b : blocks) merged.merge(b);
  if (merged != lambda)
    throw SupportMismatch("blocks merge to " + render(merged) + ", expected " +
                          render(lambda));
  if (support(c) != lambda)
    throw SupportMismatch("orbit lives on " + render(support(c)) + ", expected " +
                          render(lambda));
  RankMap target = rank_invariants(c);
  std::vector<OrbitSpace> spaces;
  spaces.reserve(blocks.size());
  for (const auto& b : blocks) spaces.push_back(build_orbit_space(b, guard));
  std::vector<std::vector<Multisegment>> out;
  std::vector<int> idx(blocks.size(), 0);
  for (;;) {
    RankMap sum;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (const auto& [key, r] : spaces[i].ranks(idx[i])) sum[key] += r;
    if (sum == target) {
      std::vector<Multisegment> tuple;
      tuple.reserve(blocks.size());
      for (std::size_t i = 0; i < blocks.size(); ++i)
        tuple.push_back(spaces[i].orbit(idx[i]));
      out.push_back(std::move(tuple));
    }
    int j = static_cast<int>(blocks.size()) - 1;
    while (j >= 0 && ++idx[j] == spaces[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

}  // namespace gln
