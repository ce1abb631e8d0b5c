#include "gln/ktheory.hpp"

#include <string>
#include <utility>
#include <vector>

#include "gln/encode.hpp"
#include "gln/errors.hpp"
#include "gln/textio.hpp"

namespace gln {

bool rep_side(BasisTag t) {
  return t == BasisTag::IrredRep || t == BasisTag::StdRep;
}

int LeviBlocks::tuple_count() const {
  int n = 1;
  for (const auto& s : spaces) n *= s.size();
  return n;
}

std::vector<int> LeviBlocks::tuple_at(int t) const {
  std::vector<int> idx(spaces.size(), 0);
  for (int i = static_cast<int>(spaces.size()) - 1; i >= 0; --i) {
    idx[i] = t % spaces[i].size();
    t /= spaces[i].size();
  }
  if (t != 0) throw InternalInconsistency("tuple index out of range");
  return idx;
}

int LeviBlocks::tuple_index(const std::vector<int>& idx) const {
  if (idx.size() != spaces.size())
    throw InternalInconsistency("tuple arity mismatch");
  int t = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) t = t * spaces[i].size() + idx[i];
  return t;
}

InfinitesimalParameter LeviBlocks::total_lambda() const {
  InfinitesimalParameter total;
  for (const auto& l : lambdas) total.merge(l);
  return total;
}

const OrbitSpace& Workspace::space(const InfinitesimalParameter& lambda) {
  auto it = spaces_.find(lambda);
  if (it == spaces_.end())
    it = spaces_
             .emplace(lambda,
                      std::make_unique<OrbitSpace>(build_orbit_space(lambda, guard_)))
             .first;
  return *it->second;
}

const MultiplicityMatrices& Workspace::matrices(const InfinitesimalParameter& lambda) {
  auto it = mats_.find(lambda);
  if (it == mats_.end()) {
    const OrbitSpace& sp = space(lambda);
    it = mats_
             .emplace(lambda,
                      std::make_unique<MultiplicityMatrices>(m_matrix(*this, sp)))
             .first;
  }
  return *it->second;
}

LeviBlocks Workspace::levi_blocks(const std::vector<InfinitesimalParameter>& lambdas) {
  LeviBlocks lb;
  lb.lambdas = lambdas;
  lb.spaces.reserve(lambdas.size());
  for (const auto& l : lambdas) lb.spaces.push_back(space(l));
  return lb;
}

MultiplicityMatrices m_matrix(Workspace& ws, const OrbitSpace& space) {
  int n = space.size();
  std::vector<Permutation> enc;
  enc.reserve(n);
  for (const auto& ms : space.orbits()) enc.push_back(encode(space.lambda(), ms));
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool cl = closure_leq(space.orbit(j), space.orbit(i));
      bool br = bruhat_leq(enc[j], enc[i]);
      if (cl != br)
        throw InternalInconsistency(
            "closure and Bruhat order disagree on " + render(space.lambda()) +
            " at orbits " + std::to_string(j) + "," + std::to_string(i));
      if (cl) m.at(i, j) = ws.kl().poly_at_one(enc[j], enc[i]);
    }
  for (int i = 0; i < n; ++i)
    if (m.at(i, i) != 1)
      throw InternalInconsistency("multiplicity diagonal is not one");
  return {m, m.transpose()};
}

IntMat m_matrix_product_direct(Workspace& ws, const LeviBlocks& levi) {
  int T = levi.tuple_count();
  std::vector<Permutation> enc;
  enc.reserve(T);
  for (int t = 0; t < T; ++t) {
    std::vector<int> idx = levi.tuple_at(t);
    std::vector<Permutation> parts;
    parts.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      parts.push_back(encode(levi.lambdas[i], levi.spaces[i].orbit(idx[i])));
    enc.push_back(block_diagonal(parts));
  }
  IntMat m(T, T);
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j) m.at(i, j) = ws.kl().poly_at_one(enc[j], enc[i]);
  return m;
}

IntMat levi_m(Workspace& ws, const LeviBlocks& levi) {
  IntMat acc = IntMat::identity(1);
  for (const auto& l : levi.lambdas) acc = acc.kron(ws.matrices(l).m);
  return acc;
}

IntMat levi_c(Workspace& ws, const LeviBlocks& levi) {
  IntMat acc = IntMat::identity(1);
  for (const auto& l : levi.lambdas) acc = acc.kron(ws.matrices(l).c);
  return acc;
}

IntMat eps_star_std(Workspace& ws, const InfinitesimalParameter& lambda,
                    const LeviBlocks& levi) {
  if (levi.total_lambda() != lambda)
    throw SupportMismatch("Levi blocks merge to " + render(levi.total_lambda()) +
                          ", expected " + render(lambda));
  const OrbitSpace& sp = ws.space(lambda);
  int T = levi.tuple_count();
  IntMat s(T, sp.size());
  for (int t = 0; t < T; ++t) {
    std::vector<int> idx = levi.tuple_at(t);
    RankMap sum;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (const auto& [key, r] : levi.spaces[i].ranks(idx[i])) sum[key] += r;
    int col = sp.index_by_ranks(sum);
    if (col < 0)
      throw InternalInconsistency("saturation of a Levi tuple is not an orbit of " +
                                  render(lambda));
    s.at(t, col) = 1;
  }
  return s;
}

IntMat eps_star_simple(Workspace& ws, const InfinitesimalParameter& lambda,
                       const LeviBlocks& levi) {
  return levi_c(ws, levi).inverse_unitriangular() * eps_star_std(ws, lambda, levi) *
         ws.matrices(lambda).c;
}

IntMat lift_std(Workspace& ws, const InfinitesimalParameter& lambda,
                const LeviBlocks& levi) {
  if (levi.total_lambda() != lambda)
    throw SupportMismatch("Levi blocks merge to " + render(levi.total_lambda()) +
                          ", expected " + render(lambda));
  const OrbitSpace& sp = ws.space(lambda);
  int T = levi.tuple_count();
  IntMat l(sp.size(), T);
  for (int t = 0; t < T; ++t) {
    std::vector<int> idx = levi.tuple_at(t);
    Multisegment acc;
    for (std::size_t i = 0; i < idx.size(); ++i)
      acc = concat(acc, levi.spaces[i].orbit(idx[i]));
    int row = sp.index_of(acc);
    if (row < 0)
      throw InternalInconsistency("concatenation of a Levi tuple is not an orbit of " +
                                  render(lambda));
    l.at(row, t) = 1;
  }
  return l;
}

IntMat lift_sim(Workspace& ws, const InfinitesimalParameter& lambda,
                const LeviBlocks& levi) {
  const IntMat& mlam = ws.matrices(lambda).m;
  IntMat minv = levi_m(ws, levi).inverse_unitriangular();
  IntMat via_restriction = mlam * eps_star_std(ws, lambda, levi).transpose() * minv;
  IntMat via_concatenation = mlam * lift_std(ws, lambda, levi) * minv;
  if (!(via_restriction == via_concatenation))
    throw InternalInconsistency(
        "restriction and concatenation routes disagree over " + render(lambda));
  return via_concatenation;
}

namespace {

std::vector<std::int64_t> mat_apply(const IntMat& m, const std::vector<std::int64_t>& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw InternalInconsistency("coordinate vector has the wrong length");
  std::vector<std::int64_t> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size())
    throw InternalInconsistency("coordinate vectors have different lengths");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

KVector change_basis(Workspace& ws, const KVector& v, BasisTag target) {
  if (rep_side(v.tag) != rep_side(target))
    throw SideMismatch("cannot change basis across the pairing");
  if (v.tag == target) return v;
  const MultiplicityMatrices& mm = ws.matrices(v.lambda);
  IntMat t;
  if (v.tag == BasisTag::StdRep && target == BasisTag::IrredRep)
    t = mm.m;
  else if (v.tag == BasisTag::IrredRep && target == BasisTag::StdRep)
    t = mm.m.inverse_unitriangular();
  else if (v.tag == BasisTag::ICSheaf && target == BasisTag::StdSheaf)
    t = mm.c;
  else
    t = mm.c.inverse_unitriangular();
  return {v.lambda, target, mat_apply(t, v.coords)};
}

std::int64_t pairing(Workspace& ws, const KVector& rep, const KVector& sheaf) {
  if (!rep_side(rep.tag))
    throw SideMismatch("first pairing argument must live on the representation side");
  if (rep_side(sheaf.tag))
    throw SideMismatch("second pairing argument must live on the sheaf side");
  if (!(rep.lambda == sheaf.lambda))
    throw LambdaMismatch("pairing across different supports: " + render(rep.lambda) +
                         " vs " + render(sheaf.lambda));
  KVector r = change_basis(ws, rep, BasisTag::IrredRep);
  KVector s = change_basis(ws, sheaf, BasisTag::ICSheaf);
  return dot(r.coords, s.coords);
}

KVector eta(Workspace& ws, const ArthurParameter& psi) {
  InfinitesimalParameter lambda = infinitesimal(psi);
  const OrbitSpace& sp = ws.space(lambda);
  int idx = sp.index_of(pi_of(psi));
  if (idx < 0)
    throw InternalInconsistency("pi of " + render(psi) + " is not an orbit of " +
                                render(lambda));
  std::vector<std::int64_t> coords(sp.size(), 0);
  coords[idx] = 1;
  return {lambda, BasisTag::IrredRep, std::move(coords)};
}

KVector eta_evs(Workspace& ws, const ArthurParameter& psi) {
  InfinitesimalParameter lambda = infinitesimal(psi);
  std::vector<InfinitesimalParameter> lambdas;
  std::vector<int> idx;
  for (const auto& [deg, part] : levi_of(psi)) {
    lambdas.push_back(infinitesimal(part));
    const OrbitSpace& bsp = ws.space(lambdas.back());
    int k = bsp.index_of(pi_of(part));
    if (k < 0)
      throw InternalInconsistency("pi of " + render(part) + " is not an orbit of " +
                                  render(lambdas.back()));
    idx.push_back(k);
  }
  LeviBlocks levi = ws.levi_blocks(lambdas);
  IntMat l = lift_sim(ws, lambda, levi);
  int t = levi.tuple_index(idx);
  std::vector<std::int64_t> coords(l.rows(), 0);
  for (int i = 0; i < l.rows(); ++i) coords[i] = l.at(i, t);
  return {lambda, BasisTag::IrredRep, std::move(coords)};
}

std::int64_t evs_rank(Workspace& ws, const ArthurParameter& psi,
                      const Multisegment& c) {
  InfinitesimalParameter lambda = infinitesimal(psi);
  if (support(c) != lambda)
    throw SupportMismatch("orbit lives on " + render(support(c)) + ", expected " +
                          render(lambda));
  const OrbitSpace& sp = ws.space(lambda);
  int ci = sp.index_of(c);
  if (ci < 0) throw InternalInconsistency("orbit missing from its own support space");
  int pi_idx = sp.index_of(pi_of(psi));
  if (pi_idx < 0)
    throw InternalInconsistency("pi of " + render(psi) + " is not an orbit");
  KVector e = eta_evs(ws, psi);
  std::int64_t val = e.coords[ci];
  return ((sp.dim(pi_idx) + sp.dim(ci)) % 2 == 0) ? val : -val;
}

std::vector<Multisegment> abv_packet(Workspace& ws, const ArthurParameter& psi) {
  InfinitesimalParameter lambda = infinitesimal(psi);
  const OrbitSpace& sp = ws.space(lambda);
  KVector e = eta_evs(ws, psi);
  std::vector<Multisegment> out;
  for (int i = 0; i < sp.size(); ++i)
    if (e.coords[i] != 0) out.push_back(sp.orbit(i));
  return out;
}

SquareReport endoscopy_square_check(Workspace& ws, const ArthurParameter& psi) {
  InfinitesimalParameter lambda = infinitesimal(psi);
  const OrbitSpace& sp = ws.space(lambda);
  int n = sp.size();
  std::vector<InfinitesimalParameter> lambdas;
  std::vector<ArthurParameter> parts;
  for (const auto& [deg, part] : levi_of(psi)) {
    parts.push_back(part);
    lambdas.push_back(infinitesimal(part));
  }
  LeviBlocks levi = ws.levi_blocks(lambdas);
  int T = levi.tuple_count();

  std::vector<std::int64_t> top_vec = eta_evs(ws, psi).coords;
  std::vector<std::int64_t> right_vec = eta(ws, psi).coords;

  // M-side vectors as tensor products over the blocks.
  std::vector<std::int64_t> eta_m(T, 1), eta_m_evs(T, 1);
  {
    std::vector<KVector> block_eta, block_evs;
    for (const auto& part : parts) {
      block_eta.push_back(eta(ws, part));
      block_evs.push_back(eta_evs(ws, part));
    }
    for (int t = 0; t < T; ++t) {
      std::vector<int> idx = levi.tuple_at(t);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        eta_m[t] *= block_eta[i].coords[idx[i]];
        eta_m_evs[t] *= block_evs[i].coords[idx[i]];
      }
    }
  }

  IntMat s_std = eps_star_std(ws, lambda, levi);
  IntMat s_ic = eps_star_simple(ws, lambda, levi);
  IntMat cm_inv_s = levi_c(ws, levi).inverse_unitriangular() * s_std;
  IntMat c_inv = ws.matrices(lambda).c.inverse_unitriangular();

  SquareReport report{psi, lambda, {}, false};
  bool all = true;
  for (BasisTag basis : {BasisTag::ICSheaf, BasisTag::StdSheaf}) {
    for (int c = 0; c < n; ++c) {
      SquareRow row;
      row.f = sp.orbit(c);
      row.basis = basis;
      if (basis == BasisTag::ICSheaf) {
        row.top = top_vec[c];
        row.right = right_vec[c];
        std::int64_t l = 0, b = 0;
        for (int t = 0; t < T; ++t) {
          l += eta_m_evs[t] * s_ic.at(t, c);
          b += eta_m[t] * s_ic.at(t, c);
        }
        row.left = l;
        row.bottom = b;
      } else {
        std::int64_t tp = 0, rp = 0;
        for (int i = 0; i < n; ++i) {
          tp += top_vec[i] * c_inv.at(i, c);
          rp += right_vec[i] * c_inv.at(i, c);
        }
        row.top = tp;
        row.right = rp;
        std::int64_t l = 0, b = 0;
        for (int t = 0; t < T; ++t) {
          l += eta_m_evs[t] * cm_inv_s.at(t, c);
          b += eta_m[t] * cm_inv_s.at(t, c);
        }
        row.left = l;
        row.bottom = b;
      }
      row.pass = row.top == row.left && row.left == row.bottom && row.bottom == row.right;
      all = all && row.pass;
      report.rows.push_back(std::move(row));
    }
  }
  report.all_pass = all;
  return report;
}

}  // namespace gln
