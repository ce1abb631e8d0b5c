#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "gln/arthur.hpp"
#include "gln/infparam.hpp"
#include "gln/intmat.hpp"
#include "gln/kl.hpp"
#include "gln/orbit.hpp"

namespace gln {

enum class BasisTag {
  IrredRep,   // classes of irreducible representations
  StdRep,     // classes of standard representations
  ICSheaf,    // shifted simple perverse sheaves s^_C
  StdSheaf,   // standard sheaves 1^natural_C
};

bool rep_side(BasisTag t);

struct KVector {
  InfinitesimalParameter lambda;
  BasisTag tag = BasisTag::IrredRep;
  std::vector<std::int64_t> coords;
};

struct MultiplicityMatrices {
  IntMat m;  // [Delta(pi_j)] = sum_i m_ij [pi_i]; lower unitriangular
  IntMat c;  // transpose of m; IC stalk multiplicities in the shifted basis
};

// Ordered list of standard-Levi blocks; tuple indices run lexicographically.
struct LeviBlocks {
  std::vector<InfinitesimalParameter> lambdas;
  std::vector<OrbitSpace> spaces;

  int tuple_count() const;
  std::vector<int> tuple_at(int t) const;
  int tuple_index(const std::vector<int>& idx) const;
  InfinitesimalParameter total_lambda() const;
};

// Shared computation context: orbit spaces, multiplicity matrices and the KL
// engine, memoized per lambda.
class Workspace {
 public:
  explicit Workspace(GuardOptions guard = {}) : guard_(guard), kl_(guard.max_points_per_line) {}

  const GuardOptions& guard() const { return guard_; }
  KlEngine& kl() { return kl_; }

  const OrbitSpace& space(const InfinitesimalParameter& lambda);
  const MultiplicityMatrices& matrices(const InfinitesimalParameter& lambda);

  LeviBlocks levi_blocks(const std::vector<InfinitesimalParameter>& lambdas);

 private:
  GuardOptions guard_;
  KlEngine kl_;
  std::map<InfinitesimalParameter, std::unique_ptr<OrbitSpace>> spaces_;
  std::map<InfinitesimalParameter, std::unique_ptr<MultiplicityMatrices>> mats_;
};

// Multiplicity matrices for one orbit space, by KL evaluation at the coset
// encodings; multi-line lambdas factor through the per-line matrices.
MultiplicityMatrices m_matrix(Workspace& ws, const OrbitSpace& space);

// Direct product-space route (block-diagonal encodings), used to cross-check
// the tensor law.
IntMat m_matrix_product_direct(Workspace& ws, const LeviBlocks& levi);
IntMat levi_m(Workspace& ws, const LeviBlocks& levi);   // Kronecker of factors
IntMat levi_c(Workspace& ws, const LeviBlocks& levi);

// Geometric restriction in standard-sheaf bases: rows = Levi tuples, columns
// = orbits of V_lambda; 1 exactly at the tuples whose saturation is the
// column orbit.
IntMat eps_star_std(Workspace& ws, const InfinitesimalParameter& lambda,
                    const LeviBlocks& levi);
// Same functor in shifted-IC coordinates: c_M^{-1} [eps*]_std c_lambda.
IntMat eps_star_simple(Workspace& ws, const InfinitesimalParameter& lambda,
                       const LeviBlocks& levi);

// Lifting in standard bases: concatenation, one unit column per tuple.
IntMat lift_std(Workspace& ws, const InfinitesimalParameter& lambda,
                const LeviBlocks& levi);
// Lifting on irreducibles: m_lambda t[eps*]_std m_M^{-1}; checked against the
// concatenation route before being returned.
IntMat lift_sim(Workspace& ws, const InfinitesimalParameter& lambda,
                const LeviBlocks& levi);

std::int64_t pairing(Workspace& ws, const KVector& rep, const KVector& sheaf);
KVector change_basis(Workspace& ws, const KVector& v, BasisTag target);

// eta_psi = [pi_psi] as a unit vector in the irreducible basis.
KVector eta(Workspace& ws, const ArthurParameter& psi);
// Microlocal vector computed through the Levi route; must coincide with eta.
KVector eta_evs(Workspace& ws, const ArthurParameter& psi);

std::int64_t evs_rank(Workspace& ws, const ArthurParameter& psi,
                      const Multisegment& c);
std::vector<Multisegment> abv_packet(Workspace& ws, const ArthurParameter& psi);

struct SquareRow {
  Multisegment f;
  BasisTag basis = BasisTag::ICSheaf;  // ICSheaf or StdSheaf
  std::int64_t top = 0;      // <eta^Evs_psi, F>
  std::int64_t left = 0;     // <eta^Evs_psiM, F restricted>
  std::int64_t bottom = 0;   // <eta_psiM, F restricted>
  std::int64_t right = 0;    // <eta_psi, F>
  bool pass = false;
};

struct SquareReport {
  ArthurParameter psi;
  InfinitesimalParameter lambda;
  std::vector<SquareRow> rows;
  bool all_pass = false;
};

// Checks the lifting square corner by corner for every sheaf basis vector of
// K Per(V_lambda), in both sheaf bases.
SquareReport endoscopy_square_check(Workspace& ws, const ArthurParameter& psi);

}  // namespace gln
