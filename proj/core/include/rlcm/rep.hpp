#pragma once

#include "rlcm/kms.hpp"
#include "rlcm/semigroup.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rlcm {

// Partial permutation on the truncated basis, stored column to row. Entries
// are a row index, kZeroEntry (the column is certifiably annihilated), or
// kUnknownEntry (the image exists but left the truncation window).
using PMap = std::vector<long long>;
inline constexpr long long kZeroEntry = -1;
inline constexpr long long kUnknownEntry = -2;

PMap compose(const PMap& outer, const PMap& inner);

// Finite-dimensional window of the left regular representation on basis
// vectors indexed by pairs (t, a) with t a transversal element of scale at
// most level_cap and a a core element of weight at most core_cap. Isometries
// act by V_s(t, a) = (i(s t a), c(s t a)).
class TruncatedRep {
 public:
  TruncatedRep(const Semigroup& s, Scale level_cap, int core_cap,
               size_t max_basis = 200000);

  const Semigroup& family() const { return *s_; }
  Scale level_cap() const { return level_cap_; }
  int core_cap() const { return core_cap_; }
  size_t basis_size() const { return basis_.size(); }
  const std::vector<std::pair<Element, Element>>& basis() const {
    return basis_;
  }
  // Basis index of (i(x), c(x)); absent when x leaves the window.
  std::optional<size_t> index_of(const Element& x) const;
  size_t identity_index() const { return identity_index_; }

  PMap operator_matrix(const Element& s) const;  // V_s
  PMap adjoint_matrix(const Element& s) const;   // V_s^*

  // Diagonals are computed from divisibility in the semigroup, so they agree
  // with the untruncated operators on every basis vector.
  std::vector<int> foundation_projection(const Element& f) const;  // e_{fS}
  std::vector<int> defect_projection(Scale n) const;               // d_n

  // Columns whose images under every generator, forwards and backwards, stay
  // inside the window.
  const std::vector<bool>& interior() const { return interior_; }

 private:
  const Semigroup* s_;
  Scale level_cap_;
  int core_cap_;
  std::vector<std::pair<Element, Element>> basis_;
  std::map<std::pair<Code, Code>, size_t> index_;
  size_t identity_index_ = 0;
  std::vector<bool> interior_;
};

// Checks, on certified columns, that the window satisfies the defining
// relations: V_s^* V_t equals the complement word dictated by the right LCM
// (or 0 on disjoint ideals), defect projections are idempotent, and defect
// projections commute with the core isometries.
struct RelationReport {
  long long checked = 0;
  long long skipped = 0;  // columns lost to the truncation boundary
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
RelationReport verify_relations(const TruncatedRep& rep);

// Reconstructs the KMS functional from the window: the weighted diagonal
// functional phi(x) = zeta^{-1} sum_t N_t^{-beta} <x (t,1), (t,1)> must match
// the state values within the exactly computed excluded mass.
struct ReconstructionReport {
  Rational excluded_mass;     // mass of the levels beyond the window
  Interval phi_one;           // functional at the identity operator
  Interval defect_scaled;     // phi(prod_n d_n) * zeta_Irr(beta)
  bool phi_one_ok = false;
  bool defect_ok = false;
  struct Sample {
    std::string x, y;
    Interval reconstructed;
    Interval reference;
    bool ok = false;
  };
  std::vector<Sample> samples;
  bool ok() const;
};
ReconstructionReport verify_reconstruction(
    const TruncatedRep& rep, const Rational& beta,
    const std::vector<std::pair<Element, Element>>& sample_pairs,
    const TraceSpec& trace = {}, Scale cutoff = 64);

// Vector state at the identity basis vector: must vanish on V_x V_y^*
// whenever x or y is not core.
struct GroundReport {
  long long checked = 0;
  long long skipped = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
GroundReport verify_ground(const TruncatedRep& rep, Scale scale_bound,
                           int core_weight);

}  // namespace rlcm
