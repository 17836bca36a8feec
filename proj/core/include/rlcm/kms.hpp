#pragma once

#include "rlcm/analysis.hpp"
#include "rlcm/rational.hpp"
#include "rlcm/semigroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rlcm {

// Which trace on the core algebra drives the state values.
//  - Canonical: the zeta-weighted series for beta > 1, the delta trace at the
//    critical temperature when the core action is certified almost free.
//  - Rho: at beta = 1, off-diagonal core values are the asymptotic fixed-point
//    densities kappa_{a,b}, reported as enclosures from kappa_level levels.
//  - Table: explicit user-supplied core-pair values.
struct TraceSpec {
  enum class Mode { Canonical, Rho, Table };
  Mode mode = Mode::Canonical;
  Scale kappa_level = 16;
  std::map<std::pair<Code, Code>, Rational> table;
};

struct ZetaEval {
  bool diverges = false;
  Interval value{Rational(1)};
};

// zeta_I(beta) = prod_{n in I} (1 - n^{1-beta})^{-1}. Diverges for beta <= 1
// whenever I is nonempty; identically 1 for empty I.
ZetaEval zeta(const std::vector<Scale>& irr, const Rational& beta);
ZetaEval zeta(const Semigroup& s, const Rational& beta);

// The critical inverse temperature; 1 for every finite irreducible-scale set
// (including the degenerate trivial-scale case, by convention).
Rational critical_beta(const Semigroup& s);

// Certificate attached to truncated series values: everything ignored past the
// cutoff contributes at most neglected_bound to the value.
struct TailCertificate {
  Scale cutoff = 0;
  Rational neglected_bound;
};

struct StateValue {
  Interval value;
  std::optional<TailCertificate> tail;
  // False when no certified value is available and the enclosure is vacuous.
  bool decided = true;
  std::string note;

  bool exact() const { return value.exact(); }
};

// phi_beta(V_x V_y^*). Throws UsageError for beta < 1: no KMS_beta state
// exists there. The value is 0 whenever i(x) != i(y); otherwise it is
// N(x)^{-beta} times the trace value at the core pair (c(x), c(y)).
StateValue kms_value(const Semigroup& s, const Element& x, const Element& y,
                     const Rational& beta, const TraceSpec& trace = {},
                     Scale cutoff = 64);

// phi_infinity(V_x V_y^*) for the canonical ground state: vanishes unless both
// arguments are core, and is the delta trace on core pairs.
StateValue ground_state_value(const Semigroup& s, const Element& x,
                              const Element& y);

// sum_{f in T_n} phi_beta(e_{fS}); must equal n^{1-beta}.
struct FoundationSum {
  Scale level = 1;
  Interval sum;
  Interval expected;
  bool matches = false;
};
FoundationSum foundation_sum(const Semigroup& s, const Rational& beta, Scale n,
                             const TraceSpec& trace = {});

// Every KMS_beta state factors through the core boundary quotient; it factors
// through the pure boundary quotient exactly at the critical temperature.
struct BoundaryFactoring {
  Rational beta;
  bool through_core_boundary = true;
  bool through_pure_boundary = false;
};
BoundaryFactoring boundary_factoring(const Semigroup& s, const Rational& beta);

// Structured summary of the KMS state space of the family.
struct Classification {
  Rational beta_critical;
  bool scale_trivial = false;
  Verdict critical_unique = Verdict::Undecided;
  std::string uniqueness_route;  // set when critical_unique == Holds
  std::vector<std::string> items;
};
Classification classify(const Semigroup& s, int core_weight, Scale level);

}  // namespace rlcm
