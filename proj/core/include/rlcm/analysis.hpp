#pragma once

#include "rlcm/rational.hpp"
#include "rlcm/semigroup.hpp"

#include <string>
#include <vector>

namespace rlcm {

enum class CheckStatus { Pass, Fail, Exhausted };

struct CheckResult {
  CheckStatus status = CheckStatus::Exhausted;
  long long witness_count = 0;      // instances verified on Pass
  std::string counterexample;       // replayable description on Fail
  bool passed() const { return status == CheckStatus::Pass; }
};

struct AdmissibilityReport {
  CheckResult a1, a2, a3a, a3b, a4;
  Scale depth = 0;
  int core_weight = 0;
  std::vector<Scale> irreducible_scales;
  bool all_pass() const {
    return a1.passed() && a2.passed() && a3a.passed() && a3b.passed() &&
           a4.passed();
  }
};

// Default bounds: depth = max(Irr)^3, core weight 6.
Scale default_depth(const Semigroup& s);
inline constexpr int kDefaultCoreWeight = 6;

AdmissibilityReport check_admissible(const Semigroup& s, Scale depth,
                                     int core_weight = kDefaultCoreWeight);

// Core action on transversals: alpha(a,t) = i(at); the inverse comes from the
// ideal identity aS ∩ tS = a·alpha_inverse(a,t)·S_c·S.
Element alpha(const Semigroup& s, const Element& a, const Element& t);
Element alpha_inverse(const Semigroup& s, const Element& a, const Element& t);

struct FixedSets {
  std::vector<Element> exact;        // 𝒯_n^{a,b}: af = bf
  std::vector<Element> class_level;  // G_n^{a,b}: i(af) = i(bf)
};
FixedSets fixed_sets(const Semigroup& s, const Element& a, const Element& b,
                     Scale n);

struct KappaTable {
  struct Row {
    Scale n = 1;
    long long fixed = 0;        // |𝒯_n^{a,b}|
    long long g_minus_t = 0;    // |G_n^{a,b} \ 𝒯_n^{a,b}|
    Rational kappa;             // fixed / n
  };
  std::vector<Row> rows;        // ascending by n over N(S) ∩ [1, max]
  Interval enclosure;           // for κ_{a,b}, from the deepest level
};
KappaTable kappa_table(const Semigroup& s, const Element& a, const Element& b,
                       Scale max_level);

// Direct check of the level-composition law for class-fixed sets:
// G_{mn}\𝒯_{mn} = { i(ff') : f ∈ G_m\𝒯_m, f' ∈ G_n^{c(af),c(bf)}\𝒯_n^{..} }.
bool product_rule_holds(const Semigroup& s, const Element& a, const Element& b,
                        Scale m, Scale n);

enum class Verdict { Holds, Violated, Undecided };

struct ActionReport {
  std::string property;  // "faithful" | "almost-free" | "finite-propagation"
  Verdict verdict = Verdict::Undecided;
  bool from_certificate = false;
  std::string detail;
  std::string witness;  // offending core pair / core element, when Violated
  // property-specific counts per level (see the check functions)
  std::vector<std::pair<Scale, long long>> per_level;
};

ActionReport check_faithful(const Semigroup& s, int core_weight, Scale level);
ActionReport check_almost_free(const Semigroup& s, int core_weight,
                               Scale level);
ActionReport check_propagation(const Semigroup& s, int core_weight,
                               Scale level);

// Distinct core pairs not separated by any transversal element of scale
// ≤ level (candidates for the kernel of α).
std::vector<std::pair<Element, Element>> alpha_kernel_witnesses(
    const Semigroup& s, int core_weight, Scale level);

}  // namespace rlcm
