#pragma once

#include "rlcm/element.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rlcm {

// Closed-form global verdicts a family can certify for its core action; used
// to upgrade bounded searches to global statements.
struct ActionCertificates {
  std::optional<bool> faithful;
  std::optional<bool> almost_free;
  std::optional<bool> finite_propagation;
  std::string note;
};

// Abstract right-LCM monoid contract. Instances are immutable after
// construction and shareable across threads; all operations are pure.
class Semigroup {
 public:
  virtual ~Semigroup() = default;

  virtual const std::string& name() const = 0;
  // Stable identifier used in reports and cross-family mismatch messages.
  virtual const std::string& family_id() const = 0;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& s, const Element& t) const = 0;
  virtual LcmOutcome right_lcm(const Element& s, const Element& t) const = 0;
  // x with t·x = s, if any. depth is the search budget for families without
  // closed-form division (unused by the shipped families).
  virtual DivideResult left_divide(const Element& t, const Element& s,
                                   int depth = 64) const = 0;
  virtual Scale scale(const Element& s) const = 0;
  virtual bool is_unit(const Element& s) const = 0;
  virtual Factorization factor(const Element& s) const = 0;
  // All elements of the canonical transversal 𝒯_n; empty when n ∉ N(S).
  virtual std::vector<Element> transversal(Scale n) const = 0;
  // Core elements of weight ≤ max_weight, identity first, each exactly once.
  virtual std::vector<Element> enumerate_core(int max_weight) const = 0;
  virtual std::vector<Scale> irreducible_scales() const = 0;
  virtual std::vector<std::pair<std::string, Element>> generators() const = 0;
  virtual std::string show(const Element& s) const = 0;

  virtual ActionCertificates action_certificates() const { return {}; }

  bool is_core(const Element& s) const { return scale(s) == 1; }
  bool core_equivalent(const Element& s, const Element& t) const {
    return factor(s).transversal_part == factor(t).transversal_part;
  }

  // All scale values ⟨Irr⟩ ∩ [1, bound], ascending.
  std::vector<Scale> scale_values_up_to(Scale bound) const;

  // All elements t·a with t ∈ ∪_{n ≤ scale_bound} 𝒯_n and a from
  // enumerate_core(core_weight); complete for S up to the core-weight bound.
  std::vector<Element> bounded_elements(Scale scale_bound,
                                        int core_weight) const;

 protected:
  void require_mine(const Element& s) const;
};

}  // namespace rlcm
