#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlcm {

class Semigroup;

// Flat canonical normal form. Per-family encoding is documented in the family
// implementation; equality of elements of one instance is equality of codes,
// and the canonical total order (used to pick LCM representatives) is
// lexicographic on codes.
using Code = std::vector<long long>;
using Scale = unsigned long long;

struct Element {
  const Semigroup* family = nullptr;
  Code code;

  friend bool operator==(const Element& x, const Element& y) {
    return x.family == y.family && x.code == y.code;
  }
  friend bool operator<(const Element& x, const Element& y) {
    return x.code < y.code;
  }
};

struct LcmOutcome {
  // Disjoint when !lcm.has_value(); otherwise s*left_complement = lcm =
  // t*right_complement and sS ∩ tS = lcm·S.
  std::optional<Element> lcm;
  Element left_complement;
  Element right_complement;

  bool disjoint() const { return !lcm.has_value(); }
  static LcmOutcome make_disjoint() { return {}; }
  static LcmOutcome make(Element r, Element lc, Element rc) {
    return {std::move(r), std::move(lc), std::move(rc)};
  }
};

struct Factorization {
  Element transversal_part;  // i(s), member of the canonical transversal
  Element core_part;         // c(s), scale 1
};

// Errors -----------------------------------------------------------------

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a capped computation (section closure, rewriting search) hits
// its bound; carries a description of the partial result.
struct CapExceeded : std::runtime_error {
  std::string partial;
  CapExceeded(const std::string& what, std::string partial_desc)
      : std::runtime_error(what), partial(std::move(partial_desc)) {}
};
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// left_divide outcome; DepthExhausted is reserved for families that would
// need a bounded search (all shipped families divide in closed form).
enum class DivideStatus { Found, NoDivisor, DepthExhausted };

struct DivideResult {
  DivideStatus status = DivideStatus::NoDivisor;
  std::optional<Element> quotient;

  static DivideResult found(Element q) {
    return {DivideStatus::Found, std::move(q)};
  }
  static DivideResult none() { return {}; }
  static DivideResult exhausted() { return {DivideStatus::DepthExhausted, {}}; }
};

}  // namespace rlcm
