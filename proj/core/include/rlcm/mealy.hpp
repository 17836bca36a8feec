#pragma once

#include "rlcm/zs.hpp"

#include <string>
#include <vector>

namespace rlcm {

// Invertible Mealy automaton over alphabet X = {0..alphabet-1}. Each state g
// defines an automorphism of X* by g(xw) = g(x)·g|_x(w), with g(x) the output
// letter and g|_x the next state.
struct MealySpec {
  int alphabet = 0;
  std::vector<std::string> state_names;
  // trans[state][letter] = {output letter, next state}
  std::vector<std::vector<std::pair<int, int>>> trans;

  void validate() const;  // throws ConstructionError
  static MealySpec adding_machine();
  friend bool operator==(const MealySpec&, const MealySpec&) = default;
};

// Group elements are canonical minimized automata serialized as
// [k, out(0,0), next(0,0), out(0,1), next(0,1), ..., out(k-1,·), next(k-1,·)]
// with state 0 initial and states numbered by BFS from 0 in letter order.
namespace mealy {

struct RawState {
  std::vector<int> out;
  std::vector<int> next;
};

Code canonicalize(const std::vector<RawState>& states, int initial,
                  int alphabet);
Code identity_code(int alphabet);
Code state_code(const MealySpec& spec, int state);
// a∘b (b applied first); cap bounds the pair-state closure.
Code compose(const Code& a, const Code& b, int alphabet, size_t cap);
Code inverse(const Code& a, int alphabet);
int state_count(const Code& a);
// Run the automorphism on a word; returns (image, section code).
std::pair<Code, Code> run(const Code& a, const Code& word, int alphabet);
// Preimage of a word under the automorphism.
Code run_inverse(const Code& a, const Code& word, int alphabet);

}  // namespace mealy

class AutomatonCore final : public AMonoid {
 public:
  AutomatonCore(MealySpec spec, size_t section_cap = 4096);
  Code identity() const override;
  Code mul(const Code& a, const Code& b) const override;
  std::optional<Code> left_divide(const Code& a, const Code& s) const override;
  bool is_unit(const Code&) const override { return true; }
  Lcm right_lcm(const Code& a, const Code& b) const override;
  std::pair<Code, Code> canonical_mod_units(const Code& a) const override;
  std::vector<Code> enumerate(int max_weight) const override;
  std::string show(const Code& a) const override;
  bool left_reversible_on_generators() const override { return true; }
  std::vector<std::pair<std::string, Code>> generators() const override;
  const MealySpec& spec() const { return spec_; }
  size_t cap() const { return cap_; }

 private:
  MealySpec spec_;
  size_t cap_;
};

class AutomatonPairing final : public ZsPairing {
 public:
  explicit AutomatonPairing(int alphabet) : alphabet_(alphabet) {}
  Code act(const Code& a, const Code& u) const override;
  Code act_inverse(const Code& a, const Code& u) const override;
  Code restrict(const Code& a, const Code& u) const override;

 private:
  int alphabet_;
};

}  // namespace rlcm
