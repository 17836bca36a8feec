#include "rlcm/semigroup.hpp"

#include <algorithm>
#include <set>

namespace rlcm {

std::vector<Scale> Semigroup::scale_values_up_to(Scale bound) const {
  std::set<Scale> vals{1};
  auto irr = irreducible_scales();
  bool grew = true;
  while (grew) {
    grew = false;
    for (Scale n : std::set<Scale>(vals)) {
      for (Scale p : irr) {
        if (p <= 1) continue;
        if (n > bound / p) continue;
        if (vals.insert(n * p).second) grew = true;
      }
    }
  }
  return {vals.begin(), vals.end()};
}

std::vector<Element> Semigroup::bounded_elements(Scale scale_bound,
                                                int core_weight) const {
  std::vector<Element> out;
  auto cores = enumerate_core(core_weight);
  for (Scale n : scale_values_up_to(scale_bound)) {
    for (const Element& t : transversal(n)) {
      for (const Element& a : cores) out.push_back(multiply(t, a));
    }
  }
  return out;
}

void Semigroup::require_mine(const Element& s) const {
  if (s.family != this)
    throw UsageError("element does not belong to semigroup instance '" +
                     family_id() + "'");
}

}  // namespace rlcm
