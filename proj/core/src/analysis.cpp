#include "rlcm/analysis.hpp"

#include "rlcm/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace rlcm {

Scale default_depth(const Semigroup& s) {
  auto irr = s.irreducible_scales();
  if (irr.empty()) return 1;
  Scale m = *std::max_element(irr.begin(), irr.end());
  return m * m * m;
}

namespace {

std::string pair_desc(const Semigroup& s, const Element& a, const Element& b) {
  return "(" + s.show(a) + ", " + s.show(b) + ")";
}

}  // namespace

AdmissibilityReport check_admissible(const Semigroup& s, Scale depth,
                                     int core_weight) {
  AdmissibilityReport rep;
  rep.depth = depth;
  rep.core_weight = core_weight;
  rep.irreducible_scales = s.irreducible_scales();

  auto levels = s.scale_values_up_to(depth);
  std::map<Scale, std::vector<Element>> trans;
  for (Scale n : levels) trans[n] = s.transversal(n);
  auto cores = s.enumerate_core(core_weight);
  std::vector<Element> core_nonunits;
  for (const Element& a : cores)
    if (!s.is_unit(a)) core_nonunits.push_back(a);

  // Elements of scale ≤ depth (complete up to the core-weight bound), grouped
  // by scale; candidates for the division searches below.
  std::map<Scale, std::vector<Element>> by_scale;
  for (const Element& e : s.bounded_elements(depth, core_weight))
    by_scale[s.scale(e)].push_back(e);

  // Independent core-irreducibility test: t ∈ S_ci∪{1} iff no t'·a = t with a
  // a core non-unit (searched over enumerated candidates of equal scale).
  auto core_irreducible = [&](const Element& t) {
    for (const Element& a : core_nonunits) {
      auto it = by_scale.find(s.scale(t));
      if (it == by_scale.end()) continue;
      for (const Element& cand : it->second)
        if (s.multiply(cand, a) == t) return false;
    }
    return true;
  };

  // (A3a) transversal sizes and pairwise disjointness; also rejects a trivial
  // scale, which cannot be a generalised scale.
  rep.a3a.status = CheckStatus::Pass;
  if (rep.irreducible_scales.empty()) {
    rep.a3a.status = CheckStatus::Fail;
    rep.a3a.counterexample = "scale map is trivial: N(S) = {1}";
  }
  for (Scale n : levels) {
    const auto& tn = trans[n];
    if (tn.size() != static_cast<size_t>(n)) {
      rep.a3a.status = CheckStatus::Fail;
      rep.a3a.counterexample = "|T_" + std::to_string(n) +
                               "| = " + std::to_string(tn.size());
      break;
    }
    for (size_t i = 0; i < tn.size() && rep.a3a.passed(); ++i)
      for (size_t j = i + 1; j < tn.size(); ++j)
        if (!s.right_lcm(tn[i], tn[j]).disjoint()) {
          rep.a3a.status = CheckStatus::Fail;
          rep.a3a.counterexample = "transversal reps not disjoint: " +
                                   pair_desc(s, tn[i], tn[j]);
          break;
        }
    rep.a3a.witness_count += static_cast<long long>(tn.size());
    if (!rep.a3a.passed()) break;
  }

  // (A1) every bounded element factors through the canonical transversal with
  // core-irreducible (or trivial) transversal part.
  rep.a1.status = CheckStatus::Pass;
  for (const auto& [n, elems] : by_scale) {
    std::set<Code> tcodes;
    for (const Element& t : trans[n]) tcodes.insert(t.code);
    for (const Element& e : elems) {
      Factorization f = s.factor(e);
      if (s.multiply(f.transversal_part, f.core_part) != e ||
          s.scale(f.core_part) != 1 || !tcodes.count(f.transversal_part.code)) {
        rep.a1.status = CheckStatus::Fail;
        rep.a1.counterexample = "bad factorization of " + s.show(e);
        break;
      }
      ++rep.a1.witness_count;
    }
    if (!rep.a1.passed()) break;
  }
  if (rep.a1.passed()) {
    for (Scale n : levels) {
      for (const Element& t : trans[n])
        if (n > 1 && !core_irreducible(t)) {
          rep.a1.status = CheckStatus::Fail;
          rep.a1.counterexample =
              "transversal element not core-irreducible: " + s.show(t);
          break;
        }
      if (!rep.a1.passed()) break;
    }
  }

  // (A2) right LCMs of core-irreducibles stay core-irreducible (or Disjoint);
  // tested on canonical transversal pairs, with the fast c-part criterion.
  rep.a2.status = CheckStatus::Pass;
  {
    std::vector<Element> all_t;
    for (Scale n : levels)
      for (const Element& t : trans[n]) all_t.push_back(t);
    for (size_t i = 0; i < all_t.size() && rep.a2.passed(); ++i)
      for (size_t j = i + 1; j < all_t.size(); ++j) {
        LcmOutcome o = s.right_lcm(all_t[i], all_t[j]);
        if (o.disjoint()) continue;
        const Element& r = *o.lcm;
        if (s.scale(r) == 1) continue;  // identity pair corner
        if (!s.is_unit(s.factor(r).core_part)) {
          rep.a2.status = CheckStatus::Fail;
          rep.a2.counterexample =
              "lcm of " + pair_desc(s, all_t[i], all_t[j]) +
              " is not core-irreducible: " + s.show(r);
          break;
        }
        ++rep.a2.witness_count;
      }
  }

  // (A3b) accurate foundation sets: every bounded element meets every level.
  rep.a3b.status = CheckStatus::Pass;
  for (const auto& [n, elems] : by_scale) {
    for (const Element& e : elems) {
      for (Scale lv : levels) {
        bool met = false;
        for (const Element& f : trans[lv])
          if (!s.right_lcm(e, f).disjoint()) {
            met = true;
            break;
          }
        if (!met) {
          rep.a3b.status = CheckStatus::Fail;
          rep.a3b.counterexample = s.show(e) + " misses T_" + std::to_string(lv);
          break;
        }
        ++rep.a3b.witness_count;
      }
      if (!rep.a3b.passed()) break;
    }
    if (!rep.a3b.passed()) break;
  }

  // (A4) unique factorization of each attained scale over Irr(N(S)).
  rep.a4.status = CheckStatus::Pass;
  {
    std::vector<Scale> irr = rep.irreducible_scales;
    std::sort(irr.begin(), irr.end());
    std::function<long long(Scale, size_t)> count = [&](Scale n,
                                                        size_t min_i) -> long long {
      if (n == 1) return 1;
      long long total = 0;
      for (size_t i = min_i; i < irr.size(); ++i)
        if (n % irr[i] == 0) total += count(n / irr[i], i);
      return total;
    };
    for (Scale n : levels) {
      long long ways = count(n, 0);
      if (ways != 1) {
        rep.a4.status = CheckStatus::Fail;
        rep.a4.counterexample = std::to_string(n) + " has " +
                                std::to_string(ways) +
                                " factorizations over Irr";
        break;
      }
      ++rep.a4.witness_count;
    }
    if (rep.irreducible_scales.empty()) {
      // Degenerate scale already failed A3a; A4 holds vacuously on {1}.
    }
  }

  return rep;
}

Element alpha(const Semigroup& s, const Element& a, const Element& t) {
  if (!s.is_core(a)) throw UsageError("alpha: first argument must be core");
  return s.factor(s.multiply(a, t)).transversal_part;
}

Element alpha_inverse(const Semigroup& s, const Element& a, const Element& t) {
  if (!s.is_core(a))
    throw UsageError("alpha_inverse: first argument must be core");
  LcmOutcome o = s.right_lcm(a, t);
  if (o.disjoint())
    throw InternalConsistencyError(
        "core element with disjoint ideal: scale/core mismatch");
  return s.factor(o.left_complement).transversal_part;
}

FixedSets fixed_sets(const Semigroup& s, const Element& a, const Element& b,
                     Scale n) {
  if (!s.is_core(a) || !s.is_core(b))
    throw UsageError("fixed_sets: arguments must be core");
  FixedSets out;
  for (const Element& f : s.transversal(n)) {
    Element af = s.multiply(a, f), bf = s.multiply(b, f);
    if (af == bf) out.exact.push_back(f);
    if (s.factor(af).transversal_part == s.factor(bf).transversal_part)
      out.class_level.push_back(f);
  }
  return out;
}

KappaTable kappa_table(const Semigroup& s, const Element& a, const Element& b,
                       Scale max_level) {
  if (!s.is_core(a) || !s.is_core(b))
    throw UsageError("kappa_table: arguments must be core");
  auto levels = s.scale_values_up_to(max_level);
  KappaTable out;
  out.rows.resize(levels.size());
  parallel_for(levels.size(), [&](size_t i) {
    Scale n = levels[i];
    FixedSets fs = fixed_sets(s, a, b, n);
    KappaTable::Row row;
    row.n = n;
    row.fixed = static_cast<long long>(fs.exact.size());
    row.g_minus_t =
        static_cast<long long>(fs.class_level.size() - fs.exact.size());
    row.kappa = Rational(row.fixed) / Rational(static_cast<long long>(n));
    out.rows[i] = row;
  });
  const auto& deep = out.rows.back();
  Rational hi = deep.kappa +
                Rational(deep.g_minus_t) / Rational(static_cast<long long>(deep.n));
  out.enclosure = Interval(deep.kappa, std::min(Rational(1), hi));
  return out;
}

bool product_rule_holds(const Semigroup& s, const Element& a, const Element& b,
                        Scale m, Scale n) {
  FixedSets top = fixed_sets(s, a, b, m * n);
  std::set<Code> lhs;
  {
    std::set<Code> exact;
    for (const Element& f : top.exact) exact.insert(f.code);
    for (const Element& f : top.class_level)
      if (!exact.count(f.code)) lhs.insert(f.code);
  }
  std::set<Code> rhs;
  FixedSets base = fixed_sets(s, a, b, m);
  std::set<Code> base_exact;
  for (const Element& f : base.exact) base_exact.insert(f.code);
  for (const Element& f : base.class_level) {
    if (base_exact.count(f.code)) continue;
    Element ca = s.factor(s.multiply(a, f)).core_part;
    Element cb = s.factor(s.multiply(b, f)).core_part;
    FixedSets inner = fixed_sets(s, ca, cb, n);
    std::set<Code> inner_exact;
    for (const Element& g : inner.exact) inner_exact.insert(g.code);
    for (const Element& g : inner.class_level) {
      if (inner_exact.count(g.code)) continue;
      rhs.insert(s.factor(s.multiply(f, g)).transversal_part.code);
    }
  }
  return lhs == rhs;
}

namespace {

struct PairSearch {
  std::vector<std::pair<Element, Element>> unseparated;
  long long pairs = 0;
};

PairSearch separation_search(const Semigroup& s, int core_weight, Scale level) {
  PairSearch out;
  auto cores = s.enumerate_core(core_weight);
  auto levels = s.scale_values_up_to(level);
  std::vector<Element> ts;
  for (Scale n : levels)
    for (const Element& t : s.transversal(n)) ts.push_back(t);
  for (size_t i = 0; i < cores.size(); ++i)
    for (size_t j = i + 1; j < cores.size(); ++j) {
      ++out.pairs;
      bool sep = false;
      for (const Element& t : ts)
        if (alpha(s, cores[i], t) != alpha(s, cores[j], t)) {
          sep = true;
          break;
        }
      if (!sep) out.unseparated.emplace_back(cores[i], cores[j]);
    }
  return out;
}

}  // namespace

ActionReport check_faithful(const Semigroup& s, int core_weight, Scale level) {
  ActionReport rep;
  rep.property = "faithful";
  PairSearch search = separation_search(s, core_weight, level);
  auto cert = s.action_certificates();
  std::ostringstream detail;
  detail << search.pairs << " core pairs searched up to scale " << level
         << "; " << search.unseparated.size() << " unseparated";
  rep.detail = detail.str();
  if (!search.unseparated.empty())
    rep.witness = pair_desc(s, search.unseparated.front().first,
                            search.unseparated.front().second);
  if (cert.faithful.has_value()) {
    rep.from_certificate = true;
    rep.verdict = *cert.faithful ? Verdict::Holds : Verdict::Violated;
    rep.detail += "; certificate: " + cert.note;
  } else {
    rep.verdict = Verdict::Undecided;
  }
  return rep;
}

ActionReport check_almost_free(const Semigroup& s, int core_weight,
                               Scale level) {
  ActionReport rep;
  rep.property = "almost-free";
  auto cores = s.enumerate_core(core_weight);
  auto levels = s.scale_values_up_to(level);
  // Per-level totals of class-fixed points over all distinct core pairs.
  for (Scale n : levels) {
    long long total = 0;
    for (size_t i = 0; i < cores.size(); ++i)
      for (size_t j = i + 1; j < cores.size(); ++j)
        total += static_cast<long long>(
            fixed_sets(s, cores[i], cores[j], n).class_level.size());
    rep.per_level.emplace_back(n, total);
  }
  auto cert = s.action_certificates();
  if (cert.almost_free.has_value()) {
    rep.from_certificate = true;
    rep.verdict = *cert.almost_free ? Verdict::Holds : Verdict::Violated;
    rep.detail = "certificate: " + cert.note;
    if (rep.verdict == Verdict::Violated) {
      PairSearch search = separation_search(s, core_weight, level);
      if (!search.unseparated.empty())
        rep.witness = pair_desc(s, search.unseparated.front().first,
                                search.unseparated.front().second);
    }
  } else {
    rep.verdict = Verdict::Undecided;
    rep.detail = "bounded fixed-point counts only";
  }
  return rep;
}

ActionReport check_propagation(const Semigroup& s, int core_weight,
                               Scale level) {
  ActionReport rep;
  rep.property = "finite-propagation";
  auto cores = s.enumerate_core(core_weight);
  auto levels = s.scale_values_up_to(level);
  bool all_stable = true;
  std::string growing;
  std::vector<long long> level_max(levels.size(), 0);
  for (const Element& a : cores) {
    std::set<Code> c_a;
    std::vector<size_t> sizes;
    for (size_t i = 0; i < levels.size(); ++i) {
      for (const Element& f : s.transversal(levels[i]))
        c_a.insert(s.factor(s.multiply(a, f)).core_part.code);
      sizes.push_back(c_a.size());
      level_max[i] =
          std::max(level_max[i], static_cast<long long>(c_a.size()));
    }
    bool stable = sizes.size() >= 2 &&
                  sizes[sizes.size() - 1] == sizes[sizes.size() - 2];
    if (!stable && levels.size() >= 2) {
      all_stable = false;
      if (growing.empty()) growing = s.show(a);
    }
  }
  // per_level: largest cumulative cocycle-set size over all searched cores.
  for (size_t i = 0; i < levels.size(); ++i)
    rep.per_level.emplace_back(levels[i], level_max[i]);
  rep.detail = all_stable ? "all cocycle sets stabilized across the last two levels"
                          : "cocycle set still growing for " + growing;
  rep.witness = growing;
  auto cert = s.action_certificates();
  if (cert.finite_propagation.has_value()) {
    rep.from_certificate = true;
    rep.verdict =
        *cert.finite_propagation ? Verdict::Holds : Verdict::Violated;
    rep.detail += "; certificate: " + cert.note;
  } else {
    rep.verdict = Verdict::Undecided;
  }
  return rep;
}

std::vector<std::pair<Element, Element>> alpha_kernel_witnesses(
    const Semigroup& s, int core_weight, Scale level) {
  return separation_search(s, core_weight, level).unseparated;
}

}  // namespace rlcm
