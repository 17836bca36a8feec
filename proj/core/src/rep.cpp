#include "rlcm/rep.hpp"

#include <algorithm>
#include <sstream>

namespace rlcm {

namespace {

Rational gap(const Interval& x, const Interval& y) {
  Rational g = std::max(y.lo - x.hi, x.lo - y.hi);
  return g < 0 ? Rational(0) : g;
}

}  // namespace

PMap compose(const PMap& outer, const PMap& inner) {
  PMap out(inner.size(), kZeroEntry);
  for (size_t i = 0; i < inner.size(); ++i) {
    long long v = inner[i];
    out[i] = v < 0 ? v : outer[static_cast<size_t>(v)];
  }
  return out;
}

TruncatedRep::TruncatedRep(const Semigroup& s, Scale level_cap, int core_cap,
                           size_t max_basis)
    : s_(&s), level_cap_(level_cap), core_cap_(core_cap) {
  std::vector<Scale> levels = s.scale_values_up_to(level_cap);
  std::vector<Element> cores = s.enumerate_core(core_cap);

  size_t transversal_total = 0;
  for (Scale n : levels) transversal_total += static_cast<size_t>(n);
  if (transversal_total * cores.size() > max_basis) {
    std::ostringstream msg;
    msg << "truncated basis would need " << transversal_total * cores.size()
        << " vectors (cap " << max_basis << "); lower the caps";
    throw SizingError(msg.str());
  }

  Element e = s.identity();
  Factorization fe = s.factor(e);
  for (Scale n : levels)
    for (const Element& t : s.transversal(n))
      for (const Element& a : cores) {
        index_[{t.code, a.code}] = basis_.size();
        basis_.emplace_back(t, a);
      }
  auto it = index_.find({fe.transversal_part.code, fe.core_part.code});
  if (it == index_.end())
    throw InternalConsistencyError("identity basis vector missing");
  identity_index_ = it->second;

  interior_.assign(basis_.size(), true);
  auto gens = s.generators();
  for (size_t i = 0; i < basis_.size(); ++i) {
    Element x = s.multiply(basis_[i].first, basis_[i].second);
    for (const auto& [gname, g] : gens) {
      Factorization f = s.factor(s.multiply(g, x));
      if (index_.find({f.transversal_part.code, f.core_part.code}) ==
          index_.end()) {
        interior_[i] = false;
        break;
      }
      DivideResult d = s.left_divide(g, x);
      if (d.status == DivideStatus::Found) {
        Factorization q = s.factor(*d.quotient);
        if (index_.find({q.transversal_part.code, q.core_part.code}) ==
            index_.end()) {
          interior_[i] = false;
          break;
        }
      } else if (d.status == DivideStatus::DepthExhausted) {
        interior_[i] = false;
        break;
      }
    }
  }
}

std::optional<size_t> TruncatedRep::index_of(const Element& x) const {
  Factorization f = s_->factor(x);
  auto it = index_.find({f.transversal_part.code, f.core_part.code});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PMap TruncatedRep::operator_matrix(const Element& s) const {
  PMap out(basis_.size(), kUnknownEntry);
  for (size_t i = 0; i < basis_.size(); ++i) {
    Element x = s_->multiply(basis_[i].first, basis_[i].second);
    auto idx = index_of(s_->multiply(s, x));
    if (idx) out[i] = static_cast<long long>(*idx);
  }
  return out;
}

PMap TruncatedRep::adjoint_matrix(const Element& s) const {
  PMap out(basis_.size(), kUnknownEntry);
  for (size_t i = 0; i < basis_.size(); ++i) {
    Element x = s_->multiply(basis_[i].first, basis_[i].second);
    DivideResult d = s_->left_divide(s, x);
    if (d.status == DivideStatus::NoDivisor) {
      out[i] = kZeroEntry;
    } else if (d.status == DivideStatus::Found) {
      auto idx = index_of(*d.quotient);
      if (idx) out[i] = static_cast<long long>(*idx);
    }
  }
  return out;
}

std::vector<int> TruncatedRep::foundation_projection(const Element& f) const {
  std::vector<int> diag(basis_.size(), 0);
  for (size_t i = 0; i < basis_.size(); ++i) {
    Element x = s_->multiply(basis_[i].first, basis_[i].second);
    if (s_->left_divide(f, x).status == DivideStatus::Found) diag[i] = 1;
  }
  return diag;
}

std::vector<int> TruncatedRep::defect_projection(Scale n) const {
  std::vector<int> diag(basis_.size(), 1);
  for (const Element& f : s_->transversal(n)) {
    std::vector<int> e = foundation_projection(f);
    for (size_t i = 0; i < diag.size(); ++i) diag[i] -= e[i];
  }
  return diag;
}

RelationReport verify_relations(const TruncatedRep& rep) {
  const Semigroup& s = rep.family();
  RelationReport out;
  auto gens = s.generators();

  auto describe = [&](size_t i) {
    return s.show(s.multiply(rep.basis()[i].first, rep.basis()[i].second));
  };

  for (const auto& [sname, gs] : gens) {
    PMap adj_s = rep.adjoint_matrix(gs);
    for (const auto& [tname, gt] : gens) {
      PMap lhs = compose(adj_s, rep.operator_matrix(gt));
      LcmOutcome lcm = s.right_lcm(gs, gt);
      PMap rhs;
      if (lcm.disjoint()) {
        rhs.assign(rep.basis_size(), kZeroEntry);
      } else {
        rhs = compose(rep.operator_matrix(lcm.left_complement),
                      rep.adjoint_matrix(lcm.right_complement));
      }
      for (size_t i = 0; i < rep.basis_size(); ++i) {
        if (lhs[i] == kUnknownEntry || rhs[i] == kUnknownEntry) {
          ++out.skipped;
          continue;
        }
        ++out.checked;
        if (lhs[i] != rhs[i]) {
          std::ostringstream msg;
          msg << "V_" << sname << "^* V_" << tname
              << " disagrees with the LCM complement word at column "
              << describe(i);
          out.violations.push_back(msg.str());
        }
      }
    }
  }

  for (Scale n : s.irreducible_scales()) {
    std::vector<int> d = rep.defect_projection(n);
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0 && d[i] != 1) {
        std::ostringstream msg;
        msg << "defect projection d_" << n
            << " is not idempotent at column " << describe(i);
        out.violations.push_back(msg.str());
      }
    for (const auto& [aname, a] : gens) {
      if (!s.is_core(a)) continue;
      PMap va = rep.operator_matrix(a);
      for (size_t i = 0; i < d.size(); ++i) {
        if (va[i] < 0) {
          ++out.skipped;
          continue;
        }
        ++out.checked;
        if (d[i] != d[static_cast<size_t>(va[i])]) {
          std::ostringstream msg;
          msg << "d_" << n << " fails to commute with V_" << aname
              << " at column " << describe(i);
          out.violations.push_back(msg.str());
        }
      }
    }
  }
  return out;
}

bool ReconstructionReport::ok() const {
  if (!phi_one_ok || !defect_ok) return false;
  return std::all_of(samples.begin(), samples.end(),
                     [](const Sample& s) { return s.ok; });
}

ReconstructionReport verify_reconstruction(
    const TruncatedRep& rep, const Rational& beta,
    const std::vector<std::pair<Element, Element>>& sample_pairs,
    const TraceSpec& trace, Scale cutoff) {
  const Semigroup& s = rep.family();
  ZetaEval z = zeta(s, beta);
  if (z.diverges)
    throw UsageError(
        "reconstruction requires an inverse temperature above critical");
  Interval zinv = reciprocal(z.value);

  std::vector<Interval> w(rep.basis_size(), Interval(Rational(0)));
  Factorization fe = s.factor(s.identity());
  for (size_t i = 0; i < rep.basis_size(); ++i) {
    const auto& [t, a] = rep.basis()[i];
    if (a.code == fe.core_part.code)
      w[i] = pow_enclosure(s.scale(t), -beta) * zinv;
  }

  auto phi_diag = [&](const std::vector<int>& d) {
    Interval acc{Rational(0)};
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) acc = acc + w[i] * Interval(Rational(d[i]));
    return acc;
  };

  ReconstructionReport out;

  Interval window_mass{Rational(0)};
  for (Scale n : s.scale_values_up_to(rep.level_cap()))
    window_mass = window_mass + pow_enclosure(n, 1 - beta);
  Interval em = (z.value - window_mass) * zinv;
  out.excluded_mass = em.hi < 0 ? Rational(0) : em.hi;

  Interval one{Rational(0)};
  for (const Interval& wi : w) one = one + wi;
  out.phi_one = one;
  out.phi_one_ok = gap(one, Interval(Rational(1))) <= out.excluded_mass;

  std::vector<Scale> irr = s.irreducible_scales();
  std::vector<int> q(rep.basis_size(), 1);
  for (Scale n : irr) {
    std::vector<int> d = rep.defect_projection(n);
    for (size_t i = 0; i < q.size(); ++i) q[i] *= d[i];
  }
  ZetaEval zirr = zeta(irr, beta);
  out.defect_scaled = phi_diag(q) * zirr.value;
  out.defect_ok = gap(out.defect_scaled, Interval(Rational(1))) <=
                  out.excluded_mass * zirr.value.hi;

  // phi(V_x V_y^*) counts fixed vectors delta_{yf} over transversal f with
  // weight zeta^{-1} N(yf)^{-beta}; f outside the window and levels past the
  // cap enter as [0, weight] slack.
  for (const auto& [x, y] : sample_pairs) {
    ReconstructionReport::Sample sample;
    sample.x = s.show(x);
    sample.y = s.show(y);
    PMap m = compose(rep.operator_matrix(x), rep.adjoint_matrix(y));
    Interval acc{Rational(0)};
    for (Scale n : s.scale_values_up_to(rep.level_cap()))
      for (const Element& f : s.transversal(n)) {
        Element zf = s.multiply(y, f);
        Interval wf = pow_enclosure(s.scale(zf), -beta) * zinv;
        auto idx = rep.index_of(zf);
        if (!idx || m[*idx] == kUnknownEntry)
          acc = acc + Interval(Rational(0), wf.hi);
        else if (m[*idx] == static_cast<long long>(*idx))
          acc = acc + wf;
      }
    Interval deep = (z.value - window_mass) *
                    pow_enclosure(s.scale(y), -beta) * zinv;
    acc = acc + Interval(Rational(0), std::max(deep.hi, Rational(0)));
    sample.reconstructed = acc;
    sample.reference = kms_value(s, x, y, beta, trace, cutoff).value;
    sample.ok =
        gap(sample.reconstructed, sample.reference) <= out.excluded_mass;
    out.samples.push_back(std::move(sample));
  }
  return out;
}

GroundReport verify_ground(const TruncatedRep& rep, Scale scale_bound,
                           int core_weight) {
  const Semigroup& s = rep.family();
  GroundReport out;
  Element e = s.identity();
  std::vector<Element> elems = s.bounded_elements(scale_bound, core_weight);
  for (const Element& x : elems)
    for (const Element& y : elems) {
      DivideResult d = s.left_divide(y, e);
      int value = 0;
      if (d.status == DivideStatus::DepthExhausted) {
        ++out.skipped;
        continue;
      }
      if (d.status == DivideStatus::Found)
        value = s.multiply(x, *d.quotient) == e ? 1 : 0;
      ++out.checked;
      bool off_core = !s.is_core(x) || !s.is_core(y);
      if (off_core && value != 0)
        out.violations.push_back("vector state fails to vanish at " +
                                 s.show(x) + ", " + s.show(y));
      if (x == e && y == e && value != 1)
        out.violations.push_back(
            "vector state is not unital at the identity");
    }
  return out;
}

}  // namespace rlcm
