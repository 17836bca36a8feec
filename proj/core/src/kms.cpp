#include "rlcm/kms.hpp"

#include <algorithm>
#include <sstream>

namespace rlcm {

namespace {

Interval div_interval(const Interval& x, const Interval& y) {
  return x * reciprocal(y);
}

Rational clamp01_hi(const Rational& v) {
  if (v > 1) return Rational(1);
  if (v < 0) return Rational(0);
  return v;
}

Rational clamp0_lo(const Rational& v) { return v < 0 ? Rational(0) : v; }

StateValue exact_value(Rational v, std::string note = {}) {
  StateValue out;
  out.value = Interval(std::move(v));
  out.note = std::move(note);
  return out;
}

// Canonical-trace series value for an off-diagonal core pair at beta > 1:
//   zeta_S(beta)^{-1} * sum_{n in N(S)} n^{-beta} |T_n^{a,b}|
// truncated at the cutoff, with the neglected mass bounded exactly through
// the full-measure identity sum_{n in N(S)} n^{1-beta} = zeta_S(beta).
StateValue series_value(const Semigroup& s, const Element& a, const Element& b,
                        const Rational& beta, Scale cutoff) {
  ZetaEval z = zeta(s, beta);
  if (z.diverges)
    throw InternalConsistencyError("series trace requested at divergent beta");

  Interval partial{Rational(0)};
  Interval mass{Rational(0)};
  for (Scale n : s.scale_values_up_to(cutoff)) {
    Interval w = pow_enclosure(n, -beta);
    long long fixed =
        static_cast<long long>(fixed_sets(s, a, b, n).exact.size());
    partial = partial + w * Interval(Rational(fixed));
    mass = mass + pow_enclosure(n, 1 - beta);
  }

  Interval base = div_interval(partial, z.value);
  Interval tail_fraction = div_interval(z.value - mass, z.value);
  Rational neglected = clamp01_hi(clamp0_lo(tail_fraction.hi));

  StateValue out;
  out.value = Interval(clamp0_lo(base.lo), clamp01_hi(base.hi + neglected));
  out.tail = TailCertificate{cutoff, neglected};
  std::ostringstream note;
  note << "zeta-weighted series over scale values <= " << cutoff;
  out.note = note.str();
  return out;
}

// Trace value at a core pair (a, b); the scale prefactor is applied by the
// caller. a and b are in canonical form and distinct here.
StateValue core_trace_value(const Semigroup& s, const Element& a,
                            const Element& b, const Rational& beta,
                            const TraceSpec& trace, Scale cutoff) {
  if (trace.mode == TraceSpec::Mode::Table) {
    auto it = trace.table.find({a.code, b.code});
    if (it == trace.table.end()) it = trace.table.find({b.code, a.code});
    if (it == trace.table.end())
      throw UsageError("trace table has no entry for core pair " + s.show(a) +
                       ", " + s.show(b));
    return exact_value(it->second, "trace table entry");
  }

  ActionCertificates cert = s.action_certificates();
  bool almost_free = cert.almost_free.has_value() && *cert.almost_free;
  if (trace.mode == TraceSpec::Mode::Canonical && almost_free)
    return exact_value(Rational(0),
                       "almost-free core action: the canonical trace is the "
                       "delta trace");

  if (beta > 1) return series_value(s, a, b, beta, cutoff);

  // beta == 1
  if (trace.mode == TraceSpec::Mode::Rho) {
    KappaTable kt = kappa_table(s, a, b, trace.kappa_level);
    StateValue out;
    out.value = kt.enclosure;
    std::ostringstream note;
    note << "fixed-point density enclosure from " << trace.kappa_level
         << " levels";
    out.note = note.str();
    return out;
  }

  StateValue out;
  out.value = Interval(Rational(0), Rational(1));
  out.decided = false;
  out.note =
      "critical-temperature off-diagonal value undetermined: the core action "
      "is not certified almost free (use the rho or table trace)";
  return out;
}

}  // namespace

ZetaEval zeta(const std::vector<Scale>& irr, const Rational& beta) {
  ZetaEval out;
  if (irr.empty()) return out;
  if (beta <= 1) {
    out.diverges = true;
    return out;
  }
  Interval prod{Rational(1)};
  for (Scale n : irr) {
    Interval factor = Interval(Rational(1)) - pow_enclosure(n, 1 - beta);
    prod = prod * reciprocal(factor);
  }
  out.value = prod;
  return out;
}

ZetaEval zeta(const Semigroup& s, const Rational& beta) {
  return zeta(s.irreducible_scales(), beta);
}

Rational critical_beta(const Semigroup&) { return Rational(1); }

StateValue kms_value(const Semigroup& s, const Element& x, const Element& y,
                     const Rational& beta, const TraceSpec& trace,
                     Scale cutoff) {
  if (beta < 1)
    throw UsageError("no KMS state exists at inverse temperature below 1");

  Factorization fx = s.factor(x);
  Factorization fy = s.factor(y);
  if (!(fx.transversal_part == fy.transversal_part))
    return exact_value(Rational(0), "distinct initial transversal segments");

  Scale n = s.scale(x);
  Interval prefactor = pow_enclosure(n, -beta);

  if (fx.core_part == fy.core_part) {
    StateValue out;
    out.value = prefactor;
    return out;
  }

  StateValue core =
      core_trace_value(s, fx.core_part, fy.core_part, beta, trace, cutoff);
  core.value = prefactor * core.value;
  if (core.tail)
    core.tail->neglected_bound = core.tail->neglected_bound * prefactor.hi;
  return core;
}

StateValue ground_state_value(const Semigroup& s, const Element& x,
                              const Element& y) {
  if (!s.is_core(x) || !s.is_core(y))
    return exact_value(Rational(0), "ground states vanish off the core");
  return exact_value(Rational(x == y ? 1 : 0), "delta trace on the core");
}

FoundationSum foundation_sum(const Semigroup& s, const Rational& beta, Scale n,
                             const TraceSpec& trace) {
  std::vector<Element> found = s.transversal(n);
  if (found.empty())
    throw UsageError("no transversal at level " + std::to_string(n));

  FoundationSum out;
  out.level = n;
  Interval sum{Rational(0)};
  for (const Element& f : found) {
    StateValue v = kms_value(s, f, f, beta, trace);
    sum = sum + v.value;
  }
  out.sum = sum;
  out.expected = pow_enclosure(n, 1 - beta);
  out.matches = !(out.sum.hi < out.expected.lo || out.expected.hi < out.sum.lo);
  return out;
}

BoundaryFactoring boundary_factoring(const Semigroup& s,
                                     const Rational& beta) {
  if (beta < 1)
    throw UsageError("no KMS state exists at inverse temperature below 1");
  BoundaryFactoring out;
  out.beta = beta;
  out.through_core_boundary = true;
  out.through_pure_boundary = (beta == critical_beta(s));
  return out;
}

Classification classify(const Semigroup& s, int core_weight, Scale level) {
  Classification c;
  c.beta_critical = critical_beta(s);
  c.scale_trivial = s.irreducible_scales().empty();

  c.items.push_back("no KMS states at inverse temperature below 1");

  if (c.scale_trivial) {
    c.items.push_back(
        "trivial scale map: every element is core and the time evolution is "
        "trivial; KMS states are the traces on the core algebra");
    return c;
  }

  c.items.push_back(
      "critical inverse temperature 1: the zeta series diverges at and below "
      "it");

  ActionReport af = check_almost_free(s, core_weight, level);
  if (af.verdict == Verdict::Holds) {
    c.critical_unique = Verdict::Holds;
    c.uniqueness_route = "almost-free core action";
  } else {
    ActionReport ff = check_faithful(s, core_weight, level);
    ActionReport fp = check_propagation(s, core_weight, level);
    if (ff.verdict == Verdict::Holds && fp.verdict == Verdict::Holds) {
      c.critical_unique = Verdict::Holds;
      c.uniqueness_route =
          "faithful core action with finite propagation at critical "
          "temperature 1";
    } else if (af.verdict == Verdict::Violated) {
      c.critical_unique = Verdict::Undecided;
      c.items.push_back(
          "core action is not almost free; uniqueness at the critical "
          "temperature is not certified");
    }
  }
  if (c.critical_unique == Verdict::Holds)
    c.items.push_back("unique KMS state at the critical temperature via " +
                      c.uniqueness_route);

  c.items.push_back(
      "above the critical temperature: KMS states correspond to states of "
      "the core algebra, with the canonical one given by the zeta-weighted "
      "series");
  c.items.push_back(
      "ground states vanish off the core and restrict to states of the core "
      "algebra");
  return c;
}

}  // namespace rlcm
