#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here calls into the structural machinery under test: each oracle
// recomputes its answer from first principles in a different representation.

#include "rlcm/rational.hpp"
#include "rlcm/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using rlcm::BigInt;
using rlcm::Code;
using rlcm::Element;
using rlcm::Rational;
using rlcm::Scale;
using rlcm::Semigroup;

// --- Baumslag-Solitar positive monoid via confluent rewriting -------------
//
// Words over {a, b} with the single rule b^d a -> a b^c. The rule moves b's
// to the right, so rewriting terminates; normal forms are words where every
// maximal b-run before an a has length < d.

inline std::string bs_normalize(std::string w, long long c, long long d) {
  bool changed = true;
  while (changed) {
    changed = false;
    long long run = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 'b') {
        ++run;
      } else {
        if (run >= d) {
          std::string replacement = "a" + std::string(c, 'b');
          w = w.substr(0, i - d) + replacement + w.substr(i + 1);
          changed = true;
          break;
        }
        run = 0;
      }
    }
  }
  return w;
}

inline std::string bs_mul(const std::string& x, const std::string& y,
                          long long c, long long d) {
  return bs_normalize(x + y, c, d);
}

// All normal forms with at most max_a letters a and trailing b-run at most
// max_b.
inline std::vector<std::string> bs_words(long long c, long long d,
                                         int max_a, int max_b) {
  std::vector<std::string> out{""};
  std::vector<std::string> prefixes{""};
  for (int k = 0; k < max_a; ++k) {
    std::vector<std::string> next;
    for (const std::string& p : prefixes)
      for (long long j = 0; j < d; ++j)
        next.push_back(p + std::string(j, 'b') + "a");
    prefixes = next;
    out.insert(out.end(), next.begin(), next.end());
  }
  std::vector<std::string> all;
  for (const std::string& w : out)
    for (int m = 0; m <= max_b; ++m) all.push_back(w + std::string(m, 'b'));
  return all;
}

// --- N x| P via explicit congruence arithmetic ----------------------------
//
// Elements (n, p): n >= 0, p a product of the chosen coprime generators;
// (m, p)(n, q) = (m + p n, p q). Principal ideals are arithmetic
// progressions: (m, p) S = { (m + p k, p q) }.

struct NpElem {
  long long n = 0, p = 1;
  friend bool operator==(const NpElem&, const NpElem&) = default;
  friend auto operator<=>(const NpElem&, const NpElem&) = default;
};

inline NpElem np_mul(const NpElem& x, const NpElem& y) {
  return {x.n + x.p * y.n, x.p * y.p};
}

// Intersection of the two arithmetic progressions by CRT: nonempty iff
// m = n mod gcd(p, q); the minimal common point together with lcm(p, q)
// generates the intersection ideal.
inline std::optional<NpElem> np_ideal_lcm(const NpElem& x, const NpElem& y) {
  long long g = std::gcd(x.p, y.p);
  long long diff = y.n - x.n;
  if (diff % g != 0) return std::nullopt;
  long long l = x.p / g * y.p;
  // walk x's progression to the first member of y's (desk scale: p, q small)
  long long v = x.n;
  while ((v - y.n) % y.p != 0 || v < y.n) v += x.p;
  return NpElem{v, l};
}

// --- binary odometer ------------------------------------------------------
//
// The adding machine acts on least-significant-bit-first words as +1 with
// carry; the power q^k adds k, and the section after a length-L word is
// q^((value + k) / 2^L).

inline std::pair<Code, long long> odometer_add(const Code& word,
                                               long long k) {
  BigInt value = 0;
  for (size_t i = word.size(); i-- > 0;) value = 2 * value + word[i];
  BigInt total = value + k;
  Code out(word.size(), 0);
  for (size_t i = 0; i < word.size(); ++i) {
    out[i] = static_cast<long long>(total % 2);
    total /= 2;
  }
  return {out, static_cast<long long>(total)};
}

// --- one-dimensional dilation lattice -------------------------------------
//
// Z x|_A N with A = [[m]]: (g, p)(h, q) = (g + m^p h, p + q). The ideal
// (g, p) S = { (g + m^p h, p + q) } is a congruence class at each depth, so
// intersection questions reduce to solving g + m^p x = h + m^q y.

struct DilElem {
  long long g = 0, p = 0;
  friend bool operator==(const DilElem&, const DilElem&) = default;
};

inline long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::optional<DilElem> dil_ideal_lcm(const DilElem& x, const DilElem& y,
                                            long long m) {
  const DilElem& lo = x.p <= y.p ? x : y;
  const DilElem& hi = x.p <= y.p ? y : x;
  long long step = ipow(m, lo.p);
  if ((hi.g - lo.g) % step != 0) return std::nullopt;
  // the deeper ideal is contained in the shallower one
  return DilElem{hi.g, hi.p};
}

// --- brute-force principal ideal intersection -----------------------------
//
// sS and tS sampled through a shared pool of right factors; the claimed LCM
// must lie in both ideals and divide every sampled common element.

struct IdealCheck {
  bool consistent = true;
  std::string detail;
};

inline IdealCheck check_lcm_against_pool(const Semigroup& sg,
                                         const Element& s, const Element& t,
                                         const std::vector<Element>& pool) {
  rlcm::LcmOutcome out = sg.right_lcm(s, t);
  std::set<Code> s_ideal, t_ideal;
  for (const Element& x : pool) {
    s_ideal.insert(sg.multiply(s, x).code);
    t_ideal.insert(sg.multiply(t, x).code);
  }
  std::vector<Code> common;
  std::set_intersection(s_ideal.begin(), s_ideal.end(), t_ideal.begin(),
                        t_ideal.end(), std::back_inserter(common));
  if (out.disjoint()) {
    if (!common.empty())
      return {false, "claimed disjoint but ideals share an element"};
    return {true, ""};
  }
  const Element& r = *out.lcm;
  if (!(sg.multiply(s, out.left_complement) == r) ||
      !(sg.multiply(t, out.right_complement) == r))
    return {false, "complements do not reproduce the lcm"};
  for (const Code& c : common) {
    Element z{&sg, c};
    if (sg.left_divide(r, z).status != rlcm::DivideStatus::Found)
      return {false, "common element " + sg.show(z) +
                         " is not divisible by the claimed lcm"};
  }
  return {true, ""};
}

// --- zeta partial sums ----------------------------------------------------
//
// Box-truncated Dirichlet sum over the free monoid on the scale set I:
// sum over exponent vectors with all exponents < k of prod p^{e_p (1-beta)}.
// The truncation defect against the product formula is exactly
// prod full_p - prod partial_p.

inline Rational zeta_box_partial(const std::vector<long long>& scales,
                                 long long beta, int k) {
  Rational prod = 1;
  for (long long p : scales) {
    Rational factor = 0;
    Rational term = 1;
    Rational ratio = Rational(1) / rlcm::pow_rational(Rational(p), beta - 1);
    for (int e = 0; e < k; ++e) {
      factor += term;
      term *= ratio;
    }
    prod *= factor;
  }
  return prod;
}

inline Rational zeta_product(const std::vector<long long>& scales,
                             long long beta) {
  Rational prod = 1;
  for (long long p : scales) {
    Rational ratio = Rational(1) / rlcm::pow_rational(Rational(p), beta - 1);
    prod *= Rational(1) / (Rational(1) - ratio);
  }
  return prod;
}

// Exact bound on zeta_product - zeta_box_partial: replace one factor at a
// time by its geometric tail.
inline Rational zeta_box_tail_bound(const std::vector<long long>& scales,
                                    long long beta, int k) {
  Rational bound = 0;
  for (size_t i = 0; i < scales.size(); ++i) {
    Rational tail = 1;
    for (size_t j = 0; j < scales.size(); ++j) {
      Rational ratio =
          Rational(1) / rlcm::pow_rational(Rational(scales[j]), beta - 1);
      Rational full = Rational(1) / (Rational(1) - ratio);
      if (j == i)
        tail *= rlcm::pow_rational(ratio, k) * full;
      else
        tail *= full;
    }
    bound += tail;
  }
  return bound;
}

}  // namespace oracles
