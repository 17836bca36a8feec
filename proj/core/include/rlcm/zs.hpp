#pragma once

#include "rlcm/semigroup.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rlcm {

// Internal Zappa-Szep product S = U ⋈ A, with U the transversal monoid
// (core-irreducibles plus identity) and A the core. Elements are pairs (u,a)
// multiplying by (u,a)(v,b) = (u·a(v), a|_v·b). Every shipped family whose
// core action comes from such a decomposition plugs three components into
// ZsSemigroup below; the structure transfer (core, transversal, factorization,
// right LCMs) is implemented once.

// U component. Codes are family-internal flat vectors.
class UMonoid {
 public:
  struct Lcm {
    bool disjoint = true;
    Code lcm, left_comp, right_comp;
  };

  virtual ~UMonoid() = default;
  virtual Code identity() const { return {}; }
  virtual Code mul(const Code& u, const Code& v) const = 0;
  virtual std::optional<Code> left_divide(const Code& u, const Code& s) const = 0;
  virtual Lcm right_lcm(const Code& u, const Code& v) const = 0;
  virtual Scale scale(const Code& u) const = 0;
  // All u with scale(u) = n, canonical order; empty when n unattained.
  virtual std::vector<Code> level(Scale n) const = 0;
  virtual std::vector<Scale> irr() const = 0;
  virtual std::string show(const Code& u) const = 0;
  bool is_identity(const Code& u) const { return u == identity(); }
};

// A component (the core). Must be left reversible: right LCMs always exist.
class AMonoid {
 public:
  struct Lcm {
    Code lcm, left_comp, right_comp;  // a·left = lcm = b·right
  };

  virtual ~AMonoid() = default;
  virtual Code identity() const = 0;
  virtual Code mul(const Code& a, const Code& b) const = 0;
  virtual std::optional<Code> left_divide(const Code& a, const Code& s) const = 0;
  virtual bool is_unit(const Code& a) const = 0;
  virtual Lcm right_lcm(const Code& a, const Code& b) const = 0;
  // Canonical representative of a·(units): returns (canon, x) with a·x = canon.
  virtual std::pair<Code, Code> canonical_mod_units(const Code& a) const {
    return {a, identity()};
  }
  // Weight ≤ max_weight, identity first, deduplicated, canonical order.
  virtual std::vector<Code> enumerate(int max_weight) const = 0;
  virtual std::string show(const Code& a) const = 0;
  // Left reversibility witness on generators (Theorem 5.3 (i) necessity).
  virtual bool left_reversible_on_generators() const = 0;
  virtual std::vector<std::pair<std::string, Code>> generators() const = 0;
};

// Mutual action: a(u) ∈ U and restriction a|_u ∈ A.
class ZsPairing {
 public:
  virtual ~ZsPairing() = default;
  virtual Code act(const Code& a, const Code& u) const = 0;
  // v with a(v) = u (each a acts bijectively per level).
  virtual Code act_inverse(const Code& a, const Code& u) const = 0;
  virtual Code restrict(const Code& a, const Code& u) const = 0;
};

class ZsSemigroup final : public Semigroup {
 public:
  struct GeneratorSpec {
    std::string name;
    Code u;  // u-part
    Code a;  // a-part
  };

  ZsSemigroup(std::string name, std::string family_id,
              std::unique_ptr<UMonoid> u, std::unique_ptr<AMonoid> a,
              std::unique_ptr<ZsPairing> pairing,
              std::vector<GeneratorSpec> gens,
              ActionCertificates certificates = {});

  const std::string& name() const override { return name_; }
  const std::string& family_id() const override { return family_id_; }
  Element identity() const override;
  Element multiply(const Element& s, const Element& t) const override;
  LcmOutcome right_lcm(const Element& s, const Element& t) const override;
  DivideResult left_divide(const Element& t, const Element& s,
                           int depth = 64) const override;
  Scale scale(const Element& s) const override;
  bool is_unit(const Element& s) const override;
  Factorization factor(const Element& s) const override;
  std::vector<Element> transversal(Scale n) const override;
  std::vector<Element> enumerate_core(int max_weight) const override;
  std::vector<Scale> irreducible_scales() const override;
  std::vector<std::pair<std::string, Element>> generators() const override;
  std::string show(const Element& s) const override;
  ActionCertificates action_certificates() const override { return certs_; }

  // Pair access (ZSElement view) and the raw action/restriction, exposed for
  // axiom checks and the zs_* entry points.
  Element make(const Code& u, const Code& a) const;
  Code u_part(const Element& s) const;
  Code a_part(const Element& s) const;
  const UMonoid& u_monoid() const { return *u_; }
  const AMonoid& a_monoid() const { return *a_; }
  const ZsPairing& pairing() const { return *pairing_; }

 private:
  std::string name_;
  std::string family_id_;
  std::unique_ptr<UMonoid> u_;
  std::unique_ptr<AMonoid> a_;
  std::unique_ptr<ZsPairing> pairing_;
  std::vector<GeneratorSpec> gens_;
  ActionCertificates certs_;
};

// Concrete U components ---------------------------------------------------

// Free monoid on m letters, scale m^length. For m = 1 the scale is trivial
// (degenerate BS(c,1) corner): levels collapse and level(1) = {identity}.
class FreeWordU final : public UMonoid {
 public:
  FreeWordU(int letters, std::vector<std::string> letter_names);
  Code mul(const Code& u, const Code& v) const override;
  std::optional<Code> left_divide(const Code& u, const Code& s) const override;
  Lcm right_lcm(const Code& u, const Code& v) const override;
  Scale scale(const Code& u) const override;
  std::vector<Code> level(Scale n) const override;
  std::vector<Scale> irr() const override;
  std::string show(const Code& u) const override;
  int letters() const { return m_; }

 private:
  int m_;
  std::vector<std::string> names_;
};

// U-part of ℕ⋊P: pairs (n,p) with 0 ≤ n < p, p ∈ ⟨𝒫⟩; (m,p)(n,q)=(m+np,pq).
class NpU final : public UMonoid {
 public:
  explicit NpU(std::vector<long long> coprimes);
  Code identity() const override { return {0, 1}; }
  Code mul(const Code& u, const Code& v) const override;
  std::optional<Code> left_divide(const Code& u, const Code& s) const override;
  Lcm right_lcm(const Code& u, const Code& v) const override;
  Scale scale(const Code& u) const override;
  std::vector<Code> level(Scale n) const override;
  std::vector<Scale> irr() const override;
  std::string show(const Code& u) const override;

 private:
  std::vector<long long> primes_;
};

// Concrete A components ---------------------------------------------------

// Free abelian monoid ℕ^rank; code = exponent vector, weight = total degree.
class AbelianCore final : public AMonoid {
 public:
  AbelianCore(int rank, std::vector<std::string> gen_names);
  Code identity() const override;
  Code mul(const Code& a, const Code& b) const override;
  std::optional<Code> left_divide(const Code& a, const Code& s) const override;
  bool is_unit(const Code& a) const override;
  Lcm right_lcm(const Code& a, const Code& b) const override;
  std::vector<Code> enumerate(int max_weight) const override;
  std::string show(const Code& a) const override;
  bool left_reversible_on_generators() const override { return true; }
  std::vector<std::pair<std::string, Code>> generators() const override;
  int rank() const { return rank_; }

 private:
  int rank_;
  std::vector<std::string> names_;
};

// Concrete pairings -------------------------------------------------------

class TrivialPairing final : public ZsPairing {
 public:
  explicit TrivialPairing(Code a_identity) : a_id_(std::move(a_identity)) {}
  Code act(const Code&, const Code& u) const override { return u; }
  Code act_inverse(const Code&, const Code& u) const override { return u; }
  Code restrict(const Code& a, const Code&) const override { return a; }

 private:
  Code a_id_;
};

// BS(c,d)+ pairing: A = ⟨b⟩ ≅ ℕ (code = [exponent]), U = free on letters
// w_j = b^j a. b^k(w_j ...) rewrites the first letter to w_{(j+k) mod d} and
// carries b^{((j+k) div d)·c} into the rest.
class BsPairing final : public ZsPairing {
 public:
  BsPairing(long long c, long long d) : c_(c), d_(d) {}
  Code act(const Code& a, const Code& u) const override;
  Code act_inverse(const Code& a, const Code& u) const override;
  Code restrict(const Code& a, const Code& u) const override;

 private:
  std::pair<Code, Code> act_full(long long k, const Code& u) const;
  long long c_, d_;
};

// ℕ⋊P pairing: A ≅ ℕ via (m,1); (k)((n,p)) = ((n+k) mod p, p) with carry
// (n+k) div p.
class NpPairing final : public ZsPairing {
 public:
  Code act(const Code& a, const Code& u) const override;
  Code act_inverse(const Code& a, const Code& u) const override;
  Code restrict(const Code& a, const Code& u) const override;
};

// Table-driven pairing for the user-facing combinator: per A-generator, a
// permutation of the U-letters and a restriction exponent vector per letter.
class TablePairing final : public ZsPairing {
 public:
  // action[g][x] = output letter; restriction[g][x] = exponent vector.
  TablePairing(int letters, int a_rank,
               std::vector<std::vector<int>> action,
               std::vector<std::vector<Code>> restriction);
  Code act(const Code& a, const Code& u) const override;
  Code act_inverse(const Code& a, const Code& u) const override;
  Code restrict(const Code& a, const Code& u) const override;

 private:
  // Apply the full A-element a to a single letter: (output letter, a|_x).
  std::pair<int, Code> step(const Code& a, int x) const;
  int letters_;
  int rank_;
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<Code>> restriction_;
};

}  // namespace rlcm
