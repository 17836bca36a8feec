#pragma once

#include "rlcm/semigroup.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rlcm {

// Integer matrices and Smith normal form, used for dilation digit sets.
using IntMat = std::vector<std::vector<long long>>;

struct SnfResult {
  IntMat u, u_inv, v, d;  // u*m*v = d (diagonal, nonneg), u,v unimodular
};
SnfResult smith_normal_form(IntMat m);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_pow(const IntMat& a, long long e);
long long mat_det(const IntMat& a);

// Abelian group G with injective finite-index endomorphism θ; the semigroup
// is G ⋊_θ ℕ with (g,p)(h,q) = (g + θ^p(h), p+q). The core equals the unit
// group G×{0}; transversals are canonical digit sets for G/θ^n(G).
class AdsGroup {
 public:
  virtual ~AdsGroup() = default;
  virtual Code zero() const = 0;
  virtual Code add(const Code& a, const Code& b) const = 0;
  virtual Code sub(const Code& a, const Code& b) const = 0;
  virtual Code theta(const Code& g, long long n) const = 0;
  virtual bool in_image(const Code& g, long long n) const = 0;
  virtual Code preimage(const Code& g, long long n) const = 0;
  // Canonical representative of g + θ^n(G).
  virtual Code digit(const Code& g, long long n) const = 0;
  // All canonical representatives of G/θ^n(G), deterministic order.
  virtual std::vector<Code> digits(long long n) const = 0;
  virtual Scale index() const = 0;  // [G : θ(G)]
  virtual std::vector<Code> enumerate(int max_weight) const = 0;
  virtual std::string show(const Code& g) const = 0;
  virtual std::vector<std::pair<std::string, Code>> generators() const = 0;
};

class DilationGroup final : public AdsGroup {
 public:
  explicit DilationGroup(IntMat a);
  Code zero() const override;
  Code add(const Code& a, const Code& b) const override;
  Code sub(const Code& a, const Code& b) const override;
  Code theta(const Code& g, long long n) const override;
  bool in_image(const Code& g, long long n) const override;
  Code preimage(const Code& g, long long n) const override;
  Code digit(const Code& g, long long n) const override;
  std::vector<Code> digits(long long n) const override;
  Scale index() const override { return index_; }
  std::vector<Code> enumerate(int max_weight) const override;
  std::string show(const Code& g) const override;
  std::vector<std::pair<std::string, Code>> generators() const override;
  const IntMat& matrix() const { return a_; }
  int dim() const { return dim_; }

 private:
  SnfResult level(long long n) const;  // SNF of A^n
  IntMat a_;
  int dim_;
  Scale index_;
};

// F_q[t] with θ = multiplication by t^deg, q = p^e. Coefficients live in the
// additive group (Z/p)^e, encoded base-p as integers in [0,q); only the
// additive structure is used, so prime powers need no field arithmetic.
class PolyShiftGroup final : public AdsGroup {
 public:
  PolyShiftGroup(long long q, long long deg);
  Code zero() const override;
  Code add(const Code& a, const Code& b) const override;
  Code sub(const Code& a, const Code& b) const override;
  Code theta(const Code& g, long long n) const override;
  bool in_image(const Code& g, long long n) const override;
  Code preimage(const Code& g, long long n) const override;
  Code digit(const Code& g, long long n) const override;
  std::vector<Code> digits(long long n) const override;
  Scale index() const override;
  std::vector<Code> enumerate(int max_weight) const override;
  std::string show(const Code& g) const override;
  std::vector<std::pair<std::string, Code>> generators() const override;
  long long q() const { return q_; }
  long long deg() const { return deg_; }

 private:
  long long coeff_add(long long a, long long b, int sign) const;
  long long q_, p_, e_, deg_;
};

class AdsSemigroup final : public Semigroup {
 public:
  AdsSemigroup(std::string name, std::string family_id,
               std::unique_ptr<AdsGroup> group,
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

  Element make(const Code& g, long long n) const;
  Code g_part(const Element& s) const;
  long long n_part(const Element& s) const;
  const AdsGroup& group() const { return *group_; }

 private:
  std::string name_;
  std::string family_id_;
  std::unique_ptr<AdsGroup> group_;
  ActionCertificates certs_;
};

}  // namespace rlcm
