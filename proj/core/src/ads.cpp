#include "rlcm/ads.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace rlcm {

// --- integer matrices ----------------------------------------------------

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMat r(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

IntMat mat_identity(size_t n) {
  IntMat r(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMat mat_pow(const IntMat& a, long long e) {
  IntMat r = mat_identity(a.size());
  for (long long i = 0; i < e; ++i) r = mat_mul(r, a);
  return r;
}

long long mat_det(const IntMat& a) {
  IntMat m = a;
  size_t n = m.size();
  long long det = 1;
  for (size_t c = 0; c < n; ++c) {
    // Fraction-free elimination via gcd row reduction.
    size_t piv = c;
    while (true) {
      piv = c;
      for (size_t i = c; i < n; ++i)
        if (m[i][c] != 0 && (m[piv][c] == 0 ||
                             std::llabs(m[i][c]) < std::llabs(m[piv][c])))
          piv = i;
      if (m[piv][c] == 0) return 0;
      if (piv != c) {
        std::swap(m[piv], m[c]);
        det = -det;
      }
      bool clear = true;
      for (size_t i = c + 1; i < n; ++i)
        if (m[i][c] != 0) {
          long long q = m[i][c] / m[c][c];
          for (size_t j = c; j < n; ++j) m[i][j] -= q * m[c][j];
          if (m[i][c] != 0) clear = false;
        }
      if (clear) break;
    }
    det *= m[c][c];
  }
  return det;
}

SnfResult smith_normal_form(IntMat m) {
  size_t n = m.size();
  SnfResult r{mat_identity(n), mat_identity(n), mat_identity(n), {}};
  auto row_sub = [&](size_t i, size_t t, long long q) {
    for (size_t j = 0; j < n; ++j) m[i][j] -= q * m[t][j];
    for (size_t j = 0; j < n; ++j) r.u[i][j] -= q * r.u[t][j];
    for (size_t j = 0; j < n; ++j) r.u_inv[j][t] += q * r.u_inv[j][i];
  };
  auto row_swap = [&](size_t i, size_t t) {
    std::swap(m[i], m[t]);
    std::swap(r.u[i], r.u[t]);
    for (size_t j = 0; j < n; ++j) std::swap(r.u_inv[j][i], r.u_inv[j][t]);
  };
  auto row_neg = [&](size_t t) {
    for (size_t j = 0; j < n; ++j) m[t][j] = -m[t][j];
    for (size_t j = 0; j < n; ++j) r.u[t][j] = -r.u[t][j];
    for (size_t j = 0; j < n; ++j) r.u_inv[j][t] = -r.u_inv[j][t];
  };
  auto col_sub = [&](size_t j, size_t t, long long q) {
    for (size_t i = 0; i < n; ++i) m[i][j] -= q * m[i][t];
    for (size_t i = 0; i < n; ++i) r.v[i][j] -= q * r.v[i][t];
  };
  auto col_swap = [&](size_t j, size_t t) {
    for (size_t i = 0; i < n; ++i) std::swap(m[i][j], m[i][t]);
    for (size_t i = 0; i < n; ++i) std::swap(r.v[i][j], r.v[i][t]);
  };
  auto col_neg = [&](size_t t) {
    for (size_t i = 0; i < n; ++i) m[i][t] = -m[i][t];
    for (size_t i = 0; i < n; ++i) r.v[i][t] = -r.v[i][t];
  };

  for (size_t t = 0; t < n; ++t) {
    bool chained = false;
    while (!chained) {
      // Move a minimal nonzero entry of the trailing submatrix to (t,t).
      size_t bi = t, bj = t;
      bool found = false;
      for (size_t i = t; i < n; ++i)
        for (size_t j = t; j < n; ++j)
          if (m[i][j] != 0 &&
              (!found || std::llabs(m[i][j]) < std::llabs(m[bi][bj]))) {
            bi = i;
            bj = j;
            found = true;
          }
      if (!found) {
        chained = true;
        break;
      }
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);
      while (true) {
        bool dirty = false;
        for (size_t i = t + 1; i < n; ++i)
          if (m[i][t] != 0) {
            long long q = m[i][t] / m[t][t];
            row_sub(i, t, q);
            if (m[i][t] != 0) {
              row_swap(i, t);
              dirty = true;
            }
          }
        for (size_t j = t + 1; j < n; ++j)
          if (m[t][j] != 0) {
            long long q = m[t][j] / m[t][t];
            col_sub(j, t, q);
            if (m[t][j] != 0) {
              col_swap(j, t);
              dirty = true;
            }
          }
        if (!dirty) break;
      }
      // Divisibility chain: fold any offending row into row t and redo.
      chained = true;
      for (size_t i = t + 1; i < n && chained; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_sub(t, i, -1);
            chained = false;
            break;
          }
    }
    if (m[t][t] < 0) {
      row_neg(t);
    }
    (void)col_neg;
  }
  r.d = m;
  return r;
}

// --- DilationGroup -------------------------------------------------------

DilationGroup::DilationGroup(IntMat a) : a_(std::move(a)) {
  dim_ = static_cast<int>(a_.size());
  if (dim_ < 1) throw ConstructionError("dilation matrix: dimension must be >= 1");
  for (const auto& row : a_)
    if (row.size() != static_cast<size_t>(dim_))
      throw ConstructionError("dilation matrix: not square");
  long long det = mat_det(a_);
  if (std::llabs(det) <= 1)
    throw ConstructionError("dilation matrix: |det A| must exceed 1");
  index_ = static_cast<Scale>(std::llabs(det));
}

SnfResult DilationGroup::level(long long n) const {
  return smith_normal_form(mat_pow(a_, n));
}

Code DilationGroup::zero() const { return Code(dim_, 0); }

Code DilationGroup::add(const Code& a, const Code& b) const {
  Code r = a;
  for (int i = 0; i < dim_; ++i) r[i] += b[i];
  return r;
}

Code DilationGroup::sub(const Code& a, const Code& b) const {
  Code r = a;
  for (int i = 0; i < dim_; ++i) r[i] -= b[i];
  return r;
}

namespace {
Code mat_apply(const IntMat& m, const Code& g) {
  Code r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r[i] += m[i][j] * g[j];
  return r;
}
}  // namespace

Code DilationGroup::theta(const Code& g, long long n) const {
  return mat_apply(mat_pow(a_, n), g);
}

bool DilationGroup::in_image(const Code& g, long long n) const {
  auto s = level(n);
  Code y = mat_apply(s.u, g);
  for (int i = 0; i < dim_; ++i)
    if (y[i] % s.d[i][i] != 0) return false;
  return true;
}

Code DilationGroup::preimage(const Code& g, long long n) const {
  auto s = level(n);
  Code y = mat_apply(s.u, g);
  for (int i = 0; i < dim_; ++i) {
    if (y[i] % s.d[i][i] != 0)
      throw UsageError("dilation preimage: element not in θ^n(G)");
    y[i] /= s.d[i][i];
  }
  return mat_apply(s.v, y);
}

Code DilationGroup::digit(const Code& g, long long n) const {
  auto s = level(n);
  Code y = mat_apply(s.u, g);
  for (int i = 0; i < dim_; ++i) {
    long long d = s.d[i][i];
    y[i] = ((y[i] % d) + d) % d;
  }
  return mat_apply(s.u_inv, y);
}

std::vector<Code> DilationGroup::digits(long long n) const {
  auto s = level(n);
  std::vector<Code> out;
  Code y(dim_, 0);
  while (true) {
    out.push_back(mat_apply(s.u_inv, y));
    int i = dim_ - 1;
    while (i >= 0 && y[i] + 1 == s.d[i][i]) y[i--] = 0;
    if (i < 0) break;
    ++y[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Code> DilationGroup::enumerate(int max_weight) const {
  std::vector<Code> out{zero()};
  for (int w = 1; w <= max_weight; ++w) {
    // Vectors with max-norm exactly w, lex order.
    std::vector<Code> layer;
    Code cur(dim_, -w);
    while (true) {
      if (std::any_of(cur.begin(), cur.end(),
                      [&](long long v) { return std::llabs(v) == w; }))
        layer.push_back(cur);
      int i = dim_ - 1;
      while (i >= 0 && cur[i] == w) cur[i--] = -w;
      if (i < 0) break;
      ++cur[i];
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string DilationGroup::show(const Code& g) const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

std::vector<std::pair<std::string, Code>> DilationGroup::generators() const {
  std::vector<std::pair<std::string, Code>> out;
  for (int i = 0; i < dim_; ++i) {
    Code c(dim_, 0);
    c[i] = 1;
    out.emplace_back("e" + std::to_string(i + 1), c);
  }
  return out;
}

// --- PolyShiftGroup ------------------------------------------------------

PolyShiftGroup::PolyShiftGroup(long long q, long long deg) : q_(q), deg_(deg) {
  if (q < 2) throw ConstructionError("finite-field shift: q must be >= 2");
  if (deg < 1) throw ConstructionError("finite-field shift: degree must be >= 1");
  // q must be a prime power p^e.
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q prime
  long long v = q, e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1)
    throw ConstructionError("finite-field shift: q must be a prime power");
  p_ = p;
  e_ = e;
}

long long PolyShiftGroup::coeff_add(long long a, long long b, int sign) const {
  // Componentwise mod-p arithmetic on base-p digit vectors.
  long long r = 0, mult = 1;
  for (long long i = 0; i < e_; ++i) {
    long long da = a % p_, db = b % p_;
    long long d = ((da + sign * db) % p_ + p_) % p_;
    r += d * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

namespace {
Code trim(Code c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}
}  // namespace

Code PolyShiftGroup::zero() const { return {}; }

Code PolyShiftGroup::add(const Code& a, const Code& b) const {
  Code r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = coeff_add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, +1);
  return trim(r);
}

Code PolyShiftGroup::sub(const Code& a, const Code& b) const {
  Code r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = coeff_add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, -1);
  return trim(r);
}

Code PolyShiftGroup::theta(const Code& g, long long n) const {
  if (g.empty()) return g;
  Code r(g.size() + static_cast<size_t>(deg_ * n), 0);
  std::copy(g.begin(), g.end(), r.begin() + static_cast<size_t>(deg_ * n));
  return r;
}

bool PolyShiftGroup::in_image(const Code& g, long long n) const {
  size_t k = static_cast<size_t>(deg_ * n);
  for (size_t i = 0; i < std::min(k, g.size()); ++i)
    if (g[i] != 0) return false;
  return true;
}

Code PolyShiftGroup::preimage(const Code& g, long long n) const {
  if (!in_image(g, n))
    throw UsageError("poly-shift preimage: element not in θ^n(G)");
  size_t k = static_cast<size_t>(deg_ * n);
  if (g.size() <= k) return {};
  return Code(g.begin() + k, g.end());
}

Code PolyShiftGroup::digit(const Code& g, long long n) const {
  size_t k = static_cast<size_t>(deg_ * n);
  return trim(Code(g.begin(), g.begin() + std::min(k, g.size())));
}

std::vector<Code> PolyShiftGroup::digits(long long n) const {
  size_t k = static_cast<size_t>(deg_ * n);
  std::vector<Code> out;
  Code cur(k, 0);
  while (true) {
    out.push_back(trim(cur));
    size_t i = k;
    while (i > 0 && cur[i - 1] == q_ - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Scale PolyShiftGroup::index() const {
  Scale r = 1;
  for (long long i = 0; i < deg_; ++i) r *= static_cast<Scale>(q_);
  return r;
}

std::vector<Code> PolyShiftGroup::enumerate(int max_weight) const {
  // All polynomials with < max_weight coefficients (weight = #coefficients).
  std::vector<Code> out;
  size_t k = static_cast<size_t>(std::max(0, max_weight));
  Code cur(k, 0);
  if (k == 0) return {Code{}};
  while (true) {
    out.push_back(trim(cur));
    size_t i = k;
    while (i > 0 && cur[i - 1] == q_ - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::sort(out.begin(), out.end(),
            [](const Code& a, const Code& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string PolyShiftGroup::show(const Code& g) const {
  if (g.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || g[i] != 1) s += std::to_string(g[i]);
    if (i == 1) s += "t";
    if (i > 1) s += "t^" + std::to_string(i);
  }
  return s;
}

std::vector<std::pair<std::string, Code>> PolyShiftGroup::generators() const {
  return {{"1", Code{1}}};
}

// --- AdsSemigroup --------------------------------------------------------

AdsSemigroup::AdsSemigroup(std::string name, std::string family_id,
                           std::unique_ptr<AdsGroup> group,
                           ActionCertificates certificates)
    : name_(std::move(name)),
      family_id_(std::move(family_id)),
      group_(std::move(group)),
      certs_(std::move(certificates)) {}

Element AdsSemigroup::make(const Code& g, long long n) const {
  Code code{n};
  code.insert(code.end(), g.begin(), g.end());
  return Element{this, std::move(code)};
}

Code AdsSemigroup::g_part(const Element& s) const {
  require_mine(s);
  return Code(s.code.begin() + 1, s.code.end());
}

long long AdsSemigroup::n_part(const Element& s) const {
  require_mine(s);
  return s.code.at(0);
}

Element AdsSemigroup::identity() const { return make(group_->zero(), 0); }

Element AdsSemigroup::multiply(const Element& s, const Element& t) const {
  require_mine(s);
  require_mine(t);
  long long p = n_part(s), q = n_part(t);
  return make(group_->add(g_part(s), group_->theta(g_part(t), p)), p + q);
}

Scale AdsSemigroup::scale(const Element& s) const {
  long long p = n_part(s);
  Scale r = 1;
  for (long long i = 0; i < p; ++i) r *= group_->index();
  return r;
}

bool AdsSemigroup::is_unit(const Element& s) const { return n_part(s) == 0; }

Factorization AdsSemigroup::factor(const Element& s) const {
  long long p = n_part(s);
  Code g = g_part(s);
  Code d = group_->digit(g, p);
  Code c = group_->preimage(group_->sub(g, d), p);
  return {make(d, p), make(c, 0)};
}

DivideResult AdsSemigroup::left_divide(const Element& t, const Element& s,
                                       int) const {
  long long p = n_part(t), e = n_part(s);
  if (e < p) return DivideResult::none();
  Code diff = group_->sub(g_part(s), g_part(t));
  if (!group_->in_image(diff, p)) return DivideResult::none();
  return DivideResult::found(make(group_->preimage(diff, p), e - p));
}

LcmOutcome AdsSemigroup::right_lcm(const Element& s, const Element& t) const {
  require_mine(s);
  require_mine(t);
  const Element& lo = n_part(s) <= n_part(t) ? s : t;
  const Element& hi = n_part(s) <= n_part(t) ? t : s;
  // (g,p)S ∩ (h,q)S with p ≤ q is nonempty iff g ≡ h mod θ^p(G); the LCM is
  // then the digit-reduced representative at exponent q.
  if (!group_->in_image(group_->sub(g_part(hi), g_part(lo)), n_part(lo)))
    return LcmOutcome::make_disjoint();
  long long q = n_part(hi);
  Element lcm = make(group_->digit(g_part(hi), q), q);
  auto lc = left_divide(s, lcm);
  auto rc = left_divide(t, lcm);
  if (lc.status != DivideStatus::Found || rc.status != DivideStatus::Found)
    throw InternalConsistencyError(family_id_ +
                                   ": LCM witness failed ideal membership");
  return LcmOutcome::make(lcm, *lc.quotient, *rc.quotient);
}

std::vector<Element> AdsSemigroup::transversal(Scale n) const {
  long long k = 0;
  Scale v = 1;
  while (v < n) {
    v *= group_->index();
    ++k;
  }
  if (v != n) return {};
  std::vector<Element> out;
  for (const Code& d : group_->digits(k)) out.push_back(make(d, k));
  return out;
}

std::vector<Element> AdsSemigroup::enumerate_core(int max_weight) const {
  std::vector<Element> out;
  for (const Code& g : group_->enumerate(max_weight)) out.push_back(make(g, 0));
  return out;
}

std::vector<Scale> AdsSemigroup::irreducible_scales() const {
  return {group_->index()};
}

std::vector<std::pair<std::string, Element>> AdsSemigroup::generators() const {
  std::vector<std::pair<std::string, Element>> out;
  out.emplace_back("shift", make(group_->zero(), 1));
  for (const auto& [n, g] : group_->generators()) out.emplace_back(n, make(g, 0));
  return out;
}

std::string AdsSemigroup::show(const Element& s) const {
  return "(" + group_->show(g_part(s)) + "," + std::to_string(n_part(s)) + ")";
}

}  // namespace rlcm
