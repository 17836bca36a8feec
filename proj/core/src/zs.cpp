#include "rlcm/zs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rlcm {

// --- ZsSemigroup ---------------------------------------------------------

ZsSemigroup::ZsSemigroup(std::string name, std::string family_id,
                         std::unique_ptr<UMonoid> u, std::unique_ptr<AMonoid> a,
                         std::unique_ptr<ZsPairing> pairing,
                         std::vector<GeneratorSpec> gens,
                         ActionCertificates certificates)
    : name_(std::move(name)),
      family_id_(std::move(family_id)),
      u_(std::move(u)),
      a_(std::move(a)),
      pairing_(std::move(pairing)),
      gens_(std::move(gens)),
      certs_(std::move(certificates)) {
  if (!a_->left_reversible_on_generators())
    throw ConstructionError(family_id_ +
                            ": core component is not left reversible");
}

Element ZsSemigroup::make(const Code& u, const Code& a) const {
  Code code;
  code.reserve(1 + u.size() + a.size());
  code.push_back(static_cast<long long>(u.size()));
  code.insert(code.end(), u.begin(), u.end());
  code.insert(code.end(), a.begin(), a.end());
  return Element{this, std::move(code)};
}

Code ZsSemigroup::u_part(const Element& s) const {
  require_mine(s);
  auto n = static_cast<size_t>(s.code.at(0));
  return Code(s.code.begin() + 1, s.code.begin() + 1 + n);
}

Code ZsSemigroup::a_part(const Element& s) const {
  require_mine(s);
  auto n = static_cast<size_t>(s.code.at(0));
  return Code(s.code.begin() + 1 + n, s.code.end());
}

Element ZsSemigroup::identity() const {
  return make(u_->identity(), a_->identity());
}

Element ZsSemigroup::multiply(const Element& s, const Element& t) const {
  require_mine(s);
  require_mine(t);
  Code u = u_part(s), a = a_part(s), v = u_part(t), b = a_part(t);
  Code av = pairing_->act(a, v);
  Code rest = pairing_->restrict(a, v);
  return make(u_->mul(u, av), a_->mul(rest, b));
}

Scale ZsSemigroup::scale(const Element& s) const {
  require_mine(s);
  return u_->scale(u_part(s));
}

bool ZsSemigroup::is_unit(const Element& s) const {
  require_mine(s);
  return u_->is_identity(u_part(s)) && a_->is_unit(a_part(s));
}

Factorization ZsSemigroup::factor(const Element& s) const {
  require_mine(s);
  return {make(u_part(s), a_->identity()), make(u_->identity(), a_part(s))};
}

DivideResult ZsSemigroup::left_divide(const Element& t, const Element& s,
                                      int) const {
  require_mine(t);
  require_mine(s);
  Code u1 = u_part(t), a1 = a_part(t), u2 = u_part(s), a2 = a_part(s);
  auto v0 = u_->left_divide(u1, u2);
  if (!v0) return DivideResult::none();
  Code v = pairing_->act_inverse(a1, *v0);
  Code r = pairing_->restrict(a1, v);
  auto b = a_->left_divide(r, a2);
  if (!b) return DivideResult::none();
  return DivideResult::found(make(v, *b));
}

LcmOutcome ZsSemigroup::right_lcm(const Element& s, const Element& t) const {
  require_mine(s);
  require_mine(t);
  Code u = u_part(s), a = a_part(s), v = u_part(t), b = a_part(t);
  auto ul = u_->right_lcm(u, v);
  if (ul.disjoint) return LcmOutcome::make_disjoint();
  // s·(x1,·) and t·(x2,·) both reach u-part ul.lcm; the a-part of the LCM is
  // the A-level right LCM of the two accumulated restrictions.
  Code x1 = pairing_->act_inverse(a, ul.left_comp);
  Code x2 = pairing_->act_inverse(b, ul.right_comp);
  Code r1 = pairing_->restrict(a, x1);
  Code r2 = pairing_->restrict(b, x2);
  auto al = a_->right_lcm(r1, r2);
  Code c_canon = a_->canonical_mod_units(al.lcm).first;
  Element lcm = make(ul.lcm, c_canon);
  auto lc = left_divide(s, lcm);
  auto rc = left_divide(t, lcm);
  if (lc.status != DivideStatus::Found || rc.status != DivideStatus::Found)
    throw InternalConsistencyError(family_id_ +
                                   ": LCM witness failed ideal membership");
  return LcmOutcome::make(lcm, *lc.quotient, *rc.quotient);
}

std::vector<Element> ZsSemigroup::transversal(Scale n) const {
  std::vector<Element> out;
  for (const Code& u : u_->level(n)) out.push_back(make(u, a_->identity()));
  return out;
}

std::vector<Element> ZsSemigroup::enumerate_core(int max_weight) const {
  std::vector<Element> out;
  for (const Code& a : a_->enumerate(max_weight))
    out.push_back(make(u_->identity(), a));
  return out;
}

std::vector<Scale> ZsSemigroup::irreducible_scales() const {
  return u_->irr();
}

std::vector<std::pair<std::string, Element>> ZsSemigroup::generators() const {
  std::vector<std::pair<std::string, Element>> out;
  for (const auto& g : gens_) out.emplace_back(g.name, make(g.u, g.a));
  return out;
}

std::string ZsSemigroup::show(const Element& s) const {
  Code u = u_part(s), a = a_part(s);
  bool uid = u_->is_identity(u);
  bool aid = a == a_->identity();
  if (uid && aid) return "1";
  if (uid) return a_->show(a);
  if (aid) return u_->show(u);
  return u_->show(u) + "*" + a_->show(a);
}

// --- FreeWordU -----------------------------------------------------------

FreeWordU::FreeWordU(int letters, std::vector<std::string> letter_names)
    : m_(letters), names_(std::move(letter_names)) {
  if (m_ < 1 || names_.size() != static_cast<size_t>(m_))
    throw ConstructionError("free monoid component: bad letter count");
}

Code FreeWordU::mul(const Code& u, const Code& v) const {
  Code r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

std::optional<Code> FreeWordU::left_divide(const Code& u, const Code& s) const {
  if (u.size() > s.size() || !std::equal(u.begin(), u.end(), s.begin()))
    return std::nullopt;
  return Code(s.begin() + u.size(), s.end());
}

UMonoid::Lcm FreeWordU::right_lcm(const Code& u, const Code& v) const {
  const Code& shorter = u.size() <= v.size() ? u : v;
  const Code& longer = u.size() <= v.size() ? v : u;
  if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) return {};
  Lcm out;
  out.disjoint = false;
  out.lcm = longer;
  Code tail(longer.begin() + shorter.size(), longer.end());
  if (u.size() <= v.size()) {
    out.left_comp = tail;
  } else {
    out.right_comp = tail;
  }
  return out;
}

Scale FreeWordU::scale(const Code& u) const {
  if (m_ == 1) return 1;
  Scale s = 1;
  for (size_t i = 0; i < u.size(); ++i) s *= static_cast<Scale>(m_);
  return s;
}

std::vector<Code> FreeWordU::level(Scale n) const {
  if (m_ == 1) return n == 1 ? std::vector<Code>{Code{}} : std::vector<Code>{};
  size_t len = 0;
  Scale v = 1;
  while (v < n) {
    v *= static_cast<Scale>(m_);
    ++len;
  }
  if (v != n) return {};
  std::vector<Code> out;
  Code w(len, 0);
  while (true) {
    out.push_back(w);
    size_t i = len;
    while (i > 0 && w[i - 1] == m_ - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  if (len == 0) out = {Code{}};
  return out;
}

std::vector<Scale> FreeWordU::irr() const {
  if (m_ == 1) return {};
  return {static_cast<Scale>(m_)};
}

std::string FreeWordU::show(const Code& u) const {
  if (u.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += "*";
    s += names_[static_cast<size_t>(u[i])];
  }
  return s;
}

// --- NpU -----------------------------------------------------------------

NpU::NpU(std::vector<long long> coprimes) : primes_(std::move(coprimes)) {
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (primes_[i] < 2)
      throw ConstructionError("N⋊P: list entries must be >= 2");
    for (size_t j = i + 1; j < primes_.size(); ++j)
      if (std::gcd(primes_[i], primes_[j]) != 1)
        throw ConstructionError("N⋊P: list entries must be pairwise coprime");
  }
  if (primes_.empty()) throw ConstructionError("N⋊P: empty list");
  std::sort(primes_.begin(), primes_.end());
}

Code NpU::mul(const Code& u, const Code& v) const {
  return {u[0] + v[0] * u[1], u[1] * v[1]};
}

std::optional<Code> NpU::left_divide(const Code& u, const Code& s) const {
  long long m = u[0], p = u[1], z = s[0], r = s[1];
  if (r % p != 0) return std::nullopt;
  long long y = r / p;
  if (z < m || (z - m) % p != 0) return std::nullopt;
  long long x = (z - m) / p;
  if (x >= y) return std::nullopt;
  return Code{x, y};
}

UMonoid::Lcm NpU::right_lcm(const Code& u, const Code& v) const {
  long long m = u[0], p = u[1], n = v[0], q = v[1];
  long long g = std::gcd(p, q);
  if (((m - n) % g + g) % g != 0) return {};
  long long l = p / g * q;
  // CRT: smallest x in [0,l) with x ≡ m (p), x ≡ n (q).
  long long x = m;
  while (x % q != ((n % q) + q) % q) x += p;
  Lcm out;
  out.disjoint = false;
  out.lcm = {x, l};
  out.left_comp = {(x - m) / p, l / p};
  out.right_comp = {(x - n) / q, l / q};
  return out;
}

Scale NpU::scale(const Code& u) const { return static_cast<Scale>(u[1]); }

std::vector<Code> NpU::level(Scale n) const {
  long long rem = static_cast<long long>(n);
  for (long long p : primes_)
    while (rem % p == 0) rem /= p;
  if (rem != 1) return {};
  std::vector<Code> out;
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    out.push_back({i, static_cast<long long>(n)});
  return out;
}

std::vector<Scale> NpU::irr() const {
  std::vector<Scale> out;
  for (long long p : primes_) out.push_back(static_cast<Scale>(p));
  return out;
}

std::string NpU::show(const Code& u) const {
  return "(" + std::to_string(u[0]) + "," + std::to_string(u[1]) + ")";
}

// --- AbelianCore ---------------------------------------------------------

AbelianCore::AbelianCore(int rank, std::vector<std::string> gen_names)
    : rank_(rank), names_(std::move(gen_names)) {
  if (rank_ < 0 || names_.size() != static_cast<size_t>(rank_))
    throw ConstructionError("abelian core: bad rank");
}

Code AbelianCore::identity() const { return Code(rank_, 0); }

Code AbelianCore::mul(const Code& a, const Code& b) const {
  Code r = a;
  for (int i = 0; i < rank_; ++i) r[i] += b[i];
  return r;
}

std::optional<Code> AbelianCore::left_divide(const Code& a,
                                             const Code& s) const {
  Code r(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (s[i] < a[i]) return std::nullopt;
    r[i] = s[i] - a[i];
  }
  return r;
}

bool AbelianCore::is_unit(const Code& a) const {
  return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

AMonoid::Lcm AbelianCore::right_lcm(const Code& a, const Code& b) const {
  Lcm out;
  out.lcm = Code(rank_, 0);
  out.left_comp = Code(rank_, 0);
  out.right_comp = Code(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    out.lcm[i] = std::max(a[i], b[i]);
    out.left_comp[i] = out.lcm[i] - a[i];
    out.right_comp[i] = out.lcm[i] - b[i];
  }
  return out;
}

std::vector<Code> AbelianCore::enumerate(int max_weight) const {
  std::vector<Code> out;
  Code cur(rank_, 0);
  // All vectors with total degree ≤ max_weight, by weight then lex.
  for (int w = 0; w <= max_weight; ++w) {
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == rank_) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[idx] = v;
        rec(idx + 1, left - v);
      }
      cur[idx] = 0;
    };
    if (rank_ == 0) {
      if (w == 0) out.push_back(cur);
    } else {
      rec(0, w);
    }
  }
  return out;
}

std::string AbelianCore::show(const Code& a) const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::pair<std::string, Code>> AbelianCore::generators() const {
  std::vector<std::pair<std::string, Code>> out;
  for (int i = 0; i < rank_; ++i) {
    Code c(rank_, 0);
    c[i] = 1;
    out.emplace_back(names_[i], c);
  }
  return out;
}

// --- BsPairing -----------------------------------------------------------

std::pair<Code, Code> BsPairing::act_full(long long k, const Code& u) const {
  Code out;
  out.reserve(u.size());
  long long carry = k;
  for (long long j : u) {
    long long t = j + carry;
    out.push_back(t % d_);
    carry = (t / d_) * c_;
  }
  return {out, Code{carry}};
}

Code BsPairing::act(const Code& a, const Code& u) const {
  return act_full(a[0], u).first;
}

Code BsPairing::restrict(const Code& a, const Code& u) const {
  return act_full(a[0], u).second;
}

Code BsPairing::act_inverse(const Code& a, const Code& u) const {
  Code in;
  in.reserve(u.size());
  long long carry = a[0];
  for (long long r : u) {
    long long j = ((r - carry) % d_ + d_) % d_;
    in.push_back(j);
    carry = ((j + carry) / d_) * c_;
  }
  return in;
}

// --- NpPairing -----------------------------------------------------------

Code NpPairing::act(const Code& a, const Code& u) const {
  long long k = a[0], n = u[0], p = u[1];
  return {(n + k) % p, p};
}

Code NpPairing::restrict(const Code& a, const Code& u) const {
  long long k = a[0], n = u[0], p = u[1];
  return {(n + k) / p};
}

Code NpPairing::act_inverse(const Code& a, const Code& u) const {
  long long k = a[0], n = u[0], p = u[1];
  return {((n - k) % p + p) % p, p};
}

// --- TablePairing --------------------------------------------------------

TablePairing::TablePairing(int letters, int a_rank,
                           std::vector<std::vector<int>> action,
                           std::vector<std::vector<Code>> restriction)
    : letters_(letters),
      rank_(a_rank),
      action_(std::move(action)),
      restriction_(std::move(restriction)) {
  if (action_.size() != static_cast<size_t>(rank_) ||
      restriction_.size() != static_cast<size_t>(rank_))
    throw ConstructionError("zappa-szep tables: one row per core generator required");
  for (int g = 0; g < rank_; ++g) {
    if (action_[g].size() != static_cast<size_t>(letters_) ||
        restriction_[g].size() != static_cast<size_t>(letters_))
      throw ConstructionError("zappa-szep tables: incomplete row for generator " +
                              std::to_string(g));
    std::vector<bool> seen(letters_, false);
    for (int x = 0; x < letters_; ++x) {
      int y = action_[g][x];
      if (y < 0 || y >= letters_ || seen[y])
        throw ConstructionError(
            "zappa-szep tables: generator " + std::to_string(g) +
            " does not act by a letter permutation");
      seen[y] = true;
      if (restriction_[g][x].size() != static_cast<size_t>(rank_))
        throw ConstructionError("zappa-szep tables: bad restriction vector");
      for (long long e : restriction_[g][x])
        if (e < 0)
          throw ConstructionError("zappa-szep tables: negative restriction");
    }
  }
}

std::pair<int, Code> TablePairing::step(const Code& a, int x) const {
  // a = g_0^{e0}···g_{r-1}^{e_{r-1}}; the rightmost factor acts first and the
  // restriction accumulates additively (A is free abelian).
  int cur = x;
  Code acc(rank_, 0);
  for (int g = rank_ - 1; g >= 0; --g) {
    for (long long i = 0; i < a[g]; ++i) {
      const Code& r = restriction_[g][cur];
      for (int j = 0; j < rank_; ++j) acc[j] += r[j];
      cur = action_[g][cur];
    }
  }
  return {cur, acc};
}

Code TablePairing::act(const Code& a, const Code& u) const {
  Code out;
  out.reserve(u.size());
  Code cur = a;
  for (long long x : u) {
    auto [y, r] = step(cur, static_cast<int>(x));
    out.push_back(y);
    cur = r;
  }
  return out;
}

Code TablePairing::restrict(const Code& a, const Code& u) const {
  Code cur = a;
  for (long long x : u) cur = step(cur, static_cast<int>(x)).second;
  return cur;
}

Code TablePairing::act_inverse(const Code& a, const Code& u) const {
  Code in;
  in.reserve(u.size());
  Code cur = a;
  for (long long y : u) {
    int found = -1;
    Code next;
    for (int x = 0; x < letters_; ++x) {
      auto [img, r] = step(cur, x);
      if (img == y) {
        found = x;
        next = r;
        break;
      }
    }
    if (found < 0)
      throw InternalConsistencyError("table pairing: action not surjective");
    in.push_back(found);
    cur = next;
  }
  return in;
}

}  // namespace rlcm
