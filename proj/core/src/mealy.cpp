#include "rlcm/mealy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace rlcm {

void MealySpec::validate() const {
  if (alphabet < 2)
    throw ConstructionError("mealy automaton: alphabet must have >= 2 letters");
  if (trans.empty() || trans.size() != state_names.size())
    throw ConstructionError("mealy automaton: state/transition mismatch");
  for (size_t s = 0; s < trans.size(); ++s) {
    if (trans[s].size() != static_cast<size_t>(alphabet))
      throw ConstructionError("mealy automaton: incomplete transitions for state " +
                              state_names[s]);
    std::vector<bool> seen(alphabet, false);
    for (auto [out, next] : trans[s]) {
      if (out < 0 || out >= alphabet || seen[out])
        throw ConstructionError("mealy automaton: state " + state_names[s] +
                                " is not invertible (outputs not a permutation)");
      seen[out] = true;
      if (next < 0 || next >= static_cast<int>(trans.size()))
        throw ConstructionError("mealy automaton: bad next state");
    }
  }
}

MealySpec MealySpec::adding_machine() {
  // The +1 odometer on binary words, least significant digit first:
  // q(0w) = 1w, q(1w) = 0·q(w); e is the explicit identity state.
  MealySpec m;
  m.alphabet = 2;
  m.state_names = {"q", "e"};
  m.trans = {
      {{1, 1}, {0, 0}},  // q
      {{0, 1}, {1, 1}},  // e
  };
  return m;
}

namespace mealy {

namespace {

std::vector<RawState> decode(const Code& a, int alphabet) {
  int k = static_cast<int>(a.at(0));
  std::vector<RawState> st(k);
  size_t idx = 1;
  for (int s = 0; s < k; ++s) {
    st[s].out.resize(alphabet);
    st[s].next.resize(alphabet);
    for (int x = 0; x < alphabet; ++x) {
      st[s].out[x] = static_cast<int>(a.at(idx++));
      st[s].next[x] = static_cast<int>(a.at(idx++));
    }
  }
  return st;
}

Code encode(const std::vector<RawState>& st, int alphabet) {
  Code c;
  c.push_back(static_cast<long long>(st.size()));
  for (const auto& s : st)
    for (int x = 0; x < alphabet; ++x) {
      c.push_back(s.out[x]);
      c.push_back(s.next[x]);
    }
  return c;
}

}  // namespace

Code canonicalize(const std::vector<RawState>& states, int initial,
                  int alphabet) {
  // 1. Reachable part.
  std::vector<int> order{initial};
  std::map<int, int> idx{{initial, 0}};
  for (size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < alphabet; ++x) {
      int nx = states[order[i]].next[x];
      if (!idx.count(nx)) {
        idx[nx] = static_cast<int>(order.size());
        order.push_back(nx);
      }
    }
  int n = static_cast<int>(order.size());
  // 2. Moore partition refinement, seeded by the output permutation.
  std::vector<int> cls(n);
  {
    std::map<std::vector<int>, int> by_out;
    for (int i = 0; i < n; ++i) {
      auto [it, _] = by_out.try_emplace(states[order[i]].out,
                                        static_cast<int>(by_out.size()));
      cls[i] = it->second;
    }
  }
  while (true) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next_cls(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig{cls[i]};
      for (int x = 0; x < alphabet; ++x)
        sig.push_back(cls[idx[states[order[i]].next[x]]]);
      auto [it, _] = sig_id.try_emplace(sig, static_cast<int>(sig_id.size()));
      next_cls[i] = it->second;
    }
    bool same = next_cls == cls;
    cls = next_cls;
    if (same) break;
  }
  // 3. Quotient, renumbered by BFS from the initial class in letter order.
  std::vector<int> rep_of_cls(n, -1);
  for (int i = 0; i < n; ++i)
    if (rep_of_cls[cls[i]] < 0) rep_of_cls[cls[i]] = i;
  std::vector<int> bfs{cls[0]};
  std::map<int, int> newid{{cls[0], 0}};
  for (size_t i = 0; i < bfs.size(); ++i) {
    int rep = rep_of_cls[bfs[i]];
    for (int x = 0; x < alphabet; ++x) {
      int c = cls[idx[states[order[rep]].next[x]]];
      if (!newid.count(c)) {
        newid[c] = static_cast<int>(bfs.size());
        bfs.push_back(c);
      }
    }
  }
  std::vector<RawState> out(bfs.size());
  for (size_t i = 0; i < bfs.size(); ++i) {
    int rep = rep_of_cls[bfs[i]];
    out[i].out = states[order[rep]].out;
    out[i].next.resize(alphabet);
    for (int x = 0; x < alphabet; ++x)
      out[i].next[x] = newid[cls[idx[states[order[rep]].next[x]]]];
  }
  return encode(out, alphabet);
}

Code identity_code(int alphabet) {
  RawState s;
  for (int x = 0; x < alphabet; ++x) {
    s.out.push_back(x);
    s.next.push_back(0);
  }
  return encode({s}, alphabet);
}

Code state_code(const MealySpec& spec, int state) {
  std::vector<RawState> st(spec.trans.size());
  for (size_t i = 0; i < spec.trans.size(); ++i) {
    st[i].out.resize(spec.alphabet);
    st[i].next.resize(spec.alphabet);
    for (int x = 0; x < spec.alphabet; ++x) {
      st[i].out[x] = spec.trans[i][x].first;
      st[i].next[x] = spec.trans[i][x].second;
    }
  }
  return canonicalize(st, state, spec.alphabet);
}

Code compose(const Code& a, const Code& b, int alphabet, size_t cap) {
  auto sa = decode(a, alphabet);
  auto sb = decode(b, alphabet);
  // Pair states (p,q) realize g_p ∘ g_q; q reads the input letter first.
  std::map<std::pair<int, int>, int> idx;
  std::vector<std::pair<int, int>> order;
  auto intern = [&](int p, int q) {
    auto [it, fresh] = idx.try_emplace({p, q}, static_cast<int>(order.size()));
    if (fresh) {
      order.emplace_back(p, q);
      if (order.size() > cap)
        throw CapExceeded("section closure cap exceeded during composition",
                          std::to_string(order.size()) + " pair states");
    }
    return it->second;
  };
  intern(0, 0);
  std::vector<RawState> st;
  for (size_t i = 0; i < order.size(); ++i) {
    auto [p, q] = order[i];
    RawState s;
    s.out.resize(alphabet);
    s.next.resize(alphabet);
    for (int x = 0; x < alphabet; ++x) {
      int y = sb[q].out[x];
      s.out[x] = sa[p].out[y];
      s.next[x] = intern(sa[p].next[y], sb[q].next[x]);
    }
    st.push_back(s);
  }
  return canonicalize(st, 0, alphabet);
}

Code inverse(const Code& a, int alphabet) {
  auto sa = decode(a, alphabet);
  std::vector<RawState> st(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) {
    st[i].out.resize(alphabet);
    st[i].next.resize(alphabet);
    for (int x = 0; x < alphabet; ++x) {
      int y = sa[i].out[x];
      st[i].out[y] = x;
      st[i].next[y] = sa[i].next[x];
    }
  }
  return canonicalize(st, 0, alphabet);
}

int state_count(const Code& a) { return static_cast<int>(a.at(0)); }

std::pair<Code, Code> run(const Code& a, const Code& word, int alphabet) {
  auto st = decode(a, alphabet);
  int cur = 0;
  Code out;
  out.reserve(word.size());
  for (long long x : word) {
    out.push_back(st[cur].out[static_cast<size_t>(x)]);
    cur = st[cur].next[static_cast<size_t>(x)];
  }
  // Section = same automaton re-rooted at the final state, re-canonicalized.
  std::vector<mealy::RawState> raw = st;
  return {out, canonicalize(raw, cur, alphabet)};
}

Code run_inverse(const Code& a, const Code& word, int alphabet) {
  auto st = decode(a, alphabet);
  int cur = 0;
  Code in;
  in.reserve(word.size());
  for (long long y : word) {
    int x = -1;
    for (int cand = 0; cand < alphabet; ++cand)
      if (st[cur].out[cand] == static_cast<int>(y)) {
        x = cand;
        break;
      }
    if (x < 0)
      throw InternalConsistencyError("automaton state output not surjective");
    in.push_back(x);
    cur = st[cur].next[x];
  }
  return in;
}

}  // namespace mealy

// --- AutomatonCore -------------------------------------------------------

AutomatonCore::AutomatonCore(MealySpec spec, size_t section_cap)
    : spec_(std::move(spec)), cap_(section_cap) {
  spec_.validate();
}

Code AutomatonCore::identity() const {
  return mealy::identity_code(spec_.alphabet);
}

Code AutomatonCore::mul(const Code& a, const Code& b) const {
  return mealy::compose(a, b, spec_.alphabet, cap_);
}

std::optional<Code> AutomatonCore::left_divide(const Code& a,
                                               const Code& s) const {
  // Group: x = a^{-1} s, always.
  return mul(mealy::inverse(a, spec_.alphabet), s);
}

AMonoid::Lcm AutomatonCore::right_lcm(const Code& a, const Code& b) const {
  // aA = bA = A for a group; canonical LCM is the identity.
  Lcm out;
  out.lcm = identity();
  out.left_comp = mealy::inverse(a, spec_.alphabet);
  out.right_comp = mealy::inverse(b, spec_.alphabet);
  return out;
}

std::pair<Code, Code> AutomatonCore::canonical_mod_units(const Code& a) const {
  return {identity(), mealy::inverse(a, spec_.alphabet)};
}

std::vector<Code> AutomatonCore::enumerate(int max_weight) const {
  std::vector<Code> gens;
  for (size_t s = 0; s < spec_.trans.size(); ++s) {
    Code g = mealy::state_code(spec_, static_cast<int>(s));
    gens.push_back(g);
    gens.push_back(mealy::inverse(g, spec_.alphabet));
  }
  std::set<Code> seen{identity()};
  std::vector<Code> frontier{identity()};
  std::vector<Code> out{identity()};
  for (int w = 1; w <= max_weight; ++w) {
    std::set<Code> next_level;
    for (const Code& e : frontier)
      for (const Code& g : gens) {
        Code p = mul(e, g);
        if (!seen.count(p)) next_level.insert(p);
      }
    frontier.assign(next_level.begin(), next_level.end());
    for (const Code& p : frontier) {
      seen.insert(p);
      out.push_back(p);
    }
  }
  return out;
}

std::string AutomatonCore::show(const Code& a) const {
  if (a == identity()) return "1";
  for (size_t s = 0; s < spec_.trans.size(); ++s) {
    Code g = mealy::state_code(spec_, static_cast<int>(s));
    if (a == g) return spec_.state_names[s];
    if (a == mealy::inverse(g, spec_.alphabet))
      return spec_.state_names[s] + "^-1";
  }
  return "<aut:" + std::to_string(mealy::state_count(a)) + ">";
}

std::vector<std::pair<std::string, Code>> AutomatonCore::generators() const {
  std::vector<std::pair<std::string, Code>> out;
  for (size_t s = 0; s < spec_.trans.size(); ++s)
    out.emplace_back(spec_.state_names[s],
                     mealy::state_code(spec_, static_cast<int>(s)));
  return out;
}

// --- AutomatonPairing ----------------------------------------------------

Code AutomatonPairing::act(const Code& a, const Code& u) const {
  return mealy::run(a, u, alphabet_).first;
}

Code AutomatonPairing::act_inverse(const Code& a, const Code& u) const {
  return mealy::run_inverse(a, u, alphabet_);
}

Code AutomatonPairing::restrict(const Code& a, const Code& u) const {
  return mealy::run(a, u, alphabet_).second;
}

}  // namespace rlcm
