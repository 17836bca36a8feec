#include "rlcm/families.hpp"

#include <algorithm>
#include <sstream>

namespace rlcm {

namespace {

using nlohmann::json;

std::vector<std::string> default_letter_names(int m) {
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::shared_ptr<Semigroup> build_free_monoid(const FamilySpec& spec) {
  if (spec.m < 2)
    throw ConstructionError("free-monoid: alphabet size must be >= 2");
  auto names = default_letter_names(spec.m);
  std::vector<ZsSemigroup::GeneratorSpec> gens;
  for (int i = 0; i < spec.m; ++i) gens.push_back({names[i], Code{i}, Code{}});
  ActionCertificates certs{true, true, true, "trivial core"};
  return std::make_shared<ZsSemigroup>(
      "F_" + std::to_string(spec.m) + "+", "free-monoid",
      std::make_unique<FreeWordU>(spec.m, names),
      std::make_unique<AbelianCore>(0, std::vector<std::string>{}),
      std::make_unique<TrivialPairing>(Code{}), std::move(gens), certs);
}

std::shared_ptr<Semigroup> build_easy_artin(const FamilySpec& spec) {
  if (spec.m < 2)
    throw ConstructionError("easy-artin: alphabet size must be >= 2");
  if (spec.n < 0) throw ConstructionError("easy-artin: rank must be >= 0");
  auto names = default_letter_names(spec.m);
  std::vector<std::string> core_names;
  for (int i = 0; i < spec.n; ++i) core_names.push_back("e" + std::to_string(i + 1));
  std::vector<ZsSemigroup::GeneratorSpec> gens;
  for (int i = 0; i < spec.m; ++i)
    gens.push_back({names[i], Code{i}, Code(spec.n, 0)});
  for (int i = 0; i < spec.n; ++i) {
    Code a(spec.n, 0);
    a[i] = 1;
    gens.push_back({core_names[i], Code{}, a});
  }
  bool trivial = spec.n == 0;
  ActionCertificates certs{trivial, trivial, true,
                           "direct product: the abelian factor acts trivially"};
  return std::make_shared<ZsSemigroup>(
      "F_" + std::to_string(spec.m) + "+ x N^" + std::to_string(spec.n),
      "easy-artin", std::make_unique<FreeWordU>(spec.m, names),
      std::make_unique<AbelianCore>(spec.n, core_names),
      std::make_unique<TrivialPairing>(Code(spec.n, 0)), std::move(gens),
      certs);
}

std::shared_ptr<Semigroup> build_bs(const FamilySpec& spec) {
  long long c = spec.c, d = spec.d;
  if (c < 1 || d < 1 || c * d <= 1)
    throw ConstructionError("baumslag-solitar: need c >= 1, d >= 1, cd > 1");
  std::vector<std::string> names;
  for (long long j = 0; j < d; ++j)
    names.push_back(j == 0 ? "a"
                           : (j == 1 ? "ba" : "b" + std::to_string(j) + "a"));
  std::vector<ZsSemigroup::GeneratorSpec> gens;
  gens.push_back({"a", Code{0}, Code{0}});
  gens.push_back({"b", Code{}, Code{1}});
  ActionCertificates certs;
  certs.faithful = (c % d != 0);
  certs.almost_free = (c % d != 0);
  certs.finite_propagation = (c <= d);
  certs.note = "closed forms: faithful/almost free iff c not in dN; finite "
               "propagation iff c <= d";
  return std::make_shared<ZsSemigroup>(
      "BS(" + std::to_string(c) + "," + std::to_string(d) + ")+",
      "baumslag-solitar",
      std::make_unique<FreeWordU>(static_cast<int>(d), names),
      std::make_unique<AbelianCore>(1, std::vector<std::string>{"b"}),
      std::make_unique<BsPairing>(c, d), std::move(gens), certs);
}

std::shared_ptr<Semigroup> build_np(const FamilySpec& spec) {
  auto u = std::make_unique<NpU>(spec.primes);
  std::vector<ZsSemigroup::GeneratorSpec> gens;
  gens.push_back({"(1,1)", Code{0, 1}, Code{1}});
  for (long long p : spec.primes) {
    gens.push_back({"(0," + std::to_string(p) + ")", Code{0, p}, Code{0}});
    gens.push_back({"(1," + std::to_string(p) + ")", Code{1, p}, Code{0}});
  }
  std::string pl;
  for (long long p : spec.primes) pl += (pl.empty() ? "" : ",") + std::to_string(p);
  ActionCertificates certs{true, true, true,
                           "always admissible with faithful, almost free, "
                           "finite-propagation core action"};
  return std::make_shared<ZsSemigroup>(
      "N x| <" + pl + ">", "n-semidirect-p", std::move(u),
      std::make_unique<AbelianCore>(1, std::vector<std::string>{"(1,1)"}),
      std::make_unique<NpPairing>(), std::move(gens), certs);
}

bool is_adding_machine(const MealySpec& m) {
  MealySpec am = MealySpec::adding_machine();
  return m.alphabet == am.alphabet && m.trans == am.trans;
}

std::shared_ptr<Semigroup> build_selfsimilar(const FamilySpec& spec) {
  MealySpec m = spec.automaton;
  if (!spec.automaton_name.empty()) m = automaton_by_name(spec.automaton_name);
  m.validate();
  std::vector<std::string> letter_names;
  for (int i = 0; i < m.alphabet; ++i) letter_names.push_back(std::to_string(i));
  auto core = std::make_unique<AutomatonCore>(m, spec.section_cap);
  std::vector<ZsSemigroup::GeneratorSpec> gens;
  for (int i = 0; i < m.alphabet; ++i)
    gens.push_back({letter_names[i], Code{i}, core->identity()});
  for (size_t s = 0; s < m.trans.size(); ++s)
    gens.push_back({m.state_names[s], Code{},
                    mealy::state_code(m, static_cast<int>(s))});
  ActionCertificates certs;
  certs.finite_propagation = true;
  certs.note = "finite-state automaton: sections of every element stay in a "
               "finite closure, so propagation is finite";
  if (is_adding_machine(m)) {
    certs.faithful = true;
    certs.almost_free = true;
    certs.note += "; binary odometer: Z acts faithfully and almost freely";
  }
  std::string nm = spec.automaton_name.empty()
                       ? "X* |x G (|X|=" + std::to_string(m.alphabet) + ")"
                       : spec.automaton_name;
  return std::make_shared<ZsSemigroup>(
      nm, "self-similar",
      std::make_unique<FreeWordU>(m.alphabet, letter_names), std::move(core),
      std::make_unique<AutomatonPairing>(m.alphabet), std::move(gens), certs);
}

// Sufficient expansiveness certificate: (A^k)^T A^k - I positive definite for
// some k <= 8 forces ⋂ A^n Z^d = {0}.
bool expanding_power(const IntMat& a) {
  size_t dim = a.size();
  if (dim == 1) return std::llabs(a[0][0]) > 1;
  for (int k = 1; k <= 8; ++k) {
    IntMat p = mat_pow(a, k);
    IntMat b(dim, std::vector<long long>(dim, 0));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) {
        for (size_t l = 0; l < dim; ++l) b[i][j] += p[l][i] * p[l][j];
        if (i == j) b[i][j] -= 1;
      }
    bool pd = true;
    for (size_t lead = 1; lead <= dim && pd; ++lead) {
      IntMat minor(lead, std::vector<long long>(lead));
      for (size_t i = 0; i < lead; ++i)
        for (size_t j = 0; j < lead; ++j) minor[i][j] = b[i][j];
      if (mat_det(minor) <= 0) pd = false;
    }
    if (pd) return true;
  }
  return false;
}

std::shared_ptr<Semigroup> build_dilation(const FamilySpec& spec) {
  auto g = std::make_unique<DilationGroup>(spec.matrix);
  ActionCertificates certs;
  certs.finite_propagation = true;
  certs.note = "A^{-n} contracts the digit offsets, so the core cocycle sets "
               "are finite";
  if (expanding_power(spec.matrix)) {
    certs.faithful = true;
    certs.almost_free = true;
    certs.note += "; some power of A is expansive, so ⋂ A^n Z^d = {0}";
  }
  std::string nm = "Z^" + std::to_string(g->dim()) + " x|_A N";
  return std::make_shared<AdsSemigroup>(nm, "dilation-matrix", std::move(g),
                                        certs);
}

std::shared_ptr<Semigroup> build_ffs(const FamilySpec& spec) {
  auto g = std::make_unique<PolyShiftGroup>(spec.q, spec.f_degree);
  ActionCertificates certs{true, true, true,
                           "polynomial shift: core action faithful and almost "
                           "free, finite propagation"};
  std::string nm = "F_" + std::to_string(spec.q) + "[t] x|_t^" +
                   std::to_string(spec.f_degree) + " N";
  return std::make_shared<AdsSemigroup>(nm, "finite-field-shift", std::move(g),
                                        certs);
}

std::shared_ptr<Semigroup> build_zappa_szep(const FamilySpec& spec) {
  if (spec.zs_letters < 2)
    throw ConstructionError("zappa-szep: U must be a free monoid on >= 2 letters");
  if (spec.zs_rank < 1)
    throw ConstructionError("zappa-szep: core rank must be >= 1");
  auto pairing = std::make_unique<TablePairing>(
      spec.zs_letters, spec.zs_rank, spec.zs_action_table,
      spec.zs_restriction_table);
  // Consistency of the abelian core: the letter-level actions of any two
  // generators must commute, including their restrictions.
  for (int g1 = 0; g1 < spec.zs_rank; ++g1)
    for (int g2 = 0; g2 < spec.zs_rank; ++g2)
      for (int x = 0; x < spec.zs_letters; ++x) {
        auto act = [&](int g, int letter) { return spec.zs_action_table[g][letter]; };
        auto res = [&](int g, int letter) { return spec.zs_restriction_table[g][letter]; };
        int y12 = act(g1, act(g2, x));
        int y21 = act(g2, act(g1, x));
        Code r12(spec.zs_rank, 0), r21(spec.zs_rank, 0);
        for (int i = 0; i < spec.zs_rank; ++i) {
          r12[i] = res(g2, x)[i] + res(g1, act(g2, x))[i];
          r21[i] = res(g1, x)[i] + res(g2, act(g1, x))[i];
        }
        if (y12 != y21 || r12 != r21)
          throw ConstructionError(
              "zappa-szep: generator actions do not commute on letter " +
              std::to_string(x) + " (core is abelian)");
      }
  auto names = default_letter_names(spec.zs_letters);
  std::vector<std::string> core_names;
  for (int i = 0; i < spec.zs_rank; ++i)
    core_names.push_back("g" + std::to_string(i + 1));
  std::vector<ZsSemigroup::GeneratorSpec> gens;
  for (int i = 0; i < spec.zs_letters; ++i)
    gens.push_back({names[i], Code{i}, Code(spec.zs_rank, 0)});
  for (int i = 0; i < spec.zs_rank; ++i) {
    Code a(spec.zs_rank, 0);
    a[i] = 1;
    gens.push_back({core_names[i], Code{}, a});
  }
  return std::make_shared<ZsSemigroup>(
      "F_" + std::to_string(spec.zs_letters) + "+ |x N^" +
          std::to_string(spec.zs_rank),
      "zappa-szep",
      std::make_unique<FreeWordU>(spec.zs_letters, names),
      std::make_unique<AbelianCore>(spec.zs_rank, core_names),
      std::move(pairing), std::move(gens), ActionCertificates{});
}

}  // namespace

std::shared_ptr<Semigroup> build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::FreeMonoid: return build_free_monoid(spec);
    case FamilySpec::Kind::EasyArtin: return build_easy_artin(spec);
    case FamilySpec::Kind::BaumslagSolitar: return build_bs(spec);
    case FamilySpec::Kind::NSemidirectP: return build_np(spec);
    case FamilySpec::Kind::SelfSimilar: return build_selfsimilar(spec);
    case FamilySpec::Kind::DilationMatrix: return build_dilation(spec);
    case FamilySpec::Kind::FiniteFieldShift: return build_ffs(spec);
    case FamilySpec::Kind::ZappaSzep: return build_zappa_szep(spec);
  }
  throw ConstructionError("unknown family kind");
}

MealySpec automaton_by_name(const std::string& name) {
  if (name == "adding-machine") return MealySpec::adding_machine();
  throw ConstructionError("unknown builtin automaton '" + name + "'");
}

// --- JSON ----------------------------------------------------------------

namespace {

const std::vector<std::pair<FamilySpec::Kind, std::string>> kKindNames = {
    {FamilySpec::Kind::FreeMonoid, "free-monoid"},
    {FamilySpec::Kind::EasyArtin, "easy-artin"},
    {FamilySpec::Kind::BaumslagSolitar, "baumslag-solitar"},
    {FamilySpec::Kind::NSemidirectP, "n-semidirect-p"},
    {FamilySpec::Kind::SelfSimilar, "self-similar"},
    {FamilySpec::Kind::DilationMatrix, "dilation-matrix"},
    {FamilySpec::Kind::FiniteFieldShift, "finite-field-shift"},
    {FamilySpec::Kind::ZappaSzep, "zappa-szep"},
};

std::string kind_name(FamilySpec::Kind k) {
  for (const auto& [kind, nm] : kKindNames)
    if (kind == k) return nm;
  return "?";
}

FamilySpec::Kind kind_from_name(const std::string& nm) {
  for (const auto& [kind, name] : kKindNames)
    if (name == nm) return kind;
  throw UsageError("unknown family type '" + nm + "'");
}

}  // namespace

FamilySpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw UsageError("family spec: expected object with a \"type\" field");
  FamilySpec s;
  s.kind = kind_from_name(j.at("type").get<std::string>());
  switch (s.kind) {
    case FamilySpec::Kind::FreeMonoid:
      s.m = j.at("m").get<int>();
      break;
    case FamilySpec::Kind::EasyArtin:
      s.m = j.at("m").get<int>();
      s.n = j.at("n").get<int>();
      break;
    case FamilySpec::Kind::BaumslagSolitar:
      s.c = j.at("c").get<long long>();
      s.d = j.at("d").get<long long>();
      break;
    case FamilySpec::Kind::NSemidirectP:
      s.primes = j.at("primes").get<std::vector<long long>>();
      break;
    case FamilySpec::Kind::SelfSimilar:
      if (j.contains("automaton-name") ||
          (j.contains("automaton") && j.at("automaton").is_string())) {
        s.automaton_name = j.contains("automaton-name")
                               ? j.at("automaton-name").get<std::string>()
                               : j.at("automaton").get<std::string>();
        s.automaton = automaton_by_name(s.automaton_name);
      } else {
        const auto& a = j.at("automaton");
        s.automaton.alphabet = a.at("alphabet").get<int>();
        s.automaton.state_names =
            a.at("states").get<std::vector<std::string>>();
        for (const auto& row : a.at("transitions")) {
          std::vector<std::pair<int, int>> r;
          for (const auto& cell : row)
            r.emplace_back(cell.at(0).get<int>(), cell.at(1).get<int>());
          s.automaton.trans.push_back(std::move(r));
        }
      }
      if (j.contains("section-cap"))
        s.section_cap = j.at("section-cap").get<size_t>();
      break;
    case FamilySpec::Kind::DilationMatrix:
      s.matrix = j.at("matrix").get<IntMat>();
      break;
    case FamilySpec::Kind::FiniteFieldShift:
      s.q = j.at("q").get<long long>();
      s.f_degree = j.at("f-degree").get<long long>();
      break;
    case FamilySpec::Kind::ZappaSzep: {
      const auto& u = j.at("u");
      if (u.at("type").get<std::string>() != "free-monoid")
        throw UsageError("zappa-szep: U must be a free-monoid spec");
      s.zs_letters = u.at("m").get<int>();
      s.zs_rank = j.at("a-rank").get<int>();
      s.zs_action_table = j.at("action").get<std::vector<std::vector<int>>>();
      for (const auto& row : j.at("restriction")) {
        std::vector<Code> r;
        for (const auto& cell : row) r.push_back(cell.get<Code>());
        s.zs_restriction_table.push_back(std::move(r));
      }
      break;
    }
  }
  return s;
}

json spec_to_json(const FamilySpec& s) {
  json j;
  j["type"] = kind_name(s.kind);
  switch (s.kind) {
    case FamilySpec::Kind::FreeMonoid:
      j["m"] = s.m;
      break;
    case FamilySpec::Kind::EasyArtin:
      j["m"] = s.m;
      j["n"] = s.n;
      break;
    case FamilySpec::Kind::BaumslagSolitar:
      j["c"] = s.c;
      j["d"] = s.d;
      break;
    case FamilySpec::Kind::NSemidirectP:
      j["primes"] = s.primes;
      break;
    case FamilySpec::Kind::SelfSimilar:
      if (!s.automaton_name.empty()) {
        j["automaton-name"] = s.automaton_name;
      } else {
        json a;
        a["alphabet"] = s.automaton.alphabet;
        a["states"] = s.automaton.state_names;
        json rows = json::array();
        for (const auto& row : s.automaton.trans) {
          json r = json::array();
          for (auto [out, next] : row) r.push_back({out, next});
          rows.push_back(r);
        }
        a["transitions"] = rows;
        j["automaton"] = a;
      }
      if (s.section_cap != 4096) j["section-cap"] = s.section_cap;
      break;
    case FamilySpec::Kind::DilationMatrix:
      j["matrix"] = s.matrix;
      break;
    case FamilySpec::Kind::FiniteFieldShift:
      j["q"] = s.q;
      j["f-degree"] = s.f_degree;
      break;
    case FamilySpec::Kind::ZappaSzep:
      j["u"] = {{"type", "free-monoid"}, {"m", s.zs_letters}};
      j["a-rank"] = s.zs_rank;
      j["action"] = s.zs_action_table;
      j["restriction"] = s.zs_restriction_table;
      break;
  }
  return j;
}

// --- module entry points -------------------------------------------------

namespace {
const ZsSemigroup& as_zs(const Semigroup& s) {
  const auto* z = dynamic_cast<const ZsSemigroup*>(&s);
  if (!z)
    throw UsageError("operation requires a Zappa-Szep-backed family; '" +
                     s.family_id() + "' is not one");
  return *z;
}
}  // namespace

Element zs_action(const Semigroup& s, const Element& core,
                  const Element& transversal) {
  const auto& z = as_zs(s);
  if (!z.is_core(core)) throw UsageError("zs_action: first argument must be core");
  return z.make(z.pairing().act(z.a_part(core), z.u_part(transversal)),
                z.a_monoid().identity());
}

Element zs_restriction(const Semigroup& s, const Element& core,
                       const Element& transversal) {
  const auto& z = as_zs(s);
  if (!z.is_core(core))
    throw UsageError("zs_restriction: first argument must be core");
  return z.make(z.u_monoid().identity(),
                z.pairing().restrict(z.a_part(core), z.u_part(transversal)));
}

ZsCoreData zs_core_data(const Semigroup& s) {
  const auto& z = as_zs(s);
  ZsCoreData d;
  bool group_core = dynamic_cast<const AutomatonCore*>(&z.a_monoid()) != nullptr;
  d.core_description =
      "S_c = {1} |x A: pairs (1,a) with trivial U-part; A = " +
      std::string(group_core ? "automaton group" : "free abelian monoid");
  d.core_irreducible_description =
      group_core
          ? "S_ci = (U \\ {1}) |x A: nonempty words with arbitrary unit part"
          : "S_ci = (U \\ {1}) |x {1}: nonempty words with trivial core part";
  return d;
}

LcmOutcome ads_ideal_test(const Semigroup& s, const Code& g, long long n,
                          const Code& h, long long n2) {
  const auto* a = dynamic_cast<const AdsSemigroup*>(&s);
  if (!a)
    throw UsageError("ads_ideal_test requires a dilation-matrix or "
                     "finite-field-shift family");
  return a->right_lcm(a->make(g, n), a->make(h, n2));
}

namespace {
Code group_word_code(const ZsSemigroup& z, const std::vector<int>& word) {
  const auto* core = dynamic_cast<const AutomatonCore*>(&z.a_monoid());
  if (!core) throw UsageError("self-similar operation on non-automaton family");
  Code acc = core->identity();
  for (int idx : word) {
    if (idx == 0) throw UsageError("group word indices are 1-based, nonzero");
    int st = std::abs(idx) - 1;
    if (st >= static_cast<int>(core->spec().trans.size()))
      throw UsageError("group word references unknown state");
    Code g = mealy::state_code(core->spec(), st);
    if (idx < 0) g = mealy::inverse(g, core->spec().alphabet);
    acc = core->mul(acc, g);
  }
  return acc;
}
}  // namespace

Code selfsimilar_image(const Semigroup& s, const std::vector<int>& group_word,
                       const Code& letter_word) {
  const auto& z = as_zs(s);
  Code g = group_word_code(z, group_word);
  return z.pairing().act(g, letter_word);
}

Element selfsimilar_section(const Semigroup& s,
                            const std::vector<int>& group_word,
                            const Code& letter_word) {
  const auto& z = as_zs(s);
  Code g = group_word_code(z, group_word);
  return z.make(z.u_monoid().identity(),
                z.pairing().restrict(g, letter_word));
}

}  // namespace rlcm
