#include "rlcm/job.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rlcm {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw UsageError("cannot parse rational: " + j.dump());
    }
  }
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    Rational den(j.at("den").get<std::string>());
    if (den == 0) throw UsageError("rational with zero denominator");
    return Rational(j.at("num").get<std::string>()) / den;
  }
  throw UsageError("cannot parse rational: " + j.dump());
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    default: return "undecided";
  }
}

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "exhausted";
  }
}

json code_json(const Code& c) { return json(c); }

json check_json(const CheckResult& r) {
  json j;
  j["status"] = status_str(r.status);
  j["witnesses"] = r.witness_count;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

json action_json(const ActionReport& r) {
  json j;
  j["property"] = r.property;
  j["verdict"] = verdict_str(r.verdict);
  j["from-certificate"] = r.from_certificate;
  j["detail"] = r.detail;
  if (!r.witness.empty()) j["witness"] = r.witness;
  json levels = json::array();
  for (const auto& [n, count] : r.per_level)
    levels.push_back({{"level", n}, {"count", count}});
  j["per-level"] = levels;
  return j;
}

json state_json(const StateValue& v) {
  json j;
  j["value"] = interval_json(v.value);
  j["exact"] = v.exact();
  j["decided"] = v.decided;
  if (v.tail) {
    j["tail"] = {{"cutoff", v.tail->cutoff},
                 {"neglected-bound", rational_json(v.tail->neglected_bound)}};
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

struct Runner {
  const JobConfig& cfg;
  std::shared_ptr<Semigroup> sg;
  json results = json::array();
  std::vector<std::string> warnings;
  std::string csv;
  int exit_code = kExitOk;

  explicit Runner(const JobConfig& c) : cfg(c), sg(build(c.family)) {}

  Element element_arg(size_t i) {
    if (cfg.elements.size() <= i)
      throw UsageError("command '" + cfg.command + "' needs " +
                       std::to_string(i + 1) + " element argument(s)");
    return parse_element(*sg, cfg.elements[i]);
  }

  void describe() {
    json r;
    r["name"] = sg->name();
    r["family-id"] = sg->family_id();
    json gens = json::array();
    for (const auto& [name, g] : sg->generators())
      gens.push_back({{"name", name},
                      {"code", code_json(g.code)},
                      {"scale", sg->scale(g)},
                      {"display", sg->show(g)}});
    r["generators"] = gens;
    r["irreducible-scales"] = sg->irreducible_scales();
    ActionCertificates cert = sg->action_certificates();
    json cj;
    cj["faithful"] = cert.faithful ? json(*cert.faithful) : json(nullptr);
    cj["almost-free"] =
        cert.almost_free ? json(*cert.almost_free) : json(nullptr);
    cj["finite-propagation"] =
        cert.finite_propagation ? json(*cert.finite_propagation) : json(nullptr);
    cj["note"] = cert.note;
    r["certificates"] = cj;
    try {
      ZsCoreData core = zs_core_data(*sg);
      r["core"] = {{"description", core.core_description},
                   {"irreducibles", core.core_irreducible_description}};
    } catch (const UsageError&) {
    }
    results.push_back(r);
  }

  void check_admissible_cmd() {
    Scale depth = cfg.depth.value_or(default_depth(*sg));
    AdmissibilityReport rep =
        rlcm::check_admissible(*sg, depth, cfg.core_weight);
    json r;
    r["depth"] = rep.depth;
    r["core-weight"] = rep.core_weight;
    r["irreducible-scales"] = rep.irreducible_scales;
    r["a1"] = check_json(rep.a1);
    r["a2"] = check_json(rep.a2);
    r["a3a"] = check_json(rep.a3a);
    r["a3b"] = check_json(rep.a3b);
    r["a4"] = check_json(rep.a4);
    r["admissible"] = rep.all_pass();
    results.push_back(r);
    for (const CheckResult* c :
         {&rep.a1, &rep.a2, &rep.a3a, &rep.a3b, &rep.a4}) {
      if (c->status == CheckStatus::Fail) exit_code = kExitCheckFail;
      if (c->status == CheckStatus::Exhausted)
        warnings.push_back("an axiom check exhausted its search budget");
    }
  }

  void action() {
    std::ostringstream table;
    table << "property,level,count\n";
    for (ActionReport rep :
         {check_faithful(*sg, cfg.core_weight, cfg.level),
          check_almost_free(*sg, cfg.core_weight, cfg.level),
          check_propagation(*sg, cfg.core_weight, cfg.level)}) {
      results.push_back(action_json(rep));
      for (const auto& [n, count] : rep.per_level)
        table << rep.property << ',' << n << ',' << count << '\n';
      if (rep.verdict == Verdict::Undecided)
        warnings.push_back("property '" + rep.property +
                           "' is undecided at the searched depth");
    }
    csv = table.str();
  }

  void zeta_cmd() {
    ZetaEval z = zeta(*sg, cfg.beta);
    json r;
    r["beta"] = rational_json(cfg.beta);
    r["irreducible-scales"] = sg->irreducible_scales();
    r["diverges"] = z.diverges;
    if (!z.diverges) r["value"] = interval_json(z.value);
    r["beta-critical"] = rational_json(critical_beta(*sg));
    results.push_back(r);
  }

  void kms_eval() {
    Element x = element_arg(0), y = element_arg(1);
    StateValue v = kms_value(*sg, x, y, cfg.beta, cfg.trace, cfg.cutoff);
    json r = state_json(v);
    r["x"] = sg->show(x);
    r["y"] = sg->show(y);
    r["beta"] = rational_json(cfg.beta);
    results.push_back(r);
    if (!v.decided)
      warnings.push_back("state value undecided: " + v.note);
  }

  void kappa() {
    Element a = element_arg(0), b = element_arg(1);
    if (!sg->is_core(a) || !sg->is_core(b))
      throw UsageError("kappa needs two core elements");
    KappaTable kt = kappa_table(*sg, a, b, cfg.level);
    json rows = json::array();
    std::ostringstream table;
    table << "n,fixed,class_only,kappa\n";
    for (const auto& row : kt.rows) {
      rows.push_back({{"n", row.n},
                      {"fixed", row.fixed},
                      {"class-only", row.g_minus_t},
                      {"kappa", rational_json(row.kappa)}});
      table << row.n << ',' << row.fixed << ',' << row.g_minus_t << ','
            << to_string(row.kappa) << '\n';
    }
    csv = table.str();
    json r;
    r["a"] = sg->show(a);
    r["b"] = sg->show(b);
    r["rows"] = rows;
    r["enclosure"] = interval_json(kt.enclosure);
    results.push_back(r);
  }

  void ground() {
    Element x = element_arg(0), y = element_arg(1);
    StateValue v = ground_state_value(*sg, x, y);
    json r = state_json(v);
    r["x"] = sg->show(x);
    r["y"] = sg->show(y);
    results.push_back(r);
  }

  void classify_cmd() {
    Classification c = rlcm::classify(*sg, cfg.core_weight, cfg.level);
    json r;
    r["beta-critical"] = rational_json(c.beta_critical);
    r["scale-trivial"] = c.scale_trivial;
    r["critical-unique"] = verdict_str(c.critical_unique);
    if (!c.uniqueness_route.empty())
      r["uniqueness-route"] = c.uniqueness_route;
    r["summary"] = c.items;
    results.push_back(r);
    if (c.critical_unique == Verdict::Undecided && !c.scale_trivial)
      warnings.push_back(
          "uniqueness at the critical temperature is undecided");
  }

  void verify_rep() {
    TruncatedRep rep(*sg, cfg.level_cap, cfg.core_cap);
    json r;
    r["basis-size"] = rep.basis_size();
    r["interior-count"] =
        std::count(rep.interior().begin(), rep.interior().end(), true);

    RelationReport rel = verify_relations(rep);
    r["relations"] = {{"checked", rel.checked},
                      {"skipped", rel.skipped},
                      {"violations", rel.violations}};
    if (!rel.ok()) exit_code = kExitCheckFail;

    if (cfg.beta > 1) {
      std::vector<Element> pool =
          sg->bounded_elements(std::min<Scale>(cfg.level_cap, 4),
                               std::min(cfg.core_cap, 2));
      std::vector<std::pair<Element, Element>> pairs;
      size_t total = pool.size() * pool.size();
      size_t want = static_cast<size_t>(std::max(1, cfg.samples));
      size_t step = std::max<size_t>(1, total / want);
      for (size_t k = 0; k < total && pairs.size() < want; k += step)
        pairs.emplace_back(pool[k / pool.size()], pool[k % pool.size()]);
      ReconstructionReport rec = verify_reconstruction(
          rep, cfg.beta, pairs, cfg.trace, cfg.cutoff);
      json samples = json::array();
      for (const auto& s : rec.samples)
        samples.push_back({{"x", s.x},
                           {"y", s.y},
                           {"reconstructed", interval_json(s.reconstructed)},
                           {"reference", interval_json(s.reference)},
                           {"ok", s.ok}});
      r["reconstruction"] = {
          {"beta", rational_json(cfg.beta)},
          {"excluded-mass", rational_json(rec.excluded_mass)},
          {"phi-one", interval_json(rec.phi_one)},
          {"phi-one-ok", rec.phi_one_ok},
          {"defect-scaled", interval_json(rec.defect_scaled)},
          {"defect-ok", rec.defect_ok},
          {"samples", samples}};
      if (!rec.ok()) exit_code = kExitCheckFail;
    } else {
      warnings.push_back(
          "reconstruction skipped: it needs beta above critical");
    }

    GroundReport g = verify_ground(rep, std::min<Scale>(cfg.level_cap, 4),
                                   std::min(cfg.core_cap, 2));
    r["ground"] = {{"checked", g.checked},
                   {"skipped", g.skipped},
                   {"violations", g.violations}};
    if (!g.ok()) exit_code = kExitCheckFail;
    results.push_back(r);
  }

  void dispatch() {
    if (cfg.command == "describe") describe();
    else if (cfg.command == "check-admissible") check_admissible_cmd();
    else if (cfg.command == "action") action();
    else if (cfg.command == "zeta") zeta_cmd();
    else if (cfg.command == "kms-eval") kms_eval();
    else if (cfg.command == "kappa") kappa();
    else if (cfg.command == "ground") ground();
    else if (cfg.command == "classify") classify_cmd();
    else if (cfg.command == "verify-rep") verify_rep();
    else throw UsageError("unknown command '" + cfg.command + "'");
  }
};

}  // namespace

json rational_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

json interval_json(const Interval& v) {
  return {{"lo", rational_json(v.lo)}, {"hi", rational_json(v.hi)}};
}

Element parse_element(const Semigroup& s, const json& j) {
  if (j.is_array()) {
    Element acc = s.identity();
    auto gens = s.generators();
    for (const auto& item : j) {
      if (!item.is_string())
        throw UsageError("element word entries must be generator names");
      std::string name = item.get<std::string>();
      auto it = std::find_if(gens.begin(), gens.end(),
                             [&](const auto& g) { return g.first == name; });
      if (it == gens.end())
        throw UsageError("unknown generator '" + name + "'");
      acc = s.multiply(acc, it->second);
    }
    return acc;
  }
  if (j.is_object() && j.contains("code")) {
    Element el{&s, j.at("code").get<Code>()};
    s.factor(el);  // validates the encoding
    return el;
  }
  throw UsageError("element must be a generator word or {\"code\": [...]}");
}

JobConfig config_from_json(const json& j) {
  JobConfig cfg;
  if (!j.contains("family"))
    throw UsageError("config needs a 'family' object");
  cfg.family = spec_from_json(j.at("family"));
  cfg.command = j.value("command", std::string());
  if (cfg.command.empty()) throw UsageError("config needs a 'command'");
  if (j.contains("depth")) cfg.depth = j.at("depth").get<Scale>();
  cfg.core_weight = j.value("core-weight", cfg.core_weight);
  cfg.level = j.value("level", cfg.level);
  if (j.contains("beta")) cfg.beta = rational_from_json(j.at("beta"));
  cfg.cutoff = j.value("cutoff", cfg.cutoff);
  if (j.contains("trace")) {
    const json& t = j.at("trace");
    std::string mode = t.value("mode", std::string("canonical"));
    if (mode == "canonical") cfg.trace.mode = TraceSpec::Mode::Canonical;
    else if (mode == "rho") cfg.trace.mode = TraceSpec::Mode::Rho;
    else if (mode == "table") cfg.trace.mode = TraceSpec::Mode::Table;
    else throw UsageError("unknown trace mode '" + mode + "'");
    cfg.trace.kappa_level = t.value("kappa-level", cfg.trace.kappa_level);
    if (t.contains("table"))
      for (const auto& entry : t.at("table"))
        cfg.trace.table[{entry.at("a").get<Code>(),
                         entry.at("b").get<Code>()}] =
            rational_from_json(entry.at("value"));
  }
  if (j.contains("elements"))
    for (const auto& e : j.at("elements")) cfg.elements.push_back(e);
  cfg.level_cap = j.value("level-cap", cfg.level_cap);
  cfg.core_cap = j.value("core-cap", cfg.core_cap);
  cfg.samples = j.value("samples", cfg.samples);
  cfg.output_path = j.value("output", std::string());
  cfg.csv_path = j.value("csv", std::string());
  return cfg;
}

json config_to_json(const JobConfig& cfg) {
  json j;
  j["family"] = spec_to_json(cfg.family);
  j["command"] = cfg.command;
  if (cfg.depth) j["depth"] = *cfg.depth;
  j["core-weight"] = cfg.core_weight;
  j["level"] = cfg.level;
  j["beta"] = rational_json(cfg.beta);
  j["cutoff"] = cfg.cutoff;
  json t;
  t["mode"] = cfg.trace.mode == TraceSpec::Mode::Canonical ? "canonical"
              : cfg.trace.mode == TraceSpec::Mode::Rho     ? "rho"
                                                           : "table";
  t["kappa-level"] = cfg.trace.kappa_level;
  if (!cfg.trace.table.empty()) {
    json entries = json::array();
    for (const auto& [key, value] : cfg.trace.table)
      entries.push_back({{"a", key.first},
                         {"b", key.second},
                         {"value", rational_json(value)}});
    t["table"] = entries;
  }
  j["trace"] = t;
  if (!cfg.elements.empty()) j["elements"] = cfg.elements;
  j["level-cap"] = cfg.level_cap;
  j["core-cap"] = cfg.core_cap;
  j["samples"] = cfg.samples;
  if (!cfg.output_path.empty()) j["output"] = cfg.output_path;
  if (!cfg.csv_path.empty()) j["csv"] = cfg.csv_path;
  return j;
}

JobResult run(const JobConfig& cfg) {
  JobResult out;
  out.report["schema-version"] = 1;
  out.report["config"] = config_to_json(cfg);
  try {
    Runner runner(cfg);
    runner.dispatch();
    out.report["results"] = runner.results;
    out.report["warnings"] = runner.warnings;
    out.exit_code = runner.exit_code;
    out.csv = runner.csv;
  } catch (const UsageError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitUsage;
  } catch (const ConstructionError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitUsage;
  } catch (const SizingError& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitSizing;
  } catch (const CapExceeded& e) {
    out.report["error"] = std::string(e.what()) + "; partial: " + e.partial;
    out.exit_code = kExitSizing;
  } catch (const std::exception& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitCheckFail;
  }
  return out;
}

namespace {

void write_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open output path " + path);
    f << content;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int run_and_write(const JobConfig& cfg) {
  JobResult res = run(cfg);
  std::string text = res.report.dump(2) + "\n";
  try {
    if (cfg.output_path.empty())
      std::cout << text;
    else
      write_atomic(cfg.output_path, text);
    if (!cfg.csv_path.empty()) {
      if (res.csv.empty())
        std::cerr << "note: command produced no table; csv not written\n";
      else
        write_atomic(cfg.csv_path, res.csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return res.exit_code;
}

}  // namespace rlcm
