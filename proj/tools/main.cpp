#include "rlcm/job.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw rlcm::UsageError("cannot read file " + arg.substr(1));
    return json::parse(f);
  }
  return json::parse(arg);
}

// Elements are inline JSON (a generator word array or {"code": [...]}), a
// bare comma/space separated generator word like "a,b,a", or "1" for the
// identity.
json parse_element_arg(const std::string& arg) {
  if (arg.empty() || arg == "1") return json::array();
  try {
    return load_json_arg(arg);
  } catch (const json::parse_error&) {
    json word = json::array();
    std::string token;
    for (char ch : arg) {
      if (ch == ',' || ch == ' ') {
        if (!token.empty()) word.push_back(token);
        token.clear();
      } else {
        token.push_back(ch);
      }
    }
    if (!token.empty()) word.push_back(token);
    return word;
  }
}

struct Opts {
  std::string config_path;
  std::string family;
  std::string beta;
  std::string trace_mode;
  std::string trace_table;
  std::string output;
  std::string csv;
  unsigned long long depth = 0;
  unsigned long long level = 8;
  unsigned long long cutoff = 64;
  unsigned long long kappa_level = 16;
  unsigned long long level_cap = 9;
  int core_weight = rlcm::kDefaultCoreWeight;
  int core_cap = 2;
  int samples = 5;
  std::vector<std::string> elements;
};

void add_common_options(CLI::App* sub, Opts& o) {
  sub->add_option("--config", o.config_path,
                  "JSON job config; flags override its fields");
  sub->add_option("--family", o.family,
                  "family spec as inline JSON or @file");
  sub->add_option("--beta", o.beta, "inverse temperature, e.g. 2 or 3/2");
  sub->add_option("--depth", o.depth, "admissibility search depth");
  sub->add_option("--core-weight", o.core_weight,
                  "core enumeration weight bound");
  sub->add_option("--level", o.level, "level bound for action/kappa tables");
  sub->add_option("--cutoff", o.cutoff, "series truncation level");
  sub->add_option("--trace", o.trace_mode,
                  "trace mode: canonical, rho, or table");
  sub->add_option("--trace-table", o.trace_table,
                  "trace table entries as inline JSON or @file");
  sub->add_option("--kappa-level", o.kappa_level,
                  "enclosure depth for the rho trace");
  sub->add_option("--element,-e", o.elements,
                  "element argument (repeatable)");
  sub->add_option("--level-cap", o.level_cap,
                  "representation window scale cap");
  sub->add_option("--core-cap", o.core_cap,
                  "representation window core weight cap");
  sub->add_option("--samples", o.samples, "reconstruction sample count");
  sub->add_option("--output,-o", o.output,
                  "report path (default: stdout)");
  sub->add_option("--csv", o.csv, "per-level table export path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rlcm-kms: exact workbench for right LCM semigroups, their core "
      "actions, and their KMS state structure"};
  app.require_subcommand(1);

  Opts o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"describe", "print family structure, generators, and certificates"},
      {"check-admissible", "run the bounded admissibility axiom checks"},
      {"action", "analyze the core action: faithful, almost free, "
                 "finite propagation"},
      {"zeta", "evaluate the irreducible-scale zeta function"},
      {"kms-eval", "evaluate the KMS state on V_x V_y^*"},
      {"kappa", "tabulate fixed-point densities for a core pair"},
      {"ground", "evaluate the canonical ground state on V_x V_y^*"},
      {"classify", "summarize the KMS state space of the family"},
      {"verify-rep", "verify relations and state reconstruction on a "
                     "truncated representation"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common_options(sub, o);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rlcm::kExitUsage;
  }

  try {
    CLI::App* sub = nullptr;
    for (CLI::App* candidate : subs)
      if (candidate->parsed()) sub = candidate;
    if (!sub) throw rlcm::UsageError("no command given");

    json j = json::object();
    if (sub->count("--config")) {
      std::ifstream f(o.config_path);
      if (!f) throw rlcm::UsageError("cannot read config " + o.config_path);
      j = json::parse(f);
    }
    j["command"] = sub->get_name();
    if (sub->count("--family")) j["family"] = load_json_arg(o.family);
    if (sub->count("--beta")) j["beta"] = o.beta;
    if (sub->count("--depth")) j["depth"] = o.depth;
    if (sub->count("--core-weight")) j["core-weight"] = o.core_weight;
    if (sub->count("--level")) j["level"] = o.level;
    if (sub->count("--cutoff")) j["cutoff"] = o.cutoff;
    if (sub->count("--trace") || sub->count("--kappa-level") ||
        sub->count("--trace-table")) {
      json t = j.contains("trace") ? j["trace"] : json::object();
      if (sub->count("--trace")) t["mode"] = o.trace_mode;
      if (sub->count("--kappa-level")) t["kappa-level"] = o.kappa_level;
      if (sub->count("--trace-table"))
        t["table"] = load_json_arg(o.trace_table);
      j["trace"] = t;
    }
    if (!o.elements.empty()) {
      json elems = json::array();
      for (const std::string& e : o.elements)
        elems.push_back(parse_element_arg(e));
      j["elements"] = elems;
    }
    if (sub->count("--level-cap")) j["level-cap"] = o.level_cap;
    if (sub->count("--core-cap")) j["core-cap"] = o.core_cap;
    if (sub->count("--samples")) j["samples"] = o.samples;
    if (sub->count("--output")) j["output"] = o.output;
    if (sub->count("--csv")) j["csv"] = o.csv;

    rlcm::JobConfig cfg = rlcm::config_from_json(j);
    return rlcm::run_and_write(cfg);
  } catch (const rlcm::SizingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rlcm::kExitSizing;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rlcm::kExitUsage;
  }
}
