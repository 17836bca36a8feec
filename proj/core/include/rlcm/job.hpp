#pragma once

#include "rlcm/analysis.hpp"
#include "rlcm/families.hpp"
#include "rlcm/kms.hpp"
#include "rlcm/rep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rlcm {

// Exit codes shared by the library runner and the command line tool.
inline constexpr int kExitOk = 0;        // success, possibly undecided
inline constexpr int kExitCheckFail = 1; // a verification failed
inline constexpr int kExitUsage = 2;     // bad config or arguments
inline constexpr int kExitSizing = 3;    // caps exceeded

struct JobConfig {
  FamilySpec family;
  std::string command;  // describe | check-admissible | action | zeta |
                        // kms-eval | kappa | ground | classify | verify-rep

  std::optional<Scale> depth;            // check-admissible search depth
  int core_weight = kDefaultCoreWeight;  // core enumeration weight
  Scale level = 8;                       // action / kappa level bound
  Rational beta = 2;
  Scale cutoff = 64;                     // series truncation
  TraceSpec trace;

  // Element descriptors: an array of generator names (product, left to
  // right), or an object {"code": [...]} with the family encoding.
  std::vector<nlohmann::json> elements;

  Scale level_cap = 9;  // verify-rep window
  int core_cap = 2;
  int samples = 5;

  std::string output_path;  // empty writes the report to stdout
  std::string csv_path;     // optional export of per-level tables
};

JobConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const JobConfig& cfg);

// Exact value serialization: rationals as {"num", "den"}, enclosures as
// {"lo", "hi"}; decimals never appear in reports.
nlohmann::json rational_json(const Rational& r);
nlohmann::json interval_json(const Interval& v);

struct JobResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string csv;  // nonempty for commands that produce a per-level table
};

// Runs the command and builds the report. Never throws; errors land in the
// report with the matching exit code.
JobResult run(const JobConfig& cfg);

// Runs, then writes the report (and CSV, when configured) atomically.
int run_and_write(const JobConfig& cfg);

Element parse_element(const Semigroup& s, const nlohmann::json& j);

}  // namespace rlcm
