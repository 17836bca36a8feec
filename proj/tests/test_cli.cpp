#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlcm/job.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace rlcm;
using nlohmann::json;

namespace {

json bs_family(long long c, long long d) {
  return {{"type", "baumslag-solitar"}, {"c", c}, {"d", d}};
}

JobConfig config(const json& j) { return config_from_json(j); }

}  // namespace

TEST_CASE("config round trip") {
  json j{{"family", bs_family(2, 3)},
         {"command", "kms-eval"},
         {"beta", "3/2"},
         {"cutoff", 32},
         {"elements", json::array({json::array({"a", "b"}), json::array()})},
         {"trace", {{"mode", "rho"}, {"kappa-level", 9}}}};
  JobConfig cfg = config(j);
  CHECK(cfg.beta == Rational(3, 2));
  CHECK(cfg.cutoff == 32);
  CHECK(cfg.trace.mode == TraceSpec::Mode::Rho);
  CHECK(cfg.trace.kappa_level == 9);
  json echoed = config_to_json(cfg);
  JobConfig cfg2 = config_from_json(echoed);
  CHECK(config_to_json(cfg2) == echoed);
}

TEST_CASE("rational and interval serialization never uses decimals") {
  json r = rational_json(Rational(-7, 3));
  CHECK(r["num"] == "-7");
  CHECK(r["den"] == "3");
  json iv = interval_json(Interval(Rational(0), Rational(1, 2)));
  CHECK(iv["lo"]["num"] == "0");
  CHECK(iv["hi"]["den"] == "2");
}

TEST_CASE("describe report shape") {
  JobResult res =
      run(config({{"family", bs_family(2, 3)}, {"command", "describe"}}));
  CHECK(res.exit_code == kExitOk);
  CHECK(res.report["schema-version"] == 1);
  CHECK(res.report.contains("config"));
  REQUIRE(res.report["results"].size() == 1);
  CHECK(res.report["results"][0]["family-id"] == "baumslag-solitar");
  CHECK(res.report["warnings"].is_array());
}

TEST_CASE("unknown command and bad family exit with usage code") {
  JobResult bad_cmd =
      run(config({{"family", bs_family(2, 3)}, {"command", "frobnicate"}}));
  CHECK(bad_cmd.exit_code == kExitUsage);
  CHECK(bad_cmd.report.contains("error"));

  JobResult bad_family = run(config(
      {{"family", {{"type", "baumslag-solitar"}, {"c", 1}, {"d", 1}}},
       {"command", "describe"}}));
  CHECK(bad_family.exit_code == kExitUsage);
}

TEST_CASE("missing element arguments exit with usage code") {
  JobResult res = run(config({{"family", bs_family(2, 3)},
                              {"command", "kms-eval"},
                              {"beta", 2}}));
  CHECK(res.exit_code == kExitUsage);
}

TEST_CASE("admissibility failure exits with check-failure code") {
  JobResult res = run(config(
      {{"family", bs_family(2, 1)}, {"command", "check-admissible"}}));
  CHECK(res.exit_code == kExitCheckFail);
  CHECK(res.report["results"][0]["admissible"] == false);
}

TEST_CASE("oversized representation window exits with sizing code") {
  JobResult res = run(config({{"family", bs_family(2, 3)},
                              {"command", "verify-rep"},
                              {"beta", 2},
                              {"level-cap", 19683},
                              {"core-cap", 40}}));
  CHECK(res.exit_code == kExitSizing);
}

TEST_CASE("kms-eval through the job layer") {
  JobResult res = run(config(
      {{"family", bs_family(2, 3)},
       {"command", "kms-eval"},
       {"beta", 2},
       {"elements", json::array({json::array({"a"}), json::array({"a"})})}}));
  CHECK(res.exit_code == kExitOk);
  const json& r = res.report["results"][0];
  CHECK(r["value"]["lo"]["num"] == "1");
  CHECK(r["value"]["lo"]["den"] == "9");
  CHECK(r["exact"] == true);
}

TEST_CASE("elements can be raw codes") {
  JobResult res = run(config(
      {{"family", bs_family(2, 3)},
       {"command", "ground"},
       {"elements",
        json::array({json{{"code", json::array({0, 1})}},
                     json{{"code", json::array({0, 1})}}})}}));
  CHECK(res.exit_code == kExitOk);
}

TEST_CASE("kappa produces a per-level csv table") {
  JobResult res = run(config(
      {{"family", bs_family(3, 3)},
       {"command", "kappa"},
       {"level", 9},
       {"elements",
        json::array({json::array({"b", "b", "b"}), json::array()})}}));
  CHECK(res.exit_code == kExitOk);
  CHECK(res.csv.find("n,fixed,class_only,kappa") == 0);
  CHECK(res.csv.find("\n1,0,1,0\n") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  json j{{"family", bs_family(2, 3)}, {"command", "classify"}, {"level", 9}};
  JobResult a = run(config(j));
  JobResult b = run(config(j));
  CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("atomic report writing") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rlcm-kms-test";
  fs::create_directories(dir);
  fs::path out = dir / "report.json";
  JobConfig cfg = config({{"family", bs_family(2, 3)},
                          {"command", "describe"},
                          {"output", out.string()}});
  int code = run_and_write(cfg);
  CHECK(code == kExitOk);
  REQUIRE(fs::exists(out));
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
  std::ifstream f(out);
  json parsed = json::parse(f);
  CHECK(parsed["schema-version"] == 1);
  fs::remove_all(dir);
}

TEST_CASE("zeta command reports divergence precisely at beta <= 1") {
  JobResult at1 = run(config(
      {{"family", bs_family(2, 3)}, {"command", "zeta"}, {"beta", 1}}));
  CHECK(at1.report["results"][0]["diverges"] == true);
  JobResult above = run(config(
      {{"family", bs_family(2, 3)}, {"command", "zeta"}, {"beta", 2}}));
  CHECK(above.report["results"][0]["diverges"] == false);
  // BS(2,3) has Irr = {3}: zeta(2) = 3/2
  CHECK(above.report["results"][0]["value"]["lo"]["num"] == "3");
  CHECK(above.report["results"][0]["value"]["lo"]["den"] == "2");
}
