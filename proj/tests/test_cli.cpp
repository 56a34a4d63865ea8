#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "queens/board.hpp"

using json = nlohmann::json;
using namespace queens;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string(QUEENS_CLI_PATH) + " " + args;
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve on the single cell") {
  CliResult res = run_cli("solve --n 1 --seed 7");
  REQUIRE(res.status == 0);
  json rec = json::parse(res.out);
  CHECK(rec.at("schema_version") == "1");
  CHECK(rec.at("n") == 1);
  CHECK(rec.at("queens") == json::parse("[[1,1]]"));
  CHECK(rec.at("phase2").at("completed") == true);
}

TEST_CASE("solve emits verifiable records and is byte-deterministic") {
  CliResult a = run_cli("solve --n 100 --seed 11");
  CliResult b = run_cli("solve --n 100 --seed 11");
  CHECK(a.out == b.out);
  REQUIRE(a.status == 0);
  json rec = json::parse(a.out);
  REQUIRE(rec.at("phase2").at("completed") == true);
  PartialConfig cfg(100);
  for (const auto& q : rec.at("queens")) {
    cfg.place({q.at(0).get<int>(), q.at(1).get<int>()}, Rule::Classical);
  }
  CHECK(cfg.size() == 100);
  CHECK(verify(cfg, Rule::Classical));
  CHECK(rec.at("k") == 100 - rec.at("stop").get<int>());
}

TEST_CASE("solve reports aborts with exit 1") {
  CliResult res = run_cli("solve --n 2 --seed 0 --retries 1");
  CHECK(res.status == 1);
  json rec = json::parse(res.out);
  CHECK(rec.at("phase2").at("completed") == false);
  CHECK(rec.at("attempts").size() == 2);
}

TEST_CASE("trajectory CSV shape") {
  CliResult res = run_cli("trajectory --n 100 --seed 3");
  REQUIRE(res.status == 0);
  std::istringstream lines(res.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "t,available,pred_available,paper_band,desk_band_pass,min_s_ell,max_s_ell,pred_s,eps,"
        "band_vacuous");
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("0,10000,10000,1,1,100,100,100,0,0", 0) == 0);
  int rows = 1;
  std::string line;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 74);  // default stop at n=100
  CHECK(res.out.find(',') != std::string::npos);
  CHECK(res.out.find(' ') == std::string::npos);  // no padding, no locale groupings
}

TEST_CASE("enumerate") {
  CliResult res = run_cli("enumerate --n 5");
  REQUIRE(res.status == 0);
  json j = json::parse(res.out);
  CHECK(j.at("n") == 5);
  CHECK(j.at("rule") == "classical");
  CHECK(j.at("count") == 10);

  CliResult tor = run_cli("enumerate --n 5 --toroidal");
  CHECK(json::parse(tor.out).at("count") == 10);

  CliResult two = run_cli("enumerate --n 2");
  CHECK(json::parse(two.out).at("count") == 0);
}

TEST_CASE("enumerate guard names the override flag") {
  std::string cmd = std::string(QUEENS_CLI_PATH) + " enumerate --n 20 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  CHECK(WEXITSTATUS(rc) == 2);
  CHECK(out.find("--force") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("solve").status == 2);             // missing --n
  CHECK(run_cli("frobnicate --n 5").status == 2);  // unknown subcommand
  CHECK(run_cli("solve --n 0").status == 2);
}

TEST_CASE("campaign summary") {
  CliResult res = run_cli("campaign --n 40 --trials 6 --seed 9 --jobs 2");
  REQUIRE(res.status == 0);
  json j = json::parse(res.out);
  CHECK(j.at("trials") == 6);
  double rate = j.at("success_rate").get<double>();
  CHECK(rate >= 0.0);
  CHECK(rate <= 1.0);
  CHECK(j.at("mean_available_by_decile").size() == 10);
  CHECK(j.at("mean_available_by_decile")[0] == 1600.0);

  // scheduling must not affect the output
  CliResult serial = run_cli("campaign --n 40 --trials 6 --seed 9 --jobs 1");
  CHECK(serial.out == res.out);
}

TEST_CASE("coupling command") {
  CliResult res = run_cli("coupling --n 60 --seed 2 --trials 5");
  REQUIRE(res.status == 0);
  json j = json::parse(res.out);
  CHECK(j.at("p") == doctest::Approx(1.0 / 240.0));
  CHECK(j.at("reports").size() == 5);
  for (const auto& r : j.at("reports")) {
    CHECK(r.at("r_tilde_size").get<int>() <= r.at("r_size").get<int>());
  }
}

TEST_CASE("bound reads a stored record") {
  CliResult rec = run_cli("solve --n 200 --seed 5 --out /tmp/queens_cli_bound.json");
  REQUIRE(rec.status == 0);
  CHECK(rec.out.empty());  // --out diverts the record away from stdout
  CliResult bound = run_cli("bound --in /tmp/queens_cli_bound.json");
  REQUIRE(bound.status == 0);
  json j = json::parse(bound.out);
  CHECK(j.at("n") == 200);
  CHECK(j.at("witness").at("witness").get<double>() > 0.0);

  // completed records without a defined witness (2k > n) are refused
  for (uint64_t seed = 0; seed < 600; ++seed) {
    CliResult small =
        run_cli("solve --n 8 --seed " + std::to_string(seed) + " --out /tmp/queens_cli_bound_small.json");
    if (small.status != 0) continue;
    CHECK(run_cli("bound --in /tmp/queens_cli_bound_small.json").status == 1);
    break;
  }
}

TEST_SUITE_END();
