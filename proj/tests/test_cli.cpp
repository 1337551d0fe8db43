#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef VERIFY_BIN
#error "VERIFY_BIN must point at the verify executable"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(VERIFY_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

nlohmann::json load(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  nlohmann::json j;
  is >> j;
  return j;
}

}  // namespace

TEST_CASE("single-point duality run exits 0 and writes a schema'd report") {
  const std::string out = "/tmp/capelli_cli_duality.json";
  CHECK(run("--suite duality --M 2 --N 2 --m 1,1 --n 1,1 --z 0,1 --lambda 0,5 --out " + out) == 0);
  const auto j = load(out);
  REQUIRE(j.is_array());
  REQUIRE(!j.empty());
  for (const auto& rec : j) {
    CHECK(rec.at("schema") == "capelli-report/1");
    CHECK(rec.at("passed") == true);
  }
}

TEST_CASE("dimension guard exits 3") {
  CHECK(run("--suite spectra --M 3 --N 3 --m 1,1,1 --n 1,1,1 --z 0,1,2 --lambda 0,1,2 "
            "--max-dim 2 --out /tmp/capelli_cli_guard.json") == 3);
}

TEST_CASE("config errors exit 2") {
  CHECK(run("--suite identities --M 2 --out /tmp/capelli_cli_cfg.json") == 2);
  CHECK(run("--suite nosuch --out /tmp/capelli_cli_cfg.json") == 2);
  CHECK(run("--out /tmp/x.json") == 2);  // missing required --suite
  CHECK(run("--suite duality --M 2 --N 2 --m 1,1 --n 1,1 --z 0,0 --lambda 0,5 "
            "--out /tmp/capelli_cli_cfg.json") == 2);  // repeated z
}

TEST_CASE("identical config and seed give byte-identical reports modulo wall_time") {
  const std::string a = "/tmp/capelli_cli_a.json", b = "/tmp/capelli_cli_b.json";
  const std::string args =
      "--suite spectra --M 2 --N 2 --m 1,1 --n 1,1 --z 0,1 --lambda 0,5 --seed 7 --out ";
  REQUIRE(run(args + a) == 0);
  REQUIRE(run(args + b) == 0);
  auto ja = load(a), jb = load(b);
  for (auto* j : {&ja, &jb})
    for (auto& rec : *j) rec["wall_time_ms"] = 0;
  CHECK(ja.dump() == jb.dump());

  // the grid suite runs on a work pool; merge order must stay deterministic
  const std::string ga = "/tmp/capelli_cli_ga.json", gb = "/tmp/capelli_cli_gb.json";
  REQUIRE(run("--suite identities --grid default --seed 5 --out " + ga) == 0);
  REQUIRE(run("--suite identities --grid default --seed 5 --out " + gb) == 0);
  auto jga = load(ga), jgb = load(gb);
  for (auto* j : {&jga, &jgb})
    for (auto& rec : *j) rec["wall_time_ms"] = 0;
  CHECK(jga.dump() == jgb.dump());
}

TEST_CASE("single-point identities accepts a single h value") {
  CHECK(run("--suite identities --M 1 --N 1 --z 2 --lambda 3 --h 7/5 "
            "--out /tmp/capelli_cli_h1.json") == 0);
}

TEST_CASE("spectra TSV dump") {
  const std::string tsv = "/tmp/capelli_cli_spectra.tsv";
  CHECK(run("--suite spectra --M 2 --N 2 --m 1,1 --n 1,1 --z 0,1 --lambda 0,5 "
            "--out /tmp/capelli_cli_spectra.json --tsv " + tsv) == 0);
  std::ifstream is(tsv);
  std::string header;
  std::getline(is, header);
  CHECK(header.find("eig_re") != std::string::npos);
}
