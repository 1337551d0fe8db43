#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capelli/report.hpp"
#include "capelli/rational.hpp"

namespace capelli {

/// Parsed run configuration for the batch driver.
struct RunConfig {
  std::string suite = "all";  // identities | duality | spectra | all
  std::optional<int> M, N;
  std::optional<std::vector<Rat>> z, lambda;
  std::vector<Rat> h_list = {Rat(0), Rat(1), Rat(7, 5)};
  std::optional<std::vector<int>> m, n;  // weights; absent = auto-small
  uint64_t seed = 1;
  int max_dim = 60;
  double tol_residual = 1e-9;
  double tol_gap = 1e-6;
  double tol_svd = 1e-8;
  bool full_h = false;  // sweep M+N+1 h values instead of the default list
  std::string out_path = "report.json";
  std::string tsv_path;  // optional spectra dump
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  bool all_passed = true;
  std::string tsv;  // eigenvalue table when the spectra suite ran
};

/// The three (M, N, m, n) duality/spectra cases exercised by default.
struct DualityCase {
  int M, N;
  std::vector<int> m, n;
};
std::vector<DualityCase> default_duality_cases();

/// h values for a grid point: the default list, or 0,1,7/5,2,3,... (M+N+1 of
/// them) in --full-h mode; identities are polynomial in h of degree <= M+N, so
/// M+N+1 distinct values certify them in h.
std::vector<Rat> h_sweep(const RunConfig& cfg, int M, int N);

SuiteResult run_identities(const RunConfig& cfg);
SuiteResult run_duality(const RunConfig& cfg);
SuiteResult run_spectra(const RunConfig& cfg);

/// Dispatch on cfg.suite; exit code 0 (all passed), 1 (a check failed),
/// 3 (dimension guard). Config errors throw ConfigError (exit 2 in the CLI).
int run_suites(const RunConfig& cfg, SuiteResult& out);

}  // namespace capelli
