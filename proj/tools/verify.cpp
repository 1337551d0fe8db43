// Batch driver: configure a problem, run verification suites, emit a JSON
// report. Exit codes: 0 all checks passed, 1 a check failed, 2 config error,
// 3 dimension-guard violation.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "capelli/suites.hpp"

namespace {

std::vector<capelli::Rat> parse_rat_list(const std::string& text) {
  std::vector<capelli::Rat> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(capelli::Rat::parse(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(capelli::Rat::parse(cur));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const capelli::Rat& r : parse_rat_list(text)) {
    if (!r.is_integer()) throw capelli::ConfigError("weight entries must be integers");
    out.push_back(static_cast<int>(std::lround(r.to_double())));
  }
  return out;
}

// Write atomically: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw capelli::ConfigError("cannot open '" + tmp + "' for writing");
    os << body;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw capelli::ConfigError("cannot rename report into place");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verify: exact checks of the generalized Capelli identity and the "
               "(gl_M, gl_N) Bethe-algebra duality"};
  app.set_help_flag("--help", "print usage");  // frees -h; the h parameter list is --h

  capelli::RunConfig cfg;
  std::string z_text, lambda_text, h_text, m_text, n_text, grid = "auto";
  int M = 0, N = 0;

  app.add_option("--suite", cfg.suite, "identities|duality|spectra|all")->required();
  app.add_option("--grid", grid, "default|single|auto (auto: single when --M/--N given)");
  app.add_option("--M", M, "number of rows M");
  app.add_option("--N", N, "number of columns N");
  app.add_option("--z", z_text, "comma-separated rationals (p/q), N entries, or 'random'");
  app.add_option("--lambda", lambda_text, "comma-separated rationals, M entries, or 'random'");
  app.add_option("--h", h_text, "comma-separated h values (default 0,1,7/5)");
  app.add_option("--m", m_text, "gl_M weight, comma-separated ints, or 'auto-small'");
  app.add_option("--n", n_text, "gl_N weight, comma-separated ints, or 'auto-small'");
  app.add_option("--seed", cfg.seed, "PRNG seed (SplitMix64)");
  app.add_option("--max-dim", cfg.max_dim, "weight-space dimension guard (default 60)");
  app.add_option("--tol-residual", cfg.tol_residual, "eigenvector residual tolerance");
  app.add_option("--tol-gap", cfg.tol_gap, "joint-spectrum gap tolerance");
  app.add_option("--tol-svd", cfg.tol_svd, "kernel-solve SVD tolerance");
  app.add_flag("--full-h", cfg.full_h, "sweep M+N+1 h values instead of the default three");
  app.add_option("--out", cfg.out_path, "report path (default report.json)");
  app.add_option("--tsv", cfg.tsv_path, "optional TSV dump of spectra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  capelli::SuiteResult result;
  try {
    if (M > 0) cfg.M = M;
    if (N > 0) cfg.N = N;
    if (!z_text.empty() && z_text != "random") cfg.z = parse_rat_list(z_text);
    if (!lambda_text.empty() && lambda_text != "random") cfg.lambda = parse_rat_list(lambda_text);
    if (!h_text.empty()) cfg.h_list = parse_rat_list(h_text);
    if (!m_text.empty() && m_text != "auto-small") cfg.m = parse_int_list(m_text);
    if (!n_text.empty() && n_text != "auto-small") cfg.n = parse_int_list(n_text);
    if (grid == "default") {
      cfg.M.reset();
      cfg.N.reset();
      cfg.z.reset();
      cfg.lambda.reset();
    }

    code = capelli::run_suites(cfg, result);

    for (const auto& r : result.reports)
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_id << "  "
                << r.params.dump() << "\n";
    std::cout << result.reports.size() << " checks, "
              << (result.all_passed ? "all passed" : "FAILURES PRESENT") << "\n";

    write_file_atomic(cfg.out_path, capelli::reports_to_json(result.reports));
    if (!cfg.tsv_path.empty() && !result.tsv.empty()) write_file_atomic(cfg.tsv_path, result.tsv);
  } catch (const capelli::DimensionCap& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const capelli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
