#include "capelli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "capelli/identity_checks.hpp"
#include "capelli/prng.hpp"
#include "capelli/spectra.hpp"

namespace capelli {

namespace {

// Run independent jobs on a bounded pool; results keep submission order.
std::vector<CheckReport> run_jobs(std::vector<std::function<CheckReport()>> jobs) {
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                                 static_cast<unsigned>(jobs.size())));
  std::vector<CheckReport> out(jobs.size());
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          out[i] = jobs[i]();
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

ProblemData draw_problem(int M, int N, SplitMix64& rng, const Rat& h) {
  ProblemData d;
  d.M = M;
  d.N = N;
  d.z = rng.distinct_rats(N);
  d.lambda = rng.distinct_rats(M);
  d.h = h;
  return d;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void finish(SuiteResult& r) {
  for (const auto& rep : r.reports) r.all_passed = r.all_passed && rep.passed;
}

}  // namespace

std::vector<DualityCase> default_duality_cases() {
  return {{2, 2, {1, 1}, {1, 1}}, {2, 3, {2, 1}, {1, 1, 1}}, {3, 2, {1, 1, 1}, {2, 1}}};
}

std::vector<Rat> h_sweep(const RunConfig& cfg, int M, int N) {
  if (!cfg.full_h) return cfg.h_list;
  std::vector<Rat> hs = {Rat(0), Rat(1), Rat(7, 5)};
  long next = 2;
  while (static_cast<int>(hs.size()) < M + N + 1) hs.push_back(Rat(next++));
  return hs;
}

SuiteResult run_identities(const RunConfig& cfg) {
  SuiteResult result;
  std::vector<std::function<CheckReport()>> jobs;

  std::vector<ProblemData> draws;  // one entry per (M, N, draw)
  if (cfg.M || cfg.N || cfg.z || cfg.lambda) {
    // single-point mode
    if (!cfg.M || !cfg.N || !cfg.z || !cfg.lambda)
      throw ConfigError("single-point identities run needs --M --N --z --lambda");
    ProblemData d;
    d.M = *cfg.M;
    d.N = *cfg.N;
    d.z = *cfg.z;
    d.lambda = *cfg.lambda;
    if (static_cast<int>(d.z.size()) != d.N || static_cast<int>(d.lambda.size()) != d.M)
      throw ConfigError("z needs N entries, lambda needs M entries");
    draws.push_back(d);
  } else {
    SplitMix64 rng(cfg.seed);
    for (int M = 1; M <= 3; ++M)
      for (int N = 1; N <= 3; ++N)
        for (int draw = 0; draw < 2; ++draw) draws.push_back(draw_problem(M, N, rng, Rat(1)));
    // one grid point with deliberately repeated z values
    ProblemData rep;
    rep.M = 2;
    rep.N = 2;
    rep.z = {Rat(3), Rat(3)};
    rep.lambda = rng.distinct_rats(2);
    draws.push_back(rep);
  }

  for (const ProblemData& base : draws) {
    const auto hs = h_sweep(cfg, base.M, base.N);
    for (const Rat& h : hs) {
      const ProblemData d = base.with_h(h);
      jobs.emplace_back([d] { return check_theorem_main(d); });
      jobs.emplace_back([d] { return check_cor_mn(d); });
      jobs.emplace_back([d] { return check_duality_rel(d); });
      jobs.emplace_back([d] { return check_polynomiality(d); });
    }
    const ProblemData d1 = base.with_h(Rat(1));
    if (hs.size() >= 2) jobs.emplace_back([d1, hs] { return check_h_independence(d1, hs); });
    for (const auto& sigma : permutations_of(base.M))
      jobs.emplace_back([d1, sigma] { return check_row_sign(d1, sigma); });
    if (base.M <= 2 && base.N <= 2) jobs.emplace_back([d1] { return check_gauss(d1); });
  }

  // Capelli chains and the corrupted-engine negative control run on the
  // default grid only (they have their own parameter spaces).
  if (!cfg.M) {
    for (int MN = 1; MN <= 3; ++MN)
      for (const Rat& s : {Rat(0), Rat(2), Rat(-1, 3)})
        for (const Rat& h : {Rat(0), Rat(1)})
          jobs.emplace_back([MN, s, h] { return check_capelli_chain(MN, MN, s, h); });
    SplitMix64 rng(cfg.seed ^ 0xA5A5A5A5ULL);
    const ProblemData ctrl = draw_problem(2, 1, rng, Rat(1));
    const std::vector<Rat> hs = {Rat(0), Rat(1), Rat(7, 5)};
    jobs.emplace_back([ctrl, hs] { return check_h_independence_negative_control(ctrl, hs); });
  }

  result.reports = run_jobs(std::move(jobs));
  finish(result);
  return result;
}

namespace {

std::vector<DualityCase> cases_from_config(const RunConfig& cfg) {
  if (!cfg.M && !cfg.N && !cfg.m && !cfg.n) return default_duality_cases();
  DualityCase c;
  // sizes may be inferred from the weight lists; N falls back to M
  c.M = cfg.M ? *cfg.M : (cfg.m ? static_cast<int>(cfg.m->size()) : 0);
  c.N = cfg.N ? *cfg.N : (cfg.n ? static_cast<int>(cfg.n->size()) : c.M);
  if (c.M <= 0 || c.N <= 0) throw ConfigError("explicit case needs --M/--N or --m/--n");
  if (cfg.m)
    c.m = *cfg.m;
  if (cfg.n)
    c.n = *cfg.n;
  auto balanced = [](int total, int parts) {
    std::vector<int> out(static_cast<size_t>(parts), total / parts);
    for (int i = 0; i < total % parts; ++i) ++out[static_cast<size_t>(i)];
    return out;
  };
  if (c.m.empty() && c.n.empty()) {
    auto_small_weights(c.M, c.N, c.m, c.n, cfg.max_dim);
  } else if (c.n.empty()) {
    // the auto side must match the explicit side's total
    c.n = balanced(std::accumulate(c.m.begin(), c.m.end(), 0), c.N);
  } else if (c.m.empty()) {
    c.m = balanced(std::accumulate(c.n.begin(), c.n.end(), 0), c.M);
  }
  if (static_cast<int>(c.m.size()) != c.M || static_cast<int>(c.n.size()) != c.N)
    throw ConfigError("m needs M entries, n needs N entries");
  return {c};
}

ProblemData case_problem(const RunConfig& cfg, const DualityCase& c, uint64_t salt) {
  ProblemData d;
  d.M = c.M;
  d.N = c.N;
  d.h = Rat(1);
  if (cfg.z && cfg.lambda) {
    d.z = *cfg.z;
    d.lambda = *cfg.lambda;
    if (static_cast<int>(d.z.size()) != d.N || static_cast<int>(d.lambda.size()) != d.M)
      throw ConfigError("z needs N entries, lambda needs M entries");
  } else {
    SplitMix64 rng(cfg.seed ^ salt);
    d.z = rng.distinct_rats(d.N);
    d.lambda = rng.distinct_rats(d.M);
  }
  if (!d.distinct_z() || !d.distinct_lambda())
    throw ConfigError("duality/spectra suites need pairwise-distinct z and lambda");
  return d;
}

void guard_dim(const DualityCase& c, int max_dim) {
  const long dim = count_tables(c.m, c.n);
  if (dim > max_dim)
    throw DimensionCap("basis dim " + std::to_string(dim) + " > max-dim " +
                       std::to_string(max_dim));
}

}  // namespace

SuiteResult run_duality(const RunConfig& cfg) {
  SuiteResult result;
  std::vector<std::function<CheckReport()>> jobs;
  const auto cases = cases_from_config(cfg);
  for (size_t ci = 0; ci < cases.size(); ++ci) {
    const DualityCase& c = cases[ci];
    guard_dim(c, cfg.max_dim);
    const ProblemData d = case_problem(cfg, c, 0x1000 + ci);
    jobs.emplace_back([d, c] { return check_theorem_dual(d, c.m, c.n); });
    jobs.emplace_back([d, c] { return check_hamiltonian_duality(d, c.m, c.n); });
    jobs.emplace_back([d, c] {
      const WeightBasis basis = enumerate_basis(d.M, d.N, c.m, c.n);
      return check_commutativity_certified(transfer_family(d, basis, Side::glM));
    });
  }
  result.reports = run_jobs(std::move(jobs));
  finish(result);
  return result;
}

SuiteResult run_spectra(const RunConfig& cfg) {
  SuiteResult result;
  const auto cases = cases_from_config(cfg);
  std::ostringstream tsv;
  tsv << "case\tseed\tvector\top\teig_re\teig_im\n";

  for (size_t ci = 0; ci < cases.size(); ++ci) {
    const DualityCase& c = cases[ci];
    guard_dim(c, cfg.max_dim);
    const ProblemData d = case_problem(cfg, c, 0x2000 + ci);
    const std::vector<uint64_t> seeds = {cfg.seed, cfg.seed + 1, cfg.seed + 2};

    result.reports.push_back(
        check_simple_spectrum(d, c.m, c.n, seeds, cfg.tol_gap, cfg.tol_residual));

    const WeightBasis basis = enumerate_basis(d.M, d.N, c.m, c.n);
    const TransferFamily tfM = transfer_family(d, basis, Side::glM);
    const TransferFamily tfN = transfer_family(d, basis, Side::glN);
    std::vector<OpMatrix> ops;
    for (const auto& slot : tfM.cleared_ops)
      for (const auto& op : slot) ops.push_back(op);

    for (uint64_t seed : seeds) {
      const JointSpectrum js = joint_eigenvectors(ops, cfg.tol_residual, seed);
      CheckReport count;
      count.check_id = "joint_eigenvector_count";
      count.params = problem_params(d);
      count.params["seed"] = seed;
      count.passed = static_cast<int>(js.vectors.size()) == basis.dim();
      count.lhs_terms = static_cast<long>(js.vectors.size());
      count.rhs_terms = basis.dim();
      if (!count.passed)
        count.first_discrepancy = std::make_pair(std::to_string(js.vectors.size()) + " accepted",
                                                 std::to_string(basis.dim()) + " expected");
      result.reports.push_back(count);

      for (size_t vi = 0; vi < js.vectors.size(); ++vi) {
        const auto& w = js.vectors[vi];
        result.reports.push_back(check_eigen_dual(tfM, tfN, w, cfg.tol_svd));
        // evaluated polynomials compound per-coefficient residuals, so the
        // eigenvector gate inside build_Dw gets two orders of slack
        const ScalarODE ode = build_Dw(tfM, w, cfg.tol_residual * 100);
        for (int i = 0; i < d.M; ++i) {
          CheckReport kr = check_kernel_property(ode, d.lambda[static_cast<size_t>(i)],
                                                 c.m[static_cast<size_t>(i)], cfg.tol_svd);
          kr.params["case"] = static_cast<long>(ci);
          kr.params["seed"] = seed;
          kr.params["vector"] = static_cast<long>(vi);
          result.reports.push_back(std::move(kr));
        }
        for (size_t oi = 0; oi < js.eigen_tuples[vi].size(); ++oi)
          tsv << ci << "\t" << seed << "\t" << vi << "\t" << oi << "\t"
              << js.eigen_tuples[vi][oi].real() << "\t" << js.eigen_tuples[vi][oi].imag() << "\n";
      }
    }
  }

  // Constructed degenerate witness (default mode only): lambda equal, z spread
  // so far apart that the joint tuples collapse below the gap tolerance.
  if (!cfg.M && !cfg.z) {
    ProblemData wd;
    wd.M = 2;
    wd.N = 2;
    wd.z = {Rat(0), Rat(10000000)};
    wd.lambda = {Rat(1), Rat(1)};
    wd.h = Rat(1);
    CheckReport witness = check_simple_spectrum(wd, {1, 1}, {1, 1}, {cfg.seed}, cfg.tol_gap,
                                                cfg.tol_residual, /*expect_simple=*/false);
    witness.params["witness"] = true;
    result.reports.push_back(std::move(witness));
  }

  result.tsv = tsv.str();
  finish(result);
  return result;
}

int run_suites(const RunConfig& cfg, SuiteResult& out) {
  try {
    if (cfg.suite == "identities") {
      out = run_identities(cfg);
    } else if (cfg.suite == "duality") {
      out = run_duality(cfg);
    } else if (cfg.suite == "spectra") {
      out = run_spectra(cfg);
    } else if (cfg.suite == "all") {
      SuiteResult a = run_identities(cfg);
      SuiteResult b = run_duality(cfg);
      SuiteResult c = run_spectra(cfg);
      out.reports = a.reports;
      out.reports.insert(out.reports.end(), b.reports.begin(), b.reports.end());
      out.reports.insert(out.reports.end(), c.reports.begin(), c.reports.end());
      out.all_passed = a.all_passed && b.all_passed && c.all_passed;
      out.tsv = c.tsv;
      return out.all_passed ? 0 : 1;
    } else {
      throw ConfigError("unknown suite '" + cfg.suite + "'");
    }
  } catch (const DimensionCap&) {
    return 3;
  }
  return out.all_passed ? 0 : 1;
}

}  // namespace capelli
