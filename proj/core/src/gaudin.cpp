#include "capelli/gaudin.hpp"

#include "capelli/identity_checks.hpp"

namespace capelli {

namespace {

nlohmann::json weights_json(const std::vector<int>& w) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : w) a.push_back(v);
  return a;
}

void require_distinct(const std::vector<Rat>& v, const char* what) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) throw RepeatedParameters(what);
}

}  // namespace

OpMatrix realize(const WeylElement& elem, const WeightBasis& basis, bool transposed) {
  const AlgebraSignature& sig = elem.signature();
  const int R = sig.M, C = sig.N;  // element orientation
  if (!transposed) {
    if (R != basis.M || C != basis.N) throw WeightMismatch("element grid does not match basis");
  } else {
    if (R != basis.N || C != basis.M) throw WeightMismatch("element grid does not match basis");
  }

  // Precondition: no formal variables, and every monomial preserves both gradings.
  for (const auto& [mono, coeff] : elem.terms()) {
    if (mono.pu != 0 || mono.pv != 0 || !coeff.is_constant())
      throw ContainsFormalVariable(to_string(sig, mono, coeff));
    for (int i = 0; i < R; ++i) {
      int row = 0;
      for (int j = 0; j < C; ++j)
        row += mono.xe[static_cast<size_t>(i) * C + j] - mono.pe[static_cast<size_t>(i) * C + j];
      if (row != 0) throw NotWeightPreserving(to_string(sig, mono, coeff));
    }
    for (int j = 0; j < C; ++j) {
      int col = 0;
      for (int i = 0; i < R; ++i)
        col += mono.xe[static_cast<size_t>(i) * C + j] - mono.pe[static_cast<size_t>(i) * C + j];
      if (col != 0) throw NotWeightPreserving(to_string(sig, mono, coeff));
    }
  }

  OpMatrix out(basis.dim());
  std::vector<int> target(static_cast<size_t>(basis.M) * basis.N);
  for (int col = 0; col < basis.dim(); ++col) {
    const std::vector<int>& t = basis.tables[static_cast<size_t>(col)];
    for (const auto& [mono, coeff] : elem.terms()) {
      // p^pe differentiates, x^xe multiplies: factor = prod falling(t, pe)
      Rat factor = coeff.constant_value();
      bool killed = false;
      for (size_t i = 0; i < target.size(); ++i) target[i] = t[i];
      for (int i = 0; i < R && !killed; ++i)
        for (int j = 0; j < C; ++j) {
          const size_t cell = static_cast<size_t>(i) * C + j;
          const int b = mono.pe[cell];
          if (b == 0 && mono.xe[cell] == 0) continue;
          const size_t pos = transposed ? static_cast<size_t>(j) * basis.N + i : cell;
          const int have = target[pos];
          if (b > have) {
            killed = true;
            break;
          }
          for (int k = 0; k < b; ++k) factor *= Rat(have - k);
          target[pos] += mono.xe[cell] - b;
        }
      if (killed || factor.is_zero()) continue;
      const auto it = basis.index.find(target);
      if (it == basis.index.end())
        throw Error("realize: image monomial left the weight space");
      out.at(it->second, col) += factor;
    }
  }
  return out;
}

OpMatrix TransferFamily::eval_cleared(int i, const Rat& at) const {
  const auto& coeffs = cleared_ops[static_cast<size_t>(i - 1)];
  OpMatrix acc(basis.dim());
  Rat power(1);
  for (const auto& op : coeffs) {
    acc += op.scaled(power);
    power *= at;
  }
  return acc;
}

TransferFamily transfer_family(const ProblemData& d, const WeightBasis& basis, Side side) {
  if (!d.distinct_z()) throw RepeatedParameters("z");
  if (!d.distinct_lambda()) throw RepeatedParameters("lambda");

  TransferFamily tf;
  tf.d = d;
  tf.side = side;
  tf.basis = basis;
  // The glN side is computed through H_h = G_h(N, M, v, p_v, lambda, z, X^T, P^T):
  // run the G machinery on the transposed problem and realize transposed.
  const ProblemData work = side == Side::glM ? d : transpose(d);
  const bool transposed = side == Side::glN;
  tf.order = work.M;
  tf.n_points = work.N;
  tf.clear_points = work.z;

  const WeylElement R = rdet(build_G(work.with_h(Rat(1))));
  auto parts = split_by_pu(R);

  // leading coefficient must be exactly 1
  {
    auto it = parts.find(tf.order);
    if (it == parts.end() || !(it->second == WeylElement::one(it->second.signature())))
      throw Error("transfer family: leading p_u coefficient is not 1");
  }

  tf.cleared_ops.resize(static_cast<size_t>(tf.order));
  for (int i = 1; i <= tf.order; ++i) {
    auto it = parts.find(tf.order - i);
    WeylElement gi = it == parts.end() ? WeylElement::zero(R.signature()) : it->second;
    WeylElement cleared = gi.scaled(RatFunc(clearing_poly(Var::U, tf.clear_points, i)));
    const auto grid = strip_coeff_grid(cleared);  // throws if a denominator survived
    int max_deg = 0;
    for (const auto& [key, bucket] : grid) {
      (void)bucket;
      max_deg = std::max(max_deg, key.first);
    }
    if (max_deg > i * tf.n_points)
      throw Error("transfer family: cleared coefficient degree exceeds its bound");
    auto& slot = tf.cleared_ops[static_cast<size_t>(i - 1)];
    slot.assign(static_cast<size_t>(max_deg) + 1, OpMatrix(basis.dim()));
    for (const auto& [key, bucket] : grid)
      slot[static_cast<size_t>(key.first)] = realize(bucket, basis, transposed);
  }

  // Single clearing for the A grid. Expansion keys:
  //   glM: prod(u - z) rdet = sum A[a][b] u^a d^b      -> A[a][b] = bucket(u=a, pu=b)
  //   glN: prod(v - l) rdet = sum A[a][b] v^b d_v^a    -> A[a][b] = bucket(u'=b, pu'=a)
  const WeylElement single = R.scaled(RatFunc(clearing_poly(Var::U, tf.clear_points)));
  const auto grid = strip_coeff_grid(single);
  const int rows = d.N + 1, cols = d.M + 1;
  tf.A_grid.assign(static_cast<size_t>(rows),
                   std::vector<OpMatrix>(static_cast<size_t>(cols), OpMatrix(basis.dim())));
  for (const auto& [key, bucket] : grid) {
    const int a = side == Side::glM ? key.first : key.second;
    const int b = side == Side::glM ? key.second : key.first;
    if (a < 0 || a > d.N || b < 0 || b > d.M)
      throw Error("transfer family: A-grid index out of the theorem's range");
    tf.A_grid[static_cast<size_t>(a)][static_cast<size_t>(b)] = realize(bucket, basis, transposed);
  }
  return tf;
}

namespace {

// E_ij^{(slot)} in the element algebra of orientation (L, K): x_{i,slot} p_{j,slot}.
WeylElement E_gen(const AlgebraSignature& sig, int i, int j, int slot) {
  return multiply(WeylElement::x(sig, i, slot), WeylElement::p(sig, j, slot));
}

}  // namespace

OpMatrix gaudin_hamiltonian(const ProblemData& d, const WeightBasis& basis, int a, Side side) {
  const int L = d.M, K = d.N;
  if (a < 1 || a > K) throw ConfigError("gaudin_hamiltonian: slot index out of range");
  require_distinct(d.z, "z");
  const AlgebraSignature sig{L, K, Rat(1)};
  WeylElement ham = WeylElement::zero(sig);
  for (int b = 0; b < K; ++b) {
    if (b == a - 1) continue;
    const Rat weight = (d.z[static_cast<size_t>(a - 1)] - d.z[static_cast<size_t>(b)]).inverse();
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j)
        ham += multiply(E_gen(sig, i, j, a - 1), E_gen(sig, j, i, b)).scaled(RatFunc(weight));
  }
  for (int b = 0; b < L; ++b)
    ham += E_gen(sig, b, b, a - 1).scaled(RatFunc(d.lambda[static_cast<size_t>(b)]));
  return realize(ham, basis, side == Side::glN);
}

OpMatrix dynamical_hamiltonian(const ProblemData& d, const WeightBasis& basis, int a, Side side) {
  const int L = d.M, K = d.N;
  if (a < 1 || a > L) throw ConfigError("dynamical_hamiltonian: index out of range");
  require_distinct(d.lambda, "lambda");
  const AlgebraSignature sig{L, K, Rat(1)};
  WeylElement ham = WeylElement::zero(sig);
  for (int b = 0; b < L; ++b) {
    if (b == a - 1) continue;
    const Rat weight =
        (d.lambda[static_cast<size_t>(a - 1)] - d.lambda[static_cast<size_t>(b)]).inverse();
    WeylElement eab = WeylElement::zero(sig), eba = WeylElement::zero(sig),
                eaa = WeylElement::zero(sig);
    for (int i = 0; i < K; ++i) {
      eab += E_gen(sig, a - 1, b, i);
      eba += E_gen(sig, b, a - 1, i);
      eaa += E_gen(sig, a - 1, a - 1, i);
    }
    ham += (multiply(eab, eba) - eaa).scaled(RatFunc(weight));
  }
  for (int b = 0; b < K; ++b)
    ham += E_gen(sig, a - 1, a - 1, b).scaled(RatFunc(d.z[static_cast<size_t>(b)]));
  return realize(ham, basis, side == Side::glN);
}

std::vector<Rat> sample_points(int count, const std::vector<Rat>& avoid) {
  std::vector<Rat> out;
  long k = 2;
  while (static_cast<int>(out.size()) < count) {
    Rat c(k++);
    bool bad = false;
    for (const Rat& z : avoid) bad = bad || z == c;
    if (!bad) out.push_back(c);
  }
  return out;
}

CheckReport check_commutativity(const TransferFamily& tf,
                                const std::vector<std::pair<Rat, Rat>>& pts) {
  WallClock clock;
  CheckReport r;
  r.check_id = "transfer_commutativity";
  r.params = problem_params(tf.d);
  r.params["side"] = tf.side == Side::glM ? "glM" : "glN";
  r.params["m"] = weights_json(tf.basis.m);
  r.params["n"] = weights_json(tf.basis.n);
  r.params["sample_pairs"] = static_cast<long>(pts.size());
  r.passed = true;
  for (const auto& [u0, v0] : pts)
    for (const Rat& pt : {u0, v0})
      for (const Rat& z : tf.clear_points)
        if (pt == z) throw PoleAtPoint(pt.to_string());
  long checked = 0;
  for (int i = 1; i <= tf.order && r.passed; ++i)
    for (int j = i; j <= tf.order && r.passed; ++j)
      for (const auto& [u0, v0] : pts) {
        const OpMatrix c = OpMatrix::commutator(tf.eval_cleared(i, u0), tf.eval_cleared(j, v0));
        ++checked;
        if (!c.is_zero()) {
          r.passed = false;
          r.first_discrepancy = std::make_pair(
              "[G^" + std::to_string(i) + "(" + u0.to_string() + "), G^" + std::to_string(j) +
                  "(" + v0.to_string() + ")]",
              "0");
          break;
        }
      }
  r.lhs_terms = checked;
  r.rhs_terms = checked;
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

CheckReport check_commutativity_certified(const TransferFamily& tf) {
  WallClock clock;
  CheckReport agg;
  agg.check_id = "transfer_commutativity";
  agg.params = problem_params(tf.d);
  agg.params["side"] = tf.side == Side::glM ? "glM" : "glN";
  agg.params["m"] = weights_json(tf.basis.m);
  agg.params["n"] = weights_json(tf.basis.n);
  agg.passed = true;
  long checked = 0;
  for (int i = 1; i <= tf.order && agg.passed; ++i)
    for (int j = i; j <= tf.order && agg.passed; ++j) {
      // [G^_i(u), G^_j(v)] is polynomial of degree (<= deg_i, <= deg_j);
      // vanishing on a (deg_i+1) x (deg_j+1) grid certifies the identity.
      const auto us = sample_points(tf.cleared_degree(i) + 1, tf.clear_points);
      const auto vs = sample_points(tf.cleared_degree(j) + 1, tf.clear_points);
      for (const Rat& u0 : us) {
        for (const Rat& v0 : vs) {
          const OpMatrix c = OpMatrix::commutator(tf.eval_cleared(i, u0), tf.eval_cleared(j, v0));
          ++checked;
          if (!c.is_zero()) {
            agg.passed = false;
            agg.first_discrepancy = std::make_pair(
                "[G^" + std::to_string(i) + "(" + u0.to_string() + "), G^" + std::to_string(j) +
                    "(" + v0.to_string() + ")]",
                "0");
            break;
          }
        }
        if (!agg.passed) break;
      }
    }
  agg.lhs_terms = checked;
  agg.rhs_terms = checked;
  agg.params["sample_pairs"] = checked;
  agg.wall_time_ms = clock.elapsed_ms();
  return agg;
}

CheckReport check_hamiltonian_duality(const ProblemData& d, const std::vector<int>& m,
                                      const std::vector<int>& n) {
  WallClock clock;
  const WeightBasis basis = enumerate_basis(d.M, d.N, m, n);
  const ProblemData dt = transpose(d);
  CheckReport r;
  r.check_id = "hamiltonian_duality";
  r.params = problem_params(d);
  r.params["m"] = weights_json(m);
  r.params["n"] = weights_json(n);
  r.passed = true;
  long pairs = 0;
  for (int a = 1; a <= d.N && r.passed; ++a) {
    const OpMatrix lhs = gaudin_hamiltonian(d, basis, a, Side::glM);
    const OpMatrix rhs = dynamical_hamiltonian(dt, basis, a, Side::glN);
    ++pairs;
    if (!(lhs == rhs)) {
      r.passed = false;
      r.first_discrepancy =
          std::make_pair("pi^M H_" + std::to_string(a), "pi^N Hv_" + std::to_string(a));
    }
  }
  for (int b = 1; b <= d.M && r.passed; ++b) {
    const OpMatrix lhs = dynamical_hamiltonian(d, basis, b, Side::glM);
    const OpMatrix rhs = gaudin_hamiltonian(dt, basis, b, Side::glN);
    ++pairs;
    if (!(lhs == rhs)) {
      r.passed = false;
      r.first_discrepancy =
          std::make_pair("pi^M Hv_" + std::to_string(b), "pi^N H_" + std::to_string(b));
    }
  }
  r.lhs_terms = pairs;
  r.rhs_terms = pairs;
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

CheckReport check_theorem_dual(const ProblemData& d, const std::vector<int>& m,
                               const std::vector<int>& n) {
  WallClock clock;
  const WeightBasis basis = enumerate_basis(d.M, d.N, m, n);
  const TransferFamily tfM = transfer_family(d, basis, Side::glM);
  const TransferFamily tfN = transfer_family(d, basis, Side::glN);
  CheckReport r;
  r.check_id = "theorem_dual";
  r.params = problem_params(d);
  r.params["m"] = weights_json(m);
  r.params["n"] = weights_json(n);
  r.passed = true;
  long entries = 0;
  for (int a = 0; a <= d.N && r.passed; ++a)
    for (int b = 0; b <= d.M; ++b) {
      ++entries;
      if (!(tfM.A_grid[static_cast<size_t>(a)][static_cast<size_t>(b)] ==
            tfN.A_grid[static_cast<size_t>(a)][static_cast<size_t>(b)])) {
        r.passed = false;
        r.first_discrepancy = std::make_pair(
            "A^(M)[" + std::to_string(a) + "][" + std::to_string(b) + "]",
            "A^(N)[" + std::to_string(a) + "][" + std::to_string(b) + "]");
        break;
      }
    }
  r.lhs_terms = entries;
  r.rhs_terms = entries;
  r.details = {{"grid_rows", d.N + 1}, {"grid_cols", d.M + 1}, {"basis_dim", basis.dim()}};
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

}  // namespace capelli
