#include "capelli/weight_basis.hpp"

#include <algorithm>
#include <numeric>

namespace capelli {

namespace {

void enumerate_rec(int M, int N, const std::vector<int>& m, std::vector<int>& col_left,
                   std::vector<int>& table, int row, WeightBasis& out) {
  if (row == M) {
    out.index.emplace(table, static_cast<int>(out.tables.size()));
    out.tables.push_back(table);
    return;
  }
  // fill row `row` cell by cell; ascending cell values give lex order overall
  const int row_sum = m[static_cast<size_t>(row)];
  std::vector<int> cell(static_cast<size_t>(N), 0);
  // recursive filling of one row
  auto fill = [&](auto&& self, int col, int left) -> void {
    if (col == N - 1) {
      if (left > col_left[static_cast<size_t>(col)]) return;
      cell[static_cast<size_t>(col)] = left;
      for (int c = 0; c < N; ++c) {
        table[static_cast<size_t>(row) * N + c] = cell[static_cast<size_t>(c)];
        col_left[static_cast<size_t>(c)] -= cell[static_cast<size_t>(c)];
      }
      enumerate_rec(M, N, m, col_left, table, row + 1, out);
      for (int c = 0; c < N; ++c) col_left[static_cast<size_t>(c)] += cell[static_cast<size_t>(c)];
      return;
    }
    const int cap = std::min(left, col_left[static_cast<size_t>(col)]);
    for (int v = 0; v <= cap; ++v) {
      cell[static_cast<size_t>(col)] = v;
      self(self, col + 1, left - v);
    }
  };
  fill(fill, 0, row_sum);
}

}  // namespace

WeightBasis enumerate_basis(int M, int N, const std::vector<int>& m, const std::vector<int>& n) {
  if (static_cast<int>(m.size()) != M || static_cast<int>(n.size()) != N)
    throw WeightMismatch("weight list lengths must match M and N");
  for (int v : m)
    if (v < 0) throw WeightMismatch("negative weight entry");
  for (int v : n)
    if (v < 0) throw WeightMismatch("negative weight entry");
  const long sm = std::accumulate(m.begin(), m.end(), 0L);
  const long sn = std::accumulate(n.begin(), n.end(), 0L);
  if (sm != sn)
    throw WeightMismatch("sum(m) = " + std::to_string(sm) + " != sum(n) = " + std::to_string(sn));

  WeightBasis b;
  b.M = M;
  b.N = N;
  b.m = m;
  b.n = n;
  std::vector<int> col_left = n;
  std::vector<int> table(static_cast<size_t>(M) * N, 0);
  enumerate_rec(M, N, m, col_left, table, 0, b);
  return b;
}

long count_tables(const std::vector<int>& m, const std::vector<int>& n) {
  // DP over rows: state = remaining column budgets, encoded mixed-radix.
  const int N = static_cast<int>(n.size());
  std::vector<long> radix(static_cast<size_t>(N), 1);
  long states = 1;
  for (int c = 0; c < N; ++c) {
    radix[static_cast<size_t>(c)] = states;
    states *= n[static_cast<size_t>(c)] + 1;
  }
  auto encode = [&](const std::vector<int>& cols) {
    long s = 0;
    for (int c = 0; c < N; ++c) s += radix[static_cast<size_t>(c)] * cols[static_cast<size_t>(c)];
    return s;
  };
  std::map<long, long> cur;
  cur[encode(n)] = 1;
  for (int row_sum : m) {
    std::map<long, long> next;
    for (const auto& [state, state_count] : cur) {
      const long count = state_count;  // lambdas below cannot capture the binding on older compilers
      std::vector<int> cols(static_cast<size_t>(N));
      long s = state;
      for (int c = N - 1; c >= 0; --c) {
        cols[static_cast<size_t>(c)] = static_cast<int>(s / radix[static_cast<size_t>(c)]);
        s %= radix[static_cast<size_t>(c)];
      }
      // distribute row_sum into the columns
      std::vector<int> cell(static_cast<size_t>(N), 0);
      auto rec = [&](auto&& self, int col, int left) -> void {
        if (col == N - 1) {
          if (left > cols[static_cast<size_t>(col)]) return;
          cell[static_cast<size_t>(col)] = left;
          std::vector<int> reduced = cols;
          for (int c = 0; c < N; ++c) reduced[static_cast<size_t>(c)] -= cell[static_cast<size_t>(c)];
          next[encode(reduced)] += count;
          return;
        }
        for (int v = 0; v <= std::min(left, cols[static_cast<size_t>(col)]); ++v) {
          cell[static_cast<size_t>(col)] = v;
          self(self, col + 1, left - v);
        }
      };
      rec(rec, 0, row_sum);
    }
    cur = std::move(next);
  }
  const std::vector<int> zero(static_cast<size_t>(N), 0);
  auto it = cur.find(encode(zero));
  return it == cur.end() ? 0 : it->second;
}

void auto_small_weights(int M, int N, std::vector<int>& m, std::vector<int>& n, int max_dim) {
  auto balanced = [](int total, int parts) {
    std::vector<int> out(static_cast<size_t>(parts), total / parts);
    for (int i = 0; i < total % parts; ++i) ++out[static_cast<size_t>(i)];
    return out;
  };
  for (int k = std::max(M, N); k >= 1; --k) {
    m = balanced(k, M);
    n = balanced(k, N);
    if (max_dim <= 0 || count_tables(m, n) <= max_dim) return;
  }
}

}  // namespace capelli
