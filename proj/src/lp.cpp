#include "semideg/lp.hpp"

#include "semideg/errors.hpp"

namespace semideg {

// Phase-1 simplex with Bland's rule: minimize the sum of artificials for
// A w - s + a = b with w, s, a >= 0.
std::optional<std::vector<Rat>> lp_feasible(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
  size_t m = A.size();
  if (b.size() != m) throw InternalInvariant("lp_feasible: rhs length mismatch");
  if (m == 0) return std::vector<Rat>();
  size_t n = A[0].size();
  for (const auto& bi : b)
    if (bi < 0) throw InternalInvariant("lp_feasible needs nonnegative rhs");
  size_t cols = n + 2 * m;
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1, Rat(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = Rat(-1);
    T[i][n + m + i] = Rat(1);
    T[i][cols] = b[i];
    basis[i] = n + m + i;
  }
  auto reduced_cost = [&](size_t j) {
    Rat d = (j >= n + m) ? Rat(1) : Rat(0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] >= n + m) d -= T[i][j];
    return d;
  };
  while (true) {
    size_t enter = cols;
    for (size_t j = 0; j < cols && enter == cols; ++j) {
      bool basic = false;
      for (size_t i = 0; i < m; ++i)
        if (basis[i] == j) basic = true;
      if (!basic && reduced_cost(j) < 0) enter = j;
    }
    if (enter == cols) break; // optimal
    size_t leave = m;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rat cur = T[i][cols] * T[leave][enter];
      Rat best = T[leave][cols] * T[i][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m)
      throw InternalInvariant("phase-1 objective is unbounded");
    Rat piv = T[leave][enter];
    for (size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= n + m && T[i][cols] != 0) return std::nullopt;
  std::vector<Rat> w(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) w[basis[i]] = T[i][cols];
  return w;
}

} // namespace semideg
