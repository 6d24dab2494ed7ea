#include "logsurf/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace logsurf {

std::optional<std::vector<Rat>> nonnegative_combination(
    const std::vector<QVec>& generators, const QVec& target) {
  const std::size_t m = target.size();
  const std::size_t n = generators.size();
  for (const QVec& g : generators)
    if (g.size() != m)
      throw std::invalid_argument("nonnegative_combination: dimension mismatch");

  if (target.is_zero()) return std::vector<Rat>(n, Rat(0));
  if (n == 0) return std::nullopt;

  // Tableau columns: n structural + m artificial + rhs.
  // Rows are sign-normalised so the artificial basis is feasible.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = flip ? -generators[j][i] : generators[j][i];
    t[i][n + i] = Rat(1);
    t[i][cols - 1] = flip ? -target[i] : target[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase-1 objective: minimise the sum of artificials. z holds the
  // current reduced-cost row (negated objective convention).
  std::vector<Rat> z(cols, Rat(0));
  for (std::size_t j = 0; j < cols; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) s += t[i][j];
    if (j < n) z[j] = -s;            // reduced cost of structural column
    else if (j < n + m) z[j] = Rat(1) - s;
    else z[j] = -s;                   // objective value (negated)
  }

  while (true) {
    // Bland: entering column = smallest index with negative reduced cost.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (z[j] < 0) { enter = j; break; }
    if (enter == cols - 1) break;

    // Ratio test; ties broken by smallest basic variable index (Bland).
    std::size_t leave = m;
    Rat best(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave]))
        { leave = i; best = ratio; }
    }
    if (leave == m)
      throw std::logic_error("phase-1 simplex unbounded");

    const Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    {
      const Rat f = z[enter];
      if (f != 0)
        for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Feasible iff the artificial objective reached zero.
  if (-z[cols - 1] != 0) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && t[i][cols - 1] != 0) return std::nullopt;

  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
  return x;
}

}  // namespace logsurf
