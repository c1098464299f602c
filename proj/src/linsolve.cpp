#include "hypsum/linsolve.hpp"

#include <stdexcept>

namespace hypsum {

LinearSolution solve_linear_system(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs) {
  const size_t nrows = a.size();
  if (rhs.size() != nrows) throw std::invalid_argument("solve_linear_system: shape mismatch");
  const size_t ncols = nrows ? a[0].size() : 0;

  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t piv = row;
    while (piv < nrows && a[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[row]);
    std::swap(rhs[piv], rhs[row]);
    Rational inv = a[row][col].inverse();
    for (size_t c = col; c < ncols; ++c) a[row][c] *= inv;
    rhs[row] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (size_t c = col; c < ncols; ++c) a[r][c] -= f * a[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }

  LinearSolution sol;
  for (size_t r = row; r < nrows; ++r)
    if (!rhs[r].is_zero()) return sol;  // inconsistent
  sol.consistent = true;

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  for (size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) sol.free_columns.push_back(static_cast<int>(c));

  sol.particular.assign(ncols, Rational(0));
  for (size_t r = 0; r < pivot_col.size(); ++r)
    sol.particular[static_cast<size_t>(pivot_col[r])] = rhs[r];

  for (int f : sol.free_columns) {
    std::vector<Rational> v(ncols, Rational(0));
    v[static_cast<size_t>(f)] = Rational(1);
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<size_t>(pivot_col[r])] = -a[r][static_cast<size_t>(f)];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace hypsum
