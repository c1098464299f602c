#pragma once

#include <vector>

#include "hypsum/rational.hpp"

namespace hypsum {

/// Solution state of a rational linear system in reduced row echelon form.
/// Unknowns are identified by column index; the pivoting order is the column
/// order, which callers rely on for deterministic solutions.
struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;        // free variables set to zero
  std::vector<int> free_columns;           // ascending
  /// Nullspace basis vector for the i-th free column (that variable = 1).
  std::vector<std::vector<Rational>> nullspace;
};

/// Solves rows * x = rhs by reduced row echelon form over the rationals.
LinearSolution solve_linear_system(std::vector<std::vector<Rational>> rows,
                                   std::vector<Rational> rhs);

}  // namespace hypsum
