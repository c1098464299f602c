#pragma once

#include <string>

#include "hypsum/catalog.hpp"

namespace hypsum {

/// Expanded tight-form latex of a polynomial, e.g. "7k^2-8k+2".
std::string poly_latex(const Poly& p);

/// Factored latex: rational linear factors ascending by root, remaining
/// squarefree parts atomic, e.g. "k(4k-1)", "(2k-1)^2".
std::string poly_latex_factored(const Poly& p);

/// Latex of a constant expression over {1, 1/pi, pi^2}, e.g. "-\frac{1}{\pi}",
/// "8 - \frac{16}{\pi}", "\frac{10-\pi^2}{16}".
std::string constant_latex(const ConstantExpr& e);

/// Deterministic latex for a catalog entry, e.g.
/// "\sum_{k=0}^\infty \frac{k(4k-1)\binom{2k}{k}^3}{(2k-1)^2(-64)^k} = -\frac{1}{\pi}".
std::string emit_latex(const CatalogEntry& entry);

}  // namespace hypsum
