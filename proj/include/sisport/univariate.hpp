#pragma once

#include <vector>

#include "sisport/rational.hpp"

namespace sisport {

// Coefficients ascending: coeffs[i] multiplies u^i.
using UniPoly = std::vector<Rational>;

Rational uni_eval(const UniPoly& p, const Rational& at);

// Distinct rational roots of p, ascending. Exact: closed form through
// degree 2 (after factoring out powers of u), rational-root-theorem
// deflation above that. Irrational roots are not reported.
// Throws std::domain_error when p is identically zero.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace sisport
