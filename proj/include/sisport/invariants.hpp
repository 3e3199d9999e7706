#pragma once

#include <optional>
#include <vector>

#include "sisport/field.hpp"

namespace sisport {

// Algebraic curve f = 0 with P f_x + Q f_y = cofactor * f exactly.
struct InvariantCurve {
    Poly2 f;
    Poly2 cofactor;
    bool operator==(const InvariantCurve&) const = default;
};

// K = (P f_x + Q f_y) / f when the division is exact, else empty.
// Rejects constant candidates.
std::optional<Poly2> cofactor_of(const VectorField& f, const Poly2& candidate);

// True iff P f_x + Q f_y - K f is the zero polynomial.
bool verify_invariant_line(const VectorField& f, const Poly2& candidate, const Poly2& k);

// All rational lines a0 + a1 x + a2 y admitting a cofactor of degree <= 1 for
// a quadratic field, normalized so the first nonzero of (a1, a2, a0) is 1.
// Throws std::domain_error if a continuum of lines exists.
std::vector<InvariantCurve> find_invariant_lines(const VectorField& f);

}  // namespace sisport
