#include "sisport/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "sisport/univariate.hpp"

namespace sisport {

namespace {

Poly2 lie_derivative(const VectorField& f, const Poly2& g) {
    return f.P * g.partial(Var::x) + f.Q * g.partial(Var::y);
}

}  // namespace

std::optional<Poly2> cofactor_of(const VectorField& f, const Poly2& candidate) {
    if (candidate.degree() < 1)
        throw std::invalid_argument("cofactor_of: candidate must be non-constant");
    return divide_exact(lie_derivative(f, candidate), candidate);
}

bool verify_invariant_line(const VectorField& f, const Poly2& candidate, const Poly2& k) {
    return (lie_derivative(f, candidate) - k * candidate).is_zero();
}

namespace {

Poly2 line_poly(const Rational& a0, const Rational& a1, const Rational& a2) {
    return Poly2(a0) + a1 * Poly2::x() + a2 * Poly2::y();
}

Poly2 normalized_line(const Poly2& f) {
    const Rational a1 = f.coeff(1, 0), a2 = f.coeff(0, 1), a0 = f.coeff(0, 0);
    Rational lead = sgn(a1) != 0 ? a1 : (sgn(a2) != 0 ? a2 : a0);
    return (1 / lead) * f;
}

struct LineHit {
    Rational a0, a1, a2;
};

// f = a0 + x + a2*y. Matching coefficients of P + a2 Q = (k0+k1x+k2y) f
// forces k1 = L20, k2 = L11 - L20 a2, and a cubic in a2:
//   phi(a2) = L20(a2) a2^2 - L11(a2) a2 + L02(a2) = 0,
// each L linear in a2. The remaining unknowns solve linearly per root.
void search_x_normalized(const VectorField& vf, std::vector<LineHit>& hits) {
    auto L = [&](int i, int j) {
        // Coefficient functions of a2: P_ij + a2 Q_ij.
        return std::pair<Rational, Rational>(vf.P.coeff(i, j), vf.Q.coeff(i, j));
    };
    auto [p20, q20] = L(2, 0);
    auto [p11, q11] = L(1, 1);
    auto [p02, q02] = L(0, 2);

    // phi coefficients in a2 (degree <= 3).
    UniPoly phi(4, Rational(0));
    // L20(a2)*a2^2 = (p20 + q20 a2) a2^2
    phi[2] += p20;
    phi[3] += q20;
    // -L11(a2)*a2
    phi[1] -= p11;
    phi[2] -= q11;
    // +L02(a2)
    phi[0] += p02;
    phi[1] += q02;

    const bool phi_zero =
        std::all_of(phi.begin(), phi.end(), [](const Rational& c) { return sgn(c) == 0; });
    std::vector<Rational> slopes;
    if (phi_zero) {
        // Any slope satisfies the quadratic-part constraints; a continuum can
        // only be ruled out by the remaining linear system, which depends on
        // a2. This does not occur for the fields in scope.
        throw std::domain_error("find_invariant_lines: continuum of candidate slopes");
    }
    slopes = rational_roots(phi);

    for (const auto& a2 : slopes) {
        const Rational l20 = p20 + a2 * q20;
        const Rational l11 = p11 + a2 * q11;
        const Rational l10 = vf.P.coeff(1, 0) + a2 * vf.Q.coeff(1, 0);
        const Rational l01 = vf.P.coeff(0, 1) + a2 * vf.Q.coeff(0, 1);
        const Rational l00 = vf.P.coeff(0, 0) + a2 * vf.Q.coeff(0, 0);
        const Rational k1 = l20;
        const Rational k2 = l11 - l20 * a2;

        // Remaining: k0 = l10 - k1 a0, with
        //   (k2 - k1 a2) a0 = l01 - l10 a2      (linear)
        //   k1 a0^2 - l10 a0 + l00 = 0          (quadratic)
        const Rational lin_c = k2 - k1 * a2;
        const Rational lin_r = l01 - l10 * a2;
        std::vector<Rational> a0s;
        if (sgn(lin_c) != 0) {
            const Rational a0 = lin_r / lin_c;
            if (sgn(k1 * a0 * a0 - l10 * a0 + l00) == 0) a0s.push_back(a0);
        } else {
            if (sgn(lin_r) != 0) continue;
            UniPoly quad{l00, -l10, k1};
            const bool all_zero = std::all_of(quad.begin(), quad.end(),
                                              [](const Rational& c) { return sgn(c) == 0; });
            if (all_zero)
                throw std::domain_error("find_invariant_lines: continuum of lines");
            a0s = rational_roots(quad);
        }
        for (const auto& a0 : a0s) hits.push_back({a0, Rational(1), a2});
    }
}

// f = a0 + y requires Q20 = 0; then k1 = Q11, k2 = Q02 and a0 solves the
// leftover linear/quadratic constraints.
void search_y_normalized(const VectorField& vf, std::vector<LineHit>& hits) {
    const Poly2& Q = vf.Q;
    if (sgn(Q.coeff(2, 0)) != 0) return;
    const Rational k1 = Q.coeff(1, 1);
    const Rational k2 = Q.coeff(0, 2);
    const Rational q10 = Q.coeff(1, 0), q01 = Q.coeff(0, 1), q00 = Q.coeff(0, 0);
    std::vector<Rational> a0s;
    if (sgn(k1) != 0) {
        const Rational a0 = q10 / k1;
        if (sgn((q01 - k2 * a0) * a0 - q00) == 0) a0s.push_back(a0);
    } else {
        if (sgn(q10) != 0) return;
        UniPoly quad{q00, -q01, k2};
        const bool all_zero = std::all_of(quad.begin(), quad.end(),
                                          [](const Rational& c) { return sgn(c) == 0; });
        if (all_zero) throw std::domain_error("find_invariant_lines: continuum of lines");
        a0s = rational_roots(quad);
    }
    for (const auto& a0 : a0s) hits.push_back({a0, Rational(0), Rational(1)});
}

}  // namespace

std::vector<InvariantCurve> find_invariant_lines(const VectorField& f) {
    if (degree(f) != 2)
        throw std::invalid_argument("find_invariant_lines expects a quadratic field");

    std::vector<LineHit> hits;
    search_x_normalized(f, hits);
    search_y_normalized(f, hits);

    std::vector<InvariantCurve> out;
    for (const auto& h : hits) {
        const Poly2 line = normalized_line(line_poly(h.a0, h.a1, h.a2));
        if (std::any_of(out.begin(), out.end(),
                        [&](const InvariantCurve& c) { return c.f == line; }))
            continue;
        auto k = cofactor_of(f, line);
        if (!k) continue;  // coefficient solving produced a spurious hit
        if (!verify_invariant_line(f, line, *k))
            throw std::logic_error("invariant line failed re-verification");
        out.push_back({line, *k});
    }
    std::sort(out.begin(), out.end(), [](const InvariantCurve& a, const InvariantCurve& b) {
        return a.f.to_string() < b.f.to_string();
    });
    return out;
}

}  // namespace sisport
