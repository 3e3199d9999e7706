#pragma once

#include <utility>
#include <vector>

#include "sisport/poly2.hpp"

namespace sisport {

using RatPoint = std::pair<Rational, Rational>;

// Planar polynomial vector field x' = P(x,y), y' = Q(x,y).
struct VectorField {
    Poly2 P;
    Poly2 Q;
};

// Parameters of the SIS system x' = -bxy - mx + cy + mk, y' = bxy - (m+c)y.
// b: infectivity, c: recovery, k: population size, m: proportional death
// rate. Requires b != 0 and m != 0 (otherwise the system degenerates).
struct SisParams {
    Rational b, c, k, m;
};

struct Matrix2 {
    Rational a11{0}, a12{0}, a21{0}, a22{0};
    Rational det() const { return a11 * a22 - a12 * a21; }
    Rational trace() const { return a11 + a22; }
};

// Throws std::invalid_argument when b = 0 or m = 0.
void validate(const SisParams& p);

VectorField make_sis_field(const SisParams& p);

Matrix2 jacobian(const VectorField& f, const RatPoint& at);

// G with G(x,y) = F(x + p1, y + p2); the singular point p moves to the origin.
VectorField translate(const VectorField& f, const RatPoint& p);

// max(deg P, deg Q); 0 for the zero field by convention (rejected upstream).
int degree(const VectorField& f);

struct NumericRootOptions {
    double xmin = -10, xmax = 10, ymin = -10, ymax = 10;
    int grid = 21;
    double tol = 1e-12;
    int max_iter = 50;
    double dedup_radius = 1e-8;
};

// Newton-refined common zeros of (P, Q) from grid seeds, deduplicated.
// Floating-point cross-check only; the exact path never consumes this.
std::vector<std::pair<double, double>> finite_singular_points_numeric(
    const VectorField& f, const NumericRootOptions& opt = {});

// Double-precision compiled form for numeric evaluation loops.
struct CompiledPoly {
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms;
    explicit CompiledPoly(const Poly2& p);
    double operator()(double x, double y) const;
};

}  // namespace sisport
