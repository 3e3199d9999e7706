#include "sisport/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sisport {

void validate(const SisParams& p) {
    if (sgn(p.b) == 0) throw std::invalid_argument("b must be nonzero");
    if (sgn(p.m) == 0) throw std::invalid_argument("m must be nonzero");
}

VectorField make_sis_field(const SisParams& p) {
    validate(p);
    const Poly2 x = Poly2::x(), y = Poly2::y(), xy = Poly2::mono(1, 1);
    VectorField f;
    f.P = (-p.b) * xy + (-p.m) * x + p.c * y + Poly2(p.m * p.k);
    f.Q = p.b * xy + (-(p.m + p.c)) * y;
    return f;
}

Matrix2 jacobian(const VectorField& f, const RatPoint& at) {
    Matrix2 j;
    j.a11 = f.P.partial(Var::x).eval(at.first, at.second);
    j.a12 = f.P.partial(Var::y).eval(at.first, at.second);
    j.a21 = f.Q.partial(Var::x).eval(at.first, at.second);
    j.a22 = f.Q.partial(Var::y).eval(at.first, at.second);
    return j;
}

VectorField translate(const VectorField& f, const RatPoint& p) {
    const AffineMap2 shift = AffineMap2::translation(p.first, p.second);
    return {compose_affine(f.P, shift), compose_affine(f.Q, shift)};
}

int degree(const VectorField& f) {
    return std::max({f.P.degree(), f.Q.degree(), 0});
}

CompiledPoly::CompiledPoly(const Poly2& p) {
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) terms.push_back({m.i, m.j, to_double(c)});
}

double CompiledPoly::operator()(double x, double y) const {
    double acc = 0;
    for (const auto& t : terms) acc += t.c * std::pow(x, t.i) * std::pow(y, t.j);
    return acc;
}

std::vector<std::pair<double, double>> finite_singular_points_numeric(
    const VectorField& f, const NumericRootOptions& opt) {
    if (opt.tol <= 0) throw std::invalid_argument("tol must be positive");
    const CompiledPoly P(f.P), Q(f.Q);
    const CompiledPoly Px(f.P.partial(Var::x)), Py(f.P.partial(Var::y));
    const CompiledPoly Qx(f.Q.partial(Var::x)), Qy(f.Q.partial(Var::y));

    std::vector<std::pair<double, double>> found;
    const int g = std::max(opt.grid, 2);
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            double x = opt.xmin + (opt.xmax - opt.xmin) * a / (g - 1);
            double y = opt.ymin + (opt.ymax - opt.ymin) * b / (g - 1);
            bool converged = false;
            for (int it = 0; it < opt.max_iter; ++it) {
                const double fx = P(x, y), fy = Q(x, y);
                const double j11 = Px(x, y), j12 = Py(x, y);
                const double j21 = Qx(x, y), j22 = Qy(x, y);
                const double det = j11 * j22 - j12 * j21;
                if (std::abs(det) < 1e-14) break;
                const double dx = (fx * j22 - fy * j12) / det;
                const double dy = (fy * j11 - fx * j21) / det;
                x -= dx;
                y -= dy;
                if (!std::isfinite(x) || !std::isfinite(y)) break;
                if (std::hypot(dx, dy) < opt.tol) {
                    converged = std::hypot(P(x, y), Q(x, y)) < 1e-9;
                    break;
                }
            }
            if (!converged) continue;
            const double margin = 1e-6;
            if (x < opt.xmin - margin || x > opt.xmax + margin || y < opt.ymin - margin ||
                y > opt.ymax + margin)
                continue;
            bool dup = false;
            for (const auto& [px, py] : found)
                if (std::hypot(px - x, py - y) < opt.dedup_radius) {
                    dup = true;
                    break;
                }
            if (!dup) found.emplace_back(x, y);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace sisport
