#include "sisport/compactify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sisport/univariate.hpp"

namespace sisport {

const char* to_string(ChartId c) {
    switch (c) {
        case ChartId::U1: return "U1";
        case ChartId::U2: return "U2";
        case ChartId::U3: return "U3";
        case ChartId::V1: return "V1";
        case ChartId::V2: return "V2";
        case ChartId::V3: return "V3";
    }
    return "?";
}

ChartId parse_chart_id(const std::string& s) {
    for (ChartId c : {ChartId::U1, ChartId::U2, ChartId::U3, ChartId::V1, ChartId::V2, ChartId::V3})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown chart: " + s);
}

const char* to_string(SnType t) { return t == SnType::SN1 ? "SN1" : "SN2"; }

namespace {

// v^n R(1/v, u/v) = sum c_ij u^j v^{n-i-j}, polynomial since deg R <= n.
Poly2 lift_u1(const Poly2& r, int n) {
    Poly2 out;
    for (const auto& [m, c] : r.terms())
        out += Poly2::mono(m.j, n - m.i - m.j, c);
    return out;
}

// v^n R(u/v, 1/v) = sum c_ij u^i v^{n-i-j}.
Poly2 lift_u2(const Poly2& r, int n) {
    Poly2 out;
    for (const auto& [m, c] : r.terms())
        out += Poly2::mono(m.i, n - m.i - m.j, c);
    return out;
}

}  // namespace

ChartSystem chart_u1(const VectorField& f) {
    const int n = degree(f);
    const Poly2 lp = lift_u1(f.P, n), lq = lift_u1(f.Q, n);
    ChartSystem cs;
    cs.chart = ChartId::U1;
    cs.n = n;
    cs.u_dot = lq - Poly2::x() * lp;
    cs.v_dot = -(Poly2::y() * lp);
    return cs;
}

ChartSystem chart_u2(const VectorField& f) {
    const int n = degree(f);
    const Poly2 lp = lift_u2(f.P, n), lq = lift_u2(f.Q, n);
    ChartSystem cs;
    cs.chart = ChartId::U2;
    cs.n = n;
    cs.u_dot = lp - Poly2::x() * lq;
    cs.v_dot = -(Poly2::y() * lq);
    return cs;
}

ChartSystem chart_u3(const VectorField& f) {
    ChartSystem cs;
    cs.chart = ChartId::U3;
    cs.n = degree(f);
    cs.u_dot = f.P;
    cs.v_dot = f.Q;
    return cs;
}

ChartSystem v_copy(const ChartSystem& cs) {
    ChartSystem out = cs;
    switch (cs.chart) {
        case ChartId::U1: out.chart = ChartId::V1; break;
        case ChartId::U2: out.chart = ChartId::V2; break;
        case ChartId::U3: out.chart = ChartId::V3; break;
        default: throw std::invalid_argument("v_copy expects a U chart");
    }
    if (cs.n % 2 == 0) {  // factor (-1)^{n-1}
        out.u_dot = -cs.u_dot;
        out.v_dot = -cs.v_dot;
    }
    return out;
}

SnType classify_sn_type(const Matrix2& j) {
    const bool sn1 = sgn(j.a11) != 0 && sgn(j.a21) == 0 && sgn(j.a22) == 0;
    const bool sn2 = sgn(j.a22) != 0 && sgn(j.a11) == 0 && sgn(j.a21) == 0;
    if (sn1) return SnType::SN1;
    if (sn2) return SnType::SN2;
    throw std::invalid_argument("Jacobian does not match a saddle-node-at-infinity pattern");
}

namespace {

VectorField as_field(const ChartSystem& cs) { return {cs.u_dot, cs.v_dot}; }

InfinitePoint classify_equator_point(const ChartSystem& cs, const Rational& u0) {
    InfinitePoint p;
    p.chart = cs.chart;
    p.u = u0;
    const VectorField cf = as_field(cs);
    p.cls = classify_point(cf, {u0, Rational(0)});
    if (p.cls.kind == SingKind::SaddleNode)
        p.sn = classify_sn_type(jacobian(cf, {u0, Rational(0)}));
    return p;
}

// u'|_{v=0} as a univariate polynomial in u.
UniPoly equator_restriction(const ChartSystem& cs) {
    UniPoly g(static_cast<size_t>(std::max(cs.u_dot.degree(), 0)) + 1, Rational(0));
    for (const auto& [m, c] : cs.u_dot.terms())
        if (m.j == 0) g[m.i] = c;
    return g;
}

// Antipodal copy derived by the (-1)^{n-1} rule: for even n the V-chart flow
// is the U-chart flow reversed, so the classification maps instead of being
// recomputed.
InfinitePoint antipodal_copy(const InfinitePoint& up, int n) {
    InfinitePoint p = up;
    p.chart = up.chart == ChartId::U1 ? ChartId::V1 : ChartId::V2;
    if (n % 2 == 0) {
        p.cls.kind = time_reversed(up.cls.kind);
        p.cls.tau = -up.cls.tau;  // delta is invariant under J -> -J in 2x2
        if (p.cls.semihyp) {
            p.cls.semihyp->lambda = -p.cls.semihyp->lambda;
            p.cls.semihyp->a = -p.cls.semihyp->a;
        }
        if (p.cls.eigen) {
            p.cls.eigen->l1 = -p.cls.eigen->l1;
            p.cls.eigen->l2 = -p.cls.eigen->l2;
        }
    }
    return p;
}

}  // namespace

std::vector<InfinitePoint> infinite_singular_points(const VectorField& f) {
    const ChartSystem cu1 = chart_u1(f);
    const ChartSystem cu2 = chart_u2(f);

    const UniPoly g1 = equator_restriction(cu1);
    bool g1_zero = std::all_of(g1.begin(), g1.end(), [](const Rational& c) { return sgn(c) == 0; });
    if (g1_zero) throw std::domain_error("the whole equator consists of singular points");
    const std::vector<Rational> roots1 = rational_roots(g1);

    const UniPoly g2 = equator_restriction(cu2);
    bool g2_zero = std::all_of(g2.begin(), g2.end(), [](const Rational& c) { return sgn(c) == 0; });
    std::vector<Rational> roots2 = g2_zero ? std::vector<Rational>{} : rational_roots(g2);
    if (g2_zero) throw std::domain_error("the whole equator consists of singular points");

    // A U2 root u2 > 0 is the same sphere point as the U1 root 1/u2; keep the
    // U1 copy only. Negative-u2 roots are antipodes of U1 roots and stay.
    roots2.erase(std::remove_if(roots2.begin(), roots2.end(),
                                [&](const Rational& u2) {
                                    if (sgn(u2) <= 0) return false;
                                    const Rational rec = 1 / u2;
                                    return std::find(roots1.begin(), roots1.end(), rec) !=
                                           roots1.end();
                                }),
                 roots2.end());

    std::vector<InfinitePoint> out;
    for (const auto& u0 : roots1) out.push_back(classify_equator_point(cu1, u0));
    for (const auto& u0 : roots2) out.push_back(classify_equator_point(cu2, u0));

    // Antipodal copies for points whose opposite direction is not already
    // covered by a U-chart entry. Antipode of U1(u) is U2(1/u) for u < 0,
    // and vice versa.
    auto antipode_present = [&](ChartId chart, const Rational& u0) {
        if (sgn(u0) >= 0) return false;
        const Rational rec = 1 / u0;
        const auto& other = chart == ChartId::U1 ? roots2 : roots1;
        return std::find(other.begin(), other.end(), rec) != other.end();
    };
    std::vector<InfinitePoint> copies;
    for (const auto& ip : out)
        if (!antipode_present(ip.chart, ip.u)) copies.push_back(antipodal_copy(ip, cu1.n));
    out.insert(out.end(), copies.begin(), copies.end());
    return out;
}

Eigen::Vector2d equator_position(const InfinitePoint& p) {
    const double u = to_double(p.u);
    const double norm = std::sqrt(1.0 + u * u);
    switch (p.chart) {
        case ChartId::U1: return {1.0 / norm, u / norm};
        case ChartId::V1: return {-1.0 / norm, -u / norm};
        case ChartId::U2: return {u / norm, 1.0 / norm};
        case ChartId::V2: return {-u / norm, -1.0 / norm};
        default: throw std::invalid_argument("equator position needs a U1/U2/V1/V2 point");
    }
}

DiscFlow::DiscFlow(const VectorField& f) : n_(sisport::degree(f)) {
    pt_ = lift(f.P, n_);
    qt_ = lift(f.Q, n_);
}

std::vector<DiscFlow::Term> DiscFlow::lift(const Poly2& p, int n) {
    // s^n P(X/s, Y/s) = sum c_ij X^i Y^j s^{n-i-j}
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) out.push_back({m.i, m.j, n - m.i - m.j, to_double(c)});
    return out;
}

double DiscFlow::eval(const std::vector<Term>& terms, double X, double Y, double s) {
    double acc = 0;
    for (const auto& t : terms)
        acc += t.c * std::pow(X, t.i) * std::pow(Y, t.j) * std::pow(s, t.k);
    return acc;
}

Eigen::Vector2d DiscFlow::operator()(const Eigen::Vector2d& xy) const {
    const double X = xy.x(), Y = xy.y();
    const double s2 = 1.0 - X * X - Y * Y;
    if (s2 <= 0) return Eigen::Vector2d::Zero();
    const double s = std::sqrt(s2);
    const double p = eval(pt_, X, Y, s);
    const double q = eval(qt_, X, Y, s);
    return {p * (1.0 - X * X) - X * Y * q, q * (1.0 - Y * Y) - X * Y * p};
}

}  // namespace sisport
