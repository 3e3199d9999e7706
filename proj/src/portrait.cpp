#include "sisport/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sisport {

DiscPoint project_to_disc(double x, double y) {
    const double w = std::sqrt(1.0 + x * x + y * y);
    return {x / w, y / w};
}

std::pair<double, double> disc_to_plane(const DiscPoint& p) {
    const double s2 = 1.0 - p.x * p.x - p.y * p.y;
    const double s = std::sqrt(std::max(s2, 0.0));
    return {p.x / s, p.y / s};
}

const char* to_string(OrbitEnd e) {
    switch (e) {
        case OrbitEnd::ArcBudget: return "arc-budget";
        case OrbitEnd::NearSingular: return "near-singular";
        case OrbitEnd::NearEquator: return "near-equator";
        case OrbitEnd::StepUnderflow: return "step-underflow";
        case OrbitEnd::MaxSteps: return "max-steps";
    }
    return "?";
}

std::vector<DiscPoint> singular_disc_points(const PortraitReport& rep) {
    std::vector<DiscPoint> pts;
    for (const auto& fp : rep.finite) {
        const DiscPoint d =
            project_to_disc(to_double(fp.point.first), to_double(fp.point.second));
        pts.push_back(d);
    }
    for (const auto& ip : rep.infinite) {
        const Eigen::Vector2d e = equator_position(ip);
        pts.push_back({e.x(), e.y()});
    }
    return pts;
}

namespace {

// Dormand-Prince 5(4) pair.
struct Rk45Step {
    Eigen::Vector2d y5;
    double err;  // scaled error estimate
};

template <class Field>
Rk45Step dp_step(const Field& f, const Eigen::Vector2d& y, double h, double atol, double rtol) {
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const Eigen::Vector2d k1 = f(y);
    const Eigen::Vector2d k2 = f(y + h * a21 * k1);
    const Eigen::Vector2d k3 = f(y + h * (a31 * k1 + a32 * k2));
    const Eigen::Vector2d k4 = f(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::Vector2d k5 = f(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::Vector2d k6 =
        f(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::Vector2d y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Eigen::Vector2d k7 = f(y5);
    const Eigen::Vector2d errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0;
    for (int i = 0; i < 2; ++i) {
        const double sc = atol + rtol * std::max(std::abs(y(i)), std::abs(y5(i)));
        err = std::max(err, std::abs(errv(i)) / sc);
    }
    return {y5, err};
}

}  // namespace

Orbit integrate_orbit(const DiscFlow& flow, const std::vector<DiscPoint>& stop_points,
                      DiscPoint seed, bool forward, const IntegrationControls& ctl) {
    Orbit orbit;
    orbit.forward = forward;
    orbit.pts.push_back(seed);

    const double dir = forward ? 1.0 : -1.0;
    auto f = [&](const Eigen::Vector2d& y) { return dir * flow(y); };

    Eigen::Vector2d y(seed.x, seed.y);
    double h = 1e-3;
    double arc = 0;
    const double hmin = 1e-14;

    // A seed placed inside a stop ball (separatrix offsets are smaller than
    // eps_sing) must first escape it before that ball can terminate the orbit.
    std::vector<char> armed(stop_points.size());
    for (size_t i = 0; i < stop_points.size(); ++i) {
        const double d = std::hypot(seed.x - stop_points[i].x, seed.y - stop_points[i].y);
        armed[i] = d > ctl.eps_sing ? 1 : 0;
    }

    auto near_stop = [&](const Eigen::Vector2d& p, int& idx) {
        for (size_t i = 0; i < stop_points.size(); ++i) {
            const double d = std::hypot(p.x() - stop_points[i].x, p.y() - stop_points[i].y);
            if (!armed[i]) {
                if (d > 1.5 * ctl.eps_sing) armed[i] = 1;
                continue;
            }
            if (d <= ctl.eps_sing) {
                idx = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };

    for (long step = 0; step < ctl.max_steps; ++step) {
        const Rk45Step trial = dp_step(f, y, h, ctl.atol, ctl.rtol);
        const double moved = (trial.y5 - y).norm();
        if (trial.err > 1.0 || moved > ctl.max_disc_step) {
            const double shrink = trial.err > 1.0
                                      ? std::max(0.2, 0.9 * std::pow(trial.err, -0.2))
                                      : 0.5;
            h *= shrink;
            if (h < hmin) {
                orbit.end = OrbitEnd::StepUnderflow;
                return orbit;
            }
            continue;
        }

        y = trial.y5;
        arc += moved;
        orbit.pts.push_back({y.x(), y.y()});

        int idx = -1;
        if (near_stop(y, idx)) {
            orbit.end = OrbitEnd::NearSingular;
            orbit.near_singular_index = idx;
            return orbit;
        }
        if (1.0 - y.norm() <= ctl.eps_eq) {
            orbit.end = OrbitEnd::NearEquator;
            return orbit;
        }
        if (arc >= ctl.arc_budget) {
            orbit.end = OrbitEnd::ArcBudget;
            return orbit;
        }

        const double grow = trial.err > 1e-12 ? 0.9 * std::pow(trial.err, -0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
    }
    orbit.end = OrbitEnd::MaxSteps;
    return orbit;
}

namespace {

// Push a plane direction through the projection differential at a plane point.
Eigen::Vector2d push_direction(double x, double y, const Eigen::Vector2d& v) {
    const double w2 = 1.0 + x * x + y * y;
    const double w = std::sqrt(w2);
    // d/dt [ (x,y)/w ] = v/w - (x,y) (x vx + y vy) / w^3
    const double dot = x * v.x() + y * v.y();
    Eigen::Vector2d out(v.x() / w - x * dot / (w * w2), v.y() / w - y * dot / (w * w2));
    const double n = out.norm();
    return n > 0 ? Eigen::Vector2d(out / n) : Eigen::Vector2d(0, 0);
}

}  // namespace

std::vector<SeparatrixSeed> separatrix_seeds(const PortraitReport& rep, double eps) {
    std::vector<SeparatrixSeed> seeds;

    for (size_t i = 0; i < rep.finite.size(); ++i) {
        const auto& fp = rep.finite[i];
        const double px = to_double(fp.point.first), py = to_double(fp.point.second);
        const DiscPoint base = project_to_disc(px, py);
        if (!fp.cls.eigen || !fp.cls.eigen->has_vectors) continue;
        const EigenData& e = *fp.cls.eigen;

        if (fp.cls.kind == SingKind::Saddle) {
            // Two seeds per eigendirection; trace unstable forward, stable
            // backward.
            for (int which = 0; which < 2; ++which) {
                const Eigen::Vector2d v = which == 0 ? e.v1 : e.v2;
                const double lambda = which == 0 ? e.l1.real() : e.l2.real();
                const Eigen::Vector2d dv = push_direction(px, py, v);
                for (double s : {1.0, -1.0}) {
                    seeds.push_back({{base.x + s * eps * dv.x(), base.y + s * eps * dv.y()},
                                     lambda > 0,
                                     static_cast<int>(i)});
                }
            }
        } else if (fp.cls.kind == SingKind::SaddleNode && fp.cls.semihyp) {
            // v1 is the center direction oriented like the normal-form +x
            // axis, v2 the strong direction. The lone center separatrix sits
            // on the repelling side for lambda < 0 (sign of a), the
            // attracting side for lambda > 0.
            const auto& ev = *fp.cls.semihyp;
            const double side = sgn(ev.a) > 0 ? 1.0 : -1.0;
            const bool lam_neg = sgn(ev.lambda) < 0;
            const double center_side = lam_neg ? side : -side;
            const Eigen::Vector2d vc = push_direction(px, py, e.v1);
            const Eigen::Vector2d vs = push_direction(px, py, e.v2);
            seeds.push_back({{base.x + center_side * eps * vc.x(),
                              base.y + center_side * eps * vc.y()},
                             lam_neg,
                             static_cast<int>(i)});
            for (double s : {1.0, -1.0}) {
                seeds.push_back({{base.x + s * eps * vs.x(), base.y + s * eps * vs.y()},
                                 !lam_neg,
                                 static_cast<int>(i)});
            }
        }
    }

    // Equator saddle-nodes: one inward seed each, traced both ways by the
    // caller; the equator itself is the disc boundary.
    for (size_t i = 0; i < rep.infinite.size(); ++i) {
        if (rep.infinite[i].cls.kind != SingKind::SaddleNode) continue;
        const Eigen::Vector2d pos = equator_position(rep.infinite[i]);
        const Eigen::Vector2d inward = -pos.normalized();
        const double off = std::max(eps, 5e-4);
        seeds.push_back({{pos.x() + off * inward.x(), pos.y() + off * inward.y()},
                         true,
                         static_cast<int>(rep.finite.size() + i)});
        seeds.push_back({{pos.x() + off * inward.x(), pos.y() + off * inward.y()},
                         false,
                         static_cast<int>(rep.finite.size() + i)});
    }
    return seeds;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    // Normalize negative zero so identical reports render identical bytes.
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.5f", v);
    return buf;
}

// SVG y-axis points down; flip on output.
std::string svg_xy(const DiscPoint& p) { return fmt(p.x) + "," + fmt(-p.y); }

void polyline(std::string& out, const std::vector<DiscPoint>& pts, const std::string& color,
              double width, const std::string& dash = "") {
    if (pts.size() < 2) return;
    out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) +
           "\"";
    if (!dash.empty()) out += " stroke-dasharray=\"" + dash + "\"";
    out += " points=\"";
    // Keep files manageable for very long orbits.
    const size_t stride = pts.size() > 4000 ? pts.size() / 4000 + 1 : 1;
    for (size_t i = 0; i < pts.size(); i += stride) {
        if (i) out += " ";
        out += svg_xy(pts[i]);
    }
    if ((pts.size() - 1) % stride != 0) out += " " + svg_xy(pts.back());
    out += "\"/>\n";
}

void arrowheads(std::string& out, const std::vector<DiscPoint>& pts, const std::string& color) {
    if (pts.size() < 8) return;
    double total = 0;
    std::vector<double> cum(pts.size(), 0);
    for (size_t i = 1; i < pts.size(); ++i) {
        total += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
        cum[i] = total;
    }
    if (total < 0.05) return;
    for (double frac : {1.0 / 3, 2.0 / 3}) {
        const double target = frac * total;
        size_t i = 1;
        while (i + 1 < pts.size() && cum[i] < target) ++i;
        const double dx = pts[i].x - pts[i - 1].x, dy = pts[i].y - pts[i - 1].y;
        const double n = std::hypot(dx, dy);
        if (n < 1e-12) continue;
        const double ux = dx / n, uy = dy / n;
        const double ax = pts[i].x, ay = pts[i].y;
        const double s = 0.02;
        const DiscPoint tip{ax + s * ux, ay + s * uy};
        const DiscPoint left{ax - s * 0.6 * uy, ay + s * 0.6 * ux};
        const DiscPoint right{ax + s * 0.6 * uy, ay - s * 0.6 * ux};
        out += "<polygon fill=\"" + color + "\" points=\"" + svg_xy(tip) + " " +
               svg_xy(left) + " " + svg_xy(right) + "\"/>\n";
    }
}

void point_marker(std::string& out, const DiscPoint& p, SingKind kind) {
    const std::string cx = fmt(p.x), cy = fmt(-p.y);
    const double r = 0.022;
    switch (kind) {
        case SingKind::NodeStable:
        case SingKind::FocusStable:
            out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + fmt(r) +
                   "\" fill=\"#000000\"/>\n";
            break;
        case SingKind::SaddleNode:
            // Half-filled: stable half dark.
            out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + fmt(r) +
                   "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.006\"/>\n";
            out += "<path d=\"M " + cx + " " + fmt(-p.y - r) + " A " + fmt(r) + " " + fmt(r) +
                   " 0 0 1 " + cx + " " + fmt(-p.y + r) + " Z\" fill=\"#000000\"/>\n";
            break;
        default:
            out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + fmt(r) +
                   "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.006\"/>\n";
            break;
    }
}

}  // namespace

std::string render_svg(const PortraitReport& rep, const std::vector<Orbit>& orbits,
                       const SvgStyle& style) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out +=
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.10 2.10\" "
        "width=\"640\" height=\"640\">\n";
    out += "<rect x=\"-1.05\" y=\"-1.05\" width=\"2.10\" height=\"2.10\" fill=\"#ffffff\"/>\n";

    if (style.shade_quadrant) {
        // Disc image of {x >= 0, y >= 0} is the first quadrant of the disc.
        out += "<path d=\"M 0,0 L 1,0 A 1 1 0 0 0 0,-1 Z\" fill=\"#f2f7f2\"/>\n";
    }

    out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" "
           "stroke-width=\"0.01\"/>\n";

    // Invariant lines as projected curves.
    for (const auto& curve : rep.lines) {
        const Rational a1 = curve.f.coeff(1, 0), a2 = curve.f.coeff(0, 1),
                       a0 = curve.f.coeff(0, 0);
        // Parametrize a1*x + a2*y + a0 = 0.
        double bx, by, dx, dy;
        if (sgn(a2) != 0) {
            bx = 0;
            by = to_double(-a0 / a2);
            dx = 1;
            dy = to_double(-a1 / a2);
        } else {
            bx = to_double(-a0 / a1);
            by = 0;
            dx = 0;
            dy = 1;
        }
        std::vector<DiscPoint> pts;
        const int samples = 400;
        for (int i = 0; i <= samples; ++i) {
            const double theta = -M_PI / 2 + M_PI * i / samples;
            const double t = std::tan(std::clamp(theta, -1.5607, 1.5607));
            pts.push_back(project_to_disc(bx + t * dx, by + t * dy));
        }
        polyline(out, pts, style.line_color, style.stroke_width * 1.4);
    }

    for (const auto& orbit : orbits) {
        const bool sep = orbit.origin == OrbitOrigin::Separatrix;
        const std::string color = sep ? style.separatrix_color : style.orbit_color;
        polyline(out, orbit.pts, color, sep ? style.stroke_width * 1.3 : style.stroke_width);
        // Arrowheads follow flow time: reverse drawn direction for backward
        // orbits.
        if (orbit.forward) {
            arrowheads(out, orbit.pts, color);
        } else {
            std::vector<DiscPoint> rev(orbit.pts.rbegin(), orbit.pts.rend());
            arrowheads(out, rev, color);
        }
    }

    for (const auto& ip : rep.infinite) {
        const Eigen::Vector2d e = equator_position(ip);
        point_marker(out, {e.x(), e.y()}, ip.cls.kind);
    }
    for (const auto& fp : rep.finite) {
        const DiscPoint d =
            project_to_disc(to_double(fp.point.first), to_double(fp.point.second));
        point_marker(out, d, fp.cls.kind);
    }

    out += "</svg>\n";
    return out;
}

std::vector<Orbit> default_portrait_orbits(const PortraitReport& rep, const DiscFlow& flow,
                                           const IntegrationControls& ctl) {
    const std::vector<DiscPoint> stops = singular_disc_points(rep);
    std::vector<Orbit> orbits;

    for (const auto& seed : separatrix_seeds(rep)) {
        Orbit o = integrate_orbit(flow, stops, seed.at, seed.forward, ctl);
        o.origin = OrbitOrigin::Separatrix;
        o.origin_id = seed.source_index;
        if (o.pts.size() >= 4) orbits.push_back(std::move(o));
    }

    // Invariant-line orbits: seed midway between consecutive marked points on
    // each line, plus just outside the extremes.
    for (size_t li = 0; li < rep.lines.size(); ++li) {
        const auto& curve = rep.lines[li];
        const Rational a1 = curve.f.coeff(1, 0), a2 = curve.f.coeff(0, 1),
                       a0 = curve.f.coeff(0, 0);
        std::vector<double> params;  // t along the line
        double bx, by, dx, dy;
        if (sgn(a2) != 0) {
            bx = 0;
            by = to_double(-a0 / a2);
            dx = 1;
            dy = to_double(-a1 / a2);
        } else {
            bx = to_double(-a0 / a1);
            by = 0;
            dx = 0;
            dy = 1;
        }
        std::vector<double> knots;
        for (const auto& fp : rep.finite) {
            const double px = to_double(fp.point.first), py = to_double(fp.point.second);
            // On-line check, then parameter along the direction.
            const double val = to_double(a1) * px + to_double(a2) * py + to_double(a0);
            if (std::abs(val) < 1e-9) knots.push_back(dx != 0 ? (px - bx) / dx : (py - by) / dy);
        }
        std::sort(knots.begin(), knots.end());
        if (knots.empty()) {
            params = {0.0};
        } else {
            params.push_back(knots.front() - 2.0);
            for (size_t i = 0; i + 1 < knots.size(); ++i)
                params.push_back((knots[i] + knots[i + 1]) / 2);
            params.push_back(knots.back() + 2.0);
        }
        for (double t : params) {
            const DiscPoint seed = project_to_disc(bx + t * dx, by + t * dy);
            for (bool fwd : {true, false}) {
                Orbit o = integrate_orbit(flow, stops, seed, fwd, ctl);
                o.origin = OrbitOrigin::InvariantLine;
                o.origin_id = static_cast<int>(li);
                if (o.pts.size() >= 4) orbits.push_back(std::move(o));
            }
        }
    }

    // Fixed ring of generic seeds.
    for (int i = 0; i < 8; ++i) {
        const double ang = 2 * M_PI * i / 8 + 0.19;
        const DiscPoint seed{0.62 * std::cos(ang), 0.62 * std::sin(ang)};
        for (bool fwd : {true, false}) {
            Orbit o = integrate_orbit(flow, stops, seed, fwd, ctl);
            o.origin = OrbitOrigin::GenericSeed;
            o.origin_id = i;
            if (o.pts.size() >= 4) orbits.push_back(std::move(o));
        }
    }
    return orbits;
}

}  // namespace sisport
