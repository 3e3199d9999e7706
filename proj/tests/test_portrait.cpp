#include <doctest.h>

#include <cmath>
#include <random>

#include "sisport/portrait.hpp"

using namespace sisport;

namespace {
SisParams sp(long b, long c, long k, long m) {
    return {Rational(b), Rational(c), Rational(k), Rational(m)};
}
}  // namespace

TEST_CASE("project_to_disc") {
    const DiscPoint o = project_to_disc(0, 0);
    CHECK(o.x == 0.0);
    CHECK(o.y == 0.0);
    const DiscPoint q = project_to_disc(4, 0);
    CHECK(q.x == doctest::Approx(4.0 / std::sqrt(17.0)));
    CHECK(q.y == 0.0);
    const DiscPoint far = project_to_disc(1e9, 0);
    CHECK(far.x == doctest::Approx(1.0));
}

TEST_CASE("projection is norm-monotone and invertible") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-30, 30);
    for (int t = 0; t < 300; ++t) {
        const double x1 = u(rng), y1 = u(rng), x2 = u(rng), y2 = u(rng);
        const DiscPoint d1 = project_to_disc(x1, y1), d2 = project_to_disc(x2, y2);
        const double n1 = std::hypot(x1, y1), n2 = std::hypot(x2, y2);
        if (n1 < n2) CHECK(std::hypot(d1.x, d1.y) < std::hypot(d2.x, d2.y));
        const auto [bx, by] = disc_to_plane(d1);
        CHECK(bx == doctest::Approx(x1).epsilon(1e-9));
        CHECK(by == doctest::Approx(y1).epsilon(1e-9));
    }
}

TEST_CASE("forward orbit runs to the attracting steady state") {
    const SisParams p = sp(1, 1, 4, 1);
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const auto stops = singular_disc_points(rep);

    // q = (4,0) is a saddle here; the attractor is p = (2,2).
    const Orbit o = integrate_orbit(flow, stops, project_to_disc(3, 1), true);
    CHECK(o.end == OrbitEnd::NearSingular);
    REQUIRE(o.near_singular_index >= 0);
    const DiscPoint target = project_to_disc(2, 2);
    const DiscPoint hit = stops[o.near_singular_index];
    CHECK(std::hypot(hit.x - target.x, hit.y - target.y) < 1e-12);
}

TEST_CASE("coalesced case attracts the positive quadrant") {
    const SisParams p = sp(1, 1, 2, 1);
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const auto stops = singular_disc_points(rep);
    const Orbit o = integrate_orbit(flow, stops, project_to_disc(1, 0.5), true);
    CHECK(o.end == OrbitEnd::NearSingular);
    const DiscPoint target = project_to_disc(2, 0);
    const DiscPoint hit = stops[o.near_singular_index];
    CHECK(std::hypot(hit.x - target.x, hit.y - target.y) < 1e-12);
}

TEST_CASE("orbits seeded on the axis line stay on it") {
    const SisParams p = sp(1, 1, 4, 1);
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const auto stops = singular_disc_points(rep);
    const Orbit o = integrate_orbit(flow, stops, project_to_disc(1, 0), true);
    REQUIRE(o.pts.size() > 3);
    for (const auto& pt : o.pts) CHECK(std::abs(pt.y) <= 1e-9);
}

TEST_CASE("orbits seeded on x + y = k stay on its disc curve") {
    const SisParams p = sp(1, 1, 4, 1);
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const auto stops = singular_disc_points(rep);
    for (bool fwd : {true, false}) {
        const Orbit o = integrate_orbit(flow, stops, project_to_disc(1, 3), fwd);
        REQUIRE(o.pts.size() > 3);
        for (const auto& pt : o.pts) {
            const double s = std::sqrt(std::max(0.0, 1.0 - pt.x * pt.x - pt.y * pt.y));
            // Normalized residual of the projected line equation.
            const double val = pt.x + pt.y - 4.0 * s;
            const double grad = std::hypot(1.0 + 4.0 * pt.x / std::max(s, 1e-9),
                                           1.0 + 4.0 * pt.y / std::max(s, 1e-9));
            CHECK(std::abs(val) / grad <= 1e-6);
        }
    }
}

TEST_CASE("separatrix seeds per point kind") {
    const PortraitReport generic = full_report(sp(1, 1, 4, 1));
    const auto seeds = separatrix_seeds(generic);
    // Saddle q contributes 4, the node p none, 4 equator saddle-nodes 2 each.
    int from_saddle = 0;
    for (const auto& s : seeds)
        if (s.source_index == 1) ++from_saddle;
    CHECK(from_saddle == 4);
    CHECK(seeds.size() == 12);

    const PortraitReport coalesced = full_report(sp(1, 1, 2, 1));
    const auto seeds2 = separatrix_seeds(coalesced);
    int from_sn = 0;
    for (const auto& s : seeds2)
        if (s.source_index == 0) ++from_sn;
    CHECK(from_sn == 3);  // two strong-direction seeds and one center seed
    CHECK(seeds2.size() == 11);
}

TEST_CASE("separatrix orbits escape their originating stop ball") {
    const SisParams p = sp(1, 1, 4, 1);
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const auto stops = singular_disc_points(rep);
    int long_orbits = 0;
    for (const auto& s : separatrix_seeds(rep)) {
        const Orbit o = integrate_orbit(flow, stops, s.at, s.forward);
        if (o.pts.size() >= 10) ++long_orbits;
    }
    // All four saddle separatrices trace out of the 1e-3 neighborhood.
    CHECK(long_orbits >= 4);
}

TEST_CASE("step underflow is reported as a truncated orbit") {
    const SisParams p = sp(1, 1, 4, 1);
    const DiscFlow flow(make_sis_field(p));
    // Seeding exactly at a singular point gives zero velocity everywhere;
    // the controller collapses the step until it reports underflow.
    const DiscPoint at_saddle = project_to_disc(4, 0);
    IntegrationControls ctl;
    ctl.eps_sing = 1e-9;  // keep the stop ball from firing first
    const Orbit o = integrate_orbit(flow, {}, at_saddle, true, ctl);
    CHECK((o.end == OrbitEnd::StepUnderflow || o.end == OrbitEnd::MaxSteps));
}

TEST_CASE("rendering is deterministic and complete") {
    const SisParams p = sp(1, 1, 4, 1);
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const auto orbits = default_portrait_orbits(rep, flow);
    const std::string a = render_svg(rep, orbits);
    const std::string b = render_svg(rep, orbits);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("viewBox=\"-1.05 -1.05 2.10 2.10\"") != std::string::npos);

    const std::string bare = render_svg(rep, {});
    CHECK(bare.find("circle") != std::string::npos);
    CHECK(bare.find("polygon") == std::string::npos);  // no orbits, no arrowheads
}
