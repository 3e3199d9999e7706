#pragma once

#include <string>
#include <vector>

#include "sisport/compactify.hpp"
#include "sisport/sis_analysis.hpp"

namespace sisport {

struct DiscPoint {
    double x = 0;
    double y = 0;
};

// Central projection (x, y) / sqrt(1 + x^2 + y^2); plane -> open unit disc.
DiscPoint project_to_disc(double x, double y);
// Inverse; only valid strictly inside the disc.
std::pair<double, double> disc_to_plane(const DiscPoint& p);

enum class OrbitEnd {
    ArcBudget,
    NearSingular,
    NearEquator,
    StepUnderflow,
    MaxSteps,
};
const char* to_string(OrbitEnd e);

enum class OrbitOrigin { GenericSeed, Separatrix, InvariantLine, Equator };

struct Orbit {
    std::vector<DiscPoint> pts;
    bool forward = true;
    OrbitEnd end = OrbitEnd::ArcBudget;
    int near_singular_index = -1;  // index into the stop-point list when NearSingular
    OrbitOrigin origin = OrbitOrigin::GenericSeed;
    int origin_id = -1;  // singular point / invariant line index, when applicable
};

struct IntegrationControls {
    double rtol = 1e-9;
    double atol = 1e-12;
    double max_disc_step = 0.05;
    double arc_budget = 40.0;
    double eps_sing = 1e-3;
    double eps_eq = 1e-4;
    long max_steps = 200000;
};

// Known singular points on the disc (finite images and equator points); the
// integrator stops within eps_sing of any of them.
std::vector<DiscPoint> singular_disc_points(const PortraitReport& rep);

Orbit integrate_orbit(const DiscFlow& flow, const std::vector<DiscPoint>& stop_points,
                      DiscPoint seed, bool forward, const IntegrationControls& ctl = {});

struct SeparatrixSeed {
    DiscPoint at;
    bool forward = true;
    int source_index = -1;  // finite-point index, or ~infinite index offset
};

// Seeds offset eps from saddles (along eigenvectors) and saddle-nodes (along
// the recorded tangency directions), plus inward offsets at equator
// saddle-nodes.
std::vector<SeparatrixSeed> separatrix_seeds(const PortraitReport& rep, double eps = 1e-4);

struct SvgStyle {
    double stroke_width = 0.006;
    std::string orbit_color = "#1f4e79";
    std::string line_color = "#b03030";
    std::string separatrix_color = "#222222";
    bool shade_quadrant = false;
};

// Deterministic standalone SVG of the disc portrait.
std::string render_svg(const PortraitReport& rep, const std::vector<Orbit>& orbits,
                       const SvgStyle& style = {});

// Default orbit set for the portrait command: separatrices, invariant-line
// segments, and a fixed ring of generic seeds. Deterministic.
std::vector<Orbit> default_portrait_orbits(const PortraitReport& rep, const DiscFlow& flow,
                                           const IntegrationControls& ctl = {});

}  // namespace sisport
