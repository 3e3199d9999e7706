#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "sisport/classify.hpp"
#include "sisport/field.hpp"

namespace sisport {

enum class ChartId { U1, U2, U3, V1, V2, V3 };

const char* to_string(ChartId c);
ChartId parse_chart_id(const std::string& s);

// Induced system in a chart after clearing v^n and dropping the positive
// Delta(z) factor (orbit-equivalent time rescale).
struct ChartSystem {
    ChartId chart = ChartId::U1;
    Poly2 u_dot;
    Poly2 v_dot;
    bool scaled = true;  // the common positive factor was dropped
    int n = 0;           // field degree used to clear denominators
};

// x = 1/v, y = u/v: (u', v') = (Q - u P, -v P) lifted by v^n.
ChartSystem chart_u1(const VectorField& f);
// x = u/v, y = 1/v: (u', v') = (P - u Q, -v Q) lifted by v^n.
ChartSystem chart_u2(const VectorField& f);
// Identity chart.
ChartSystem chart_u3(const VectorField& f);
// Sign rule (-1)^{n-1}: the antipodal copy of a U-chart system.
ChartSystem v_copy(const ChartSystem& cs);

enum class SnType { SN1, SN2 };
const char* to_string(SnType t);

// Jacobian shape of a semi-hyperbolic saddle-node on the equator:
// (lambda *; 0 0) is SN1, (0 *; 0 lambda) is SN2.
SnType classify_sn_type(const Matrix2& j);

struct InfinitePoint {
    ChartId chart = ChartId::U1;
    Rational u{0};  // equator location (u, 0) in the chart
    Classification cls;
    std::optional<SnType> sn;
};

// Equator singular points across U1, U2 and the antipodal V copies needed to
// cover every singular direction exactly once per disc-boundary point.
// Throws std::domain_error when the whole equator is singular.
std::vector<InfinitePoint> infinite_singular_points(const VectorField& f);

// Disc-boundary position of an infinite point.
Eigen::Vector2d equator_position(const InfinitePoint& p);

// Numeric direction field of the compactified flow on the closed Poincare
// disc, smooth up to the equator (which is invariant). Immutable, shareable.
class DiscFlow {
public:
    explicit DiscFlow(const VectorField& f);
    // Velocity at a disc point; zero at singular points and outside the disc.
    Eigen::Vector2d operator()(const Eigen::Vector2d& xy) const;
    int degree() const { return n_; }

private:
    struct Term {
        int i, j, k;  // X^i Y^j s^k
        double c;
    };
    static std::vector<Term> lift(const Poly2& p, int n);
    static double eval(const std::vector<Term>& terms, double X, double Y, double s);
    std::vector<Term> pt_, qt_;
    int n_;
};

}  // namespace sisport
