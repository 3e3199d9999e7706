#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>

#include "sisport/field.hpp"

namespace sisport {

enum class SingKind {
    Saddle,
    NodeStable,
    NodeUnstable,
    FocusStable,
    FocusUnstable,
    CenterOrWeakFocus,
    SaddleNode,
    SemiHypNodeUnstable,
    SemiHypSaddle,
    Degenerate,
};

const char* to_string(SingKind k);
SingKind parse_sing_kind(const std::string& s);

bool is_node(SingKind k);
// Flow with reversed time; stability labels swap, saddles and saddle-nodes
// are unchanged. Throws for kinds without a counterpart in the enum.
SingKind time_reversed(SingKind k);

// Numeric eigendata of the Jacobian, for rendering and separatrix seeding.
// For semi-hyperbolic points v1 spans the kernel (center direction, oriented
// like the normal-form x-axis) and v2 the nonzero eigendirection.
struct EigenData {
    std::complex<double> l1, l2;
    bool has_vectors = false;
    Eigen::Vector2d v1 = Eigen::Vector2d::Zero();
    Eigen::Vector2d v2 = Eigen::Vector2d::Zero();
};

// Evidence from the semi-hyperbolic normal-form procedure: the center-manifold
// restriction behaves like a*x^alpha, lambda is the nonzero eigenvalue.
struct SemiHypEvidence {
    Rational lambda;
    Rational a;
    int alpha = 0;
};

struct Classification {
    SingKind kind = SingKind::Degenerate;
    Rational delta{0};
    Rational tau{0};
    std::optional<SemiHypEvidence> semihyp;
    std::optional<EigenData> eigen;
    // Set when the center-manifold series stayed zero through the retry cap.
    std::string diagnostic;
};

// x' = A(x,y), y' = lambda*y + B(x,y) with A, B of order >= 2; change maps
// normal-form coordinates to the input coordinates, columns are the center
// and strong eigendirections.
struct NormalForm {
    Rational lambda;
    Poly2 A;
    Poly2 B;
    Matrix2 change;
};

// delta != 0 required. Saddle for delta < 0; node/focus split on the sign of
// tau^2 - 4*delta (ties count as nodes), center-or-weak-focus when tau = 0.
Classification classify_nondegenerate(const Rational& delta, const Rational& tau);

// Requires det J = 0 and trace J != 0, singular point at the origin.
NormalForm to_normal_form(const VectorField& f, const Matrix2& j);

// Truncated series f(x) with lambda*f + B(x, f(x)) = 0 mod x^{order+1}.
Poly2 solve_center_manifold(const Rational& lambda, const Poly2& B, int order);

// Lowest term a*x^alpha of A(x, f(x)) decides the kind: alpha odd gives an
// unstable node (a > 0) or a saddle (a < 0); alpha even a saddle-node.
Classification classify_semi_hyperbolic(const NormalForm& nf, int order = 10);

// Full dispatch at an exact singular point of f.
Classification classify_point(const VectorField& f, const RatPoint& at);

}  // namespace sisport
