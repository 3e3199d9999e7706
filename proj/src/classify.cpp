#include "sisport/classify.hpp"

#include <stdexcept>

namespace sisport {

const char* to_string(SingKind k) {
    switch (k) {
        case SingKind::Saddle: return "Saddle";
        case SingKind::NodeStable: return "NodeStable";
        case SingKind::NodeUnstable: return "NodeUnstable";
        case SingKind::FocusStable: return "FocusStable";
        case SingKind::FocusUnstable: return "FocusUnstable";
        case SingKind::CenterOrWeakFocus: return "CenterOrWeakFocus";
        case SingKind::SaddleNode: return "SaddleNode";
        case SingKind::SemiHypNodeUnstable: return "SemiHypNodeUnstable";
        case SingKind::SemiHypSaddle: return "SemiHypSaddle";
        case SingKind::Degenerate: return "Degenerate";
    }
    return "?";
}

SingKind parse_sing_kind(const std::string& s) {
    for (SingKind k :
         {SingKind::Saddle, SingKind::NodeStable, SingKind::NodeUnstable, SingKind::FocusStable,
          SingKind::FocusUnstable, SingKind::CenterOrWeakFocus, SingKind::SaddleNode,
          SingKind::SemiHypNodeUnstable, SingKind::SemiHypSaddle, SingKind::Degenerate})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown singular point kind: " + s);
}

bool is_node(SingKind k) {
    return k == SingKind::NodeStable || k == SingKind::NodeUnstable;
}

SingKind time_reversed(SingKind k) {
    switch (k) {
        case SingKind::Saddle: return SingKind::Saddle;
        case SingKind::NodeStable: return SingKind::NodeUnstable;
        case SingKind::NodeUnstable: return SingKind::NodeStable;
        case SingKind::FocusStable: return SingKind::FocusUnstable;
        case SingKind::FocusUnstable: return SingKind::FocusStable;
        case SingKind::CenterOrWeakFocus: return SingKind::CenterOrWeakFocus;
        case SingKind::SaddleNode: return SingKind::SaddleNode;
        case SingKind::Degenerate: return SingKind::Degenerate;
        case SingKind::SemiHypNodeUnstable:
        case SingKind::SemiHypSaddle:
            throw std::logic_error("time reversal of this kind is not representable");
    }
    throw std::logic_error("unreachable");
}

Classification classify_nondegenerate(const Rational& delta, const Rational& tau) {
    if (sgn(delta) == 0)
        throw std::invalid_argument("classify_nondegenerate requires delta != 0");
    Classification c;
    c.delta = delta;
    c.tau = tau;
    if (sgn(delta) < 0) {
        c.kind = SingKind::Saddle;
        return c;
    }
    const Rational disc = tau * tau - 4 * delta;
    if (sgn(tau) == 0) {
        c.kind = SingKind::CenterOrWeakFocus;
    } else if (sgn(disc) >= 0) {
        c.kind = sgn(tau) < 0 ? SingKind::NodeStable : SingKind::NodeUnstable;
    } else {
        c.kind = sgn(tau) < 0 ? SingKind::FocusStable : SingKind::FocusUnstable;
    }
    return c;
}

namespace {

struct RatVec2 {
    Rational x, y;
};

// First nonzero component scaled to 1.
RatVec2 unit_normalized(const RatVec2& v) {
    if (sgn(v.x) != 0) return {Rational(1), v.y / v.x};
    if (sgn(v.y) != 0) return {v.x / v.y, Rational(1)};
    throw std::logic_error("zero eigenvector");
}

// Kernel direction of a rank-1 matrix.
RatVec2 kernel_direction(const Matrix2& m) {
    if (sgn(m.a11) != 0 || sgn(m.a12) != 0) return unit_normalized({-m.a12, m.a11});
    if (sgn(m.a21) != 0 || sgn(m.a22) != 0) return unit_normalized({-m.a22, m.a21});
    throw std::invalid_argument("zero matrix has no distinguished kernel direction");
}

}  // namespace

NormalForm to_normal_form(const VectorField& f, const Matrix2& j) {
    if (sgn(j.det()) != 0)
        throw std::invalid_argument("to_normal_form requires det J = 0");
    const Rational lambda = j.trace();
    if (sgn(lambda) == 0)
        throw std::invalid_argument("to_normal_form requires trace J != 0");

    const RatVec2 center = kernel_direction(j);
    Matrix2 shifted = j;
    shifted.a11 -= lambda;
    shifted.a22 -= lambda;
    const RatVec2 strong = kernel_direction(shifted);

    // (x, y) = center*u + strong*v sends the kernel to the u-axis and the
    // lambda-eigendirection to the v-axis.
    Matrix2 change;
    change.a11 = center.x;
    change.a12 = strong.x;
    change.a21 = center.y;
    change.a22 = strong.y;
    const Rational det = change.det();
    if (sgn(det) == 0) throw std::logic_error("eigenbasis is degenerate");

    const AffineMap2 sub =
        AffineMap2::linear(change.a11, change.a12, change.a21, change.a22);
    const Poly2 pc = compose_affine(f.P, sub);
    const Poly2 qc = compose_affine(f.Q, sub);

    // (u', v') = change^{-1} (P, Q) composed with the change.
    NormalForm nf;
    nf.lambda = lambda;
    nf.change = change;
    Poly2 udot = (change.a22 / det) * pc + (-change.a12 / det) * qc;
    Poly2 vdot = (-change.a21 / det) * pc + (change.a11 / det) * qc;
    nf.A = udot;
    nf.B = vdot - lambda * Poly2::y();
    if (!nf.A.is_zero() && nf.A.min_degree() < 2)
        throw std::logic_error("normal form: A has low-order terms");
    if (!nf.B.is_zero() && nf.B.min_degree() < 2)
        throw std::logic_error("normal form: B has low-order terms");
    return nf;
}

Poly2 solve_center_manifold(const Rational& lambda, const Poly2& B, int order) {
    if (sgn(lambda) == 0) throw std::invalid_argument("lambda must be nonzero");
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    const Rational inv = Rational(-1) / lambda;
    Poly2 f;
    for (int it = 0; it < order; ++it) {
        Poly2 next = inv * B.substitute_y(f, order);
        if (next == f) break;
        f = next;
    }
    return f;
}

Classification classify_semi_hyperbolic(const NormalForm& nf, int order) {
    Classification c;
    c.delta = Rational(0);
    c.tau = nf.lambda;

    int n = order;
    Poly2 g;
    while (true) {
        const Poly2 f = solve_center_manifold(nf.lambda, nf.B, n);
        g = nf.A.substitute_y(f, n);
        if (!g.is_zero() || n >= 40) break;
        n *= 2;
    }
    if (g.is_zero()) {
        c.kind = SingKind::Degenerate;
        c.diagnostic = "center-manifold restriction vanished through order " +
                       std::to_string(n) + "; point may be non-isolated";
        return c;
    }

    const auto& lead = *g.terms().begin();
    if (lead.first.j != 0) throw std::logic_error("g must be univariate in x");
    const int alpha = lead.first.i;
    const Rational a = lead.second;
    if (alpha < 2) throw std::logic_error("center restriction of order < 2");

    c.semihyp = SemiHypEvidence{nf.lambda, a, alpha};
    if (alpha % 2 == 1) {
        c.kind = sgn(a) > 0 ? SingKind::SemiHypNodeUnstable : SingKind::SemiHypSaddle;
    } else {
        c.kind = SingKind::SaddleNode;
    }
    return c;
}

Classification classify_point(const VectorField& f, const RatPoint& at) {
    if (sgn(f.P.eval(at.first, at.second)) != 0 || sgn(f.Q.eval(at.first, at.second)) != 0)
        throw std::invalid_argument("classify_point: the point is not singular");

    const Matrix2 j = jacobian(f, at);
    const Rational delta = j.det();
    const Rational tau = j.trace();

    auto numeric_eigen = [&]() {
        EigenData e;
        Eigen::Matrix2d m;
        m << to_double(j.a11), to_double(j.a12), to_double(j.a21), to_double(j.a22);
        Eigen::EigenSolver<Eigen::Matrix2d> es(m);
        e.l1 = es.eigenvalues()(0);
        e.l2 = es.eigenvalues()(1);
        if (std::abs(e.l1.imag()) < 1e-12 && std::abs(e.l2.imag()) < 1e-12) {
            e.has_vectors = true;
            e.v1 = es.eigenvectors().col(0).real().normalized();
            e.v2 = es.eigenvectors().col(1).real().normalized();
        }
        return e;
    };

    if (sgn(delta) != 0) {
        Classification c = classify_nondegenerate(delta, tau);
        c.eigen = numeric_eigen();
        return c;
    }
    if (sgn(tau) != 0) {
        const VectorField local = translate(f, at);
        const NormalForm nf = to_normal_form(local, j);
        Classification c = classify_semi_hyperbolic(nf);
        EigenData e;
        e.l1 = 0.0;
        e.l2 = to_double(nf.lambda);
        e.has_vectors = true;
        // Orientation matters for saddle-node tangency sides; take the exact
        // change columns rather than a solver's arbitrary signs.
        e.v1 = Eigen::Vector2d(to_double(nf.change.a11), to_double(nf.change.a21)).normalized();
        e.v2 = Eigen::Vector2d(to_double(nf.change.a12), to_double(nf.change.a22)).normalized();
        c.eigen = e;
        return c;
    }
    Classification c;
    c.kind = SingKind::Degenerate;
    c.delta = delta;
    c.tau = tau;
    c.diagnostic = "linearly zero Jacobian; outside the supported classification scope";
    return c;
}

}  // namespace sisport
