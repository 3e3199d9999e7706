#include <doctest.h>

#include <cmath>
#include <random>

#include "sisport/field.hpp"
#include "sisport/verify.hpp"

using namespace sisport;

namespace {
const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();
SisParams sp(long b, long c, long k, long m) {
    return {Rational(b), Rational(c), Rational(k), Rational(m)};
}
}  // namespace

TEST_CASE("make_sis_field substitutes the parameters") {
    const VectorField f = make_sis_field(sp(1, 1, 4, 1));
    CHECK(f.P == -(X * Y) - X + Y + Poly2(Rational(4)));
    CHECK(f.Q == X * Y - Rational(2) * Y);
    CHECK(degree(f) == 2);

    const VectorField g = make_sis_field(sp(1, 1, 2, 1));
    CHECK(g.P == -(X * Y) - X + Y + Poly2(Rational(2)));
    CHECK(g.Q == X * Y - Rational(2) * Y);
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(make_sis_field(sp(0, 1, 4, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make_sis_field(sp(1, 1, 4, 0)), std::invalid_argument);
}

TEST_CASE("jacobian values") {
    // Translated coalesced system: J(0,0) = (-m -m; 0 0).
    const VectorField f = make_sis_field(sp(1, 1, 2, 1));
    const VectorField t = translate(f, {Rational(2), Rational(0)});
    const Matrix2 j = jacobian(t, {Rational(0), Rational(0)});
    CHECK(j.a11 == Rational(-1));
    CHECK(j.a12 == Rational(-1));
    CHECK(j.a21 == Rational(0));
    CHECK(j.a22 == Rational(0));

    const VectorField lin{X, Y};
    const Matrix2 ji = jacobian(lin, {Rational(7), Rational(-2)});
    CHECK(ji.a11 == Rational(1));
    CHECK(ji.a12 == Rational(0));
    CHECK(ji.a21 == Rational(0));
    CHECK(ji.a22 == Rational(1));

    const Matrix2 jq = jacobian(make_sis_field(sp(1, 1, 4, 1)), {Rational(4), Rational(0)});
    CHECK(jq.a11 == Rational(-1));
    CHECK(jq.a12 == Rational(-3));
    CHECK(jq.a21 == Rational(0));
    CHECK(jq.a22 == Rational(2));
}

TEST_CASE("translate moves the singular point to the origin") {
    const VectorField f = make_sis_field(sp(1, 1, 2, 1));
    const VectorField t = translate(f, {Rational(2), Rational(0)});
    CHECK(t.P == -X - Y - X * Y);
    CHECK(t.Q == X * Y);

    CHECK(translate(f, {Rational(0), Rational(0)}).P == f.P);

    const VectorField g = make_sis_field(sp(1, 1, 4, 1));
    const VectorField tq = translate(g, {Rational(4), Rational(0)});
    CHECK(tq.Q == Rational(2) * Y + X * Y);
}

TEST_CASE("translating a steady state to the origin gives the known systems") {
    // At p: x' = (c-bk)x - my - bxy, y' = (bk-c-m)x + bxy.
    // At q: x' = -mx + (c-bk)y - bxy, y' = (bk-c-m)y + bxy.
    std::mt19937_64 rng(24);
    for (long t = 0; t < 40; ++t) {
        const SisParams p = random_sis_params(rng, t);
        const VectorField f = make_sis_field(p);
        const Rational excess = p.b * p.k - p.c - p.m;

        const VectorField at_p = translate(f, {(p.c + p.m) / p.b, excess / p.b});
        CHECK(at_p.P == (p.c - p.b * p.k) * X - p.m * Y - p.b * (X * Y));
        CHECK(at_p.Q == excess * X + p.b * (X * Y));

        const VectorField at_q = translate(f, {p.k, Rational(0)});
        CHECK(at_q.P == -(p.m) * X + (p.c - p.b * p.k) * Y - p.b * (X * Y));
        CHECK(at_q.Q == excess * Y + p.b * (X * Y));
    }
}

TEST_CASE("degree conventions") {
    CHECK(degree(make_sis_field(sp(1, 1, 4, 1))) == 2);
    CHECK(degree(VectorField{Y, -X}) == 1);
    CHECK(degree(VectorField{Poly2(), Poly2()}) == 0);
}

TEST_CASE("translate round-trips and commutes with jacobian") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        const SisParams p = random_sis_params(rng, t);
        const VectorField f = make_sis_field(p);
        const RatPoint at{random_rational(rng), random_rational(rng)};
        const VectorField moved = translate(f, at);
        const VectorField back = translate(moved, {-at.first, -at.second});
        CHECK(back.P == f.P);
        CHECK(back.Q == f.Q);
        const Matrix2 a = jacobian(moved, {Rational(0), Rational(0)});
        const Matrix2 b = jacobian(f, at);
        CHECK(a.a11 == b.a11);
        CHECK(a.a12 == b.a12);
        CHECK(a.a21 == b.a21);
        CHECK(a.a22 == b.a22);
    }
}

TEST_CASE("both closed-form steady states are exact zeros") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 200; ++t) {
        const SisParams p = random_sis_params(rng, t);
        const VectorField f = make_sis_field(p);
        const RatPoint q{p.k, Rational(0)};
        const RatPoint pp{(p.c + p.m) / p.b, (p.b * p.k - p.c - p.m) / p.b};
        for (const RatPoint& pt : {q, pp}) {
            CHECK(f.P.eval(pt.first, pt.second) == Rational(0));
            CHECK(f.Q.eval(pt.first, pt.second) == Rational(0));
        }
    }
}

TEST_CASE("numeric finder locates the steady states") {
    const VectorField f = make_sis_field(sp(1, 1, 4, 1));
    const auto pts = finite_singular_points_numeric(f);
    REQUIRE(pts.size() == 2);
    CHECK(std::abs(pts[0].first - 2.0) < 1e-10);
    CHECK(std::abs(pts[0].second - 2.0) < 1e-10);
    CHECK(std::abs(pts[1].first - 4.0) < 1e-10);
    CHECK(std::abs(pts[1].second - 0.0) < 1e-10);

    const auto id = finite_singular_points_numeric(VectorField{X, Y});
    REQUIRE(id.size() == 1);
    CHECK(std::abs(id[0].first) < 1e-10);
    CHECK(std::abs(id[0].second) < 1e-10);

    const VectorField constant{Poly2(Rational(1)), Poly2(Rational(1))};
    CHECK(finite_singular_points_numeric(constant).empty());

    CHECK_THROWS_AS(finite_singular_points_numeric(f, NumericRootOptions{.tol = -1}),
                    std::invalid_argument);
}

TEST_CASE("numeric finder agrees with the exact points") {
    std::mt19937_64 rng(23);
    int done = 0;
    long idx = 0;
    while (done < 25) {
        const SisParams p = random_sis_params(rng, idx++);
        const RatPoint q{p.k, Rational(0)};
        const RatPoint pp{(p.c + p.m) / p.b, (p.b * p.k - p.c - p.m) / p.b};
        NumericRootOptions opt;
        opt.xmin = std::min({to_double(q.first), to_double(pp.first), 0.0}) - 3;
        opt.xmax = std::max({to_double(q.first), to_double(pp.first), 0.0}) + 3;
        opt.ymin = std::min({to_double(q.second), to_double(pp.second), 0.0}) - 3;
        opt.ymax = std::max({to_double(q.second), to_double(pp.second), 0.0}) + 3;
        const auto pts = finite_singular_points_numeric(make_sis_field(p), opt);
        for (const RatPoint& exact : {q, pp}) {
            bool hit = false;
            for (const auto& [x, y] : pts)
                if (std::hypot(x - to_double(exact.first), y - to_double(exact.second)) < 1e-7)
                    hit = true;
            CHECK(hit);
        }
        ++done;
    }
}
