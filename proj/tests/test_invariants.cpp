#include <doctest.h>

#include <random>

#include "sisport/invariants.hpp"
#include "sisport/verify.hpp"

using namespace sisport;

namespace {
const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();
SisParams sp(long b, long c, long k, long m) {
    return {Rational(b), Rational(c), Rational(k), Rational(m)};
}
}  // namespace

TEST_CASE("cofactor of y is bx - m - c") {
    std::mt19937_64 rng(51);
    for (long t = 0; t < 40; ++t) {
        const SisParams p = random_sis_params(rng, t);
        const VectorField f = make_sis_field(p);
        const auto k1 = cofactor_of(f, Y);
        REQUIRE(k1.has_value());
        CHECK(*k1 == p.b * X - Poly2(p.m + p.c));

        const Poly2 f2 = Poly2(p.k) - X - Y;
        const auto k2 = cofactor_of(f, f2);
        REQUIRE(k2.has_value());
        CHECK(*k2 == Poly2(-p.m));
    }
}

TEST_CASE("x is not invariant for generic parameters") {
    const VectorField f = make_sis_field(sp(1, 1, 4, 1));
    CHECK(!cofactor_of(f, X).has_value());
    CHECK_THROWS_AS(cofactor_of(f, Poly2(Rational(2))), std::invalid_argument);
}

TEST_CASE("verify_invariant_line") {
    const SisParams gen = sp(1, 1, 4, 1);
    const VectorField f = make_sis_field(gen);
    CHECK(verify_invariant_line(f, Y, Rational(1) * X - Poly2(Rational(2))));
    CHECK(!verify_invariant_line(f, Y, Poly2()));

    // f3 = k - x with cofactor -m - by works exactly when c = bk.
    const Poly2 f3 = Poly2(Rational(4)) - X;
    const Poly2 k3 = Poly2(Rational(-1)) - Y;
    CHECK(verify_invariant_line(make_sis_field(sp(1, 4, 4, 1)), f3, k3));
    CHECK(!verify_invariant_line(make_sis_field(sp(1, 1, 4, 1)), f3, k3));
}

TEST_CASE("find_invariant_lines on sample parameter tuples") {
    auto lines_of = [](const SisParams& p) { return find_invariant_lines(make_sis_field(p)); };

    const auto generic = lines_of(sp(1, 1, 4, 1));
    REQUIRE(generic.size() == 2);
    CHECK(generic[0].f == Poly2(Rational(-4)) + X + Y);
    CHECK(generic[0].cofactor == Poly2(Rational(-1)));
    CHECK(generic[1].f == Y);
    CHECK(generic[1].cofactor == X - Poly2(Rational(2)));

    const auto special = lines_of(sp(1, 4, 4, 1));
    REQUIRE(special.size() == 3);
    bool has_third = false;
    for (const auto& c : special)
        if (c.f == X - Poly2(Rational(4)) && c.cofactor == Poly2(Rational(-1)) - Y)
            has_third = true;
    CHECK(has_third);

    const auto coalesced = lines_of(sp(1, 1, 2, 1));
    REQUIRE(coalesced.size() == 2);
    CHECK(coalesced[0].f == Poly2(Rational(-2)) + X + Y);
    CHECK(coalesced[1].f == Y);
}

TEST_CASE("returned curves satisfy the invariance identity") {
    std::mt19937_64 rng(52);
    for (long t = 0; t < 40; ++t) {
        const SisParams p = random_sis_params(rng, t);
        const VectorField f = make_sis_field(p);
        const auto lines = find_invariant_lines(f);
        const bool special = sgn(p.c - p.b * p.k) == 0;
        CHECK(lines.size() == (special ? 3u : 2u));
        for (const auto& c : lines) CHECK(verify_invariant_line(f, c.f, c.cofactor));
    }
}

TEST_CASE("steady states sit on the invariant lines") {
    std::mt19937_64 rng(53);
    for (long t = 0; t < 40; ++t) {
        const SisParams p = random_sis_params(rng, t);
        const Poly2 f1 = Y;
        const Poly2 f2 = Poly2(p.k) - X - Y;
        const Rational qx = p.k, qy(0);
        const Rational px = (p.c + p.m) / p.b, py = (p.b * p.k - p.c - p.m) / p.b;
        CHECK(f1.eval(qx, qy) == Rational(0));
        CHECK(f2.eval(qx, qy) == Rational(0));
        CHECK(f2.eval(px, py) == Rational(0));
    }
}

TEST_CASE("find_invariant_lines requires a quadratic field") {
    CHECK_THROWS_AS(find_invariant_lines(VectorField{X, Y}), std::invalid_argument);
}
