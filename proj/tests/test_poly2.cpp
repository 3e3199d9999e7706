#include <doctest.h>

#include <random>

#include "sisport/poly2.hpp"

using namespace sisport;

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

Poly2 random_poly(std::mt19937_64& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(0, 5);
    Poly2 p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        const int i = deg(rng), j = deg(rng);
        p += Poly2::mono(i, j, Rational(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("add cancels and prunes") {
    CHECK((X + Y) + (X - Y) == Rational(2) * X);
    const Poly2 p = X * Y + Poly2(Rational(3));
    CHECK(p + Poly2() == p);
    CHECK(Poly2::mono(1, 1) + Poly2::mono(1, 1) == Poly2::mono(1, 1, Rational(2)));
}

TEST_CASE("mul basics") {
    CHECK(X * Y == Poly2::mono(1, 1));
    const Poly2 sq = (X + Y) * (X + Y);
    CHECK(sq == Poly2::mono(2, 0) + Poly2::mono(1, 1, Rational(2)) + Poly2::mono(0, 2));
    CHECK((X + Y) * Poly2() == Poly2());
}

TEST_CASE("degree of products adds for nonzero inputs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Poly2 a = random_poly(rng), b = random_poly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
    CHECK(Poly2().degree() == -1);
}

TEST_CASE("partial derivatives") {
    CHECK(Poly2::mono(2, 1).partial(Var::x) == Poly2::mono(1, 1, Rational(2)));
    const Poly2 line = Poly2(Rational(5)) - X - Y;  // k - x - y with k = 5
    CHECK(line.partial(Var::y) == Poly2(Rational(-1)));
    CHECK(Poly2(Rational(7)).partial(Var::x) == Poly2());
}

TEST_CASE("partials commute") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const Poly2 p = random_poly(rng);
        CHECK(p.partial(Var::x).partial(Var::y) == p.partial(Var::y).partial(Var::x));
    }
}

TEST_CASE("divide_exact") {
    const Poly2 num = X * X - Y * Y;
    const Poly2 den = X - Y;
    CHECK(divide_exact(num, den) == X + Y);
    CHECK(!divide_exact(X * X + Poly2(Rational(1)), X).has_value());
    // (xy - 2y) / y = x - 2
    CHECK(divide_exact(X * Y - Rational(2) * Y, Y) == X - Poly2(Rational(2)));
    CHECK_THROWS_AS(divide_exact(X, Poly2()), std::domain_error);
}

TEST_CASE("divide_exact inverts multiplication") {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 200) {
        const Poly2 q = random_poly(rng), d = random_poly(rng);
        if (d.is_zero()) continue;
        auto back = divide_exact(q * d, d);
        REQUIRE(back.has_value());
        CHECK(*back == q);
        ++checked;
    }
}

TEST_CASE("compose_affine") {
    const AffineMap2 shift = AffineMap2::translation(Rational(2), Rational(0));
    CHECK(compose_affine(X, shift) == X + Poly2(Rational(2)));

    const AffineMap2 swap = AffineMap2::linear(Rational(0), Rational(1), Rational(1), Rational(0));
    CHECK(compose_affine(X * Y, swap) == X * Y);

    // SIS x' with (b,c,k,m) = (1,1,2,1) translated by (2,0) lands on
    // -x - y - xy.
    const Poly2 p = -(X * Y) - X + Y + Poly2(Rational(2));
    CHECK(compose_affine(p, shift) == -X - Y - X * Y);
}

TEST_CASE("compose_affine with the identity is the identity") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const Poly2 p = random_poly(rng);
        CHECK(compose_affine(p, AffineMap2{}) == p);
    }
}

TEST_CASE("eval") {
    CHECK((X + Y).eval(Rational(1), Rational(2)) == Rational(3));
    CHECK(Poly2().eval(Rational(100), Rational(-3)) == Rational(0));
    // P of the SIS field vanishes at (k, 0) for any parameters.
    for (int b = 1; b <= 3; ++b) {
        const Rational bb(b), cc(b + 1), kk(2 * b + 1), mm(b);
        const Poly2 P = -bb * (X * Y) - mm * X + cc * Y + Poly2(mm * kk);
        CHECK(P.eval(kk, Rational(0)) == Rational(0));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 150; ++t) {
        const Poly2 a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitute_y truncates correctly") {
    // p = y^2, f = x^2 + x^4 -> x^4 + 2x^6 + x^8, truncated at 6.
    const Poly2 p = Poly2::mono(0, 2);
    const Poly2 f = Poly2::mono(2, 0) + Poly2::mono(4, 0);
    const Poly2 got = p.substitute_y(f, 6);
    CHECK(got == Poly2::mono(4, 0) + Poly2::mono(6, 0, Rational(2)));
    CHECK_THROWS_AS(p.substitute_y(Y, 5), std::invalid_argument);
}

TEST_CASE("coefficients are canonicalized on entry") {
    CHECK(Poly2::mono(1, 0, Rational(6, 4)) == Poly2::mono(1, 0, Rational(3, 2)));
    CHECK(Poly2::mono(1, 0, Rational(6, 4)).to_string() == "3/2*x");
    CHECK(Poly2(Rational(0, 5)).is_zero());
    CHECK_THROWS_AS(Poly2::mono(0, 0, Rational(1, 0)), std::invalid_argument);
}

TEST_CASE("to_string renders graded-lex ascending") {
    CHECK(Poly2().to_string() == "0");
    const Poly2 p = Poly2(Rational(1)) + X + Y + X * Y + Poly2::mono(2, 0);
    CHECK(p.to_string() == "1 + x + y + x^2 + x*y");
    const Poly2 q = -(X * Y) - X + Y + Poly2(Rational(4));
    CHECK(q.to_string() == "4 - x + y - x*y");
    CHECK((Rational(1, 3) * Y - X).to_string() == "-x + 1/3*y");
    CHECK(Poly2::mono(0, 3, Rational(-1)).to_string("u", "v") == "-v^3");
}
