#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sisport/rational.hpp"

namespace sisport {

// Exponent pair of a monomial x^i y^j.
struct Mono {
    int i = 0;
    int j = 0;
    int deg() const { return i + j; }
    bool operator==(const Mono&) const = default;
};

// Graded lexicographic order with x > y: lower total degree first, then
// lower x-exponent. The map's maximum is the division leading term.
struct MonoGrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i < b.i;
    }
};

enum class Var { x, y };

// Bivariate polynomial with exact rational coefficients. Stored coefficients
// are never zero; the zero polynomial is the empty term map and has
// degree() == -1 (the "minus infinity" marker).
class Poly2 {
public:
    using TermMap = std::map<Mono, Rational, MonoGrlexLess>;

    Poly2() = default;
    explicit Poly2(const Rational& c) { *this = mono(0, 0, c); }
    explicit Poly2(long c) : Poly2(Rational(c)) {}

    static Poly2 mono(int i, int j, const Rational& c = Rational(1));
    static Poly2 x() { return mono(1, 0); }
    static Poly2 y() { return mono(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg(); }
    // Order of vanishing at the origin; -1 for the zero polynomial.
    int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg(); }

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rational& c, const Poly2& p);
    Poly2 pow(int n) const;

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& at_x, const Rational& at_y) const;
    Poly2 partial(Var v) const;
    // Drop all terms of total degree > order.
    Poly2 truncate(int order) const;
    // p(x, f(x)) mod x^{order+1}; f must be univariate in x.
    Poly2 substitute_y(const Poly2& f, int order) const;

    std::string to_string(const std::string& vx = "x", const std::string& vy = "y") const;

private:
    void add_term(const Mono& m, const Rational& c);
    TermMap terms_;
};

// (x, y) |-> (xx*X + xy*Y + x0, yx*X + yy*Y + y0)
struct AffineMap2 {
    Rational xx{1}, xy{0}, x0{0};
    Rational yx{0}, yy{1}, y0{0};
    static AffineMap2 translation(const Rational& dx, const Rational& dy) {
        AffineMap2 m;
        m.x0 = dx;
        m.y0 = dy;
        return m;
    }
    static AffineMap2 linear(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d) {
        AffineMap2 m;
        m.xx = a; m.xy = b;
        m.yx = c; m.yy = d;
        return m;
    }
};

// Exact substitution p(map.x(X,Y), map.y(X,Y)), fully expanded.
Poly2 compose_affine(const Poly2& p, const AffineMap2& map);

// Quotient q with num = q*den when it exists, else empty. Multivariate
// division against the single divisor under the graded-lex leading term;
// the first non-divisible leading monomial proves inexactness.
// Throws std::domain_error when den is the zero polynomial.
std::optional<Poly2> divide_exact(const Poly2& num, const Poly2& den);

}  // namespace sisport
