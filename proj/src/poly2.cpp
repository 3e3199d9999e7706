#include "sisport/poly2.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sisport {

namespace {

// mpq arithmetic requires canonical operands; guard the coefficient entry
// points against raw Rational(p, q) literals.
Rational canonical(const Rational& q) {
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    Rational r = q;
    r.canonicalize();
    return r;
}

}  // namespace

Poly2 Poly2::mono(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    Poly2 p;
    const Rational cc = canonical(c);
    if (sgn(cc) != 0) p.terms_[{i, j}] = cc;
    return p;
}

void Poly2::add_term(const Mono& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
}

Poly2 operator*(const Rational& c, const Poly2& p) {
    Poly2 r;
    const Rational cc = canonical(c);
    if (sgn(cc) == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_[m] = cc * pc;
    return r;
}

Poly2 Poly2::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly2 r(Rational(1));
    Poly2 base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Rational Poly2::eval(const Rational& at_x, const Rational& at_y) const {
    // Power tables keep the exact evaluation linear in the term count.
    int max_i = 0, max_j = 0;
    for (const auto& [m, c] : terms_) {
        max_i = std::max(max_i, m.i);
        max_j = std::max(max_j, m.j);
    }
    std::vector<Rational> px(max_i + 1, Rational(1)), py(max_j + 1, Rational(1));
    for (int i = 1; i <= max_i; ++i) px[i] = px[i - 1] * at_x;
    for (int j = 1; j <= max_j; ++j) py[j] = py[j - 1] * at_y;
    Rational acc(0);
    for (const auto& [m, c] : terms_) acc += c * px[m.i] * py[m.j];
    return acc;
}

Poly2 Poly2::partial(Var v) const {
    Poly2 r;
    for (const auto& [m, c] : terms_) {
        if (v == Var::x) {
            if (m.i > 0) r.add_term({m.i - 1, m.j}, c * m.i);
        } else {
            if (m.j > 0) r.add_term({m.i, m.j - 1}, c * m.j);
        }
    }
    return r;
}

Poly2 Poly2::truncate(int order) const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        if (m.deg() <= order) r.terms_[m] = c;
    return r;
}

Poly2 Poly2::substitute_y(const Poly2& f, int order) const {
    for (const auto& [m, c] : f.terms())
        if (m.j != 0) throw std::invalid_argument("substitute_y: f must be univariate in x");
    int max_j = 0;
    for (const auto& [m, c] : terms_) max_j = std::max(max_j, m.j);
    std::vector<Poly2> fpow(max_j + 1);
    fpow[0] = Poly2(Rational(1));
    for (int j = 1; j <= max_j; ++j) fpow[j] = (fpow[j - 1] * f).truncate(order);
    Poly2 r;
    for (const auto& [m, c] : terms_) {
        Poly2 t = c * fpow[m.j];
        for (const auto& [tm, tc] : t.terms()) {
            if (tm.i + m.i <= order) r.add_term({tm.i + m.i, tm.j}, tc);
        }
    }
    return r;
}

Poly2 compose_affine(const Poly2& p, const AffineMap2& map) {
    Poly2 sx = map.xx * Poly2::x() + map.xy * Poly2::y() + Poly2(map.x0);
    Poly2 sy = map.yx * Poly2::x() + map.yy * Poly2::y() + Poly2(map.y0);
    int max_i = 0, max_j = 0;
    for (const auto& [m, c] : p.terms()) {
        max_i = std::max(max_i, m.i);
        max_j = std::max(max_j, m.j);
    }
    std::vector<Poly2> px(max_i + 1), py(max_j + 1);
    px[0] = Poly2(Rational(1));
    py[0] = Poly2(Rational(1));
    for (int i = 1; i <= max_i; ++i) px[i] = px[i - 1] * sx;
    for (int j = 1; j <= max_j; ++j) py[j] = py[j - 1] * sy;
    Poly2 r;
    for (const auto& [m, c] : p.terms()) r += c * (px[m.i] * py[m.j]);
    return r;
}

std::optional<Poly2> divide_exact(const Poly2& num, const Poly2& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    Poly2 q;
    Poly2 r = num;
    const auto& dterms = den.terms();
    const Mono dlt = dterms.rbegin()->first;
    const Rational dlc = dterms.rbegin()->second;
    while (!r.is_zero()) {
        const Mono rlt = r.terms().rbegin()->first;
        const Rational rlc = r.terms().rbegin()->second;
        if (rlt.i < dlt.i || rlt.j < dlt.j) return std::nullopt;
        Poly2 t = Poly2::mono(rlt.i - dlt.i, rlt.j - dlt.j, rlc / dlc);
        q += t;
        r -= t * den;
    }
    return q;
}

std::string Poly2::to_string(const std::string& vx, const std::string& vy) const {
    if (terms_.empty()) return "0";
    // Render ascending by total degree, x-heavy terms first within a degree:
    // "c0 + c1*x + c2*y + c3*x*y + ...".
    std::vector<std::pair<Mono, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return a.first.i > b.first.i;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        const bool neg = sgn(c) < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string body;
        const bool unit = mag == 1;
        if (m.i == 0 && m.j == 0) {
            body = mag.get_str();
        } else {
            if (!unit) body = mag.get_str();
            auto append_var = [&body](const std::string& v, int e) {
                if (e == 0) return;
                if (!body.empty()) body += "*";
                body += v;
                if (e > 1) body += "^" + std::to_string(e);
            };
            append_var(vx, m.i);
            append_var(vy, m.j);
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace sisport
