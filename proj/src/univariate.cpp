#include "sisport/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace sisport {

Rational uni_eval(const UniPoly& p, const Rational& at) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
    return acc;
}

namespace {

// Positive divisors of |n|, by trial division. Coefficients in this library
// stay small; the cap guards against pathological inputs.
std::vector<mpz_class> divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a == 0) throw std::logic_error("divisors of zero");
    std::vector<mpz_class> lo, hi;
    mpz_class d = 1;
    long steps = 0;
    while (d * d <= a) {
        if (++steps > 20000000)
            throw std::domain_error("rational root search: coefficient too large to factor");
        if (a % d == 0) {
            lo.push_back(d);
            if (d * d != a) hi.push_back(a / d);
        }
        ++d;
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// Divide p by (u - r); remainder must vanish.
UniPoly deflate(const UniPoly& p, const Rational& r) {
    UniPoly q(p.size() - 1);
    Rational carry(0);
    for (size_t k = p.size(); k-- > 1;) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    if (sgn(p[0] + carry * r) != 0) throw std::logic_error("deflate: nonzero remainder");
    return q;
}

void roots_degree_le2(const UniPoly& p, std::vector<Rational>& out) {
    const size_t deg = p.size() - 1;
    if (deg == 0) return;
    if (deg == 1) {
        out.push_back(-p[0] / p[1]);
        return;
    }
    const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (sgn(disc) < 0) return;
    auto root = rational_sqrt(disc);
    if (!root) return;  // real but irrational pair
    out.push_back((-p[1] + *root) / (2 * p[2]));
    if (sgn(*root) != 0) out.push_back((-p[1] - *root) / (2 * p[2]));
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    UniPoly w = p;
    while (!w.empty() && sgn(w.back()) == 0) w.pop_back();
    if (w.empty()) throw std::domain_error("rational_roots: zero polynomial");

    std::vector<Rational> out;
    size_t low = 0;
    while (low < w.size() && sgn(w[low]) == 0) ++low;
    if (low > 0) {
        out.push_back(Rational(0));
        w.erase(w.begin(), w.begin() + low);
    }

    if (w.size() > 3) {
        // Clear denominators and content, then enumerate +-p/q candidates.
        mpz_class den_lcm = 1;
        for (const auto& c : w) {
            mpz_class d = c.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            den_lcm = den_lcm / g * d;
        }
        std::vector<mpz_class> zc(w.size());
        for (size_t i = 0; i < w.size(); ++i) {
            Rational scaled = w[i] * Rational(den_lcm);
            zc[i] = scaled.get_num();
        }
        mpz_class content = 0;
        for (const auto& c : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        for (auto& c : zc) c /= content;

        while (zc.size() > 3) {
            bool found = false;
            for (const auto& pn : divisors(zc.front())) {
                for (const auto& qd : divisors(zc.back())) {
                    for (int s : {1, -1}) {
                        Rational cand(s * pn, qd);
                        cand.canonicalize();
                        UniPoly cur(zc.size());
                        for (size_t i = 0; i < zc.size(); ++i) cur[i] = Rational(zc[i]);
                        if (sgn(uni_eval(cur, cand)) == 0) {
                            out.push_back(cand);
                            UniPoly next = deflate(cur, cand);
                            // Re-integerize for further candidate enumeration.
                            mpz_class lcm2 = 1;
                            for (const auto& c : next) {
                                mpz_class d = c.get_den(), g;
                                mpz_gcd(g.get_mpz_t(), lcm2.get_mpz_t(), d.get_mpz_t());
                                lcm2 = lcm2 / g * d;
                            }
                            zc.assign(next.size(), 0);
                            for (size_t i = 0; i < next.size(); ++i)
                                zc[i] = Rational(next[i] * Rational(lcm2)).get_num();
                            // The deflated polynomial may gain a zero constant
                            // term only through a repeated root at 0; those were
                            // stripped already, so zc.front() stays nonzero.
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (!found) break;
        }
        if (zc.size() <= 3) {
            UniPoly rest(zc.size());
            for (size_t i = 0; i < zc.size(); ++i) rest[i] = Rational(zc[i]);
            roots_degree_le2(rest, out);
        }
    } else {
        roots_degree_le2(w, out);
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sisport
