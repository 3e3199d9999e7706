#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace sisport {

// Exact arbitrary-precision rational. mpq_class keeps the canonical form
// (denominator > 0, gcd(num, den) = 1) through every arithmetic operation,
// which is exactly the representation the rest of the library relies on.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts integers ("-3"), fractions ("7/4"), and finite decimals ("0.25",
// "-1.5e0" is not supported; no exponents). Decimals convert exactly, so
// boundary tests such as m = bk - c stay decidable for decimal CLI input.
Rational parse_rational(const std::string& text);

// Exact square root when q is a perfect square of a rational, else empty.
std::optional<Rational> rational_sqrt(const Rational& q);

inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    const auto dot = text.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw std::invalid_argument("rational literal mixes '/' and '.': " + text);

    auto check_digits = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };

    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!check_digits(num, true) || !check_digits(den, false))
            throw std::invalid_argument("malformed fraction: " + text);
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return q;
    }
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head = head.substr(1);
        }
        if (head.empty() && frac.empty())
            throw std::invalid_argument("malformed decimal: " + text);
        if ((!head.empty() && !check_digits(head, false)) ||
            (!frac.empty() && !check_digits(frac, false)))
            throw std::invalid_argument("malformed decimal: " + text);
        mpz_class scaled(head.empty() ? std::string("0") + frac : head + frac, 10);
        mpz_class den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpq_class q(scaled, den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    if (!check_digits(text, true))
        throw std::invalid_argument("malformed integer: " + text);
    return mpq_class(mpz_class(text, 10));
}

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace sisport
