#pragma once

// Exact arithmetic backbone.  Everything downstream computes in Integer
// (arbitrary precision) and Rational (always lowest terms, denominator > 0;
// the boost backend canonicalizes on every operation).  No floating point
// appears anywhere in the computation paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "mrk/errors.hpp"

namespace mrk {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool odd(const Integer& n) { return (n & 1) != 0; }

// (-1)^e for any integer e, including negative exponents.
inline int sign_pow(const Integer& e) { return odd(e) ? -1 : 1; }

// 2^e as an exact rational; e may be negative.
inline Rational pow2(const Integer& e) {
    Integer a = abs(e);
    if (!a.is_zero() && a > 1u << 20)
        fail("bad-input", "2^" + e.str() + " exceeds supported exponent range");
    Integer p = Integer(1) << static_cast<unsigned>(a);
    return e < 0 ? Rational(1, p) : Rational(p);
}

inline Integer factorial(const Integer& n) {
    if (n < 0) fail("bad-input", "factorial of negative integer " + n.str());
    Integer acc = 1;
    for (Integer i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// Generalized binomial coefficient C(t, k) = t(t-1)...(t-k+1) / k! for any
// integer t (negative t included); C(t, 0) = 1 and C(t, k) = 0 for k < 0.
// The division is exact: a product of k consecutive integers is divisible
// by k!.
inline Integer binomial(const Integer& t, const Integer& k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (Integer i = 0; i < k; ++i) num *= t - i;
    Integer den = factorial(k);
    Integer q, r;
    divide_qr(num, den, q, r);
    if (!r.is_zero()) fail("indivisible", "binomial(" + t.str() + "," + k.str() + ") not integral");
    return q;
}

// base^e for e >= 0 (rational base).
inline Rational pow_rat(const Rational& base, const Integer& e) {
    if (e < 0) fail("bad-input", "negative exponent " + e.str() + " in pow_rat");
    Rational acc = 1;
    for (Integer i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline Integer pow_int(const Integer& base, const Integer& e) {
    if (e < 0) fail("bad-input", "negative exponent " + e.str() + " in pow_int");
    Integer acc = 1;
    for (Integer i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Exact quotient; remainder is an error, never a truncation.
inline Integer exact_div(const Integer& num, const Integer& den, const char* what) {
    if (den.is_zero()) fail("indivisible", std::string(what) + ": division by zero");
    Integer q, r;
    divide_qr(num, den, q, r);
    if (!r.is_zero())
        fail("indivisible", std::string(what) + ": " + num.str() + " not divisible by " + den.str());
    return q;
}

// Canonical rendering: "p/q" in lowest terms with q > 0, or plain "p" when
// the denominator is 1.  This is the wire format for every rational value.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// num/den for arbitrary integers (den != 0).  The backend's two-argument
// constructor insists on a positive denominator, so normalize the sign here.
inline Rational make_rational(Integer num, Integer den) {
    if (den.is_zero()) fail("bad-input", "rational denominator must be non-zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

// Accepts "p" or "p/q" (q != 0); the result is canonicalized by the backend.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> Rational { fail("bad-input", "malformed rational '" + s + "'"); };
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits(s)) return bad();
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num) || !digits(den)) return bad();
    Integer d(den);
    if (d.is_zero()) return bad();
    return make_rational(Integer(num), std::move(d));
}

inline Integer parse_integer(const std::string& s) {
    Rational r = parse_rational(s);
    if (denominator(r) != 1) fail("bad-input", "expected integer, got '" + s + "'");
    return numerator(r);
}

}  // namespace mrk
