#pragma once

// Donaldson series in structure-theorem form:
//
//     D^w = [constant] * exp(Q/2) * sum_r (-1)^((w^2 + w.K_r)/2) a_r exp(K_r)
//
// evaluated on powers of a single degree-2 class h.  The Kronheimer-Mrowka
// shape leaves the coefficients a_r abstract; the Seiberg-Witten form fixes
// a_r = SW(K_r) and the constant 2^(2 + (7e + 11 sigma)/4).  Point-class
// insertions are not modeled here: under the simple-type relation x^2 = 4
// callers can rewrite even point powers themselves (see
// point_class_even_power).

#include <utility>
#include <vector>

#include "mrk/errors.hpp"
#include "mrk/lattice.hpp"
#include "mrk/manifold.hpp"
#include "mrk/rational.hpp"

namespace mrk {

struct SeriesTerm {
    Vec K;
    Rational coeff;
};

struct SeriesSpec {
    Vec w;  // the SO(3)-bundle class fixing signs
    std::vector<SeriesTerm> terms;
    // When set, evaluation multiplies in the universal constant
    // 2^(2 + (7e + 11 sigma)/4); use for term lists holding raw SW values.
    bool include_witten_constant = false;
};

// 2^(2 + (7e + 11 sigma)/4); the exponent must be an integer.
inline Rational witten_constant(const FourManifold& m) {
    Integer q = exact_div(7 * m.euler + 11 * m.signature, 4, "(7e + 11 sigma)/4");
    return pow2(2 + q);
}

// Seiberg-Witten series coefficients: (K_r, 2^(2 + (7e + 11 sigma)/4) * sw_r).
inline std::vector<SeriesTerm> witten_coefficients(const FourManifold& m,
                                                   const std::vector<SWDatum>& sw_data) {
    Rational c = witten_constant(m);
    std::vector<SeriesTerm> out;
    out.reserve(sw_data.size());
    for (const auto& d : sw_data) out.push_back({d.K, c * Rational(d.sw)});
    return out;
}

// D^w(h^d) = d! * sum_r sign_r a_r * sum_{2k <= d}
//            Q(h,h)^k <K_r,h>^(d-2k) / (2^k k! (d-2k)!),
// sign_r = (-1)^((w^2 + w.K_r)/2).  Each w^2 + w.K_r must be even; an odd
// value means w and the term's class are incompatible as lifts.
inline Rational series_invariant(const FourManifold& m, const SeriesSpec& spec, const Vec& h,
                                 const Integer& d) {
    if (d < 0) fail("bad-input", "negative degree " + d.str());
    Integer w2 = m.lattice.square(spec.w);
    Integer Q = m.lattice.square(h);
    Rational acc = 0;
    for (const auto& term : spec.terms) {
        Integer parity = w2 + m.lattice.pairing(spec.w, term.K);
        if (odd(parity))
            fail("sign-parity", "w^2 + w.K = " + parity.str() + " is odd for a series term");
        Rational inner = 0;
        Integer Kh = m.lattice.pairing(term.K, h);
        for (Integer k = 0; 2 * k <= d; ++k) {
            inner += Rational(pow_int(Q, k) * pow_int(Kh, d - 2 * k)) /
                     Rational(pow_int(2, k) * factorial(k) * factorial(d - 2 * k));
        }
        acc += Rational(sign_pow(parity / 2)) * term.coeff * inner;
    }
    acc *= Rational(factorial(d));
    if (spec.include_witten_constant) acc *= witten_constant(m);
    return acc;
}

// Comparison sign between the invariants attached to two integral lifts
// w', w'' of the same SO(3) bundle class: (-1)^(((w'-w'')/2)^2).  The
// difference must be divisible by 2 in the lattice; otherwise the two
// classes are not lifts of a common bundle.
inline int orientation_sign(const IntersectionLattice& lat, const Vec& w1, const Vec& w2) {
    Vec d = sub(w1, w2);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (odd(d[i]))
            fail("lift-mismatch", "w' - w'' has odd coordinate at index " + std::to_string(i) +
                                      "; not lifts of one SO(3) bundle");
    Vec half(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) half[i] = d[i] >> 1;
    return sign_pow(lat.square(half));
}

// Simple-type point-class relation x^2 = 4: an invariant with 2k point
// insertions equals 4^k times the invariant without them.  Provided for
// callers combining the series path with point classes; never applied
// implicitly.
inline Rational point_class_even_power(const Rational& value, const Integer& pairs) {
    if (pairs < 0) fail("bad-input", "negative number of point-class pairs");
    return value * Rational(pow_int(4, pairs));
}

}  // namespace mrk
