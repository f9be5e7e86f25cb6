#pragma once

// Index-theoretic dimension bookkeeping.  All formulas are exact integer
// arithmetic with checked division: a remainder is always an error, never a
// rounding.
//
//   p1        = c1(E)^2 - 4 c2(E)                (Pontryagin degree of su(E))
//   d_a       = -p1 - (3/2)(1 - b1 + b+)         (half ASD moduli dimension)
//   n_a       = (p1 + F^2 - sigma)/4             (complex Dirac index)
//   d_s(K)    = (K^2 - 2e - 3 sigma)/8           (SW moduli half-dimension)
//   n^Lam_s   = -p1 - (e + sigma)/2
//   dim M*    = 2 d_a + 2 n_a - 1                (monopole moduli, irreducibles)

#include "mrk/errors.hpp"
#include "mrk/lattice.hpp"
#include "mrk/manifold.hpp"
#include "mrk/rational.hpp"

namespace mrk {

inline Integer compute_p1(const GaugeSetup& g, const IntersectionLattice& lat) {
    return lat.square(g.c1E) - 4 * g.c2E;
}

// Requires 1 - b1 + b+ even (admissibility); otherwise the expression is a
// half-integer and the setup is rejected.
inline Integer dim_asd(const FourManifold& m, const Integer& p1) {
    Integer t = 1 - m.b1 + m.bplus;
    if (odd(t))
        fail("admissibility", "1 - b1 + b+ = " + t.str() + " is odd; d_a is not an integer");
    return -p1 - 3 * (t / 2);
}

inline Integer dim_dirac(const FourManifold& m, const GaugeSetup& g, const Integer& p1) {
    Vec F = derive_F(g);
    return exact_div(p1 + m.lattice.square(F) - m.signature, 4, "n_a = (p1 + F^2 - sigma)/4");
}

inline Integer dim_sw(const FourManifold& m, const Vec& K) {
    return exact_div(m.lattice.square(K) - 2 * m.euler - 3 * m.signature, 8,
                     "d_s = (K^2 - 2e - 3 sigma)/8");
}

inline Integer n_lambda_s(const FourManifold& m, const Integer& p1) {
    return -p1 - exact_div(m.euler + m.signature, 2, "(e + sigma)/2");
}

struct DimensionReport {
    Integer p1;
    Integer d_a;
    Integer n_a;
    Integer dim_M_star;  // = 2 d_a + 2 n_a - 1
    Integer n_lam_s;

    static DimensionReport compute(const FourManifold& m, const GaugeSetup& g) {
        DimensionReport r{compute_p1(g, m.lattice), 0, 0, 0, 0};
        r.d_a = dim_asd(m, r.p1);
        r.n_a = dim_dirac(m, g, r.p1);
        r.dim_M_star = 2 * r.d_a + 2 * r.n_a - 1;
        r.n_lam_s = n_lambda_s(m, r.p1);
        return r;
    }
};

}  // namespace mrk
