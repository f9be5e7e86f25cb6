#pragma once

// Pairings of invariant cohomology monomials with links of top-stratum
// reducibles, and the Donaldson invariants assembled from them.
//
// For a level-0 reducible with line bundle L1 (basic class K, invariant sw)
// and a monomial z = b_1 ... b_{n_p1 - 2m} x^m together with n_c1 powers of
// the 2-dimensional point-class insertion, the pairing is
//
//     (-1)^m * 2^(-n_p1 + d_s) * C(n_p1, n_c1) * sw * prod_i <K - F, b_i>
//
// with exactly n_p1 - 2m intersection factors.  The constant C is the
// Jacobi polynomial value P^(I,J)_{d_s}(0), I = n_p1 - n^Lam_s - d_s,
// J = n_c1 - d_s, equivalently the alternating binomial sum implemented in
// c_constant; both forms are kept and cross-asserted.  d_s = 0 gives C = 1.
//
// Degree-critical sums over all reducibles produce the Donaldson invariant:
//
//     D = -2^(-(n_a - 1)) * sum_r (-1)^(L1_r^2) * pairing_r ,
//
// valid when every reducible is at level 0 and deg z sits in the window
// n_p1 in [d_a, d_a + n_a - 1] (the complementary power n_c1 is derived).
// Above the critical degree (n_p1 > d_a) the sum must vanish identically;
// the implementation verifies this and reports any violation rather than
// returning a silently meaningless number.

#include <cassert>
#include <string>
#include <vector>

#include "mrk/dimensions.hpp"
#include "mrk/errors.hpp"
#include "mrk/lattice.hpp"
#include "mrk/manifold.hpp"
#include "mrk/rational.hpp"
#include "mrk/reducibles.hpp"

namespace mrk {

struct InvariantMonomial {
    std::vector<Vec> betas;  // 2-dimensional homology classes
    Integer m = 0;           // power of the 0-dimensional point class
    Integer n_c1 = 0;        // power of the degree-2 determinant insertion

    Integer n_p1() const { return Integer(betas.size()) + 2 * m; }
    Integer degree() const { return 2 * n_p1() + 2 * n_c1; }
};

// Jacobi polynomial P^(a,b)_n(x) via its defining sum
//   2^-n * sum_m C(n+a, m) C(n+b, n-m) (x-1)^(n-m) (x+1)^m
// with generalized binomials, so integer a, b of any sign are fine.
inline Rational jacobi(const Integer& a, const Integer& b, const Integer& n, const Rational& x) {
    if (n < 0) fail("bad-input", "Jacobi degree must be non-negative, got " + n.str());
    Rational acc = 0;
    for (Integer mm = 0; mm <= n; ++mm)
        acc += Rational(binomial(n + a, mm) * binomial(n + b, n - mm)) *
               pow_rat(x - 1, n - mm) * pow_rat(x + 1, mm);
    return acc * pow2(-n);
}

// C(n_p1, n_c1) = 2^-d_s * sum_u (-1)^u C(n_c1, u) C(n_p1 - n^Lam_s, d_s - u).
// Must agree with jacobi(I, J, d_s, 0); asserted in debug builds.
inline Rational c_constant(const Integer& n_p1, const Integer& n_c1, const Integer& d_s,
                           const Integer& n_lam_s) {
    if (d_s < 0) fail("bad-input", "d_s must be non-negative, got " + d_s.str());
    Integer acc = 0;
    for (Integer u = 0; u <= d_s; ++u)
        acc += sign_pow(u) * binomial(n_c1, u) * binomial(n_p1 - n_lam_s, d_s - u);
    Rational out = Rational(acc) * pow2(-d_s);
    assert(out == jacobi(n_p1 - n_lam_s - d_s, n_c1 - d_s, d_s, Rational(0)));
    return out;
}

namespace detail {
// Shared pairing core once the degree bookkeeping has been settled.
inline Rational pairing_value(const FourManifold& m, const Vec& F, const ReducibleDatum& r,
                              const std::vector<Vec>& betas, const Integer& x_power,
                              const Integer& n_p1, const Integer& n_c1,
                              const Integer& n_lam_s) {
    Rational value = Rational(sign_pow(x_power)) * pow2(-n_p1 + r.d_s) *
                     c_constant(n_p1, n_c1, r.d_s, n_lam_s) * Rational(r.sw);
    Vec KF = sub(r.K, F);
    for (const auto& beta : betas) value *= Rational(m.lattice.pairing(KF, beta));
    return value;
}
}  // namespace detail

// Pairing of one monomial with the link of one level-0 reducible.  The
// monomial's n_c1 is taken as given and must complement n_p1 to the critical
// total n_p1 + n_c1 = d_a + n_a - 1.
inline Rational link_pairing(const FourManifold& m, const GaugeSetup& g, const ReducibleDatum& r,
                             const InvariantMonomial& z) {
    if (!r.level.is_zero())
        fail("unsupported-level",
             "pairing with the link of a level-" + r.level.str() +
                 " reducible: no closed formula below the top stratum (conjectural); "
                 "only level 0 is supported");
    if (m.b1 > 1) fail("setup", "link pairing requires b1 <= 1, got b1 = " + m.b1.str());
    if (z.m < 0 || z.n_c1 < 0) fail("bad-input", "monomial powers must be non-negative");
    DimensionReport dims = DimensionReport::compute(m, g);
    if (z.n_p1() + z.n_c1 != dims.d_a + dims.n_a - 1)
        fail("degree", "monomial needs n_p1 + n_c1 = d_a + n_a - 1 = " +
                           Integer(dims.d_a + dims.n_a - 1).str() + ", got " +
                           Integer(z.n_p1() + z.n_c1).str());
    return detail::pairing_value(m, derive_F(g), r, z.betas, z.m, z.n_p1(), z.n_c1,
                                 dims.n_lam_s);
}

struct Contribution {
    Vec L1;
    Rational value;
};

struct PairingResult {
    Rational value;  // always the sum of the per-reducible entries
    std::vector<Contribution> per_reducible;
};

// Table of link pairings over a family of reducibles; `value` is their sum.
inline PairingResult pair_over_reducibles(const FourManifold& m, const GaugeSetup& g,
                                          const std::vector<ReducibleDatum>& data,
                                          const InvariantMonomial& z) {
    PairingResult out{Rational(0), {}};
    for (const auto& r : data) {
        Rational v = link_pairing(m, g, r, z);
        out.value += v;
        out.per_reducible.push_back({r.L1, std::move(v)});
    }
    return out;
}

struct DonaldsonResult {
    Rational value;
    std::vector<Contribution> per_reducible;  // signed, prefactored; sums to value
    std::vector<std::string> warnings;
};

// Donaldson invariant through the reducible-link sum.  z supplies the betas
// and the point-class power; the determinant power is derived from the
// degree window, so z.n_c1 is ignored here.
inline DonaldsonResult reduction_donaldson(const FourManifold& m, const GaugeSetup& g,
                                           const std::vector<ReducibleDatum>& data,
                                           const InvariantMonomial& z) {
    for (const auto& r : data)
        if (!r.level.is_zero())
            fail("unsupported-level",
                 "reducible at Uhlenbeck level " + r.level.str() +
                     ": pairings with links of lower-level reducibles have no closed "
                     "formula (conjectural); only top-level (level 0) data are supported");
    if (m.b1 > 1) fail("setup", "reduction formula requires b1 <= 1, got b1 = " + m.b1.str());
    if (z.m < 0) fail("bad-input", "monomial point-class power must be non-negative");
    DimensionReport dims = DimensionReport::compute(m, g);
    if (dims.n_a <= 0)
        fail("setup", "Dirac index n_a = " + dims.n_a.str() + " must be positive");
    if (dims.d_a < 0)
        fail("setup", "ASD dimension d_a = " + dims.d_a.str() + " must be non-negative");
    Integer n_p1 = z.n_p1();
    if (n_p1 < dims.d_a || n_p1 > dims.d_a + dims.n_a - 1)
        fail("degree", "n_p1 = " + n_p1.str() + " outside the window [" + dims.d_a.str() +
                           ", " + Integer(dims.d_a + dims.n_a - 1).str() + "] for this setup");
    Integer n_c1 = dims.d_a + dims.n_a - 1 - n_p1;

    DonaldsonResult out{Rational(0), {}, {}};
    Vec F = derive_F(g);
    Rational prefactor = -pow2(-(dims.n_a - 1));
    for (const auto& r : data) {
        Rational v = prefactor * Rational(sign_pow(m.lattice.square(r.L1))) *
                     detail::pairing_value(m, F, r, z.betas, z.m, n_p1, n_c1, dims.n_lam_s);
        out.value += v;
        out.per_reducible.push_back({r.L1, std::move(v)});
    }
    if (n_p1 > dims.d_a && !out.value.is_zero())
        out.warnings.push_back(
            "above-critical-degree sum is nonzero; the input data are not realizable as "
            "Seiberg-Witten invariants of a closed 4-manifold");
    return out;
}

// Convenience entry point from raw basic-class data: enumerate the
// reducibles first, then run the sum.  Data beyond the level cap cannot be
// silently dropped -- they would change the answer -- so they abort.
inline DonaldsonResult reduction_donaldson(const FourManifold& m, const GaugeSetup& g,
                                           const std::vector<SWDatum>& sw_data,
                                           const InvariantMonomial& z,
                                           const ReducibleOptions& opt = {}) {
    ReducibleEnumeration red = enumerate_reducibles(m, g, sw_data, opt);
    if (!red.overflow.empty())
        fail("unsupported-level",
             "a reducible sits at Uhlenbeck level " + red.overflow.front().level.str() +
                 ", beyond the configured cap; only top-level (level 0) data have a "
                 "closed formula");
    return reduction_donaldson(m, g, red.data, z);
}

// Closed form when every reducible has d_s = 0 (simple-type data) and z sits
// at the critical degree n_p1 = d_a:
//
//     D = sum_r (-1)^(L1_r^2) (-1)^(m-1) 2^(1 - d_a - n_a) sw_r
//               prod_i <2 L1_r - c1(E), b_i> .
inline DonaldsonResult simple_type_donaldson(const FourManifold& m, const GaugeSetup& g,
                                             const std::vector<ReducibleDatum>& data,
                                             const InvariantMonomial& z) {
    for (const auto& r : data) {
        if (!r.level.is_zero())
            fail("unsupported-level", "reducible at Uhlenbeck level " + r.level.str() +
                                          ": only top-level (level 0) data are supported");
        if (!r.d_s.is_zero())
            fail("not-simple-type",
                 "basic class with d_s = " + r.d_s.str() + "; the closed form needs d_s = 0");
    }
    if (m.b1 > 1) fail("setup", "reduction formula requires b1 <= 1, got b1 = " + m.b1.str());
    DimensionReport dims = DimensionReport::compute(m, g);
    if (dims.n_a <= 0)
        fail("setup", "Dirac index n_a = " + dims.n_a.str() + " must be positive");
    if (z.n_p1() != dims.d_a)
        fail("degree", "simple-type closed form needs n_p1 = d_a = " + dims.d_a.str() +
                           ", got " + z.n_p1().str());

    DonaldsonResult out{Rational(0), {}, {}};
    Rational prefactor = Rational(sign_pow(z.m - 1)) * pow2(1 - dims.d_a - dims.n_a);
    for (const auto& r : data) {
        Rational v = prefactor * Rational(sign_pow(m.lattice.square(r.L1)) * r.sw);
        Vec twoL1c = sub(scaled(2, r.L1), g.c1E);
        for (const auto& beta : z.betas) v *= Rational(m.lattice.pairing(twoL1c, beta));
        out.value += v;
        out.per_reducible.push_back({r.L1, std::move(v)});
    }
    return out;
}

}  // namespace mrk
