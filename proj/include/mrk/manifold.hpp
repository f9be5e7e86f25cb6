#pragma once

// Topological input data: a closed oriented 4-manifold modeled by its
// numerical invariants plus a working intersection (sub)lattice with named
// classes, the bundle data (spin-c structure W and rank-2 bundle E), and
// the Seiberg-Witten basic classes with their invariants.
//
// The lattice is allowed to be a proper sublattice of H^2(X;Z): e, sigma,
// b1, b+ are stored independently of its rank.  Constructors check only
// structural facts; topological admissibility is the validator's job, so
// deliberately broken toy inputs remain constructible.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrk/errors.hpp"
#include "mrk/lattice.hpp"
#include "mrk/rational.hpp"

namespace mrk {

struct FourManifold {
    Integer euler;
    Integer signature;
    Integer b1;
    Integer bplus;
    IntersectionLattice lattice;
    std::map<std::string, Vec> labels;  // named distinguished classes
    bool simply_connected = false;

    FourManifold(Integer e, Integer sigma, Integer b1_, Integer bplus_,
                 IntersectionLattice lat, std::map<std::string, Vec> labels_ = {},
                 bool simply_connected_ = false)
        : euler(std::move(e)),
          signature(std::move(sigma)),
          b1(std::move(b1_)),
          bplus(std::move(bplus_)),
          lattice(std::move(lat)),
          labels(std::move(labels_)),
          simply_connected(simply_connected_) {
        if (Integer(lattice.rank()) > b2())
            fail("bad-input", "lattice rank exceeds b2 = euler - 2 + 2*b1");
        for (const auto& [name, v] : labels) {
            if (v.size() != lattice.rank())
                fail("dimension-mismatch", "label '" + name + "' has wrong length");
        }
    }

    Integer b2() const { return euler - 2 + 2 * b1; }

    const Vec& label(const std::string& name) const {
        auto it = labels.find(name);
        if (it == labels.end()) fail("unknown-label", "no labeled class '" + name + "'");
        return it->second;
    }

    // Sublattice-aware necessary condition for K to be characteristic: on a
    // full-rank lattice this is the basis-wise test; on a working sublattice
    // only the labeled classes represent known cohomology classes, so only
    // those pairings are decidable.  Unlabeled sublattices fall back to the
    // basis-wise test.
    bool characteristic_check(const Vec& K) const {
        if (Integer(lattice.rank()) == b2() || labels.empty())
            return lattice.is_characteristic(K);
        for (const auto& [name, v] : labels)
            if (odd(lattice.pairing(K, v) - lattice.square(v))) return false;
        return true;
    }
};

struct GaugeSetup {
    Vec c1W;      // c1(W+), spin-c determinant line
    Vec c1E;      // c1(E),  rank-2 Hermitian bundle
    Integer c2E;  // c2(E)
};

// F = c1(W+) + c1(E); the class every formula pairs basic classes against.
inline Vec derive_F(const GaugeSetup& g) { return add(g.c1W, g.c1E); }

struct SWDatum {
    Vec K;       // basic class (candidate spin-c first Chern class)
    Integer sw;  // Seiberg-Witten invariant
};

// True when the obstruction argument certifies that no flat connection can
// appear: on a simply connected manifold a class with nonzero mod-2
// reduction cannot come from an SO(3) bundle admitting a flat connection.
// Anything else (not simply connected, or c even) is uncertified, not a
// guarantee of existence.
inline bool flat_connection_obstructed(const FourManifold& m, const Vec& c,
                                       bool simply_connected) {
    m.lattice.check(c);
    if (!simply_connected) return false;
    for (const auto& ci : c)
        if (odd(ci)) return true;
    return false;
}

// Connected sum with an orientation-reversed projective plane: e grows by
// one, the signature drops by one, and the lattice gains a <-1> summand
// whose generator is labeled "e*" (or "e*2", "e*3", ... on repeated
// blow-ups).  Betti data b1, b+ are unchanged.
inline FourManifold blow_up(const FourManifold& m) {
    IntersectionLattice lat =
        IntersectionLattice::direct_sum(m.lattice, IntersectionLattice::diagonal({Integer(-1)}));
    std::map<std::string, Vec> labels;
    for (const auto& [name, v] : m.labels) {
        Vec w = v;
        w.push_back(0);
        labels.emplace(name, std::move(w));
    }
    std::string exc = "e*";
    for (int i = 2; labels.count(exc); ++i) exc = "e*" + std::to_string(i);
    Vec e_star = zero_vec(lat.rank());
    e_star.back() = 1;
    labels.emplace(exc, std::move(e_star));
    return FourManifold(m.euler + 1, m.signature - 1, m.b1, m.bplus, std::move(lat),
                        std::move(labels), m.simply_connected);
}

// Embed a vector of the original lattice into a blow-up of it (append zero
// coordinates).  Convenience for transporting gauge data across blow_up.
inline Vec embed(const Vec& v, const IntersectionLattice& target) {
    if (v.size() > target.rank()) fail("dimension-mismatch", "cannot embed into smaller lattice");
    Vec out = v;
    out.resize(target.rank(), Integer(0));
    return out;
}

// ---------------------------------------------------------------------------
// Catalog: simply connected minimal elliptic surfaces without multiple
// fibers, one per fiber degree n >= 2.
//
//   e = 12n, sigma = -8n, b1 = 0, b+ = 2n - 1.
//   Working lattice: [[0,1],[1,-n]] on the fiber class f and a section s,
//   plus an auxiliary diagonal <-1>^aux_rank block used to realize F.
//   Basic classes: K_r = (n-2-2r) f with invariant (-1)^r C(n-2, r),
//   r = 0..n-2 (for n = 2 the single class K = 0 with invariant 1).
// ---------------------------------------------------------------------------

struct CatalogResult {
    FourManifold manifold;
    std::vector<SWDatum> sw_data;
};

inline CatalogResult catalog_elliptic(const Integer& n, const Integer& aux_rank = 2) {
    if (n < 2) fail("bad-catalog", "elliptic catalog needs n >= 2, got " + n.str());
    if (aux_rank < 0 || odd(aux_rank))
        fail("bad-catalog", "aux_rank must be a non-negative even integer, got " + aux_rank.str());

    IntersectionLattice base({{0, 1}, {1, -n}});
    std::size_t aux = static_cast<std::size_t>(aux_rank);
    IntersectionLattice lat =
        aux == 0 ? base
                 : IntersectionLattice::direct_sum(
                       base, IntersectionLattice::diagonal(Vec(aux, Integer(-1))));

    Vec f = zero_vec(lat.rank());
    f[0] = 1;
    Vec s = zero_vec(lat.rank());
    s[1] = 1;
    FourManifold m(12 * n, -8 * n, 0, 2 * n - 1, std::move(lat), {{"f", f}, {"s", s}},
                   /*simply_connected=*/true);

    std::vector<SWDatum> data;
    for (Integer r = 0; r <= n - 2; ++r) {
        Vec K = zero_vec(m.lattice.rank());
        K[0] = n - 2 - 2 * r;
        data.push_back({std::move(K), sign_pow(r) * binomial(n - 2, r)});
    }
    return {std::move(m), std::move(data)};
}

namespace detail {
// Largest-first decomposition of a >= 0 into at most `slots` squares.
// Deterministic; returns false when impossible with the given slot count.
inline bool square_decompose(const Integer& a, std::size_t slots, std::vector<Integer>& out) {
    if (a.is_zero()) return true;
    if (slots == 0) return false;
    Integer root = sqrt(a);
    for (Integer c = root; c >= 1; --c) {
        out.push_back(c);
        if (square_decompose(a - c * c, slots - 1, out)) return true;
        out.pop_back();
    }
    return false;
}
}  // namespace detail

// Gauge data for a catalog surface: F = sum a_i v_i over the auxiliary block
// with F^2 = fsq (so F is orthogonal to every basic class), c1(W+) = f for
// odd n and 0 for even n (forced by K_r = c1(W+) mod 2), c1(E) = F - c1(W+),
// c2(E) = 0.  Default fsq = 2 - 4n puts the moduli dimension window at
// degree n - 2.
inline GaugeSetup catalog_gauge(const FourManifold& m, const Integer& n,
                                std::optional<Integer> fsq_opt = std::nullopt) {
    Integer fsq = fsq_opt.value_or(2 - 4 * n);
    if (fsq > 0) fail("bad-catalog", "catalog F^2 must be non-positive, got " + fsq.str());
    std::size_t aux = m.lattice.rank() - 2;
    std::vector<Integer> coeffs;
    if (!detail::square_decompose(-fsq, aux, coeffs))
        fail("bad-catalog", "F^2 = " + fsq.str() + " is not realizable with aux_rank " +
                                std::to_string(aux) + "; increase --aux-rank");
    Vec F = zero_vec(m.lattice.rank());
    for (std::size_t i = 0; i < coeffs.size(); ++i) F[2 + i] = coeffs[i];
    Vec c1W = zero_vec(m.lattice.rank());
    if (odd(n)) c1W[0] = 1;  // c1(W+) = f
    return GaugeSetup{c1W, sub(F, c1W), 0};
}

}  // namespace mrk
