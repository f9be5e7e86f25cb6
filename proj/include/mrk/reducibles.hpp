#pragma once

// Enumeration of reducible loci.  Each Seiberg-Witten basic class K with
// K = c1(W+) mod 2 determines a line bundle L1 = (K - c1(W+))/2 and sits at
// Uhlenbeck level
//
//     l = ((K - F)^2 - p1) / 4,     K - F = 2 L1 - c1(E),
//
// a non-negative integer for genuine reducibles.  Only level-0 ("top
// stratum") reducibles admit a closed pairing formula; higher levels are
// carried along so callers can refuse them loudly.

#include <algorithm>
#include <vector>

#include "mrk/dimensions.hpp"
#include "mrk/errors.hpp"
#include "mrk/lattice.hpp"
#include "mrk/manifold.hpp"
#include "mrk/rational.hpp"

namespace mrk {

struct ReducibleDatum {
    Vec L1;       // reduction line bundle
    Vec K;        // originating basic class
    Integer sw;   // its Seiberg-Witten invariant
    Integer level;
    Integer d_s;  // SW moduli half-dimension of K
};

struct ReducibleEnumeration {
    std::vector<ReducibleDatum> data;      // level <= max_level, sorted
    std::vector<ReducibleDatum> overflow;  // level > max_level, reported apart
};

struct ReducibleOptions {
    Integer max_level = 10;
    bool keep_zero_sw = false;  // zero invariants contribute 0; kept only on request
};

// Candidates with K not congruent to c1(W+) mod 2 are an input error (the
// datum cannot define a reduction at all), not a silent skip.  Negative
// levels mean the candidate admits no reducible locus and are excluded.
inline ReducibleEnumeration enumerate_reducibles(const FourManifold& m, const GaugeSetup& g,
                                                 const std::vector<SWDatum>& sw_data,
                                                 const ReducibleOptions& opt = {}) {
    Integer p1 = compute_p1(g, m.lattice);
    Vec F = derive_F(g);
    ReducibleEnumeration out;
    for (const auto& d : sw_data) {
        m.lattice.check(d.K);
        if (!congruent_mod2(d.K, g.c1W))
            fail("congruence", "basic class not congruent to c1(W+) mod 2");
        if (d.sw.is_zero() && !opt.keep_zero_sw) continue;
        Vec L1 = m.lattice.half_difference(d.K, g.c1W);
        Integer q = m.lattice.square(sub(d.K, F));
        Integer num = q - p1, level, rem;
        divide_qr(num, Integer(4), level, rem);
        if (!rem.is_zero()) continue;  // not a reducible locus
        if (level < 0) continue;
        ReducibleDatum rd{std::move(L1), d.K, d.sw, level, dim_sw(m, d.K)};
        (level > opt.max_level ? out.overflow : out.data).push_back(std::move(rd));
    }
    auto by_level_then_coords = [](const ReducibleDatum& a, const ReducibleDatum& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.L1 < b.L1;
    };
    std::sort(out.data.begin(), out.data.end(), by_level_then_coords);
    std::sort(out.overflow.begin(), out.overflow.end(), by_level_then_coords);
    return out;
}

// True iff every enumerated reducible lies in the top (level-0) stratum;
// vacuously true when empty.
inline bool top_level_only(const std::vector<ReducibleDatum>& data) {
    return std::all_of(data.begin(), data.end(),
                       [](const ReducibleDatum& d) { return d.level.is_zero(); });
}

}  // namespace mrk
