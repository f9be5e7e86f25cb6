#pragma once

// Shared helpers for the unit suite: deterministic RNG wrappers and a few
// fixture builders.  Every randomized test seeds its own engine so failures
// reproduce.

#include <random>
#include <vector>

#include "mrk/lattice.hpp"
#include "mrk/manifold.hpp"
#include "mrk/rational.hpp"

namespace testutil {

inline long rand_int(std::mt19937& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mrk::Vec rand_vec(std::mt19937& rng, std::size_t rank, long lo = -9, long hi = 9) {
    mrk::Vec v(rank);
    for (auto& c : v) c = rand_int(rng, lo, hi);
    return v;
}

inline mrk::IntersectionLattice rand_lattice(std::mt19937& rng, std::size_t rank,
                                             long bound = 9) {
    std::vector<std::vector<mrk::Integer>> g(rank, mrk::Vec(rank, mrk::Integer(0)));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j) g[i][j] = g[j][i] = rand_int(rng, -bound, bound);
    return mrk::IntersectionLattice(std::move(g));
}

// The standard rank-4 working lattice of the degree-3 elliptic surface:
// [[0,1],[1,-3]] on {f, s} plus <-1> + <-1>.
inline mrk::IntersectionLattice e3_lattice() {
    using mrk::Integer;
    return mrk::IntersectionLattice({{0, 1, 0, 0},
                                     {1, -3, 0, 0},
                                     {0, 0, -1, 0},
                                     {0, 0, 0, -1}});
}

}  // namespace testutil
