#pragma once

// Integral intersection lattices: a rank-n free Z-module with a symmetric
// Gram matrix, plus the handful of vector operations the gauge-theoretic
// formulas need.  A lattice may model a working sublattice of the full
// second cohomology rather than the whole group; the characteristic test
// is then only a necessary condition (see manifold.hpp for the
// label-restricted variant the validator uses).

#include <cstddef>
#include <string>
#include <vector>

#include "mrk/errors.hpp"
#include "mrk/rational.hpp"

namespace mrk {

using Vec = std::vector<Integer>;

inline Vec zero_vec(std::size_t rank) { return Vec(rank, Integer(0)); }

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail("dimension-mismatch", "vector sum of unequal lengths");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail("dimension-mismatch", "vector difference of unequal lengths");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec scaled(const Integer& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline Vec neg(const Vec& a) { return scaled(-1, a); }

// Coordinatewise congruence mod 2.
inline bool congruent_mod2(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail("dimension-mismatch", "mod-2 comparison of unequal lengths");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (odd(a[i] - b[i])) return false;
    return true;
}

class IntersectionLattice {
public:
    explicit IntersectionLattice(std::vector<std::vector<Integer>> gram)
        : gram_(std::move(gram)) {
        for (const auto& row : gram_)
            if (row.size() != gram_.size())
                fail("bad-gram", "Gram matrix is not square");
        for (std::size_t i = 0; i < gram_.size(); ++i)
            for (std::size_t j = i + 1; j < gram_.size(); ++j)
                if (gram_[i][j] != gram_[j][i])
                    fail("bad-gram", "Gram matrix is not symmetric at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    }

    static IntersectionLattice hyperbolic() {
        return IntersectionLattice({{0, 1}, {1, 0}});
    }

    static IntersectionLattice diagonal(const std::vector<Integer>& entries) {
        std::vector<std::vector<Integer>> g(entries.size(), Vec(entries.size(), Integer(0)));
        for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
        return IntersectionLattice(std::move(g));
    }

    // Block-diagonal direct sum; basis order is left block then right block.
    static IntersectionLattice direct_sum(const IntersectionLattice& a,
                                          const IntersectionLattice& b) {
        std::size_t n = a.rank() + b.rank();
        std::vector<std::vector<Integer>> g(n, Vec(n, Integer(0)));
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < a.rank(); ++j) g[i][j] = a.gram_[i][j];
        for (std::size_t i = 0; i < b.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j)
                g[a.rank() + i][a.rank() + j] = b.gram_[i][j];
        return IntersectionLattice(std::move(g));
    }

    std::size_t rank() const { return gram_.size(); }
    const std::vector<std::vector<Integer>>& gram() const { return gram_; }

    // a . b through the Gram matrix (the intersection pairing).
    Integer pairing(const Vec& a, const Vec& b) const {
        check(a);
        check(b);
        Integer acc = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < rank(); ++j) acc += a[i] * gram_[i][j] * b[j];
        }
        return acc;
    }

    Integer square(const Vec& a) const { return pairing(a, a); }

    // Necessary condition for K to be the first Chern class of a spin-c
    // structure: K . x == x . x (mod 2) for every basis vector x.  On a
    // working sublattice this tests only the modeled directions.
    bool is_characteristic(const Vec& K) const {
        check(K);
        for (std::size_t i = 0; i < rank(); ++i) {
            Integer Ki = 0;
            for (std::size_t j = 0; j < rank(); ++j) Ki += gram_[i][j] * K[j];
            if (odd(Ki - gram_[i][i])) return false;
        }
        return true;
    }

    // L1 = (K - c)/2; every coordinate must be even for the reduction line
    // bundle to exist.
    Vec half_difference(const Vec& K, const Vec& c) const {
        check(K);
        check(c);
        Vec out(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            Integer d = K[i] - c[i];
            if (odd(d))
                fail("odd-coordinate", "(K - c)/2 has odd coordinate at index " + std::to_string(i));
            out[i] = d >> 1;
        }
        return out;
    }

    void check(const Vec& v) const {
        if (v.size() != rank())
            fail("dimension-mismatch", "vector of length " + std::to_string(v.size()) +
                                           " against lattice of rank " + std::to_string(rank()));
    }

    bool operator==(const IntersectionLattice& other) const { return gram_ == other.gram_; }

private:
    std::vector<std::vector<Integer>> gram_;
};

}  // namespace mrk
