#include <catch2/catch_amalgamated.hpp>

#include "mrk/dimensions.hpp"

#include <random>

#include "util.hpp"

using namespace mrk;

namespace {

struct Setup {
    FourManifold m;
    GaugeSetup g;
    std::vector<SWDatum> sw;
};

Setup elliptic(long n, long aux = 2, std::optional<Integer> fsq = std::nullopt) {
    auto [m, sw] = catalog_elliptic(n, aux);
    GaugeSetup g = catalog_gauge(m, n, fsq);
    return {std::move(m), std::move(g), std::move(sw)};
}

}  // namespace

TEST_CASE("p1 = c1(E)^2 - 4 c2(E)", "[dimensions]") {
    auto s = elliptic(3);
    CHECK(compute_p1(s.g, s.m.lattice) == -10);
    CHECK(compute_p1(GaugeSetup{{0, 0}, {0, 0}, 1}, IntersectionLattice::hyperbolic()) == -4);
    CHECK(compute_p1(GaugeSetup{{0, 0}, {0, 0}, 0}, IntersectionLattice::hyperbolic()) == 0);
    CHECK(compute_p1(GaugeSetup{{0, 0}, {1, 1}, 0}, IntersectionLattice::hyperbolic()) == 2);
}

TEST_CASE("ASD half-dimension and admissibility", "[dimensions]") {
    auto s = elliptic(3);
    CHECK(dim_asd(s.m, -10) == 1);  // 10 - (3/2)(1 - 0 + 5)

    FourManifold toy(6, -1, 0, 1, IntersectionLattice::diagonal({-1}));
    CHECK(dim_asd(toy, -3) == 0);

    FourManifold inadmissible(6, 0, 0, 2, IntersectionLattice::diagonal({1}));
    CHECK_THROWS_MATCHES(dim_asd(inadmissible, -4), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == std::string("admissibility");
                         }));
}

TEST_CASE("Dirac index n_a = (p1 + F^2 - sigma)/4", "[dimensions]") {
    auto s = elliptic(3);
    CHECK(dim_dirac(s.m, s.g, -10) == 1);  // (-10 - 10 + 24)/4

    // F = 0 and p1 = sigma gives index 0
    FourManifold toy(6, -1, 0, 1, IntersectionLattice::diagonal({-1}));
    GaugeSetup g0{{0}, {0}, 0};
    CHECK(dim_dirac(toy, g0, -1) == 0);

    CHECK_THROWS_MATCHES(dim_dirac(toy, g0, -2), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == std::string("indivisible");
                         }));
}

TEST_CASE("Seiberg-Witten half-dimension d_s", "[dimensions]") {
    auto s = elliptic(3);
    for (const auto& d : s.sw) CHECK(dim_sw(s.m, d.K) == 0);  // 2e + 3 sigma = 0, K^2 = 0

    // K3: e = 24, sigma = -16, K = 0
    FourManifold k3(24, -16, 0, 3, IntersectionLattice::hyperbolic());
    CHECK(dim_sw(k3, {0, 0}) == 0);

    // K^2 = 2e + 3 sigma + 8 gives d_s = 1: use H with K = (2,4), K^2 = 16
    FourManifold toy(4, 0, 0, 1, IntersectionLattice::hyperbolic());
    CHECK(dim_sw(toy, {2, 4}) == 1);

    CHECK_THROWS_AS(dim_sw(toy, {1, 1}), error);  // (2 - 8)/8 is not an integer
}

TEST_CASE("n^Lambda_s = -p1 - (e + sigma)/2", "[dimensions]") {
    auto s = elliptic(3);
    CHECK(n_lambda_s(s.m, -10) == 4);

    FourManifold toy(4, -4, 0, 1, IntersectionLattice::hyperbolic());
    CHECK(n_lambda_s(toy, 0) == 0);

    FourManifold odd_sum(3, 0, 0, 1, IntersectionLattice::diagonal({1}));
    CHECK_THROWS_AS(n_lambda_s(odd_sum, 0), error);
}

TEST_CASE("catalog dimensions match their closed forms", "[dimensions]") {
    for (long n = 3; n <= 8; ++n) {
        for (Integer fsq = 2 - 4 * n; fsq <= -3 * n; fsq += 2) {
            auto s = elliptic(n, 4, fsq);
            CAPTURE(n, fsq);
            DimensionReport r = DimensionReport::compute(s.m, s.g);
            CHECK(r.p1 == fsq);                  // K_r . F = 0 forces p1 = F^2
            CHECK(r.d_a == -fsq - 3 * n);
            CHECK(2 * r.n_a == fsq + 4 * n);
            CHECK(r.n_lam_s == -fsq - 2 * n);
            CHECK(r.dim_M_star == 2 * r.d_a + 2 * r.n_a - 1);
            CHECK(odd(r.dim_M_star));
        }
    }
}

TEST_CASE("moduli dimension agrees with the index-sum form", "[dimensions]") {
    // dim M* recomputed from raw e, sigma, p1, F^2:
    //   -2 p1 - (3/2)(e + sigma) + p1/2 + (F^2 - sigma)/2 - 1
    for (long n = 3; n <= 8; ++n) {
        auto s = elliptic(n, 4);
        DimensionReport r = DimensionReport::compute(s.m, s.g);
        Rational e(s.m.euler), sig(s.m.signature), p1(r.p1);
        Rational F2(s.m.lattice.square(derive_F(s.g)));
        Rational total = -2 * p1 - Rational(3, 2) * (e + sig) + p1 / 2 + (F2 - sig) / 2 - 1;
        CHECK(Rational(r.dim_M_star) == total);
    }
}

TEST_CASE("blowing up and twisting c1(E) by the exceptional class", "[dimensions]") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = elliptic(testutil::rand_int(rng, 3, 6), 4);
        DimensionReport before = DimensionReport::compute(s.m, s.g);

        FourManifold b = blow_up(s.m);
        GaugeSetup g2{embed(s.g.c1W, b.lattice),
                      add(embed(s.g.c1E, b.lattice), b.label("e*")), s.g.c2E};
        Integer p1_after = compute_p1(g2, b.lattice);
        CHECK(p1_after == before.p1 - 1);
        CHECK(dim_asd(b, p1_after) == before.d_a + 1);
    }
}
