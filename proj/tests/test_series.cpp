#include <catch2/catch_amalgamated.hpp>

#include "mrk/link_pairing.hpp"
#include "mrk/series.hpp"

#include <random>

#include "util.hpp"

using namespace mrk;

namespace {

struct Setup {
    FourManifold m;
    GaugeSetup g;
    std::vector<SWDatum> sw;
};

Setup elliptic(long n, long aux = 2) {
    auto [m, sw] = catalog_elliptic(n, aux);
    GaugeSetup g = catalog_gauge(m, n);
    return {std::move(m), std::move(g), std::move(sw)};
}

}  // namespace

TEST_CASE("normalization constant of the closed-form series", "[series]") {
    for (long n = 2; n <= 9; ++n) {
        auto [m, sw] = catalog_elliptic(n, 4);
        CAPTURE(n);
        CHECK(witten_constant(m) == pow2(Integer(2 - n)));
    }

    FourManifold flat(0, 0, 1, 0, IntersectionLattice::diagonal({}));
    CHECK(witten_constant(flat) == 4);

    FourManifold odd(1, 0, 1, 0, IntersectionLattice::diagonal({}));
    CHECK_THROWS_MATCHES(witten_constant(odd), error, Catch::Matchers::Predicate<error>(
                                                          [](const error& e) {
                                                              return e.code() ==
                                                                     std::string("indivisible");
                                                          }));
}

TEST_CASE("series coefficients carry the constant and the invariants", "[series]") {
    auto s = elliptic(3);
    auto terms = witten_coefficients(s.m, s.sw);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].K == Vec{1, 0, 0, 0});
    CHECK(terms[0].coeff == Rational(1, 2));
    CHECK(terms[1].K == Vec{-1, 0, 0, 0});
    CHECK(terms[1].coeff == Rational(-1, 2));
}

TEST_CASE("low-degree evaluations have closed forms", "[series]") {
    auto s = elliptic(3);
    SeriesSpec spec;
    spec.w = s.g.c1E;
    spec.terms = {{Vec{1, 0, 0, 0}, 1}, {Vec{-1, 0, 0, 0}, -1}};

    Vec h = s.m.label("s");

    // degree 0: sum of signed coefficients
    CHECK(series_invariant(s.m, spec, h, 0) == 0);
    // degree 1: signed first moment along h; both terms contribute -1
    CHECK(series_invariant(s.m, spec, h, 1) == -2);

    // the w-dependent sign: w^2 + w.K = -10 for both classes
    for (const auto& t : spec.terms) {
        Integer e = s.m.lattice.square(spec.w) + s.m.lattice.pairing(spec.w, t.K);
        CHECK(e == -10);
    }
}

TEST_CASE("series evaluation matches the reducible-sum route", "[series]") {
    for (long n = 3; n <= 8; ++n) {
        auto s = elliptic(n, 4);
        CAPTURE(n);
        SeriesSpec spec;
        spec.w = s.g.c1E;
        // witten_coefficients already folds the normalization constant in
        spec.terms = witten_coefficients(s.m, s.sw);

        InvariantMonomial z;
        z.betas.assign(static_cast<std::size_t>(n - 2), s.m.label("s"));
        auto red = reduction_donaldson(s.m, s.g, s.sw, z);

        Rational series = series_invariant(s.m, spec, s.m.label("s"), n - 2);
        CHECK(series == red.value);
        CHECK(series == -factorial(n - 2));
    }
}

TEST_CASE("ill-matched lifts make the sign exponent odd", "[series]") {
    FourManifold m(4, 0, 0, 1, IntersectionLattice::hyperbolic());
    SeriesSpec spec;
    spec.w = Vec{1, 0};
    spec.terms = {{Vec{0, 1}, 1}};  // w^2 + w.K = 0 + 1
    CHECK_THROWS_MATCHES(series_invariant(m, spec, Vec{1, 1}, 0), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == std::string("sign-parity");
                         }));
}

TEST_CASE("series evaluation is homogeneous in the surface class", "[series]") {
    auto s = elliptic(5, 4);
    SeriesSpec spec;
    spec.w = s.g.c1E;
    spec.terms = witten_coefficients(s.m, s.sw);

    std::mt19937 rng(53);
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> scale(2, 5);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        Vec h(s.m.lattice.rank(), 0);
        for (auto& c : h) c = coord(rng);
        Integer t = scale(rng);
        Integer d = deg(rng);
        CAPTURE(trial, d.str(), t.str());
        CHECK(series_invariant(s.m, spec, scaled(t, h), d) ==
              pow_rat(Rational(t), d) * series_invariant(s.m, spec, h, d));
    }
}

TEST_CASE("an empty expansion evaluates to zero", "[series]") {
    auto s = elliptic(2, 4);
    CHECK(s.sw.size() == 1);  // the n = 2 fiber sum has sw = {(0, 1)}
    SeriesSpec spec;
    spec.w = s.g.c1E;
    CHECK(series_invariant(s.m, spec, s.m.label("s"), 3) == 0);
}

TEST_CASE("comparison orientation between bundle lifts", "[series]") {
    auto H = IntersectionLattice::hyperbolic();
    auto L = IntersectionLattice::direct_sum(H, IntersectionLattice::diagonal({-1}));

    SECTION("a lift compared with itself is positively oriented") {
        std::mt19937 rng(54);
        std::uniform_int_distribution<int> coord(-5, 5);
        for (int trial = 0; trial < 40; ++trial) {
            Vec w(3, 0);
            for (auto& c : w) c = coord(rng);
            CHECK(orientation_sign(L, w, w) == 1);
        }
    }

    SECTION("a half-difference of odd square flips the orientation") {
        // (w1 - w2)/2 = e* has square -1
        CHECK(orientation_sign(L, Vec{0, 0, 2}, Vec{0, 0, 0}) == -1);
        // (w1 - w2)/2 = f has square 0
        CHECK(orientation_sign(L, Vec{2, 0, 0}, Vec{0, 0, 0}) == 1);
        // (w1 - w2)/2 = f + s - e*: square = 2 - 1 = 1
        CHECK(orientation_sign(L, Vec{2, 2, -2}, Vec{0, 0, 0}) == -1);
    }

    SECTION("incomparable lifts are a lift-mismatch error") {
        CHECK_THROWS_MATCHES(orientation_sign(L, Vec{1, 0, 0}, Vec{0, 0, 0}), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == std::string("lift-mismatch");
                             }));
    }

    SECTION("the sign is multiplicative over chains of lifts") {
        // (u+v)^2 = u^2 + v^2 + 2 u.v and the cross term is even, so
        // sign(a,b) sign(b,c) = sign(a,c) with no correction.
        std::mt19937 rng(55);
        std::uniform_int_distribution<int> coord(-4, 4);
        for (int trial = 0; trial < 120; ++trial) {
            Vec a(3, 0), b(3, 0), c(3, 0);
            for (auto& x : a) x = 2 * coord(rng);
            for (auto& x : b) x = 2 * coord(rng);
            for (auto& x : c) x = 2 * coord(rng);
            CAPTURE(trial);
            CHECK(orientation_sign(L, a, b) * orientation_sign(L, b, c) ==
                  orientation_sign(L, a, c));
        }
    }
}

TEST_CASE("even powers of the point class scale by four", "[series]") {
    CHECK(point_class_even_power(Rational(3, 7), 0) == Rational(3, 7));
    CHECK(point_class_even_power(Rational(3, 7), 2) == Rational(48, 7));
    CHECK(point_class_even_power(Rational(-5), 1) == Rational(-20));
}
