#include <catch2/catch_amalgamated.hpp>

#include "mrk/io.hpp"

#include <functional>
#include <string>

#include "util.hpp"

using namespace mrk;

namespace {

bool fails_with(const std::function<void()>& f, const std::string& code,
                const std::string& needle = "") {
    try {
        f();
    } catch (const error& e) {
        return e.code() == code &&
               (needle.empty() || std::string(e.what()).find(needle) != std::string::npos);
    }
    return false;
}

JobConfig sample_config() {
    auto [m, sw] = catalog_elliptic(3);
    auto g = catalog_gauge(m, 3);
    JobConfig c;
    c.monomial = InvariantMonomial{};
    c.monomial->betas = {m.label("s")};
    c.manifold = std::move(m);
    c.gauge = g;
    c.sw_data = std::move(sw);
    c.has_sw_data = true;
    return c;
}

}  // namespace

TEST_CASE("canonical documents round-trip byte-identically", "[io]") {
    std::string first = dump(config_to_json(sample_config()));
    JobConfig parsed = config_from_json(json::parse(first));
    std::string second = dump(config_to_json(parsed));
    CHECK(first == second);
    // and a second pass is already a fixed point
    CHECK(dump(config_to_json(config_from_json(json::parse(second)))) == second);
}

TEST_CASE("serialization is deterministic regardless of input key order", "[io]") {
    std::string a = R"({"schema":"mrk/1","manifold":{"euler":4,"signature":0,"b1":0,"bplus":1,"gram":[[0,1],[1,0]]}})";
    std::string b = R"({"manifold":{"gram":[[0,1],[1,0]],"bplus":1,"b1":0,"signature":0,"euler":4},"schema":"mrk/1"})";
    CHECK(dump(config_to_json(config_from_json(json::parse(a)))) ==
          dump(config_to_json(config_from_json(json::parse(b)))));
}

TEST_CASE("integers wider than 64 bits travel as strings", "[io]") {
    Integer big("123456789012345678901234567890");
    json j = integer_to_json(big);
    REQUIRE(j.is_string());
    CHECK(integer_from_json(j, "test") == big);
    json small = integer_to_json(Integer(-42));
    REQUIRE(small.is_number_integer());
    CHECK(integer_from_json(small, "test") == -42);
}

TEST_CASE("rationals use the p/q string form", "[io]") {
    CHECK(rational_to_json(Rational(-3, 6)) == json("-1/2"));
    CHECK(rational_to_json(Rational(5)) == json("5"));
    CHECK(rational_from_json(json("7/3"), "t") == Rational(7, 3));
    CHECK(rational_from_json(json(4), "t") == 4);
    CHECK(fails_with([] { rational_from_json(json(1.5), "spot"); }, "bad-input", "spot"));
}

TEST_CASE("manifold parsing applies defaults and validates shape", "[io]") {
    json j = {{"euler", 4}, {"signature", 0}, {"b1", 0}, {"bplus", 1},
              {"gram", json::array({json::array({0, 1}), json::array({1, 0})})}};
    FourManifold m = manifold_from_json(j);
    CHECK(m.euler == 4);
    CHECK_FALSE(m.simply_connected);  // absent means unknown, not assumed
    CHECK(m.labels.empty());

    j["labels"] = {{"f", json::array({1, 0})}};
    j["simply_connected"] = true;
    FourManifold m2 = manifold_from_json(j);
    CHECK(m2.label("f") == Vec{1, 0});
    CHECK(m2.simply_connected);
}

TEST_CASE("missing fields are reported by name", "[io]") {
    json no_euler = {{"signature", 0}, {"b1", 0}, {"bplus", 1},
                     {"gram", json::array({json::array({0})})}};
    CHECK(fails_with([&] { manifold_from_json(no_euler); }, "bad-input", "euler"));

    json no_c2E = {{"c1W", json::array({0})}, {"c1E", json::array({1})}};
    CHECK(fails_with([&] { gauge_from_json(no_c2E); }, "bad-input", "c2E"));

    json no_K = json::array({json{{"sw", 1}}});
    CHECK(fails_with([&] { sw_data_from_json(no_K); }, "bad-input", "K"));

    json no_w = {{"terms", json::array()}};
    CHECK(fails_with([&] { series_from_json(no_w); }, "bad-input", "w"));
}

TEST_CASE("config documents are strictly validated", "[io]") {
    SECTION("schema is required and checked") {
        CHECK(fails_with([] { config_from_json(json::object()); }, "bad-input", "schema"));
        CHECK(fails_with([] { config_from_json(json{{"schema", "mrk/2"}}); }, "bad-input",
                         "mrk/2"));
        CHECK(fails_with([] { config_from_json(json{{"schema", 1}}); }, "bad-input"));
    }
    SECTION("unknown fields are rejected, with the offender named") {
        json j = {{"schema", "mrk/1"}, {"monopoles", 3}};
        CHECK(fails_with([&] { config_from_json(j); }, "bad-input", "monopoles"));
    }
    SECTION("a monomial cannot stand without a manifold") {
        json j = {{"schema", "mrk/1"}, {"monomial", json::object()}};
        CHECK(fails_with([&] { config_from_json(j); }, "bad-input", "manifold"));
    }
    SECTION("non-object configs are rejected") {
        CHECK(fails_with([] { config_from_json(json::array()); }, "bad-input"));
    }
}

TEST_CASE("monomial labels resolve against the manifold", "[io]") {
    auto [m, sw] = catalog_elliptic(3);
    json j = {{"betas", json::array({"s", "f", json::array({0, 0, 1, 0})})}, {"m", 1}};
    InvariantMonomial z = monomial_from_json(j, m);
    REQUIRE(z.betas.size() == 3);
    CHECK(z.betas[0] == Vec{0, 1, 0, 0});
    CHECK(z.betas[1] == Vec{1, 0, 0, 0});
    CHECK(z.betas[2] == Vec{0, 0, 1, 0});
    CHECK(z.m == 1);
    CHECK(z.n_p1() == 5);

    json bad = {{"betas", json::array({"nonexistent"})}};
    CHECK(fails_with([&] { monomial_from_json(bad, m); }, "unknown-label", "nonexistent"));

    json negative = {{"m", -1}};
    CHECK(fails_with([&] { monomial_from_json(negative, m); }, "bad-input"));
}

TEST_CASE("series and options sections round-trip", "[io]") {
    JobConfig c;
    SeriesSpec s;
    s.w = Vec{1, 0};
    s.terms = {{Vec{0, 1}, Rational(3, 2)}};
    s.include_witten_constant = true;
    c.series = s;
    ReducibleOptions opt;
    opt.max_level = 5;
    opt.keep_zero_sw = true;
    c.options = opt;

    JobConfig back = config_from_json(config_to_json(c));
    REQUIRE(back.series.has_value());
    CHECK(back.series->w == Vec{1, 0});
    REQUIRE(back.series->terms.size() == 1);
    CHECK(back.series->terms[0].coeff == Rational(3, 2));
    CHECK(back.series->include_witten_constant);
    REQUIRE(back.options.has_value());
    CHECK(back.options->max_level == 5);
    CHECK(back.options->keep_zero_sw);
}

TEST_CASE("validation findings serialize with severity tags", "[io]") {
    FourManifold m(6, 0, 0, 2, IntersectionLattice::diagonal({1}));
    GaugeSetup g{Vec{1}, Vec{1}, 0};
    auto report = validate_setup(m, g, {});
    json j = findings_to_json(report);
    CHECK(j["passed"] == false);
    REQUIRE(j["findings"].is_array());
    REQUIRE_FALSE(j["findings"].empty());
    for (const auto& f : j["findings"]) {
        CHECK(f.contains("code"));
        CHECK(f.contains("message"));
        CHECK((f["severity"] == "error" || f["severity"] == "warning"));
    }
}

TEST_CASE("reducible rows expose all bookkeeping fields", "[io]") {
    ReducibleDatum d{Vec{-1, 0}, Vec{-2, 0}, -7, 2, 1};
    json j = reducible_to_json(d);
    CHECK(j["L1"] == json::array({-1, 0}));
    CHECK(j["K"] == json::array({-2, 0}));
    CHECK(j["sw"] == -7);
    CHECK(j["level"] == 2);
    CHECK(j["d_s"] == 1);
}
