#pragma once

// JSON wire format, schema "mrk/1".
//
// Conventions: rationals are strings "p/q" in lowest terms (or "p" when the
// denominator is 1); integers are JSON numbers when they fit in 64 bits and
// decimal strings beyond that; vectors are coordinate arrays.  Serialization
// uses nlohmann's default (alphabetically ordered) objects and compact
// dumps, so canonical input round-trips byte-identically and equal inputs
// produce equal output bytes.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrk/errors.hpp"
#include "mrk/lattice.hpp"
#include "mrk/link_pairing.hpp"
#include "mrk/manifold.hpp"
#include "mrk/rational.hpp"
#include "mrk/reducibles.hpp"
#include "mrk/series.hpp"
#include "mrk/validation.hpp"

namespace mrk {

using json = nlohmann::json;

inline constexpr const char* kSchema = "mrk/1";

// ---- scalars ----

inline json integer_to_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

inline Integer integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    fail("bad-input", where + ": expected an integer");
}

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("bad-input", where + ": expected a rational \"p/q\" string");
}

inline const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail("bad-input", where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail("bad-input", where + ": missing required field '" + key + "'");
    return *it;
}

// ---- vectors and lattices ----

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(integer_to_json(c));
    return a;
}

inline Vec vec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail("bad-input", where + ": expected a coordinate array");
    Vec v;
    v.reserve(j.size());
    for (const auto& c : j) v.push_back(integer_from_json(c, where));
    return v;
}

inline json gram_to_json(const IntersectionLattice& lat) {
    json a = json::array();
    for (const auto& row : lat.gram()) a.push_back(vec_to_json(row));
    return a;
}

inline IntersectionLattice gram_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail("bad-input", where + ": expected an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r, where));
    return IntersectionLattice(std::move(rows));
}

// ---- domain objects ----

inline json manifold_to_json(const FourManifold& m) {
    json labels = json::object();
    for (const auto& [name, v] : m.labels) labels[name] = vec_to_json(v);
    return json{{"b1", integer_to_json(m.b1)},
                {"bplus", integer_to_json(m.bplus)},
                {"euler", integer_to_json(m.euler)},
                {"gram", gram_to_json(m.lattice)},
                {"labels", labels},
                {"signature", integer_to_json(m.signature)},
                {"simply_connected", m.simply_connected}};
}

inline FourManifold manifold_from_json(const json& j) {
    const std::string where = "manifold";
    IntersectionLattice lat = gram_from_json(require(j, "gram", where), where + ".gram");
    std::map<std::string, Vec> labels;
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_object()) fail("bad-input", "manifold.labels: expected an object");
        for (const auto& [name, v] : it->items())
            labels.emplace(name, vec_from_json(v, "manifold.labels." + name));
    }
    bool sc = false;
    if (auto it = j.find("simply_connected"); it != j.end()) {
        if (!it->is_boolean()) fail("bad-input", "manifold.simply_connected: expected a boolean");
        sc = it->get<bool>();
    }
    return FourManifold(integer_from_json(require(j, "euler", where), where + ".euler"),
                        integer_from_json(require(j, "signature", where), where + ".signature"),
                        integer_from_json(require(j, "b1", where), where + ".b1"),
                        integer_from_json(require(j, "bplus", where), where + ".bplus"),
                        std::move(lat), std::move(labels), sc);
}

inline json gauge_to_json(const GaugeSetup& g) {
    return json{{"c1E", vec_to_json(g.c1E)},
                {"c1W", vec_to_json(g.c1W)},
                {"c2E", integer_to_json(g.c2E)}};
}

inline GaugeSetup gauge_from_json(const json& j) {
    return GaugeSetup{vec_from_json(require(j, "c1W", "gauge"), "gauge.c1W"),
                      vec_from_json(require(j, "c1E", "gauge"), "gauge.c1E"),
                      integer_from_json(require(j, "c2E", "gauge"), "gauge.c2E")};
}

inline json sw_data_to_json(const std::vector<SWDatum>& data) {
    json a = json::array();
    for (const auto& d : data)
        a.push_back(json{{"K", vec_to_json(d.K)}, {"sw", integer_to_json(d.sw)}});
    return a;
}

inline std::vector<SWDatum> sw_data_from_json(const json& j) {
    if (!j.is_array()) fail("bad-input", "sw_data: expected an array");
    std::vector<SWDatum> out;
    for (const auto& d : j)
        out.push_back(SWDatum{vec_from_json(require(d, "K", "sw_data"), "sw_data.K"),
                              integer_from_json(require(d, "sw", "sw_data"), "sw_data.sw")});
    return out;
}

// Monomial betas may be coordinate arrays or label strings resolved against
// the manifold; canonical serialization always re-emits coordinates.
inline json monomial_to_json(const InvariantMonomial& z) {
    json betas = json::array();
    for (const auto& b : z.betas) betas.push_back(vec_to_json(b));
    return json{{"betas", betas},
                {"m", integer_to_json(z.m)},
                {"n_c1", integer_to_json(z.n_c1)}};
}

inline InvariantMonomial monomial_from_json(const json& j, const FourManifold& m) {
    InvariantMonomial z;
    if (auto it = j.find("betas"); it != j.end()) {
        if (!it->is_array()) fail("bad-input", "monomial.betas: expected an array");
        for (const auto& b : *it) {
            if (b.is_string())
                z.betas.push_back(m.label(b.get<std::string>()));
            else
                z.betas.push_back(vec_from_json(b, "monomial.betas"));
        }
    }
    if (auto it = j.find("m"); it != j.end()) z.m = integer_from_json(*it, "monomial.m");
    if (auto it = j.find("n_c1"); it != j.end())
        z.n_c1 = integer_from_json(*it, "monomial.n_c1");
    if (z.m < 0 || z.n_c1 < 0) fail("bad-input", "monomial powers must be non-negative");
    return z;
}

inline json series_to_json(const SeriesSpec& s) {
    json terms = json::array();
    for (const auto& t : s.terms)
        terms.push_back(json{{"K", vec_to_json(t.K)}, {"coeff", rational_to_json(t.coeff)}});
    return json{{"include_witten_constant", s.include_witten_constant},
                {"terms", terms},
                {"w", vec_to_json(s.w)}};
}

inline SeriesSpec series_from_json(const json& j) {
    SeriesSpec s;
    s.w = vec_from_json(require(j, "w", "series"), "series.w");
    const json& terms = require(j, "terms", "series");
    if (!terms.is_array()) fail("bad-input", "series.terms: expected an array");
    for (const auto& t : terms)
        s.terms.push_back(SeriesTerm{vec_from_json(require(t, "K", "series.terms"), "series.terms.K"),
                                     rational_from_json(require(t, "coeff", "series.terms"),
                                                        "series.terms.coeff")});
    if (auto it = j.find("include_witten_constant"); it != j.end())
        s.include_witten_constant = it->get<bool>();
    return s;
}

// ---- job configuration (the CLI input document) ----

struct JobConfig {
    std::optional<FourManifold> manifold;
    std::optional<GaugeSetup> gauge;
    std::vector<SWDatum> sw_data;
    bool has_sw_data = false;
    std::optional<InvariantMonomial> monomial;
    std::optional<SeriesSpec> series;
    std::optional<ReducibleOptions> options;
};

inline JobConfig config_from_json(const json& j) {
    if (!j.is_object()) fail("bad-input", "config: expected a JSON object");
    const json& schema_j = require(j, "schema", "config");
    if (!schema_j.is_string()) fail("bad-input", "config.schema: expected a string");
    std::string schema = schema_j.get<std::string>();
    if (schema != kSchema)
        fail("bad-input", "config.schema: expected \"" + std::string(kSchema) + "\", got \"" +
                              schema + "\"");
    static const std::vector<std::string> known = {"schema",   "manifold", "gauge",  "sw_data",
                                                   "monomial", "series",   "options"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            fail("bad-input", "config: unknown field '" + key + "'");
    }
    JobConfig c;
    if (auto it = j.find("manifold"); it != j.end()) c.manifold = manifold_from_json(*it);
    if (auto it = j.find("gauge"); it != j.end()) c.gauge = gauge_from_json(*it);
    if (auto it = j.find("sw_data"); it != j.end()) {
        c.sw_data = sw_data_from_json(*it);
        c.has_sw_data = true;
    }
    if (auto it = j.find("monomial"); it != j.end()) {
        if (!c.manifold) fail("bad-input", "config.monomial: requires a manifold for labels");
        c.monomial = monomial_from_json(*it, *c.manifold);
    }
    if (auto it = j.find("series"); it != j.end()) c.series = series_from_json(*it);
    if (auto it = j.find("options"); it != j.end()) {
        ReducibleOptions opt;
        if (auto f = it->find("max_level"); f != it->end())
            opt.max_level = integer_from_json(*f, "options.max_level");
        if (auto f = it->find("keep_zero_sw"); f != it->end()) opt.keep_zero_sw = f->get<bool>();
        c.options = opt;
    }
    return c;
}

inline json config_to_json(const JobConfig& c) {
    json j{{"schema", kSchema}};
    if (c.manifold) j["manifold"] = manifold_to_json(*c.manifold);
    if (c.gauge) j["gauge"] = gauge_to_json(*c.gauge);
    if (c.has_sw_data) j["sw_data"] = sw_data_to_json(c.sw_data);
    if (c.monomial) j["monomial"] = monomial_to_json(*c.monomial);
    if (c.series) j["series"] = series_to_json(*c.series);
    if (c.options)
        j["options"] = json{{"keep_zero_sw", c.options->keep_zero_sw},
                            {"max_level", integer_to_json(c.options->max_level)}};
    return j;
}

// ---- reports ----

inline json findings_to_json(const ValidationReport& r) {
    json a = json::array();
    for (const auto& f : r.findings)
        a.push_back(json{{"code", f.code},
                         {"message", f.message},
                         {"severity", f.severity == Severity::Error ? "error" : "warning"}});
    return json{{"findings", a}, {"passed", r.passed}};
}

inline json reducible_to_json(const ReducibleDatum& d) {
    return json{{"K", vec_to_json(d.K)},
                {"L1", vec_to_json(d.L1)},
                {"d_s", integer_to_json(d.d_s)},
                {"level", integer_to_json(d.level)},
                {"sw", integer_to_json(d.sw)}};
}

inline std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace mrk
