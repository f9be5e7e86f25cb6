// mrk — exact Donaldson-invariant computations from Seiberg-Witten data.
//
// Every command reads/writes JSON (schema "mrk/1") on stdin/stdout; tabular
// commands also speak TSV via --format tsv.  All arithmetic is exact; output
// bytes are deterministic for equal inputs.
//
// Exit codes: 0 success, 1 malformed input (bad JSON, bad flags),
// 3 inputs needing higher-level reducible loci than the closed formulas
// cover, 2 any other domain error (validation, degree windows, ...).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mrk/io.hpp"

namespace {

using namespace mrk;

int exit_code_for(const std::string& code) {
    if (code == "bad-input") return 1;
    if (code == "unsupported-level") return 3;
    return 2;
}

void emit_error(const std::string& code, const std::string& message,
                std::optional<json> findings = std::nullopt) {
    json e{{"code", code}, {"message", message}};
    if (findings) e["findings"] = *findings;
    std::cerr << dump(json{{"error", e}, {"schema", kSchema}});
}

std::string slurp(const std::string& path) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("bad-input", "cannot open config file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

JobConfig load_config(const std::string& path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        fail("bad-input", std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

const FourManifold& need_manifold(const JobConfig& c) {
    if (!c.manifold) fail("bad-input", "config: missing required section 'manifold'");
    return *c.manifold;
}

const GaugeSetup& need_gauge(const JobConfig& c) {
    if (!c.gauge) fail("bad-input", "config: missing required section 'gauge'");
    return *c.gauge;
}

const std::vector<SWDatum>& need_sw(const JobConfig& c) {
    if (!c.has_sw_data) fail("bad-input", "config: missing required section 'sw_data'");
    return c.sw_data;
}

// ---- monomial flags ----

struct MonomialFlags {
    std::string z;                    // e.g. "s^3 x^1"
    std::vector<std::string> betas;   // coordinate CSVs
    long long m = -1;                 // -1: not given
    long long n_c1 = -1;

    bool any() const { return !z.empty() || !betas.empty() || m >= 0 || n_c1 >= 0; }
};

Vec parse_csv_vec(const std::string& s) {
    Vec v;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) v.push_back(parse_integer(tok));
    if (v.empty()) fail("bad-input", "--beta: expected comma-separated coordinates");
    return v;
}

// Token grammar for --z: whitespace-separated NAME or NAME^POWER, where NAME
// is a 2-dimensional homology label from the manifold and the reserved name
// "x" is the 0-dimensional point class.
InvariantMonomial monomial_from_flags(const FourManifold& m, const MonomialFlags& f) {
    InvariantMonomial z;
    std::istringstream in(f.z);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        Integer power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            power = parse_integer(tok.substr(caret + 1));
        }
        if (power < 0) fail("bad-input", "--z: negative power in '" + tok + "'");
        if (name == "x") {
            z.m += power;
        } else {
            const Vec& beta = m.label(name);
            for (Integer i = 0; i < power; ++i) z.betas.push_back(beta);
        }
    }
    for (const auto& csv : f.betas) z.betas.push_back(parse_csv_vec(csv));
    if (f.m >= 0) z.m = f.m;
    if (f.n_c1 >= 0) z.n_c1 = f.n_c1;
    return z;
}

InvariantMonomial resolve_monomial(const JobConfig& c, const MonomialFlags& f) {
    if (f.any()) return monomial_from_flags(need_manifold(c), f);
    if (c.monomial) return *c.monomial;
    return {};
}

// ---- output helpers ----

std::string csv(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    return out;
}

void print_json(const json& j) { std::cout << dump(j); }

// Errors that gate the reduction-side formulas abort the command; the
// findings ride along on stderr so the caller sees why.
void gate_reduction(const FourManifold& m, const GaugeSetup& g,
                    const std::vector<SWDatum>& sw) {
    auto report = validate_setup(m, g, sw);
    if (blocks_reduction_path(report)) {
        std::string first;
        for (const auto& f : report.findings)
            if (f.severity == Severity::Error) {
                first = f.message;
                break;
            }
        json e{{"code", "validation"},
               {"message", "setup validation failed: " + first},
               {"findings", findings_to_json(report)}};
        std::cerr << dump(json{{"error", e}, {"schema", kSchema}});
        std::exit(2);
    }
}

// ---- series helpers (km / witten routes) ----

struct HomogeneousClass {
    Vec h;
    Integer d;
};

HomogeneousClass homogeneous_of(const FourManifold& m, const InvariantMonomial& z) {
    if (z.m != 0 || z.n_c1 != 0)
        fail("bad-input",
             "series evaluation takes powers of a single 2-dimensional class only "
             "(no point-class or determinant insertions)");
    if (z.betas.empty()) return {Vec(m.lattice.rank(), 0), 0};
    for (const auto& b : z.betas)
        if (b != z.betas.front())
            fail("bad-input", "series evaluation needs all insertion classes equal");
    return {z.betas.front(), Integer(z.betas.size())};
}

SeriesSpec series_for(const JobConfig& c, bool witten_normalized) {
    if (c.series) return *c.series;  // explicit section wins wholesale
    SeriesSpec s;
    s.w = need_gauge(c).c1E;
    for (const auto& d : need_sw(c)) s.terms.push_back({d.K, Rational(d.sw)});
    s.include_witten_constant = witten_normalized;
    return s;
}

// ---- commands ----

struct CommonOpts {
    std::string config_path = "-";
    std::string format = "json";
    bool validate = false;
};

int cmd_catalog_elliptic(long long n, long long aux, const std::string& fsq_str) {
    std::optional<Integer> fsq;
    if (!fsq_str.empty()) fsq = parse_integer(fsq_str);
    auto [m, sw] = catalog_elliptic(n, aux);
    JobConfig c;
    c.gauge = catalog_gauge(m, n, fsq);
    c.manifold = std::move(m);
    c.sw_data = std::move(sw);
    c.has_sw_data = true;
    print_json(config_to_json(c));
    return 0;
}

int cmd_blowup(const CommonOpts& o, long long times) {
    JobConfig c = load_config(o.config_path);
    if (c.gauge || c.has_sw_data || c.monomial || c.series)
        fail("bad-input",
             "blowup transforms the manifold only; remove gauge/sw_data/monomial/series "
             "sections (their classes do not transport canonically)");
    FourManifold m = need_manifold(c);
    for (long long i = 0; i < times; ++i) m = blow_up(m);
    print_json(json{{"manifold", manifold_to_json(m)}, {"schema", kSchema}});
    return 0;
}

int cmd_dims(const CommonOpts& o) {
    JobConfig c = load_config(o.config_path);
    const FourManifold& m = need_manifold(c);
    const GaugeSetup& g = need_gauge(c);

    json out{{"schema", kSchema}};
    json notes = json::array();
    Integer p1 = compute_p1(g, m.lattice);
    out["p1"] = integer_to_json(p1);
    auto field = [&](const char* key, auto&& compute) {
        try {
            out[key] = integer_to_json(compute());
        } catch (const error& e) {
            out[key] = nullptr;
            notes.push_back(std::string(key) + ": " + e.what());
        }
    };
    field("d_a", [&] { return dim_asd(m, p1); });
    field("n_a", [&] { return dim_dirac(m, g, p1); });
    field("n_lam_s", [&] { return n_lambda_s(m, p1); });
    field("dim_M_star", [&] {
        DimensionReport r = DimensionReport::compute(m, g);
        return r.dim_M_star;
    });
    if (c.has_sw_data) {
        json rows = json::array();
        for (const auto& d : c.sw_data) {
            json row{{"K", vec_to_json(d.K)}};
            try {
                row["d_s"] = integer_to_json(dim_sw(m, d.K));
            } catch (const error& e) {
                row["d_s"] = nullptr;
                notes.push_back("d_s: " + std::string(e.what()));
            }
            rows.push_back(row);
        }
        out["d_s"] = rows;
    }
    if (!notes.empty()) out["notes"] = notes;
    if (o.validate) out["validation"] = findings_to_json(validate_setup(m, g, c.sw_data));

    if (o.format == "tsv") {
        for (const char* key : {"p1", "d_a", "n_a", "n_lam_s", "dim_M_star"}) {
            const json& v = out[key];
            std::cout << key << '\t' << (v.is_null() ? "null" : v.dump()) << '\n';
        }
    } else {
        print_json(out);
    }
    return 0;
}

int cmd_reducibles(const CommonOpts& o, long long max_level, bool keep_zero) {
    JobConfig c = load_config(o.config_path);
    const FourManifold& m = need_manifold(c);
    const GaugeSetup& g = need_gauge(c);
    ReducibleOptions opt = c.options.value_or(ReducibleOptions{});
    if (max_level >= 0) opt.max_level = max_level;
    if (keep_zero) opt.keep_zero_sw = true;

    auto red = enumerate_reducibles(m, g, need_sw(c), opt);
    if (o.format == "tsv") {
        std::cout << "status\tlevel\td_s\tsw\tL1\tK\n";
        for (const auto& r : red.data)
            std::cout << "included\t" << r.level << '\t' << r.d_s << '\t' << r.sw << '\t'
                      << csv(r.L1) << '\t' << csv(r.K) << '\n';
        for (const auto& r : red.overflow)
            std::cout << "overflow\t" << r.level << '\t' << r.d_s << '\t' << r.sw << '\t'
                      << csv(r.L1) << '\t' << csv(r.K) << '\n';
        return 0;
    }
    json rows = json::array();
    for (const auto& r : red.data) rows.push_back(reducible_to_json(r));
    json skipped = json::array();
    for (const auto& r : red.overflow) skipped.push_back(reducible_to_json(r));
    json out{{"reducibles", rows},
             {"schema", kSchema},
             {"skipped", skipped},
             {"top_level_only", top_level_only(red.data)}};
    if (o.validate) out["validation"] = findings_to_json(validate_setup(m, g, c.sw_data));
    print_json(out);
    return 0;
}

int cmd_pair(const CommonOpts& o, const MonomialFlags& mf) {
    JobConfig c = load_config(o.config_path);
    const FourManifold& m = need_manifold(c);
    const GaugeSetup& g = need_gauge(c);
    gate_reduction(m, g, need_sw(c));
    InvariantMonomial z = resolve_monomial(c, mf);

    auto red = enumerate_reducibles(m, g, c.sw_data, c.options.value_or(ReducibleOptions{}));
    if (!red.overflow.empty())
        fail("unsupported-level",
             "reducible loci above the configured level cap are present; the level-0 "
             "pairing formulas do not cover them");
    auto res = pair_over_reducibles(m, g, red.data, z);

    if (o.format == "tsv") {
        std::cout << "value\t" << to_string(res.value) << '\n';
        for (const auto& p : res.per_reducible)
            std::cout << "reducible\t" << csv(p.L1) << '\t' << to_string(p.value) << '\n';
        return 0;
    }
    json rows = json::array();
    for (const auto& p : res.per_reducible)
        rows.push_back(json{{"L1", vec_to_json(p.L1)}, {"value", rational_to_json(p.value)}});
    json out{{"per_reducible", rows}, {"schema", kSchema}, {"value", rational_to_json(res.value)}};
    if (o.validate) out["validation"] = findings_to_json(validate_setup(m, g, c.sw_data));
    print_json(out);
    return 0;
}

int cmd_donaldson(const CommonOpts& o, const std::string& via, const MonomialFlags& mf) {
    JobConfig c = load_config(o.config_path);
    const FourManifold& m = need_manifold(c);
    InvariantMonomial z = resolve_monomial(c, mf);

    json out{{"schema", kSchema}, {"via", via}};
    if (via == "reduction" || via == "simple-type") {
        const GaugeSetup& g = need_gauge(c);
        gate_reduction(m, g, need_sw(c));
        DonaldsonResult res;
        if (via == "reduction") {
            res = reduction_donaldson(m, g, c.sw_data, z);
        } else {
            auto red =
                enumerate_reducibles(m, g, c.sw_data, c.options.value_or(ReducibleOptions{}));
            if (!red.overflow.empty())
                fail("unsupported-level",
                     "reducible loci above the configured level cap are present");
            res = simple_type_donaldson(m, g, red.data, z);
        }
        json rows = json::array();
        for (const auto& p : res.per_reducible)
            rows.push_back(
                json{{"L1", vec_to_json(p.L1)}, {"value", rational_to_json(p.value)}});
        out["per_reducible"] = rows;
        out["value"] = rational_to_json(res.value);
        out["warnings"] = res.warnings;
        if (o.validate) out["validation"] = findings_to_json(validate_setup(m, g, c.sw_data));
        if (o.format == "tsv") {
            std::cout << "value\t" << to_string(res.value) << '\n';
            for (const auto& p : res.per_reducible)
                std::cout << "reducible\t" << csv(p.L1) << '\t' << to_string(p.value) << '\n';
            for (const auto& w : res.warnings) std::cout << "warning\t" << w << '\n';
            return 0;
        }
    } else if (via == "km" || via == "witten") {
        auto hc = homogeneous_of(m, z);
        SeriesSpec spec = series_for(c, via == "witten");
        Rational value = series_invariant(m, spec, hc.h, hc.d);
        out["degree"] = integer_to_json(hc.d);
        out["h"] = vec_to_json(hc.h);
        out["value"] = rational_to_json(value);
        if (o.validate && c.gauge)
            out["validation"] = findings_to_json(validate_setup(m, *c.gauge, c.sw_data));
        if (o.format == "tsv") {
            std::cout << "value\t" << to_string(value) << '\n';
            return 0;
        }
    } else {
        fail("bad-input", "--via must be one of reduction, simple-type, km, witten");
    }
    print_json(out);
    return 0;
}

json ratio_or_null(const Rational& num, const Rational& den) {
    if (den == 0) return nullptr;
    return rational_to_json(num / den);
}

int cmd_compare(const CommonOpts& o, const std::string& family, const std::string& n_range,
                long long aux, const MonomialFlags& mf) {
    if (!family.empty()) {
        if (family != "elliptic") fail("bad-input", "--family: only 'elliptic' is cataloged");
        auto dots = n_range.find("..");
        if (dots == std::string::npos)
            fail("bad-input", "--n-range: expected the form A..B, e.g. 3..8");
        long long lo = std::stoll(n_range.substr(0, dots));
        long long hi = std::stoll(n_range.substr(dots + 2));
        if (lo < 2 || hi < lo) fail("bad-input", "--n-range: need 2 <= A <= B");

        json rows = json::array();
        std::optional<Rational> common;
        bool constant = true;
        for (long long n = lo; n <= hi; ++n) {
            auto [m, sw] = catalog_elliptic(n, aux);
            GaugeSetup g = catalog_gauge(m, n);
            InvariantMonomial z;
            z.betas.assign(static_cast<std::size_t>(n - 2), m.label("s"));
            Rational red = reduction_donaldson(m, g, sw, z).value;

            SeriesSpec spec;
            spec.w = g.c1E;
            for (const auto& d : sw) spec.terms.push_back({d.K, Rational(d.sw)});
            spec.include_witten_constant = true;
            Rational wit = series_invariant(m, spec, m.label("s"), n - 2);

            json row{{"n", n},
                     {"ratio", ratio_or_null(red, wit)},
                     {"reduction", rational_to_json(red)},
                     {"witten", rational_to_json(wit)}};
            rows.push_back(row);
            if (wit == 0) {
                constant = false;
            } else {
                Rational r = red / wit;
                if (!common) common = r;
                else if (*common != r) constant = false;
            }
        }
        json out{{"ratio_constant",
                  constant && common ? rational_to_json(*common) : json(nullptr)},
                 {"rows", rows},
                 {"schema", kSchema}};
        if (o.format == "tsv") {
            std::cout << "n\treduction\twitten\tratio\n";
            for (const auto& row : rows)
                std::cout << row["n"] << '\t' << row["reduction"].get<std::string>() << '\t'
                          << row["witten"].get<std::string>() << '\t'
                          << (row["ratio"].is_null() ? std::string("null")
                                                     : row["ratio"].get<std::string>())
                          << '\n';
            return 0;
        }
        print_json(out);
        return 0;
    }

    // config mode: one monomial, both routes side by side
    JobConfig c = load_config(o.config_path);
    const FourManifold& m = need_manifold(c);
    const GaugeSetup& g = need_gauge(c);
    gate_reduction(m, g, need_sw(c));
    InvariantMonomial z = resolve_monomial(c, mf);

    Rational red = reduction_donaldson(m, g, c.sw_data, z).value;
    auto hc = homogeneous_of(m, z);
    SeriesSpec spec = series_for(c, true);
    Rational wit = series_invariant(m, spec, hc.h, hc.d);
    json out{{"ratio", ratio_or_null(red, wit)},
             {"reduction", rational_to_json(red)},
             {"schema", kSchema},
             {"witten", rational_to_json(wit)}};
    if (o.format == "tsv") {
        std::cout << "reduction\twitten\tratio\n"
                  << to_string(red) << '\t' << to_string(wit) << '\t'
                  << (out["ratio"].is_null() ? std::string("null")
                                             : out["ratio"].get<std::string>())
                  << '\n';
        return 0;
    }
    print_json(out);
    return 0;
}

int cmd_jacobi(const std::string& a, const std::string& b, const std::string& n,
               const std::string& x, const std::string& format) {
    Rational value = jacobi(parse_integer(a), parse_integer(b), parse_integer(n),
                            parse_rational(x));
    if (format == "tsv") {
        std::cout << "value\t" << to_string(value) << '\n';
        return 0;
    }
    print_json(json{{"schema", kSchema}, {"value", rational_to_json(value)}});
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_config = true) {
    if (with_config)
        cmd->add_option("--config", o.config_path,
                        "input JSON document, or - for stdin (default)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_flag("--validate", o.validate, "attach the validation report to the output");
}

void add_monomial(CLI::App* cmd, MonomialFlags& f) {
    cmd->add_option("--z", f.z,
                    "invariant monomial, e.g. \"s^3 x^1\" (labels from the manifold; "
                    "x is the point class)");
    cmd->add_option("--beta", f.betas,
                    "extra 2-dimensional insertion as coordinate CSV (repeatable)");
    cmd->add_option("--m", f.m, "point-class power (overrides x^k from --z)");
    cmd->add_option("--n-c1", f.n_c1, "determinant-line insertion power");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Donaldson invariants from Seiberg-Witten data"};
    app.require_subcommand(1);

    // catalog
    auto* cat = app.add_subcommand("catalog", "emit a cataloged manifold configuration");
    cat->require_subcommand(1);
    auto* ell = cat->add_subcommand("elliptic", "simply connected elliptic surface E(n)");
    long long ell_n = 0, ell_aux = 2;
    std::string ell_fsq;
    ell->add_option("--n", ell_n, "fiber-sum parameter, n >= 2")->required();
    ell->add_option("--aux-rank", ell_aux, "rank of the auxiliary (-1)-summand (even)");
    ell->add_option("--fsq", ell_fsq, "twisting square F^2 (default 2-4n)");

    // blowup
    CommonOpts blow_o;
    long long blow_times = 1;
    CLI::App* blow = app.add_subcommand("blowup", "connected sum with a reversed projective plane");
    blow->add_option("--config", blow_o.config_path, "manifold document, or - for stdin");
    blow->add_option("--times", blow_times, "how many points to blow up")
        ->check(CLI::NonNegativeNumber);

    // dims
    auto* dims = app.add_subcommand("dims", "index-theory dimension report");
    CommonOpts dims_o;
    add_common(dims, dims_o);

    // reducibles
    auto* red = app.add_subcommand("reducibles", "enumerate reducible loci from sw_data");
    CommonOpts red_o;
    long long red_max_level = -1;
    bool red_keep_zero = false;
    add_common(red, red_o);
    red->add_option("--max-level", red_max_level, "report levels up to this cap");
    red->add_flag("--keep-zero-sw", red_keep_zero, "keep classes with vanishing invariant");

    // pair
    auto* pair = app.add_subcommand("pair", "link pairing summed over level-0 reducibles");
    CommonOpts pair_o;
    MonomialFlags pair_m;
    add_common(pair, pair_o);
    add_monomial(pair, pair_m);

    // donaldson
    auto* don = app.add_subcommand("donaldson", "evaluate a Donaldson invariant");
    CommonOpts don_o;
    MonomialFlags don_m;
    std::string don_via = "reduction";
    add_common(don, don_o);
    add_monomial(don, don_m);
    don->add_option("--via", don_via, "evaluation route")
        ->check(CLI::IsMember({"reduction", "simple-type", "km", "witten"}));

    // compare
    auto* cmp = app.add_subcommand("compare", "reduction route vs. series route");
    CommonOpts cmp_o;
    MonomialFlags cmp_m;
    std::string cmp_family, cmp_range = "3..8";
    long long cmp_aux = 4;
    add_common(cmp, cmp_o);
    add_monomial(cmp, cmp_m);
    cmp->add_option("--family", cmp_family, "cataloged family (elliptic)");
    cmp->add_option("--n-range", cmp_range, "family parameter range A..B");
    cmp->add_option("--aux-rank", cmp_aux,
                    "auxiliary rank for family mode (default 4: every default "
                    "twisting square decomposes)");

    // jacobi
    auto* jac = app.add_subcommand("jacobi", "evaluate a Jacobi polynomial exactly");
    std::string jac_a, jac_b, jac_n, jac_x = "0", jac_format = "json";
    jac->add_option("--a", jac_a)->required();
    jac->add_option("--b", jac_b)->required();
    jac->add_option("--n", jac_n)->required();
    jac->add_option("--x", jac_x, "evaluation point (rational p/q)");
    jac->add_option("--format", jac_format)->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("bad-input", e.what());
        return 1;
    }

    try {
        if (ell->parsed()) return cmd_catalog_elliptic(ell_n, ell_aux, ell_fsq);
        if (blow->parsed()) return cmd_blowup(blow_o, blow_times);
        if (dims->parsed()) return cmd_dims(dims_o);
        if (red->parsed()) return cmd_reducibles(red_o, red_max_level, red_keep_zero);
        if (pair->parsed()) return cmd_pair(pair_o, pair_m);
        if (don->parsed()) return cmd_donaldson(don_o, don_via, don_m);
        if (cmp->parsed()) return cmd_compare(cmp_o, cmp_family, cmp_range, cmp_aux, cmp_m);
        if (jac->parsed()) return cmd_jacobi(jac_a, jac_b, jac_n, jac_x, jac_format);
    } catch (const error& e) {
        emit_error(e.code(), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 2;
    }
    return 1;
}
