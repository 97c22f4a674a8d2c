// Command-line front end: every library operation as a reproducible,
// deterministic experiment with JSON or CSV output.
#include <CLI11.hpp>
#include <json.hpp>

#include "nt/box.hpp"
#include "nt/cantor.hpp"
#include "nt/parse.hpp"
#include "nt/repro.hpp"
#include "nt/spectrum.hpp"
#include "nt/words.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace nt;

namespace {

struct RunConfig {
    unsigned precision = 50;
    std::size_t depth = 32;
    double tolerance = 1e-9;
    std::string format = "json";
    unsigned workers = 1;
    long long seed = 0;
};

// "3/4", "-2", or a decimal like "-0.01" -> exact Rational.
Rational flexible_rational(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    bool neg = !text.empty() && text[0] == '-';
    std::string digits = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0)) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) return parse_rational(text.substr(0, dot));
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    Int scale = 1;
    for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
    Rational value = Rational(Int(digits), scale);
    return neg ? -value : value;
}

std::vector<Rational> rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(flexible_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

std::vector<Int> int_list(const std::string& text) {
    std::vector<Int> out;
    for (const Rational& r : rational_list(text)) {
        if (denominator(r) != 1) throw std::invalid_argument("expected integers in '" + text + "'");
        out.push_back(numerator(r));
    }
    return out;
}

json j_rational(const Rational& x, unsigned precision) {
    return {{"text", to_string(x)}, {"decimal", to_decimal(x, precision).text}};
}

json j_surd(const QuadraticSurd& x, unsigned precision) {
    return {{"text", x.str()},
            {"p", x.p().str()},
            {"q", x.q().str()},
            {"r", x.r().str()},
            {"d", x.d().str()},
            {"decimal", to_decimal(x, precision).text}};
}

json j_interval(const Interval& v, unsigned precision) {
    return {{"lo", to_string(v.lo)},
            {"hi", to_string(v.hi)},
            {"decimal", to_decimal(v.midpoint(), precision).text}};
}

json j_term_value(const TermValue& v, unsigned precision) {
    if (std::holds_alternative<QuadraticSurd>(v))
        return j_surd(std::get<QuadraticSurd>(v), precision);
    return j_interval(std::get<Interval>(v), precision);
}

// Flattens one JSON value to a CSV cell.
std::string csv_cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// JSON report -> stdout.  CSV mode prints the "rows" table if present,
// otherwise the top-level scalars as key,value lines.
void emit(const json& out, const RunConfig& cfg) {
    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    if (out.contains("rows") && out["rows"].is_array() && !out["rows"].empty()) {
        const json& first = out["rows"][0];
        bool head = true;
        for (auto it = first.begin(); it != first.end(); ++it) {
            if (!head) std::cout << ",";
            std::cout << it.key();
            head = false;
        }
        std::cout << "\n";
        for (const json& row : out["rows"]) {
            bool lead = true;
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (!lead) std::cout << ",";
                std::cout << csv_cell(it.value());
                lead = false;
            }
            std::cout << "\n";
        }
        return;
    }
    for (auto it = out.begin(); it != out.end(); ++it) {
        if (it.key() == "config") continue;
        json v = it.value();
        if (v.is_object() && v.contains("text")) v = v["text"];
        if (!v.is_structured()) std::cout << it.key() << "," << csv_cell(v) << "\n";
    }
}

WordKind parse_kind(const std::string& s) {
    if (s == "universal14") return WordKind::Universal14;
    if (s == "universal45") return WordKind::Universal45;
    if (s == "spiked") return WordKind::Spiked;
    throw std::invalid_argument("unknown word kind '" + s + "'");
}

ContinuedFraction as_cf(const ParsedNumber& num) {
    if (std::holds_alternative<ContinuedFraction>(num)) return std::get<ContinuedFraction>(num);
    const QuadraticSurd& s = std::get<QuadraticSurd>(num);
    if (s.is_rational()) return expand_rational(Rational(s.p(), s.r()));
    return expand_quadratic(s);
}

json term_row(const ApproxTerm& t, unsigned precision) {
    return {{"n", t.index},
            {"p", t.convergent.p.str()},
            {"q", t.convergent.q.str()},
            {"value", j_term_value(t.value, precision)}};
}

int dispatch(const std::string& cmd, const RunConfig& cfg, const json& args) {
    json out{{"command", cmd},
             {"config",
              {{"precision", cfg.precision},
               {"depth", cfg.depth},
               {"tolerance", cfg.tolerance},
               {"workers", cfg.workers},
               {"seed", cfg.seed}}}};
    int exit_code = 0;

    if (cmd == "cf-expand") {
        ParsedNumber num = parse_number(args["number"]);
        ContinuedFraction cf = as_cf(num);
        out["input"] = args["number"];
        out["cf"] = cf.str(cfg.depth);
    } else if (cmd == "cf-eval") {
        ContinuedFraction cf = ContinuedFraction::parse(args["cf"]);
        out["input"] = args["cf"];
        if (cf.is_finite())
            out["value"] = j_rational(eval_finite(cf.preperiod()), cfg.precision);
        else
            out["value"] = j_surd(eval_periodic(cf), cfg.precision);
    } else if (cmd == "convergents") {
        ContinuedFraction cf = as_cf(parse_number(args["number"]));
        json rows = json::array();
        auto cs = convergents(cf, cfg.depth);
        for (std::size_t n = 0; n < cs.size(); ++n)
            rows.push_back({{"n", n},
                            {"p", cs[n].p.str()},
                            {"q", cs[n].q.str()},
                            {"decimal", to_decimal(cs[n].value(), cfg.precision).text}});
        out["rows"] = rows;
    } else if (cmd == "approx-seq") {
        ContinuedFraction cf = as_cf(parse_number(args["number"]));
        json rows = json::array();
        for (const auto& t : approx_sequence(cf, cfg.depth))
            rows.push_back(term_row(t, cfg.precision));
        out["rows"] = rows;
    } else if (cmd == "quad-accum") {
        ContinuedFraction cf = as_cf(parse_number(args["number"]));
        auto report = quad_accumulation_set(cf);
        out["period_length"] = report.period_length;
        json rows = json::array();
        for (const auto& p : report.points) rows.push_back(j_surd(p, cfg.precision));
        out["rows"] = rows;
    } else if (cmd == "markov") {
        ParsedNumber num = parse_number(args["number"]);
        ContinuedFraction cf = as_cf(num);
        if (cf.kind() == ContinuedFraction::Kind::Periodic)
            out["markov_constant"] = j_surd(markov_constant_exact(eval_periodic(cf)), cfg.precision);
        else
            out["markov_constant"] = j_interval(markov_constant_numeric(cf, cfg.depth), cfg.precision);
    } else if (cmd == "secondary") {
        ContinuedFraction cf = as_cf(parse_number(args["number"]));
        TermValue v = secondary_convergent_term(cf, args["index"].get<std::size_t>(),
                                                Int(args["a"].get<long long>()));
        out["value"] = j_term_value(v, cfg.precision);
    } else if (cmd == "legendre") {
        ContinuedFraction cf = as_cf(parse_number(args["number"]));
        Int q_max(args["qmax"].get<long long>());
        json rows = json::array();
        for (const auto& c : legendre_filter(cf, q_max))
            rows.push_back({{"p", c.p.str()}, {"q", c.q.str()}});
        out["rows"] = rows;
    } else if (cmd == "euler") {
        json rows = json::array();
        for (std::size_t i = 0; i <= cfg.depth; ++i)
            rows.push_back({{"i", i}, {"digit", euler_digit(i).str()}});
        out["rows"] = rows;
    } else if (cmd == "word-gen") {
        WordGenerator gen(parse_kind(args["kind"]));
        json rows = json::array();
        for (std::size_t i = 0; i < args["length"].get<std::size_t>(); ++i)
            rows.push_back({{"i", i}, {"letter", gen.letter(i).str()}});
        out["rows"] = rows;
    } else if (cmd == "word-scan") {
        WordGenerator gen(parse_kind(args["kind"]));
        auto targets = rational_list(args["targets"]);
        auto hits = target_hit_scan(word_to_alpha(gen), targets, cfg.depth,
                                    args["zmax"].get<unsigned>());
        json rows = json::array();
        for (const auto& h : hits)
            rows.push_back({{"target", to_string(h.target)},
                            {"n", h.index},
                            {"z", h.multiplier.str()},
                            {"value", j_interval(h.value, cfg.precision)},
                            {"distance", to_decimal(h.distance, cfg.precision).text}});
        out["rows"] = rows;
    } else if (cmd == "cantor-extrema") {
        CantorSpec spec(int_list(args["alphabet"]));
        auto ext = cantor_extrema(spec);
        out["min"] = j_surd(ext.min, cfg.precision);
        out["max"] = j_surd(ext.max, cfg.precision);
        out["min_cf"] = ext.min_cf.str();
        out["max_cf"] = ext.max_cf.str();
    } else if (cmd == "cantor-sum") {
        CantorSpec spec(int_list(args["alphabet"]));
        auto sum = sumset_interval(spec);
        out["lo"] = j_surd(sum.lo, cfg.precision);
        out["hi"] = j_surd(sum.hi, cfg.precision);
        out["interval_filling"] = sum.interval_filling;
    } else if (cmd == "hausdorff") {
        CantorSpec spec(int_list(args["alphabet"]));
        auto hb = hausdorff_bounds(spec);
        out["upper"] = hb.upper;
        out["upper_digits"] = hb.upper_digits;
        out["upper_below_half"] = hb.upper_below_half;
        out["lower"] = hb.lower;
        out["lower_reported"] = hb.lower_reported;
    } else if (cmd == "box-eigen") {
        auto side = [](const std::string& text) -> BoxSide {
            QuadraticSurd s = parse_surd_expression(text);
            if (s.is_rational()) return Rational(s.p(), s.r());
            return s;
        };
        auto eig = box_eigenvalues(side(args["a"]), side(args["b"]),
                                   Int(args["kmax"].get<long long>()),
                                   Int(args["mmax"].get<long long>()));
        json rows = json::array();
        for (const auto& ev : eig) {
            json coeff = std::holds_alternative<Rational>(ev.coefficient)
                             ? j_rational(std::get<Rational>(ev.coefficient), cfg.precision)
                             : j_interval(std::get<Interval>(ev.coefficient), cfg.precision);
            rows.push_back({{"k", ev.k.str()}, {"m", ev.m.str()}, {"coefficient", coeff}});
        }
        out["rows"] = rows;
    } else if (cmd == "box-scan") {
        ParsedNumber num = parse_number(args["alpha"]);
        ScanAlpha alpha = std::holds_alternative<QuadraticSurd>(num)
                              ? ScanAlpha(std::get<QuadraticSurd>(num))
                              : ScanAlpha(std::get<ContinuedFraction>(num));
        auto window = rational_list(args["window"]);
        if (window.size() != 2) throw std::invalid_argument("--window expects lo,hi");
        auto hits = singular_scan(alpha, {window[0], window[1]},
                                  Int(args["mmax"].get<long long>()),
                                  !args["unrestricted"].get<bool>());
        json rows = json::array();
        for (const auto& h : hits)
            rows.push_back({{"k", h.k.str()},
                            {"m", h.m.str()},
                            {"value", j_term_value(h.value, cfg.precision)}});
        out["rows"] = rows;
    } else if (cmd == "pu-spectrum") {
        auto spec = pu_spectrum(parse_surd_expression(args["wx"]),
                                parse_surd_expression(args["wy"]),
                                Int(args["nmax"].get<long long>()),
                                Int(args["mmax"].get<long long>()));
        out["has_zero"] = spec.has_zero;
        out["min_abs_nonzero"] = j_surd(spec.min_abs_nonzero, cfg.precision);
        out["min_gap"] = j_surd(spec.min_gap, cfg.precision);
        json rows = json::array();
        for (const auto& e : spec.energies)
            rows.push_back({{"n", e.n.str()},
                            {"m", e.m.str()},
                            {"energy", j_surd(e.energy, cfg.precision)}});
        out["rows"] = rows;
    } else if (cmd == "repro") {
        std::string which = args["name"];
        auto results = which.empty() ? run_all_repro()
                                     : std::vector<ReproResult>{run_repro(which)};
        json rows = json::array();
        for (const auto& r : results) {
            if (!r.pass) exit_code = 1;
            rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        out["rows"] = rows;
    }

    emit(out, cfg);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued-fraction approximation spectra"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--precision", cfg.precision, "decimal digits for rendered values")
        ->check(CLI::Range(10u, 1000u))
        ->envname("NT_PRECISION");
    app.add_option("--depth", cfg.depth, "expansion / scan depth")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}))
        ->envname("NT_DEPTH");
    app.add_option("--tol", cfg.tolerance, "tolerance recorded with the report")
        ->check(CLI::PositiveNumber)
        ->envname("NT_TOL");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("NT_FORMAT");
    app.add_option("--workers", cfg.workers, "worker threads (orchestration is single-threaded)")
        ->envname("NT_WORKERS");
    app.add_option("--seed", cfg.seed, "seed recorded with the report")->envname("NT_SEED");

    json args;
    std::string number, cf_text, alphabet, targets, window, a_side, b_side, wx, wy, kind, name;
    long long qmax = 100, index = 0, aval = 1, kmax = 10, mmax = 10, nmax = 10, length = 100;
    unsigned zmax = 3;
    bool unrestricted = false;

    auto* c1 = app.add_subcommand("cf-expand", "continued fraction of a number");
    c1->add_option("number", number)->required();
    auto* c2 = app.add_subcommand("cf-eval", "evaluate a continued-fraction literal");
    c2->add_option("cf", cf_text)->required();
    auto* c3 = app.add_subcommand("convergents", "convergents p_N/q_N");
    c3->add_option("number", number)->required();
    auto* c4 = app.add_subcommand("approx-seq", "terms q_N^2 (p_N/q_N - alpha)");
    c4->add_option("number", number)->required();
    auto* c5 = app.add_subcommand("quad-accum", "accumulation points for a quadratic");
    c5->add_option("number", number)->required();
    auto* c6 = app.add_subcommand("markov", "Markov constant (exact or liminf estimate)");
    c6->add_option("number", number)->required();
    auto* c7 = app.add_subcommand("secondary", "secondary-convergent term");
    c7->add_option("number", number)->required();
    c7->add_option("--index", index, "convergent index N")->required();
    c7->add_option("--a", aval, "interpolation digit a")->required();
    auto* c8 = app.add_subcommand("legendre", "fractions with |alpha - p/q| < 1/(2 q^2)");
    c8->add_option("number", number)->required();
    c8->add_option("--qmax", qmax);
    auto* c9 = app.add_subcommand("euler", "partial quotients of e");
    (void)c9;
    auto* c10 = app.add_subcommand("word-gen", "letters of a word construction");
    c10->add_option("--kind", kind)->required()->check(CLI::IsMember({"universal14", "universal45", "spiked"}));
    c10->add_option("--length", length);
    auto* c11 = app.add_subcommand("word-scan", "scan a word's alpha for target spectrum values");
    c11->add_option("--kind", kind)->required()->check(CLI::IsMember({"universal14", "universal45", "spiked"}));
    c11->add_option("--targets", targets)->required();
    c11->add_option("--zmax", zmax);
    auto* c12 = app.add_subcommand("cantor-extrema", "extrema of F_0(alphabet)");
    c12->add_option("--alphabet", alphabet)->required();
    auto* c13 = app.add_subcommand("cantor-sum", "endpoints of F + F");
    c13->add_option("--alphabet", alphabet)->required();
    auto* c14 = app.add_subcommand("hausdorff", "Hausdorff dimension bounds");
    c14->add_option("--alphabet", alphabet)->required();
    auto* c15 = app.add_subcommand("box-eigen", "rectangular-well eigenvalue coefficients of pi^2");
    c15->add_option("--a", a_side)->required();
    c15->add_option("--b", b_side)->required();
    c15->add_option("--kmax", kmax);
    c15->add_option("--mmax", mmax);
    auto* c16 = app.add_subcommand("box-scan", "brute-force scan of m^2 (k/m - alpha)");
    c16->add_option("--alpha", number)->required();
    c16->add_option("--window", window)->required();
    c16->add_option("--mmax", mmax);
    c16->add_flag("--unrestricted", unrestricted, "full k-sweep instead of round(m alpha) +- 1");
    auto* c17 = app.add_subcommand("pu-spectrum", "Pais-Uhlenbeck energy grid");
    c17->add_option("--wx", wx)->required();
    c17->add_option("--wy", wy)->required();
    c17->add_option("--nmax", nmax);
    c17->add_option("--mmax", mmax);
    auto* c18 = app.add_subcommand("repro", "run reproduction scripts (all, or one by name)");
    c18->add_option("name", name);

    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    args["number"] = number;
    args["cf"] = cf_text;
    args["alphabet"] = alphabet;
    args["targets"] = targets;
    args["window"] = window;
    args["a"] = (app.got_subcommand(c15)) ? json(a_side) : json(aval);
    args["b"] = b_side;
    args["wx"] = wx;
    args["wy"] = wy;
    args["kind"] = kind;
    args["name"] = name;
    args["qmax"] = qmax;
    args["index"] = index;
    args["kmax"] = kmax;
    args["mmax"] = mmax;
    args["nmax"] = nmax;
    args["length"] = length;
    args["zmax"] = zmax;
    args["alpha"] = number;
    args["unrestricted"] = unrestricted;

    try {
        return dispatch(app.get_subcommands().front()->get_name(), cfg, args);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
