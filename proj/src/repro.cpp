#include "nt/repro.hpp"

#include "nt/box.hpp"
#include "nt/cantor.hpp"
#include "nt/spectrum.hpp"
#include "nt/words.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nt {

namespace {

QuadraticSurd golden() { return QuadraticSurd(1, 1, 2, 5); }

QuadraticSurd inv_sqrt(long long d, long long num = 1) {
    return QuadraticSurd(0, num, d, d);  // num / sqrt(d)
}

std::string dec(const QuadraticSurd& x, unsigned digits = 12) {
    return to_decimal(x, digits).text;
}

double as_double(const Rational& x) { return x.convert_to<double>(); }

double mid(const TermValue& v) { return midpoint_of(v); }

// Magnitude enclosure of a term value (terms never enclose zero).
Interval mag_box(const TermValue& v) {
    Interval enc = enclosure_of(v);
    if (enc.hi < 0) return {-enc.hi, -enc.lo};
    return enc;
}

// Fixed corpus: 46 random quadratics over a few fields, the three word
// constructions, and e.
std::vector<ContinuedFraction> corpus_quadratics() {
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<int> small(-20, 20);
    std::uniform_int_distribution<int> pos(1, 20);
    const long long squarefree[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23};
    std::vector<ContinuedFraction> out;
    while (out.size() < 46) {
        Int d = squarefree[out.size() % std::size(squarefree)];
        int q = small(rng);
        if (q == 0) q = 3;
        out.push_back(expand_quadratic(QuadraticSurd(small(rng), q, pos(rng), d)));
    }
    return out;
}

struct Clause {
    bool ok;
    std::string text;
};

ReproResult combine(std::string name, const std::vector<Clause>& clauses) {
    ReproResult r;
    r.name = std::move(name);
    r.pass = true;
    std::ostringstream os;
    for (const auto& c : clauses) {
        r.pass = r.pass && c.ok;
        os << (c.ok ? "[ok] " : "[FAIL] ") << c.text << "; ";
    }
    r.detail = os.str();
    return r;
}

// 1. golden ratio: accumulation set, Markov constant, term at N = 40
ReproResult golden_markov() {
    std::vector<Clause> cl;
    auto report = quad_accumulation_set(golden());
    bool set_ok = report.points.size() == 2 && report.points[0] == -inv_sqrt(5) &&
                  report.points[1] == inv_sqrt(5);
    cl.push_back({set_ok, "accumulation set {-1/sqrt5, +1/sqrt5}, measured size " +
                              std::to_string(report.points.size())});
    QuadraticSurd mu = markov_constant_exact(golden());
    cl.push_back({mu == inv_sqrt(5), "markov constant exact 1/sqrt5, measured " + dec(mu)});
    auto terms = approx_sequence(expand_quadratic(golden()), 40);
    QuadraticSurd mag = std::get<QuadraticSurd>(terms[40].value).abs();
    Rational literal(Int("4472135955"), Int("10000000000"));
    QuadraticSurd diff = (mag - literal).abs();
    cl.push_back({diff.compare(Rational(1, Int("1000000000000"))) < 0,
                  "|t_40| = " + dec(mag) + " vs 0.4472135955 within 1e-12"});
    return combine("golden-markov", cl);
}

// 2. period (1,2,1,1): exactly three accumulation points
ReproResult period4_accum() {
    std::vector<Clause> cl;
    auto report = quad_accumulation_set(QuadraticSurd(2, 2, 5, 6));  // 2/5 + 2 sqrt6/5
    bool ok = report.points.size() == 3 &&
              report.points[0] == -inv_sqrt(6, 5) / Rational(4) &&  // -5/(4 sqrt6)
              report.points[1] == inv_sqrt(6, 3) / Rational(4) &&   //  3/(4 sqrt6)
              report.points[2] == inv_sqrt(6);
    std::ostringstream os;
    os << "points {";
    for (const auto& p : report.points) os << " " << dec(p);
    os << " } expected {-5/(4 sqrt6), 3/(4 sqrt6), 1/sqrt6}";
    cl.push_back({ok, os.str()});
    cl.push_back({report.period_length == 4,
                  "period length " + std::to_string(report.period_length) + " expected 4"});
    return combine("period4-accum", cl);
}

// 3. e: term subsequences, secondary convergents, interior values
ReproResult euler_terms() {
    std::vector<Clause> cl;
    auto cf = euler_cf();
    auto terms = approx_sequence(cf, 1000);

    double m150 = std::abs(mid(terms[150].value));
    cl.push_back({std::abs(m150 - 0.5) <= 0.01,
                  "|t_150| = " + std::to_string(m150) + " expected 1/2 +- 0.01"});
    double m151 = std::abs(mid(terms[151].value));
    cl.push_back({m151 < 0.01, "|t_151| = " + std::to_string(m151) + " expected < 0.01"});

    for (long long a = 1; a <= 3; ++a) {
        double sec = std::abs(mid(secondary_convergent_term(cf, 151, a)));
        double want = static_cast<double>(a) + 0.5;
        std::ostringstream os;
        os << "secondary a=" << a << " magnitude " << sec << " expected " << want << " +- 0.02";
        cl.push_back({std::abs(sec - want) <= 0.02, os.str()});
    }

    std::size_t interior = 0;
    double worst = 0.0;
    std::size_t worst_n = 0;
    for (std::size_t n = 21; n < terms.size(); ++n) {
        double v = mid(terms[n].value);
        if (std::abs(v) < 0.5 && std::abs(v) > 0.01) {
            ++interior;
            if (std::abs(v) > worst) {
                worst = std::abs(v);
                worst_n = n;
            }
        }
    }
    std::ostringstream os;
    os << interior << " terms beyond N=20 inside (-1/2, 1/2) farther than 0.01 from 0"
       << " (largest |t_" << worst_n << "| = " << worst << "), expected 0";
    cl.push_back({interior == 0, os.str()});
    return combine("euler-terms", cl);
}

// 4. Lemma digit bracket 1/(2 + a_{N+1}) < |t_N| < 1/a_{N+1} on the corpus
ReproResult lemma_bracket() {
    std::vector<ContinuedFraction> corpus = corpus_quadratics();
    corpus.push_back(word_to_alpha(WordGenerator(WordKind::Universal14)));
    corpus.push_back(word_to_alpha(WordGenerator(WordKind::Universal45)));
    corpus.push_back(word_to_alpha(WordGenerator(WordKind::Spiked)));
    corpus.push_back(euler_cf());

    std::size_t checked = 0, violations = 0;
    for (const auto& cf : corpus) {
        auto terms = approx_sequence(cf, 1000);
        for (const auto& t : terms) {
            Int a_next = cf.digit(t.index + 1);
            Interval mag = mag_box(t.value);
            bool ok = mag.lo > Rational(1, a_next + 2) && mag.hi < Rational(1, a_next);
            ++checked;
            if (!ok) ++violations;
        }
    }
    std::ostringstream os;
    os << "corpus of " << corpus.size() << " numbers, " << checked << " terms to depth 1000, "
       << violations << " bracket violations, expected 0";
    return combine("lemma-bracket", {{violations == 0, os.str()}});
}

// 5. Legendre oracle + restricted-vs-unrestricted scan agreement
ReproResult legendre() {
    std::vector<Clause> cl;
    std::mt19937_64 rng(5591);
    std::uniform_int_distribution<int> small(-20, 20);
    std::uniform_int_distribution<int> pos(1, 20);
    const long long squarefree[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15};

    std::size_t counterexamples = 0, candidates = 0;
    std::vector<QuadraticSurd> sample;
    for (int i = 0; i < 20; ++i) {
        int q = small(rng);
        if (q == 0) q = 7;
        QuadraticSurd alpha(small(rng), q, pos(rng), squarefree[i % 10]);
        sample.push_back(alpha);
        auto cf = expand_quadratic(alpha);
        // legendre_filter itself throws on any non-convergent; count survivors
        for (const auto& c : legendre_filter(alpha, 500)) {
            ++candidates;
            if (!is_convergent(cf, c.value())) ++counterexamples;
        }
    }
    std::ostringstream os;
    os << candidates << " fractions with |alpha - p/q| < 1/(2 q^2), q <= 500, over 20 "
       << "quadratics; " << counterexamples << " non-convergents, expected 0";
    cl.push_back({counterexamples == 0, os.str()});

    std::size_t mismatches = 0;
    Interval window{Rational(-1), Rational(1)};
    for (int i = 0; i < 5; ++i) {
        auto r = singular_scan(sample[i], window, 200, true);
        auto u = singular_scan(sample[i], window, 200, false);
        if (r.size() != u.size()) {
            ++mismatches;
            continue;
        }
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j].k != u[j].k || r[j].m != u[j].m) ++mismatches;
    }
    cl.push_back({mismatches == 0, "restricted vs unrestricted scans m <= 200: " +
                                       std::to_string(mismatches) + " mismatches, expected 0"});
    return combine("legendre", cl);
}

// 6. Cantor endpoints
ReproResult cantor_endpoints() {
    std::vector<Clause> cl;
    auto ext14 = cantor_extrema(CantorSpec({Int(1), Int(2), Int(3), Int(4)}));
    cl.push_back({ext14.min + ext14.min == QuadraticSurd(-1, 1, 1, 2),
                  "2 min F_0(4) = " + dec(ext14.min + ext14.min) + " expected sqrt2 - 1"});

    auto sum = sumset_interval(CantorSpec({Int(1), Int(2), Int(3), Int(4)}));
    Rational tol(1, Int("1000000000000"));
    Rational lo_lit(Int("414213562373"), Int("1000000000000"));
    Rational hi_lit(Int("1656854249492"), Int("1000000000000"));
    cl.push_back({(sum.lo - lo_lit).abs().compare(tol) < 0,
                  "sumset lo " + dec(sum.lo) + " expected 0.414213562373 +- 1e-12"});
    cl.push_back({(sum.hi - hi_lit).abs().compare(tol) < 0,
                  "sumset hi " + dec(sum.hi) + " expected 1.656854249492 +- 1e-12"});

    auto ext45 = cantor_extrema(CantorSpec({Int(4), Int(5)}));
    // 2 (sqrt(6/5) - 1) = (2 sqrt 30 - 10)/5
    cl.push_back({ext45.min == QuadraticSurd(-10, 2, 5, 30),
                  "min F_0({4,5}) = " + dec(ext45.min) + " expected 2(sqrt(6/5) - 1)"});
    return combine("cantor-endpoints", cl);
}

// 7. Hausdorff bounds for {4,5}
ReproResult hausdorff() {
    std::vector<Clause> cl;
    auto hb = hausdorff_bounds(CantorSpec({Int(4), Int(5)}));
    cl.push_back({std::abs(hb.upper - 0.4837) <= 0.0001,
                  "upper bound " + std::to_string(hb.upper) + " expected 0.4837 +- 0.0001"});
    cl.push_back({hb.upper_below_half, "upper bound provably < 1/2 (exact comparison)"});
    cl.push_back({hb.lower_reported && hb.lower == 0.263,
                  "lower bound " + std::to_string(hb.lower) + " expected 0.263"});
    return combine("hausdorff", cl);
}

// 8. Moebius covariance on 100 random SL2(Z) matrices
ReproResult mobius() {
    std::mt19937_64 rng(88001);
    std::uniform_int_distribution<int> entry(-5, 5);
    QuadraticSurd alpha = golden();
    SpectrumWitness w[2] = {convergent_witness(alpha, 0, 200), convergent_witness(alpha, 1, 200)};
    Rational tol(1, Int("1000000000"));

    std::size_t tried = 0, failures = 0;
    double worst = 0.0;
    while (tried < 100) {
        IntMatrix2 g;
        try {
            g = IntMatrix2(entry(rng), entry(rng), entry(rng), entry(rng));
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (g.det() != 1) continue;
        const SpectrumWitness& base = w[tried % 2];
        auto moved = mobius_transport_witness(g, base, alpha);
        QuadraticSurd image = mobius_apply(g, alpha);
        const Int& k = moved.ks.back();
        const Int& m = moved.ms.back();
        QuadraticSurd value =
            (QuadraticSurd::from_rational(Rational(k, m)) - image) * Rational(m * m);
        QuadraticSurd diff = (value - moved.target).abs();
        if (diff.compare(tol) >= 0) ++failures;
        double err = to_decimal(diff, 15).interval.hi.convert_to<double>();
        worst = std::max(worst, err);
        ++tried;
    }
    std::ostringstream os;
    os << "100 SL2(Z) transports at depth 200: " << failures
       << " beyond 1e-9 of det(g) x (worst error " << worst << "), expected 0";
    return combine("mobius", {{failures == 0, os.str()}});
}

// 9. Word constructions: scan for the pinned spectrum targets
ReproResult words() {
    std::vector<Clause> cl;
    // 30-digit rational stand-ins for 1/sqrt2 and 1/(4 sqrt2)
    Rational r2 = to_decimal(inv_sqrt(2), 30).interval.midpoint();
    Rational r2q = r2 / 4;

    std::vector<Rational> targets14 = {r2, -r2, r2q, -r2q};
    for (int j = 1; j <= 10; ++j) targets14.push_back(r2q + (r2 - r2q) * Rational(j, 11));
    auto alpha14 = word_to_alpha(WordGenerator(WordKind::Universal14));
    auto hits14 = target_hit_scan(alpha14, targets14, 100000);
    Rational worst14(0);
    for (const auto& h : hits14) worst14 = std::max(worst14, h.distance);
    cl.push_back({worst14 < Rational(1, 1000),
                  "14 targets in [+-1/(4 sqrt2), +-1/sqrt2]: worst distance " +
                      std::to_string(as_double(worst14)) + " expected < 1e-3"});

    std::vector<Rational> spiked = {Rational(7, 10), Rational(3, 2), Rational(5, 2),
                                    Rational(21, 4)};
    auto alpha_sp = word_to_alpha(WordGenerator(WordKind::Spiked));
    auto hits_sp = target_hit_scan(alpha_sp, spiked, 100000);
    Rational worst_sp(0);
    for (const auto& h : hits_sp) worst_sp = std::max(worst_sp, h.distance);
    cl.push_back({worst_sp < Rational(1, 100),
                  "spiked targets {0.7, 1.5, 2.5, 5.25}: worst distance " +
                      std::to_string(as_double(worst_sp)) + " expected < 1e-2"});

    auto alpha45 = word_to_alpha(WordGenerator(WordKind::Universal45));
    std::vector<Rational> zero = {Rational(0)};
    auto hits45 = target_hit_scan(alpha45, zero, 100000, 1);
    Rational margin = Rational(1, 7) - Rational(1, 1000);
    cl.push_back({hits45[0].distance > margin,
                  "alphabet {4,5}: closest term to 0 at distance " +
                      std::to_string(as_double(hits45[0].distance)) + " expected > 1/7 - 1e-3"});
    return combine("words", cl);
}

// 10. rational alpha = 3/7: scan values in (1/7) Z, windows off the grid empty
ReproResult rational_degenerate() {
    std::vector<Clause> cl;
    auto cf = expand_rational(Rational(3, 7));
    auto hits = singular_scan(cf, {Rational(-1), Rational(1)}, 300);
    std::size_t off_grid = 0;
    for (const auto& h : hits) {
        QuadraticSurd v7 = std::get<QuadraticSurd>(h.value) * Rational(7);
        if (!(v7 - Rational(v7.floor())).is_zero()) ++off_grid;
    }
    cl.push_back({!hits.empty() && off_grid == 0,
                  std::to_string(hits.size()) + " scan values, " + std::to_string(off_grid) +
                      " outside (1/7) Z, expected 0"});
    auto gap = singular_scan(cf, {Rational(1, 100), Rational(1, 8)}, 300);
    cl.push_back({gap.empty(), "window (1/100, 1/8) between grid points: " +
                                   std::to_string(gap.size()) + " hits, expected 0 (S empty)"});
    return combine("rational-degenerate", cl);
}

// 11. Pais-Uhlenbeck density vs the commensurable case
ReproResult pu_density() {
    std::vector<Clause> cl;
    auto dense = pu_spectrum(golden(), QuadraticSurd::from_int(1), 200, 200);
    cl.push_back({dense.min_abs_nonzero.compare(Rational(1, 100)) < 0 && !dense.has_zero,
                  "Omega_x = phi, 200x200 grid: min nonzero |E| = " + dec(dense.min_abs_nonzero) +
                      " expected < 1e-2"});
    auto equal = pu_spectrum(golden(), golden(), 30, 30);
    cl.push_back({equal.min_gap == golden() && equal.has_zero,
                  "Omega_x = Omega_y = phi: min positive gap " + dec(equal.min_gap) +
                      " expected phi exactly"});
    return combine("pu-density", cl);
}

using ReproFn = ReproResult (*)();

const std::pair<const char*, ReproFn> kScripts[] = {
    {"golden-markov", golden_markov},
    {"period4-accum", period4_accum},
    {"euler-terms", euler_terms},
    {"lemma-bracket", lemma_bracket},
    {"legendre", legendre},
    {"cantor-endpoints", cantor_endpoints},
    {"hausdorff", hausdorff},
    {"mobius", mobius},
    {"words", words},
    {"rational-degenerate", rational_degenerate},
    {"pu-density", pu_density},
};

}  // namespace

const std::vector<std::string>& repro_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : kScripts) out.emplace_back(name);
        return out;
    }();
    return names;
}

ReproResult run_repro(const std::string& name) {
    for (const auto& [key, fn] : kScripts)
        if (name == key) return fn();
    throw std::invalid_argument("run_repro: unknown script '" + name + "'");
}

std::vector<ReproResult> run_all_repro() {
    std::vector<ReproResult> out;
    out.reserve(std::size(kScripts));
    for (const auto& [key, fn] : kScripts) out.push_back(fn());
    return out;
}

}  // namespace nt
