#include "nt/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace nt {

namespace {

int term_sign(std::size_t n) { return n % 2 == 0 ? -1 : 1; }  // (-1)^{N+1}

Interval invert(const Interval& s, int sgn) {
    // s is a bracket for S_N > 0; the term is sgn / S_N.
    if (nt::sign(s.lo) <= 0) throw std::logic_error("invert: bracket must be positive");
    Rational lo = 1 / s.hi, hi = 1 / s.lo;
    if (sgn > 0) return {lo, hi};
    return {-hi, -lo};
}

// Strict two-sided bracket of an infinite continued fraction value from two
// consecutive convergents.
Interval bracket_value(const ContinuedFraction& cf, std::size_t depth) {
    if (depth < 2) depth = 2;
    auto cs = convergents(cf, depth);
    Rational a = cs[depth - 1].value(), b = cs[depth].value();
    return a < b ? Interval{a, b} : Interval{b, a};
}

}  // namespace

Interval enclosure_of(const TermValue& v, unsigned digits) {
    if (std::holds_alternative<Interval>(v)) return std::get<Interval>(v);
    return to_decimal(std::get<QuadraticSurd>(v), digits).interval;
}

double midpoint_of(const TermValue& v) {
    if (std::holds_alternative<QuadraticSurd>(v)) return std::get<QuadraticSurd>(v).to_double();
    const auto& i = std::get<Interval>(v);
    return i.midpoint().convert_to<double>();
}

Interval tail_sum_bracket(const ContinuedFraction& alpha, std::size_t n,
                          std::size_t tail_depth) {
    if (n < 1) throw std::invalid_argument("tail_sum_bracket: n must be >= 1");
    ConvergentWalker walker(alpha);
    Convergent c{};
    for (std::size_t i = 0; i <= n; ++i) c = walker.next();
    Rational ratio(walker.prev_q(), c.q);
    Interval t = bracket_value(alpha.tail(n + 1), tail_depth);
    return {t.lo + ratio, t.hi + ratio};
}

std::vector<ApproxTerm> approx_sequence(const ContinuedFraction& alpha, std::size_t n_max,
                                        std::size_t tail_depth) {
    if (alpha.is_finite())
        throw std::domain_error("approx_sequence: rational alpha has an empty spectrum");

    std::vector<ApproxTerm> out;
    out.reserve(n_max + 1);
    ConvergentWalker walker(alpha);

    if (alpha.kind() == ContinuedFraction::Kind::Periodic) {
        // exact path: the tail alpha_{N+1} is the Gauss orbit of alpha
        QuadraticSurd state = eval_periodic(alpha);
        for (std::size_t n = 0; n <= n_max; ++n) {
            Convergent c = walker.next();
            state = gauss_step(state).second;  // alpha_{N+1}
            Rational ratio(walker.prev_q(), c.q);
            QuadraticSurd value = (state + ratio).inverse();
            if (term_sign(n) < 0) value = -value;
            out.push_back({n, std::move(c), std::move(value)});
        }
        return out;
    }

    for (std::size_t n = 0; n <= n_max; ++n) {
        Convergent c = walker.next();
        Rational ratio(walker.prev_q(), c.q);
        Interval t = bracket_value(alpha.tail(n + 1), tail_depth);
        Interval s{t.lo + ratio, t.hi + ratio};
        out.push_back({n, std::move(c), invert(s, term_sign(n))});
    }
    return out;
}

AccumulationReport quad_accumulation_set(const ContinuedFraction& alpha) {
    if (alpha.kind() != ContinuedFraction::Kind::Periodic)
        throw std::domain_error("quad_accumulation_set: alpha must be a quadratic irrational");

    const std::size_t s = alpha.preperiod().size();
    const std::vector<Int>& period = alpha.period();
    const std::size_t l = period.size();
    const std::size_t rotations = (l % 2 == 0) ? l : 2 * l;
    const int preperiod_sign = (s % 2 == 0) ? 1 : -1;  // Corollary: S(tail) = (-1)^s S(alpha)

    std::vector<QuadraticSurd> points;
    for (std::size_t j = 0; j < rotations; ++j) {
        std::vector<Int> rotated = period;
        std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(j % l),
                    rotated.end());
        QuadraticSurd eta = eval_periodic(ContinuedFraction::periodic({}, std::move(rotated)));
        QuadraticSurd limit = (eta - eta.conjugate()).inverse();
        int sgn = (j % 2 == 0) ? -1 : 1;  // (-1)^{j-1}
        if (sgn * preperiod_sign < 0) limit = -limit;
        points.push_back(std::move(limit));
    }
    std::sort(points.begin(), points.end(),
              [](const QuadraticSurd& a, const QuadraticSurd& b) { return a < b; });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // finite-depth witness check: the limit formula's orientation negates the
    // raw term values, so each reported point x is approached by -t_N along
    // some subsequence
    const std::size_t depth = s + 24 * l + 2;
    auto terms = approx_sequence(alpha, depth);
    const Rational tol(1, 1000000);
    for (const auto& pt : points) {
        bool witnessed = false;
        for (std::size_t i = terms.size() >= 2 * l ? terms.size() - 2 * l : 0;
             i < terms.size() && !witnessed; ++i) {
            QuadraticSurd diff = std::get<QuadraticSurd>(terms[i].value) + pt;
            witnessed = diff.abs().compare(tol) < 0;
        }
        if (!witnessed)
            throw std::logic_error("quad_accumulation_set: point not witnessed by terms");
    }
    return {std::move(points), l, depth};
}

AccumulationReport quad_accumulation_set(const QuadraticSurd& alpha) {
    return quad_accumulation_set(expand_quadratic(alpha));
}

QuadraticSurd markov_constant_exact(const QuadraticSurd& alpha) {
    auto report = quad_accumulation_set(alpha);
    QuadraticSurd best = report.points.front().abs();
    for (const auto& pt : report.points) {
        QuadraticSurd a = pt.abs();
        if (a < best) best = a;
    }
    return best;
}

Interval markov_constant_numeric(const ContinuedFraction& alpha, std::size_t depth) {
    auto terms = approx_sequence(alpha, depth);
    // liminf estimate: minimum of |t_N| over the tail half only, so that
    // sporadic small early terms (which do not recur) are discarded
    terms.erase(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(terms.size() / 2));
    Rational lo, hi;
    bool first = true;
    for (const auto& t : terms) {
        Interval e = enclosure_of(t.value);
        Rational alo = nt::abs(e.lo), ahi = nt::abs(e.hi);
        if (alo > ahi) std::swap(alo, ahi);
        if (nt::sign(e.lo) != nt::sign(e.hi)) alo = 0;  // enclosure straddles zero
        if (first || alo < lo) lo = alo;
        if (first || ahi < hi) hi = ahi;
        first = false;
    }
    if (lo > hi) lo = hi;
    return {lo, hi};
}

TermValue secondary_convergent_term(const ContinuedFraction& alpha, std::size_t n, const Int& a,
                                    std::size_t tail_depth) {
    Int bound = alpha.digit(n + 1);
    if (a < 1 || a > bound - 1)
        throw std::invalid_argument("secondary_convergent_term: need 1 <= a <= a_{N+1}-1, a_{N+1} = " +
                                    bound.str());
    ConvergentWalker walker(alpha);
    Convergent c{};
    for (std::size_t i = 0; i <= n; ++i) c = walker.next();
    Rational ratio(walker.prev_q(), c.q);
    Rational aa(a);
    // m(k - m alpha) with k = a p_N + p_{N-1}, m = a q_N + q_{N-1} carries
    // sign (-1)^N (the cross terms k q_N - m p_N = (-1)^N drive it)
    int sgn = (n % 2 == 0) ? 1 : -1;

    if (alpha.kind() == ContinuedFraction::Kind::Periodic) {
        QuadraticSurd t = eval_periodic(alpha.tail(n + 1));
        QuadraticSurd value = (t - aa) / (t + ratio) * Rational(aa + ratio);
        if (sgn < 0) value = -value;
        // cross-check against the definition with the secondary convergent itself
        Int m = a * c.q + walker.prev_q();
        Int k = a * c.p + walker.prev_p();
        QuadraticSurd direct =
            (QuadraticSurd::from_rational(Rational(k, m)) - eval_periodic(alpha)) * Rational(m * m);
        if (!(direct == value))
            throw std::logic_error("secondary_convergent_term: closed form disagrees with definition");
        return value;
    }

    Interval t = bracket_value(alpha.tail(n + 1), tail_depth);
    // (t - a)/(t + ratio) is increasing in t, and a + ratio > 0
    Rational scale = aa + ratio;
    Rational lo = scale * (t.lo - aa) / (t.lo + ratio);
    Rational hi = scale * (t.hi - aa) / (t.hi + ratio);
    if (sgn < 0) {
        std::swap(lo, hi);
        lo = -lo;
        hi = -hi;
    }
    return Interval{lo, hi};
}

bool is_convergent(const ContinuedFraction& alpha, const Rational& frac, std::size_t depth) {
    ConvergentWalker walker(alpha);
    for (std::size_t n = 0; n < depth; ++n) {
        if (alpha.is_finite() && n >= alpha.length()) return false;
        Convergent c = walker.next();
        if (c.value() == frac) return true;
        if (c.q > denominator(frac)) return false;
    }
    return false;
}

namespace {

ContinuedFraction expansion_of(const QuadraticSurd& alpha) {
    if (alpha.is_rational()) return expand_rational(alpha.as_rational());
    return expand_quadratic(alpha);
}

}  // namespace

std::vector<Convergent> legendre_filter(const QuadraticSurd& alpha, const Int& q_max) {
    if (q_max < 1) throw std::invalid_argument("legendre_filter: q_max must be >= 1");
    ContinuedFraction cf = expansion_of(alpha);
    std::vector<Convergent> hits;
    for (Int q = 1; q <= q_max; ++q) {
        Int p = (alpha * Rational(q) + Rational(1, 2)).floor();  // nearest integer
        QuadraticSurd diff = alpha - Rational(p, q);
        if (diff.abs().compare(Rational(1, 2 * q * q)) >= 0) continue;
        Rational frac(p, q);
        if (!alpha.is_rational() && !is_convergent(cf, frac))
            throw std::logic_error("legendre_filter: hit " + to_string(frac) +
                                   " is not a convergent");
        if (!hits.empty() && hits.back().value() == frac) continue;  // same reduced fraction
        hits.push_back({hits.size(), numerator(frac), denominator(frac)});
    }
    return hits;
}

std::vector<Convergent> legendre_filter(const ContinuedFraction& alpha, const Int& q_max) {
    if (alpha.kind() == ContinuedFraction::Kind::Periodic)
        return legendre_filter(eval_periodic(alpha), q_max);
    if (alpha.is_finite())
        return legendre_filter(QuadraticSurd::from_rational(eval_finite(alpha.preperiod())), q_max);

    // stream: decide each comparison from a deep convergent bracket, deepening
    // until no test is ambiguous
    for (std::size_t depth = 32;; depth *= 2) {
        if (depth > 4096)
            throw std::runtime_error("legendre_filter: failed to separate at depth 4096");
        Interval a = bracket_value(alpha, depth);
        std::vector<Convergent> hits;
        bool ambiguous = false;
        for (Int q = 1; q <= q_max && !ambiguous; ++q) {
            Int p = round(a.midpoint() * q);
            Rational frac(p, q);
            Rational lo = std::max(nt::abs(a.lo - frac), nt::abs(a.hi - frac));
            Rational hi = std::min(nt::abs(a.lo - frac), nt::abs(a.hi - frac));
            if (a.contains(frac)) hi = 0;
            Rational threshold(1, 2 * q * q);
            if (lo < threshold) {
                if (!is_convergent(alpha, frac))
                    throw std::logic_error("legendre_filter: hit is not a convergent");
                hits.push_back({hits.size(), numerator(frac), denominator(frac)});
            } else if (hi < threshold) {
                ambiguous = true;  // bracket straddles the threshold
            }
        }
        if (!ambiguous) return hits;
    }
}

SpectrumWitness convergent_witness(const QuadraticSurd& alpha, int parity, std::size_t depth) {
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("convergent_witness: parity must be 0 or 1");
    ContinuedFraction cf = expand_quadratic(alpha);
    if (cf.period().size() != 1)
        throw std::domain_error(
            "convergent_witness: fixed-parity subsequence converges only for period length 1");
    SpectrumWitness w;
    auto cs = convergents(cf, depth);
    for (const auto& c : cs) {
        if (c.index % 2 != static_cast<std::size_t>(parity)) continue;
        w.ks.push_back(c.p);
        w.ms.push_back(c.q);
    }
    // limit along this parity: the sign (-1)^{N+1} is constant on the
    // subsequence, and both tail and reversal converge since the period is 1
    QuadraticSurd eta = eval_periodic(ContinuedFraction::periodic({}, cf.period()));
    QuadraticSurd limit = (eta - eta.conjugate()).inverse();
    if (parity == 0) limit = -limit;
    w.target = std::move(limit);
    return w;
}

SpectrumWitness mobius_transport_witness(const IntMatrix2& g, const SpectrumWitness& w,
                                         const QuadraticSurd& alpha) {
    QuadraticSurd image = mobius_apply(g, alpha);  // throws on pole
    SpectrumWitness out;
    out.target = w.target * Rational(g.det());
    for (std::size_t i = 0; i < w.ks.size(); ++i) {
        Int k = g.c * w.ks[i] + g.d * w.ms[i];
        Int m = g.e * w.ks[i] + g.f * w.ms[i];
        if (m == 0) continue;
        if (m < 0) {  // canonicalize to positive denominators
            k = -k;
            m = -m;
        }
        out.ks.push_back(std::move(k));
        out.ms.push_back(std::move(m));
    }
    if (out.ks.size() < 2)
        throw std::domain_error("mobius_transport_witness: witness too short after transport");

    auto term_at = [&](std::size_t i) {
        Rational frac(out.ks[i], out.ms[i]);
        return (QuadraticSurd::from_rational(frac) - image) * Rational(out.ms[i] * out.ms[i]);
    };
    QuadraticSurd first = term_at(0) - out.target;
    QuadraticSurd last = term_at(out.ks.size() - 1) - out.target;
    if (last.abs().compare(Rational(1, 1000000)) >= 0 && !(last.abs() < first.abs()))
        throw std::logic_error("mobius_transport_witness: transported terms do not approach target");
    return out;
}

namespace {

struct EulerSource final : DigitSource {
    Int digit(std::size_t i) const override { return euler_digit(i); }
};

}  // namespace

Int euler_digit(std::size_t i) {
    if (i == 0) return 2;
    std::size_t r = (i - 1) % 3;
    if (r == 1) return 2 * (Int((i - 1) / 3) + 1);
    return 1;
}

ContinuedFraction euler_cf() {
    return ContinuedFraction::stream(std::make_shared<EulerSource>());
}

std::vector<TermCluster> cluster_terms(const std::vector<ApproxTerm>& terms,
                                       const Rational& radius, std::size_t min_hits) {
    struct Sample {
        Rational value;
        std::size_t index;
    };
    std::vector<Sample> samples;
    samples.reserve(terms.size());
    for (const auto& t : terms) samples.push_back({enclosure_of(t.value).midpoint(), t.index});
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.value < b.value; });

    std::vector<TermCluster> out;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        if (end - start < min_hits) return;
        std::size_t lo_idx = samples[start].index, hi_idx = lo_idx;
        for (std::size_t i = start; i < end; ++i) {
            lo_idx = std::min(lo_idx, samples[i].index);
            hi_idx = std::max(hi_idx, samples[i].index);
        }
        Rational center = (samples[start].value + samples[end - 1].value) / 2;
        out.push_back({center, end - start, lo_idx, hi_idx});
    };
    for (std::size_t i = start + 1; i <= samples.size(); ++i) {
        if (i == samples.size() || samples[i].value - samples[i - 1].value > radius) {
            flush(i);
            start = i;
        }
    }
    return out;
}

}  // namespace nt
