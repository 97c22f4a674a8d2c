#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nt/spectrum.hpp"

#include <random>

using namespace nt;

namespace {

std::mt19937_64 rng(424242);

QuadraticSurd golden() { return QuadraticSurd(1, 1, 2, 5); }

QuadraticSurd inv_sqrt(long long d, long long num = 1) {
    // num / sqrt(d) = num*sqrt(d)/d
    return QuadraticSurd(0, num, d, d);
}

QuadraticSurd random_quadratic(Int d) {
    std::uniform_int_distribution<int> small(-20, 20);
    std::uniform_int_distribution<int> pos(1, 20);
    int q = small(rng);
    if (q == 0) q = 3;
    return QuadraticSurd(small(rng), q, pos(rng), d);
}

}  // namespace

TEST_CASE("approx_sequence matches the direct definition exactly") {
    for (Int d : {2, 5, 6, 13}) {
        for (int rep = 0; rep < 10; ++rep) {
            QuadraticSurd alpha = random_quadratic(d);
            auto cf = expand_quadratic(alpha);
            auto terms = approx_sequence(cf, 15);
            REQUIRE(terms.size() == 16);
            for (const auto& t : terms) {
                // m^2 (k/m - alpha) with k/m the convergent
                QuadraticSurd direct =
                    (QuadraticSurd::from_rational(t.convergent.value()) - alpha) *
                    Rational(t.convergent.q * t.convergent.q);
                CHECK(std::get<QuadraticSurd>(t.value) == direct);
            }
        }
    }
}

TEST_CASE("approx_sequence rejects rationals") {
    CHECK_THROWS_AS(approx_sequence(ContinuedFraction::finite({Int(2), Int(3)}), 4),
                    std::domain_error);
}

TEST_CASE("terms obey the digit bracket 1/(2 + a_{N+1}) < |t_N| < 1/a_{N+1}") {
    QuadraticSurd alpha = random_quadratic(7);
    auto cf = expand_quadratic(alpha);
    auto terms = approx_sequence(cf, 20);
    for (const auto& t : terms) {
        Int a_next = cf.digit(t.index + 1);
        QuadraticSurd mag = std::get<QuadraticSurd>(t.value).abs();
        CHECK(mag.compare(Rational(1, a_next + 2)) > 0);
        CHECK(mag.compare(Rational(1, a_next)) < 0);
    }
}

TEST_CASE("stream enclosures are consistent with the exact values") {
    // run the golden ratio through the generic stream path and compare
    struct Ones final : DigitSource {
        Int digit(std::size_t) const override { return 1; }
    };
    auto stream = ContinuedFraction::stream(std::make_shared<Ones>());
    auto exact = approx_sequence(expand_quadratic(golden()), 12);
    auto boxed = approx_sequence(stream, 12);
    for (std::size_t i = 0; i <= 12; ++i) {
        const auto& e = std::get<QuadraticSurd>(exact[i].value);
        const auto& box = std::get<Interval>(boxed[i].value);
        CHECK(e.compare(box.lo) > 0);
        CHECK(e.compare(box.hi) < 0);
        CHECK(box.width() < Rational(1, 1000000));
    }
}

TEST_CASE("golden ratio accumulation set is {-1/sqrt5, +1/sqrt5}") {
    auto report = quad_accumulation_set(golden());
    REQUIRE(report.points.size() == 2);
    CHECK(report.points[0] == -inv_sqrt(5));
    CHECK(report.points[1] == inv_sqrt(5));
    CHECK(report.period_length == 1);
}

TEST_CASE("period (1,2,1,1) has the three-point set from the worked example") {
    // alpha = [(1,2,1,1)^w] = 2/5 + 2 sqrt6 / 5
    QuadraticSurd alpha(2, 2, 5, 6);
    auto report = quad_accumulation_set(alpha);
    REQUIRE(report.points.size() == 3);
    CHECK(report.points[0] == -inv_sqrt(6, 5) / Rational(4));  // -5/(4 sqrt 6)
    CHECK(report.points[1] == inv_sqrt(6, 3) / Rational(4));   //  3/(4 sqrt 6)
    CHECK(report.points[2] == inv_sqrt(6));                    //  1/sqrt 6
    CHECK(report.period_length == 4);
}

TEST_CASE("sqrt2 accumulation set is symmetric {-1/(2 sqrt2), +1/(2 sqrt2)}") {
    auto report = quad_accumulation_set(QuadraticSurd::sqrt_of(2));
    REQUIRE(report.points.size() == 2);
    CHECK(report.points[1] == inv_sqrt(2) / Rational(2));
    CHECK(report.points[0] == -report.points[1]);
}

TEST_CASE("odd period length gives a symmetric set") {
    for (Int d : {2, 3, 5, 7, 13}) {
        for (int rep = 0; rep < 8; ++rep) {
            QuadraticSurd alpha = random_quadratic(d);
            auto cf = expand_quadratic(alpha);
            auto report = quad_accumulation_set(cf);
            std::size_t l = report.period_length;
            CHECK(report.points.size() <= (l % 2 == 0 ? l : 2 * l));
            if (l % 2 == 1) {
                for (const auto& pt : report.points) {
                    bool found = false;
                    for (const auto& other : report.points)
                        if (other == -pt) found = true;
                    CHECK(found);
                }
            }
            // at least one point inside (-1/2, 1/2)
            bool inside = false;
            for (const auto& pt : report.points)
                inside = inside || pt.abs().compare(Rational(1, 2)) < 0;
            CHECK(inside);
        }
    }
}

TEST_CASE("preperiod flips the set by (-1)^s") {
    // golden ratio vs 1/golden = [0; (1)^w] (s = 1): sets coincide (symmetric),
    // but a one-digit preperiod on an asymmetric set mirrors it.
    QuadraticSurd alpha(2, 2, 5, 6);             // [(1,2,1,1)^w]
    QuadraticSurd shifted = alpha.inverse();     // [0; (1,2,1,1)^w], s = 1
    auto base = quad_accumulation_set(alpha);
    auto flip = quad_accumulation_set(expand_quadratic(shifted));
    REQUIRE(base.points.size() == flip.points.size());
    std::size_t n = base.points.size();
    for (std::size_t i = 0; i < n; ++i)
        CHECK(flip.points[i] == -base.points[n - 1 - i]);
}

TEST_CASE("markov_constant_exact") {
    CHECK(markov_constant_exact(golden()) == inv_sqrt(5));
    CHECK(markov_constant_exact(QuadraticSurd::sqrt_of(2)) == inv_sqrt(2) / Rational(2));
    CHECK(markov_constant_exact(QuadraticSurd(2, 2, 5, 6)) == inv_sqrt(6, 3) / Rational(4));
    // Hurwitz: never above 1/sqrt 5
    for (Int d : {2, 3, 5, 6, 7}) {
        for (int rep = 0; rep < 6; ++rep) {
            QuadraticSurd mu = markov_constant_exact(random_quadratic(d));
            CHECK(to_decimal(mu, 20).interval.lo <=
                  to_decimal(inv_sqrt(5), 20).interval.hi);
        }
    }
}

TEST_CASE("markov_constant_numeric converges to the exact constant") {
    auto cf = expand_quadratic(golden());
    Interval est = markov_constant_numeric(cf, 40);
    QuadraticSurd mu = inv_sqrt(5);
    // the running minimum sits just below the liminf at finite depth
    CHECK(mu.compare(est.lo) > 0);
    CHECK(est.width() < Rational(1, 1000000));
    Interval mu_box = to_decimal(mu, 12).interval;
    CHECK(mu_box.lo - est.lo < Rational(1, 1000000));
}

TEST_CASE("markov constant of e is numerically zero") {
    // unbounded partial quotients drive the running minimum to 0
    Interval est = markov_constant_numeric(euler_cf(), 300);
    CHECK(est.lo >= 0);
    CHECK(est.hi < Rational(1, 100));
}

TEST_CASE("euler digits") {
    long long expected[] = {2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10};
    for (std::size_t i = 0; i < 15; ++i) CHECK(euler_digit(i) == expected[i]);
    CHECK(euler_digit(3 * 40 + 2) == 2 * 41);
    auto cf = euler_cf();
    CHECK(cf.kind() == ContinuedFraction::Kind::Stream);
    CHECK(cf.digit(5) == 4);
}

TEST_CASE("e term subsequences: |t_{3N}| -> 1/2 and |t_{3N+1}| -> 0") {
    auto cf = euler_cf();
    auto terms = approx_sequence(cf, 61, 40);
    // indices 3N (just before the digit-1 pair): |t| near 1/2
    Interval t60 = std::get<Interval>(terms[60].value);
    CHECK(nt::abs(t60.midpoint()) > Rational(45, 100));
    CHECK(nt::abs(t60.midpoint()) < Rational(55, 100));
    CHECK(nt::abs(nt::abs(t60.midpoint()) - Rational(1, 2)) < Rational(1, 100));
    // indices 3N+1 (just before the big digit): |t| ~ 1/a -> 0
    Interval t61 = std::get<Interval>(terms[61].value);
    CHECK(nt::abs(t61.midpoint()) < Rational(1, 40));
    // clusters: near +-1/2 and (slowly) near 0, nothing else in (-1/2, 1/2)
    auto clusters = cluster_terms(terms, Rational(1, 50), 4);
    bool near_pos_half = false, near_neg_half = false;
    for (const auto& c : clusters) {
        Rational mag = nt::abs(c.center);
        near_pos_half = near_pos_half ||
                        (c.center > 0 && nt::abs(mag - Rational(1, 2)) < Rational(1, 50));
        near_neg_half = near_neg_half ||
                        (c.center < 0 && nt::abs(mag - Rational(1, 2)) < Rational(1, 50));
        // no accumulation between the slow drift to 0 and the +-1/2 limits
        CHECK((mag < Rational(15, 100) || mag > Rational(45, 100)));
    }
    CHECK(near_pos_half);
    CHECK(near_neg_half);
}

TEST_CASE("tail_sum_bracket is a genuine bracket") {
    auto cf = expand_quadratic(QuadraticSurd(3, 1, 1, 2));  // 3 + sqrt 2
    for (std::size_t n = 1; n <= 8; ++n) {
        Interval s = tail_sum_bracket(cf, n, 20);
        // exact S_N = alpha_{N+1} + q_{N-1}/q_N
        QuadraticSurd tail = eval_periodic(cf.tail(n + 1));
        QuadraticSurd exact = tail + reversal_ratio(cf, n);
        CHECK(exact.compare(s.lo) > 0);
        CHECK(exact.compare(s.hi) < 0);
    }
}

TEST_CASE("secondary_convergent_term closed form") {
    // e: the secondary convergents before a big digit accumulate near a + 1/2
    auto cf = euler_cf();
    // N = 61 has a_{62} = euler_digit(62); indices 3n+2 carry the big digits
    CHECK(euler_digit(62) == 42);
    // fixed a, growing N = 3M+1: magnitude approaches a + 1/2 from below
    for (Int a : {1, 2, 3}) {
        Rational prev = 0;
        for (std::size_t n : {31, 61, 121, 301, 601}) {
            Interval box = std::get<Interval>(secondary_convergent_term(cf, n, a, 40));
            Rational mag = nt::abs(box.midpoint());
            CHECK(mag < Rational(a) + Rational(1, 2));
            CHECK(mag > prev);
            prev = mag;
        }
        // the gap to a + 1/2 closes like (a + 1/2)^2 / a_{N+1}
        CHECK(Rational(a) + Rational(1, 2) - prev < Rational(a * a, 100));
    }
    CHECK_THROWS_AS(secondary_convergent_term(cf, 61, Int(42), 40), std::invalid_argument);
    CHECK_THROWS_AS(secondary_convergent_term(cf, 61, Int(0), 40), std::invalid_argument);
    // golden ratio: all digits are 1, no admissible a at all
    auto phi_cf = expand_quadratic(golden());
    CHECK_THROWS_AS(secondary_convergent_term(phi_cf, 3, Int(1)), std::invalid_argument);

    // quadratic path cross-checks against the definition internally
    QuadraticSurd alpha(2, 2, 5, 6);
    auto p4 = expand_quadratic(alpha);
    // period (1,2,1,1): index 0 has a_1 = 2, so a = 1 is admissible
    TermValue exact = secondary_convergent_term(p4, 0, Int(1));
    QuadraticSurd val = std::get<QuadraticSurd>(exact);
    // the value is (1 + 0)(alpha_1 - 1)/(alpha_1 + 0) = 1 - 1/alpha_1, sign +
    QuadraticSurd alpha1 = eval_periodic(p4.tail(1));
    CHECK(val == QuadraticSurd::from_rational(Rational(1)) - alpha1.inverse());
    // |value| > 1/2: secondary convergents are never Legendre-quality here
    CHECK(val.abs().compare(Rational(1, 2)) > 0);
}

TEST_CASE("legendre_filter returns exactly the good approximations") {
    QuadraticSurd alpha = golden();
    auto hits = legendre_filter(alpha, Int(100));
    // brute force oracle over all q <= 100, all p near q*alpha
    std::size_t count = 0;
    for (Int q = 1; q <= 100; ++q) {
        Int base = (alpha * Rational(q)).floor();
        for (Int p = base - 1; p <= base + 2; ++p) {
            QuadraticSurd diff = alpha - Rational(p, q);
            if (diff.abs().compare(Rational(1, 2 * q * q)) < 0) {
                Rational frac(p, q);
                bool found = false;
                for (const auto& h : hits) found = found || h.value() == frac;
                CHECK(found);
                ++count;
            }
        }
    }
    CHECK(hits.size() == count);
    // every hit is a convergent
    auto cf = expand_quadratic(alpha);
    for (const auto& h : hits) CHECK(is_convergent(cf, h.value()));
}

TEST_CASE("legendre_filter on a stream agrees with the exact overload") {
    struct Ones final : DigitSource {
        Int digit(std::size_t) const override { return 1; }
    };
    auto via_stream = legendre_filter(ContinuedFraction::stream(std::make_shared<Ones>()),
                                      Int(200));
    auto via_surd = legendre_filter(golden(), Int(200));
    REQUIRE(via_stream.size() == via_surd.size());
    for (std::size_t i = 0; i < via_stream.size(); ++i)
        CHECK(via_stream[i].value() == via_surd[i].value());
}

TEST_CASE("legendre_filter on rationals degenerates to finitely many hits") {
    auto hits = legendre_filter(QuadraticSurd::from_rational(Rational(7, 3)), Int(50));
    for (const auto& h : hits) {
        QuadraticSurd diff = QuadraticSurd::from_rational(Rational(7, 3) - h.value());
        CHECK(diff.abs().compare(Rational(1, 2 * h.q * h.q)) < 0);
    }
    // the value itself shows up at q = 3 (and multiples reduce back to 7/3)
    bool exact_hit = false;
    for (const auto& h : hits) exact_hit = exact_hit || h.value() == Rational(7, 3);
    CHECK(exact_hit);
}

TEST_CASE("is_convergent") {
    auto cf = expand_quadratic(golden());
    CHECK(is_convergent(cf, Rational(5, 3)));
    CHECK(is_convergent(cf, Rational(13, 8)));
    CHECK(!is_convergent(cf, Rational(7, 4)));
    CHECK(!is_convergent(ContinuedFraction::finite({Int(2), Int(3)}), Rational(7, 4)));
    CHECK(is_convergent(ContinuedFraction::finite({Int(2), Int(3)}), Rational(7, 3)));
}

TEST_CASE("convergent_witness hits the golden-ratio limits") {
    auto even = convergent_witness(golden(), 0, 40);
    auto odd = convergent_witness(golden(), 1, 40);
    CHECK(even.target == -inv_sqrt(5));
    CHECK(odd.target == inv_sqrt(5));
    REQUIRE(even.ks.size() >= 10);
    // the witness terms really approach the target
    QuadraticSurd alpha = golden();
    auto term = [&](const SpectrumWitness& w, std::size_t i) {
        return (QuadraticSurd::from_rational(Rational(w.ks[i], w.ms[i])) - alpha) *
               Rational(w.ms[i] * w.ms[i]);
    };
    QuadraticSurd d_first = (term(even, 0) - even.target).abs();
    QuadraticSurd d_last = (term(even, even.ks.size() - 1) - even.target).abs();
    CHECK(d_last < d_first);
    CHECK(d_last.compare(Rational(1, 1000000)) < 0);
    CHECK_THROWS_AS(convergent_witness(QuadraticSurd(2, 2, 5, 6), 0, 20), std::domain_error);
}

TEST_CASE("mobius transport rescales the witness target by det g") {
    QuadraticSurd alpha = golden();
    auto w = convergent_witness(alpha, 1, 60);

    // det +1: target preserved
    IntMatrix2 g(2, 1, 1, 1);
    auto moved = mobius_transport_witness(g, w, alpha);
    CHECK(moved.target == w.target);

    // det -1: target negated
    IntMatrix2 h(0, 1, 1, 0);  // x -> 1/x
    auto flipped = mobius_transport_witness(h, w, alpha);
    CHECK(flipped.target == -w.target);

    // det 3: target scaled (S(g alpha) = det(g) S(alpha) for this witness)
    IntMatrix2 k(3, 0, 0, 1);
    auto scaled = mobius_transport_witness(k, w, alpha);
    CHECK(scaled.target == w.target * Rational(3));

    // pole is rejected
    IntMatrix2 pole(1, 0, 2, -1);  // denominator 2x - 1 has a pole at 1/2; fine for phi
    CHECK_THROWS_AS(
        mobius_transport_witness(IntMatrix2(1, 0, 1, -1), w,
                                 QuadraticSurd::from_rational(Rational(1)).is_rational()
                                     ? QuadraticSurd(1, 0, 1, 0)
                                     : alpha),
        std::domain_error);
    (void)pole;
}

TEST_CASE("cluster_terms groups golden-ratio terms around the two limits") {
    auto terms = approx_sequence(expand_quadratic(golden()), 40);
    auto clusters = cluster_terms(terms, Rational(1, 100), 5);
    REQUIRE(clusters.size() == 2);
    CHECK(nt::abs(clusters[0].center + Rational(4472, 10000)) < Rational(1, 100));
    CHECK(nt::abs(clusters[1].center - Rational(4472, 10000)) < Rational(1, 100));
    CHECK(clusters[0].hits >= 15);
}
