#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nt/words.hpp"

using namespace nt;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

// Independent oracle: build u_n by literal concatenation of the definitions.
std::vector<std::vector<Int>> all_words(const std::vector<Int>& alphabet, std::size_t n) {
    std::vector<std::vector<Int>> words{{}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Int>> next;
        for (const auto& w : words) {
            for (const Int& a : alphabet) {
                auto e = w;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        }
        words = std::move(next);
    }
    return words;
}

std::vector<Int> oracle_universal(const std::vector<Int>& alphabet, std::size_t levels) {
    std::vector<Int> u;
    for (std::size_t n = 1; n <= levels; ++n)
        for (const auto& w : all_words(alphabet, n)) u.insert(u.end(), w.begin(), w.end());
    return u;
}

std::vector<Int> oracle_spiked(std::size_t levels) {
    std::vector<Int> alphabet = ints({1, 2, 3, 4});
    std::vector<Int> u;
    for (std::size_t n = 1; n <= levels; ++n) {
        for (const auto& w : all_words(alphabet, n)) {
            for (std::size_t h = 1; h <= n; ++h) {  // Copy(w) = (w 1)(w 2)...(w n)
                u.insert(u.end(), w.begin(), w.end());
                u.push_back(Int(h));
            }
        }
    }
    return u;
}

}  // namespace

TEST_CASE("universal_word_14 prefix matches the construction") {
    CHECK(universal_word_14(4) == ints({1, 2, 3, 4}));
    // next block: 11 12 13 14 ...
    auto p12 = universal_word_14(12);
    CHECK(std::vector<Int>(p12.begin() + 4, p12.end()) == ints({1, 1, 1, 2, 1, 3, 1, 4}));
}

TEST_CASE("universal words agree with the literal concatenation oracle") {
    for (WordKind kind : {WordKind::Universal14, WordKind::Universal45}) {
        WordGenerator gen(kind);
        auto oracle = oracle_universal(gen.alphabet(), 3);
        auto fast = gen.prefix(oracle.size());
        CHECK(fast == oracle);
        CHECK(gen.prefix_length(3) == Int(oracle.size()));
    }
}

TEST_CASE("spiked word agrees with the Copy-construction oracle") {
    WordGenerator gen(WordKind::Spiked);
    auto oracle = oracle_spiked(3);
    auto fast = gen.prefix(oracle.size());
    CHECK(fast == oracle);
    CHECK(gen.prefix_length(3) == Int(oracle.size()));
    // v_1 = (11)(21)(31)(41)
    CHECK(gen.prefix(8) == ints({1, 1, 2, 1, 3, 1, 4, 1}));
}

TEST_CASE("universal_word_45 basics") {
    CHECK(universal_word_45(2) == ints({4, 5}));
    auto p10 = universal_word_45(10);
    CHECK(std::vector<Int>(p10.begin() + 2, p10.end()) == ints({4, 4, 4, 5, 5, 4, 5, 5}));
    for (const Int& a : universal_word_45(500)) CHECK((a == 4 || a == 5));
}

TEST_CASE("block length closed forms") {
    WordGenerator u14(WordKind::Universal14);
    WordGenerator sp(WordKind::Spiked);
    Int sum14 = 0, sum_sp = 0, pow4 = 1;
    for (std::size_t n = 1; n <= 8; ++n) {
        pow4 *= 4;
        sum14 += Int(n) * pow4;            // |v_n| = n 4^n
        sum_sp += pow4 * n * (n + 1);      // |v_n| = 4^n n (n+1)
        CHECK(u14.prefix_length(n) == sum14);
        CHECK(sp.prefix_length(n) == sum_sp);
    }
}

TEST_CASE("spike letters appear and are unbounded within the scan") {
    WordGenerator gen(WordKind::Spiked);
    auto p = gen.prefix(40000);
    Int max_seen = 0;
    for (const Int& a : p) max_seen = std::max(max_seen, a);
    CHECK(max_seen >= 5);  // spikes exceed the base alphabet
}

TEST_CASE("occurrence_check finds patterns at both parities") {
    WordGenerator u14(WordKind::Universal14);
    auto pat = ints({1, 2, 3, 4});
    auto report = occurrence_check(u14, pat, 100000, 2);
    CHECK(report.even_count >= 2);
    CHECK(report.odd_count >= 2);
    CHECK(report.reached);
    // each reported position is a verified match
    auto window = u14.prefix(100000);
    for (std::size_t pos : report.positions)
        for (std::size_t j = 0; j < pat.size(); ++j) CHECK(window[pos + j] == pat[j]);

    // letters outside the alphabet never occur
    auto none = occurrence_check(u14, ints({5, 5}), 10000, 1);
    CHECK(none.positions.empty());
    CHECK(!none.reached);

    WordGenerator u45(WordKind::Universal45);
    auto r45 = occurrence_check(u45, ints({4, 5}), 10000, 2);
    CHECK(r45.reached);

    CHECK_THROWS_AS(occurrence_check(u14, std::vector<Int>{}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(occurrence_check(u14, pat, 2, 1), std::invalid_argument);
}

TEST_CASE("word_to_alpha feeds the continued-fraction pipeline") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Universal14));
    CHECK(alpha.kind() == ContinuedFraction::Kind::Stream);
    CHECK(alpha.digit(0) == 0);
    CHECK(alpha.digit(1) == 1);
    CHECK(alpha.digit(4) == 4);
    // alpha in (0, 1)
    auto c = convergents(alpha, 12);
    CHECK(c[12].value() > 0);
    CHECK(c[12].value() < 1);
}

TEST_CASE("universal14 terms stay inside the digit bracket [1/6, 1]") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Universal14));
    for (std::size_t n = 0; n <= 60; n += 5) {
        ApproxTerm t = approx_term_at(alpha, n);
        Interval box = enclosure_of(t.value);
        Rational lo = nt::abs(box.lo), hi = nt::abs(box.hi);
        if (lo > hi) std::swap(lo, hi);
        CHECK(lo > Rational(1, 6));
        CHECK(hi < Rational(1, 1));
    }
}

TEST_CASE("approx_term_at matches approx_sequence") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Universal45));
    auto seq = approx_sequence(alpha, 10, 48);
    for (std::size_t n = 0; n <= 10; ++n) {
        ApproxTerm t = approx_term_at(alpha, n);
        CHECK(t.convergent.p == seq[n].convergent.p);
        CHECK(t.convergent.q == seq[n].convergent.q);
        Interval a = std::get<Interval>(t.value), b = std::get<Interval>(seq[n].value);
        CHECK(a.lo < b.hi);
        CHECK(b.lo < a.hi);  // overlapping enclosures of the same value
    }
    // exact path for quadratic alpha
    auto phi = expand_quadratic(QuadraticSurd(1, 1, 2, 5));
    ApproxTerm t3 = approx_term_at(phi, 3);
    auto exact = approx_sequence(phi, 3);
    CHECK(std::get<QuadraticSurd>(t3.value) == std::get<QuadraticSurd>(exact[3].value));
}

TEST_CASE("target_hit_scan reaches +-1/sqrt2 on the universal word") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Universal14));
    // 1/sqrt2 to 30 digits as a rational target
    Rational inv_sqrt2 = to_decimal(QuadraticSurd(0, 1, 2, 2), 30).interval.lo;
    std::vector<Rational> targets{inv_sqrt2, -inv_sqrt2};
    auto hits = target_hit_scan(alpha, targets, 100000, 1);
    REQUIRE(hits.size() == 2);
    for (const auto& h : hits) {
        CHECK(h.distance < Rational(1, 1000));
        CHECK(h.multiplier == 1);
        CHECK(h.value.width() < Rational(1, 1000000));
    }
}

TEST_CASE("target 0 on the {4,5} word is never approached") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Universal45));
    std::vector<Rational> targets{Rational(0)};
    auto hits = target_hit_scan(alpha, targets, 5000, 1);
    REQUIRE(hits.size() == 1);
    // |t| > 1/(2 + 5) for every term, so the distance never drops below 1/7
    CHECK(hits[0].distance > Rational(1, 8));
}

TEST_CASE("spiked word reaches targets beyond the unit bracket via multipliers") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Spiked));
    std::vector<Rational> targets{Rational(5, 2), Rational(3, 2)};
    auto hits = target_hit_scan(alpha, targets, 100000, 3);
    for (const auto& h : hits) {
        CHECK(h.distance < Rational(1, 100));
        CHECK(h.multiplier > 1);  // bare terms satisfy |t| < 1
    }
}

TEST_CASE("target_hit_scan input validation") {
    auto alpha = word_to_alpha(WordGenerator(WordKind::Universal14));
    std::vector<Rational> t{Rational(1, 2)};
    CHECK_THROWS_AS(target_hit_scan(ContinuedFraction::finite({Int(1), Int(2)}), t, 10),
                    std::domain_error);
    CHECK_THROWS_AS(target_hit_scan(alpha, t, 10, 0), std::invalid_argument);
    CHECK(target_hit_scan(alpha, std::vector<Rational>{}, 10).empty());
}
