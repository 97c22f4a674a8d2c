#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nt/cantor.hpp"

#include <algorithm>
#include <random>

using namespace nt;

namespace {

std::mt19937_64 rng(7071);

CantorSpec spec14() { return CantorSpec({Int(1), Int(2), Int(3), Int(4)}); }
CantorSpec spec45() { return CantorSpec({Int(4), Int(5)}); }

// all words of length n over the alphabet
std::vector<std::vector<Int>> words_of(const std::vector<Int>& alphabet, std::size_t n) {
    std::vector<std::vector<Int>> out{{}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Int>> next;
        for (const auto& w : out)
            for (const Int& a : alphabet) {
                auto e = w;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("CantorSpec validation and normalization") {
    CantorSpec s({Int(4), Int(1), Int(4), Int(2)});
    CHECK(s.alphabet == std::vector<Int>{Int(1), Int(2), Int(4)});
    CHECK(s.min_letter() == 1);
    CHECK(s.max_letter() == 4);
    CHECK_THROWS_AS(CantorSpec({}), std::invalid_argument);
    CHECK_THROWS_AS(CantorSpec({Int(0)}), std::invalid_argument);
}

TEST_CASE("extrema of F_0(4): twice the minimum is sqrt2 - 1") {
    auto ext = cantor_extrema(spec14());
    CHECK(ext.min + ext.min == QuadraticSurd(-1, 1, 1, 2));  // sqrt 2 - 1
    CHECK(ext.min_cf.period() == std::vector<Int>{Int(4), Int(1)});
    CHECK(ext.max_cf.period() == std::vector<Int>{Int(1), Int(4)});
    // max = [0,(1,4)^w] = 2/(1+sqrt2) = 2(sqrt2 - 1)
    CHECK(ext.max == QuadraticSurd(-2, 2, 1, 2));
    CHECK(ext.min < ext.max);
}

TEST_CASE("extrema of F({4,5})") {
    auto ext = cantor_extrema(spec45());
    // min = [0,(5,4)^w] = 2(sqrt(6/5) - 1) = (2 sqrt 30 - 10)/5
    CHECK(ext.min == QuadraticSurd(-10, 2, 5, 30));
    // its defining tail: [(5,4)^w] = (5 + sqrt 30)/2
    CHECK(eval_periodic(ContinuedFraction::periodic({}, {Int(5), Int(4)})) ==
          QuadraticSurd(5, 1, 2, 30));
    // max = [0,(4,5)^w]; [(4,5)^w] = (4 + 2 sqrt 30 / 5 ... check via inverse
    CHECK(ext.max.inverse() == eval_periodic(ContinuedFraction::periodic({}, {Int(4), Int(5)})));
    auto dec = to_decimal(ext.min, 5);
    CHECK(dec.text == "0.19089");
}

TEST_CASE("singleton alphabet degenerates to the periodic point") {
    auto ext = cantor_extrema(CantorSpec({Int(1)}));
    CHECK(ext.min == ext.max);
    CHECK(ext.min == QuadraticSurd(-1, 1, 2, 5));  // 1/phi = (sqrt5 - 1)/2
}

TEST_CASE("extrema really are alternate-order extrema over cylinders") {
    struct Case {
        CantorSpec spec;
        std::size_t depth;
    };
    for (const auto& [spec, depth] : {Case{spec45(), 12}, Case{spec14(), 6}}) {
        auto ext = cantor_extrema(spec);
        for (const auto& w : words_of(spec.alphabet, depth)) {
            // a sample point of F inside the cylinder of w
            std::vector<Int> pre{Int(0)};
            pre.insert(pre.end(), w.begin(), w.end());
            auto sample = ContinuedFraction::periodic(
                pre, {spec.max_letter(), spec.min_letter()});
            CHECK(compare_alternate(ext.min_cf, sample, 64) != AlternateOrder::Greater);
            CHECK(compare_alternate(ext.max_cf, sample, 64) != AlternateOrder::Less);
        }
    }
}

TEST_CASE("sumset_interval") {
    auto hall = sumset_interval(spec14());
    CHECK(hall.interval_filling);
    CHECK(hall.lo == QuadraticSurd(-1, 1, 1, 2));       // sqrt2 - 1
    CHECK(hall.hi == QuadraticSurd(-4, 4, 1, 2));       // 4(sqrt2 - 1)
    auto dec_lo = to_decimal(hall.lo, 5), dec_hi = to_decimal(hall.hi, 5);
    CHECK(dec_lo.text == "0.41421");
    CHECK(dec_hi.text == "1.65685");

    auto two = sumset_interval(spec45());
    CHECK(!two.interval_filling);
    CHECK(two.lo == QuadraticSurd(-20, 4, 5, 30));  // 4(sqrt(6/5) - 1)

    auto degenerate = sumset_interval(CantorSpec({Int(1)}));
    CHECK(degenerate.lo == degenerate.hi);
    CHECK(!degenerate.interval_filling);
}

TEST_CASE("ifs_cover enumerates cylinders with the exact contraction bound") {
    auto one = ifs_cover(spec45(), 1);
    CHECK(one.interval_count == 2);
    auto ext = cantor_extrema(spec45());
    for (const auto& cyl : one.intervals) {
        CHECK(cyl.lo >= ext.min);
        CHECK(cyl.hi <= ext.max);
        CHECK(cyl.lo < cyl.hi);
    }

    auto ten = ifs_cover(spec45(), 10);
    CHECK(ten.interval_count == 1024);
    // max length <= |I| L^10 is asserted inside; also check it is tiny
    CHECK(ten.max_interval_length.compare(Rational(1, 1000000)) < 0);

    CHECK_THROWS_AS(ifs_cover(spec45(), 0), std::invalid_argument);
    CHECK_THROWS_AS(ifs_cover(spec14(), 15), std::length_error);
}

TEST_CASE("cylinder nesting: Z_{n+1} subset of Z_n") {
    auto outer = ifs_cover(spec45(), 3);
    auto inner = ifs_cover(spec45(), 4);
    for (const auto& cyl : inner.intervals) {
        bool contained = false;
        for (const auto& parent : outer.intervals) {
            if (parent.lo <= cyl.lo && cyl.hi <= parent.hi) {
                contained = true;
                break;
            }
        }
        CHECK(contained);
    }
}

TEST_CASE("contraction factor bounds the IFS maps") {
    auto spec = spec45();
    auto ext = cantor_extrema(spec);
    auto est = ifs_cover(spec, 1);
    // |f_z(x) - f_z(y)| / |x - y| = 1/((z+x)(z+y)) <= L on I, exactly
    Interval ibox{to_decimal(ext.min, 30).interval.lo, to_decimal(ext.max, 30).interval.hi};
    std::uniform_int_distribution<long long> pick(0, 1000000);
    for (int i = 0; i < 1000; ++i) {
        Rational x = ibox.lo + (ibox.hi - ibox.lo) * Rational(pick(rng), 1000000);
        Rational y = ibox.lo + (ibox.hi - ibox.lo) * Rational(pick(rng), 1000000);
        if (x == y) continue;
        for (const Int& z : spec.alphabet) {
            Rational prod = (Rational(z) + x) * (Rational(z) + y);
            // ratio = 1/prod <= L  <=>  prod >= 1/L = (min F + a_min)^2
            CHECK(est.contraction.inverse().compare(prod) <= 0);
        }
    }
}

TEST_CASE("sumset coverage gaps shrink with depth on {1,2,3,4}") {
    auto spec = spec14();
    auto total = sumset_interval(spec);
    Rational span = to_decimal(total.hi - total.lo, 30).interval.hi;
    Rational prev_gap = span;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto est = ifs_cover(spec, n);
        // rational enclosures of all pairwise sums of cylinders
        std::vector<Interval> sums;
        sums.reserve(est.intervals.size() * est.intervals.size());
        std::vector<Interval> cyl;
        for (const auto& c : est.intervals)
            cyl.push_back({to_decimal(c.lo, 30).interval.lo, to_decimal(c.hi, 30).interval.hi});
        for (const auto& a : cyl)
            for (const auto& b : cyl) sums.push_back({a.lo + b.lo, a.hi + b.hi});
        std::sort(sums.begin(), sums.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        // measure what is left uncovered inside [2min, 2max]
        Rational covered = 0, cursor = to_decimal(total.lo, 30).interval.lo;
        for (const auto& s : sums) {
            if (s.hi <= cursor) continue;
            covered += s.hi - std::max(s.lo, cursor);
            cursor = s.hi;
        }
        Rational gap = span - covered;
        if (gap < 0) gap = 0;
        CHECK(gap <= prev_gap);
        prev_gap = gap;
    }
    // by depth 4 the uncovered mass is a small fraction of the interval
    CHECK(prev_gap < span / 10);
}

TEST_CASE("hausdorff_bounds for {4,5}") {
    auto hb = hausdorff_bounds(spec45());
    CHECK(hb.lower_reported);
    CHECK(hb.lower == doctest::Approx(0.263));
    CHECK(hb.upper == doctest::Approx(0.4837).epsilon(1e-3));
    CHECK(hb.upper < 0.5);
    CHECK(hb.upper_below_half);
    CHECK(hb.upper > 0.0);
    CHECK(hb.upper < 1.0);
    // the 50-digit string starts with the same value
    CHECK(hb.upper_digits.substr(0, 6) == "0.4837");
}

TEST_CASE("hausdorff_bounds on other alphabets reports no lower constant") {
    auto hb = hausdorff_bounds(spec14());
    CHECK(!hb.lower_reported);
    CHECK(hb.lower == 0.0);
    // a_min + min F = 1.207... < |A|^2, so the covering bound is useless there
    CHECK(!hb.upper_below_half);
}
