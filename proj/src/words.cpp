#include "nt/words.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace nt {

namespace {

std::vector<Int> alphabet_of(WordKind kind) {
    switch (kind) {
        case WordKind::Universal45:
            return {Int(4), Int(5)};
        case WordKind::Universal14:
        case WordKind::Spiked:
            return {Int(1), Int(2), Int(3), Int(4)};
    }
    throw std::invalid_argument("WordGenerator: unknown kind");
}

// |v_n| for the universal scheme: n * b^n; for the spiked scheme:
// 4^n * n * (n+1).
Int block_length(WordKind kind, std::size_t n, std::size_t base) {
    Int words = 1;
    for (std::size_t k = 0; k < n; ++k) words *= base;
    if (kind == WordKind::Spiked) return words * n * (n + 1);
    return words * n;
}

// Letter of the lexicographically w-th length-n word at position pos
// (0-based, most significant first).
Int word_letter(const std::vector<Int>& alphabet, const Int& w, std::size_t n, std::size_t pos) {
    Int scale = 1;
    for (std::size_t k = 0; k + pos + 1 < n; ++k) scale *= alphabet.size();
    Int idx = (w / scale) % alphabet.size();
    return alphabet[idx.convert_to<std::size_t>()];
}

}  // namespace

WordGenerator::WordGenerator(WordKind kind) : kind_(kind), alphabet_(alphabet_of(kind)) {}

Int WordGenerator::prefix_length(std::size_t n) const {
    Int total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += block_length(kind_, k, alphabet_.size());
    return total;
}

Int WordGenerator::letter(std::size_t i) const {
    Int target(i);
    Int before = 0;  // |u_{n-1}|
    std::size_t n = 1;
    for (;; ++n) {
        Int len = block_length(kind_, n, alphabet_.size());
        if (target < before + len) break;
        before += len;
    }
    Int offset = target - before;  // position inside v_n

    if (kind_ == WordKind::Spiked) {
        Int copy_len = Int(n) * (n + 1);
        Int w = offset / copy_len;
        Int rem = offset % copy_len;
        std::size_t h = (rem / (n + 1)).convert_to<std::size_t>() + 1;  // spike value 1..n
        std::size_t pos = (rem % (n + 1)).convert_to<std::size_t>();
        if (pos == n) return Int(h);
        return word_letter(alphabet_, w, n, pos);
    }

    Int w = offset / n;
    std::size_t pos = (offset % n).convert_to<std::size_t>();
    return word_letter(alphabet_, w, n, pos);
}

std::vector<Int> WordGenerator::prefix(std::size_t len) const {
    std::vector<Int> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(letter(i));
    return out;
}

std::vector<Int> universal_word_14(std::size_t prefix_len) {
    return WordGenerator(WordKind::Universal14).prefix(prefix_len);
}

std::vector<Int> universal_word_45(std::size_t prefix_len) {
    return WordGenerator(WordKind::Universal45).prefix(prefix_len);
}

std::vector<Int> spiked_word(std::size_t prefix_len) {
    return WordGenerator(WordKind::Spiked).prefix(prefix_len);
}

OccurrenceReport occurrence_check(const WordGenerator& word, std::span<const Int> pattern,
                                  std::size_t scan_len, std::size_t min_count) {
    if (pattern.empty()) throw std::invalid_argument("occurrence_check: empty pattern");
    if (scan_len < pattern.size())
        throw std::invalid_argument("occurrence_check: scan_len shorter than pattern");
    OccurrenceReport report;
    report.pattern.assign(pattern.begin(), pattern.end());
    std::vector<Int> window = word.prefix(scan_len);
    for (std::size_t i = 0; i + pattern.size() <= scan_len; ++i) {
        bool match = true;
        for (std::size_t j = 0; j < pattern.size() && match; ++j)
            match = window[i + j] == pattern[j];
        if (!match) continue;
        report.positions.push_back(i);
        (i % 2 == 0 ? report.even_count : report.odd_count)++;
    }
    report.reached = report.even_count >= min_count && report.odd_count >= min_count;
    return report;
}

namespace {

struct WordSource final : DigitSource {
    WordGenerator gen;
    explicit WordSource(WordGenerator g) : gen(std::move(g)) {}
    Int digit(std::size_t i) const override {
        return i == 0 ? Int(0) : gen.letter(i - 1);
    }
};

}  // namespace

ContinuedFraction word_to_alpha(const WordGenerator& word) {
    return ContinuedFraction::stream(std::make_shared<WordSource>(word));
}

ApproxTerm approx_term_at(const ContinuedFraction& alpha, std::size_t n,
                          std::size_t tail_depth) {
    if (alpha.is_finite()) throw std::domain_error("approx_term_at: alpha must be irrational");
    ConvergentWalker walker(alpha);
    Convergent c{};
    for (std::size_t i = 0; i <= n; ++i) c = walker.next();
    Rational ratio(walker.prev_q(), c.q);
    int sgn = (n % 2 == 0) ? -1 : 1;  // (-1)^{N+1}

    if (alpha.kind() == ContinuedFraction::Kind::Periodic) {
        QuadraticSurd tail = eval_periodic(alpha.tail(n + 1));
        QuadraticSurd value = (tail + ratio).inverse();
        if (sgn < 0) value = -value;
        return {n, std::move(c), std::move(value)};
    }

    if (tail_depth < 2) tail_depth = 2;
    auto tail_cs = convergents(alpha.tail(n + 1), tail_depth);
    Rational a = tail_cs[tail_depth - 1].value(), b = tail_cs[tail_depth].value();
    Interval s{std::min(a, b) + ratio, std::max(a, b) + ratio};
    Interval value{1 / s.hi, 1 / s.lo};
    if (sgn < 0) value = {-value.hi, -value.lo};
    return {n, std::move(c), value};
}

std::vector<TargetHit> target_hit_scan(const ContinuedFraction& alpha,
                                       std::span<const Rational> targets, std::size_t depth,
                                       unsigned z_max, std::size_t tail_depth) {
    if (alpha.is_finite()) throw std::domain_error("target_hit_scan: alpha must be irrational");
    if (targets.empty()) return {};
    if (z_max < 1) throw std::invalid_argument("target_hit_scan: z_max must be >= 1");

    // fast double-precision pass: the ratio q_{N-1}/q_N obeys
    // r_N = 1/(a_N + r_{N-1}), and the tail is back-evaluated over a bounded
    // window; the winners are re-enclosed exactly afterwards
    std::vector<double> digits(depth + tail_depth + 2);
    for (std::size_t i = 0; i < digits.size(); ++i)
        digits[i] = alpha.digit(i).convert_to<double>();

    std::vector<double> goals(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t)
        goals[t] = targets[t].convert_to<double>();

    struct Best {
        double distance = std::numeric_limits<double>::infinity();
        std::size_t index = 0;
        unsigned z = 1;
    };
    std::vector<Best> best(targets.size());

    double ratio = 0.0;  // r_0 = q_{-1}/q_0
    for (std::size_t n = 0; n <= depth; ++n) {
        if (n > 0) ratio = 1.0 / (digits[n] + ratio);
        double tail = digits[n + tail_depth];
        for (std::size_t j = n + tail_depth - 1; j > n; --j) tail = digits[j] + 1.0 / tail;
        double term = 1.0 / (tail + ratio);
        if (n % 2 == 0) term = -term;
        for (unsigned z = 1; z <= z_max; ++z) {
            double scaled = term * z * z;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                double dist = std::abs(scaled - goals[t]);
                if (dist < best[t].distance) best[t] = {dist, n, z};
            }
        }
    }

    std::vector<TargetHit> out;
    out.reserve(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        TargetHit hit;
        hit.target = targets[t];
        hit.index = best[t].index;
        hit.multiplier = best[t].z;
        ApproxTerm term = approx_term_at(alpha, best[t].index, tail_depth);
        Interval box = enclosure_of(term.value);
        Rational scale(Int(best[t].z) * best[t].z);
        hit.value = {box.lo * scale, box.hi * scale};
        hit.distance = nt::abs(hit.value.midpoint() - targets[t]);
        out.push_back(std::move(hit));
    }
    return out;
}

}  // namespace nt
