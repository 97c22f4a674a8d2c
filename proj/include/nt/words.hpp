#pragma once

#include "nt/contfrac.hpp"
#include "nt/rational.hpp"
#include "nt/spectrum.hpp"

#include <span>
#include <vector>

namespace nt {

// The three infinite-word constructions.  Universal14/Universal45 concatenate
// u_n = u_{n-1} v_n with v_n the lexicographic concatenation of all length-n
// words over the alphabet.  Spiked uses v_n = concat over all length-n words
// w over {1,2,3,4} of Copy(w) = (w 1)(w 2)...(w n), so the spike letters
// h = 1..n make the partial quotients unbounded.
enum class WordKind { Universal14, Universal45, Spiked };

class WordGenerator {
public:
    explicit WordGenerator(WordKind kind);

    WordKind kind() const { return kind_; }
    const std::vector<Int>& alphabet() const { return alphabet_; }

    // Random access to the 0-based i-th letter; pure, O(levels) per call.
    Int letter(std::size_t i) const;
    std::vector<Int> prefix(std::size_t len) const;

    // Length of u_n (cumulative block lengths).
    Int prefix_length(std::size_t n) const;

private:
    WordKind kind_;
    std::vector<Int> alphabet_;
};

std::vector<Int> universal_word_14(std::size_t prefix_len);
std::vector<Int> universal_word_45(std::size_t prefix_len);
std::vector<Int> spiked_word(std::size_t prefix_len);

struct OccurrenceReport {
    std::vector<Int> pattern;
    std::vector<std::size_t> positions;  // 0-based start indices of exact matches
    std::size_t even_count = 0;          // matches starting at even 0-based index
    std::size_t odd_count = 0;
    bool reached = false;                // min_count hit at both parities
};

OccurrenceReport occurrence_check(const WordGenerator& word, std::span<const Int> pattern,
                                  std::size_t scan_len, std::size_t min_count);

// [0; a_1, a_2, ...] with a_i the word's (i-1)-th letter.
ContinuedFraction word_to_alpha(const WordGenerator& word);

// Nearest scaled convergent term z^2 q_N^2 (p_N/q_N - alpha) to a target,
// over N <= depth and 1 <= z <= z_max.  The winning term is re-enclosed
// rigorously; the scan itself runs in double precision.
struct TargetHit {
    Rational target;
    std::size_t index = 0;  // convergent index N of the winner
    Int multiplier = 1;     // z: the witness pair is (z p_N, z q_N)
    Interval value;         // rigorous enclosure of z^2 t_N
    Rational distance;      // |enclosure midpoint - target|
};

std::vector<TargetHit> target_hit_scan(const ContinuedFraction& alpha,
                                       std::span<const Rational> targets, std::size_t depth,
                                       unsigned z_max = 3, std::size_t tail_depth = 48);

// Rigorous single term at index n for any infinite continued fraction
// (exact walker ratio plus a bracketed tail).
ApproxTerm approx_term_at(const ContinuedFraction& alpha, std::size_t n,
                          std::size_t tail_depth = 48);

}  // namespace nt
