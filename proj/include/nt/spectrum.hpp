#pragma once

#include "nt/contfrac.hpp"
#include "nt/matrix2.hpp"
#include "nt/rational.hpp"
#include "nt/surd.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace nt {

// q_N^2 (p_N/q_N - alpha): exact in Q(sqrt d) for quadratic alpha, a rigorous
// rational enclosure for stream alpha.
using TermValue = std::variant<QuadraticSurd, Interval>;

Interval enclosure_of(const TermValue& v, unsigned digits = 40);
double midpoint_of(const TermValue& v);

struct ApproxTerm {
    std::size_t index;      // N
    Convergent convergent;  // p_N / q_N
    TermValue value;
};

struct AccumulationReport {
    std::vector<QuadraticSurd> points;  // exact, deduplicated, sorted
    std::size_t period_length = 0;      // l of the underlying expansion
    std::size_t witness_depth = 0;      // terms checked against each point
};

struct SpectrumWitness {
    std::vector<Int> ks;
    std::vector<Int> ms;
    QuadraticSurd target;  // x with m_n^2 (k_n/m_n - alpha) -> x
};

// Cluster of stream term values taken as a finite-depth accumulation
// candidate.
struct TermCluster {
    Rational center;
    std::size_t hits;
    std::size_t first_index;
    std::size_t last_index;
};

// Terms N = 0..n_max of the Lemma tail-plus-reversal identity
//   q_N^2 (p_N/q_N - alpha) = (-1)^{N+1} (alpha_{N+1} + q_{N-1}/q_N)^{-1}.
// Stream tails are truncated at `tail_depth` digits; the alternation of
// convergents turns the truncation into a two-sided enclosure.
std::vector<ApproxTerm> approx_sequence(const ContinuedFraction& alpha, std::size_t n_max,
                                        std::size_t tail_depth = 24);

// Exact accumulation points of the convergent term sequence of a quadratic
// number (at most l points for even period length l, 2l for odd; at least one
// inside (-1/2, 1/2)).
AccumulationReport quad_accumulation_set(const QuadraticSurd& alpha);
AccumulationReport quad_accumulation_set(const ContinuedFraction& alpha);

// Markov constant: exact min |accumulation point| for quadratics.
QuadraticSurd markov_constant_exact(const QuadraticSurd& alpha);
// Liminf estimate for any irrational: minimum |term| enclosure over the tail
// half of the first `depth` terms.
Interval markov_constant_numeric(const ContinuedFraction& alpha, std::size_t depth);

// Term of the secondary convergent (a p_N + p_{N-1}) / (a q_N + q_{N-1}) for
// 1 <= a <= a_{N+1} - 1, via the closed form.  Also checked against the
// direct definition when alpha is quadratic.
TermValue secondary_convergent_term(const ContinuedFraction& alpha, std::size_t n, const Int& a,
                                    std::size_t tail_depth = 24);

// All p/q with q <= q_max and |alpha - p/q| < 1/(2 q^2).  Legendre: every one
// is a convergent; callers may assert with is_convergent.
std::vector<Convergent> legendre_filter(const QuadraticSurd& alpha, const Int& q_max);
std::vector<Convergent> legendre_filter(const ContinuedFraction& alpha, const Int& q_max);

bool is_convergent(const ContinuedFraction& alpha, const Rational& frac, std::size_t depth = 256);

// k'_n = c k_n + d m_n, m'_n = e k_n + f m_n: a witness for x in S(alpha)
// becomes a witness for det(g) x in S(g alpha).
SpectrumWitness mobius_transport_witness(const IntMatrix2& g, const SpectrumWitness& w,
                                         const QuadraticSurd& alpha);

// Witness along convergent indices of fixed parity (golden ratio: odd parity
// converges to +1/sqrt 5, even parity to -1/sqrt 5).
SpectrumWitness convergent_witness(const QuadraticSurd& alpha, int parity, std::size_t depth);

// Partial quotients of e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...].
Int euler_digit(std::size_t i);
ContinuedFraction euler_cf();

// Rigorous bracket for S_N = alpha_{N+1} + q_{N-1}/q_N.
Interval tail_sum_bracket(const ContinuedFraction& alpha, std::size_t n,
                          std::size_t tail_depth = 24);

// Groups stream term values within `radius`; only clusters with at least
// min_hits members (at increasing indices) are reported.
std::vector<TermCluster> cluster_terms(const std::vector<ApproxTerm>& terms,
                                       const Rational& radius, std::size_t min_hits = 3);

}  // namespace nt
