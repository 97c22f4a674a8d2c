#pragma once

#include "nt/rational.hpp"
#include "nt/surd.hpp"

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nt {

// Index-addressable digit supplier backing a Stream continued fraction.
// Implementations must be pure: digit(i) always returns the same value.
class DigitSource {
public:
    virtual ~DigitSource() = default;
    virtual Int digit(std::size_t i) const = 0;
};

// A continued fraction [a0; a1, a2, ...] with a_i >= 1 for i >= 1.
//
// Finite fractions are kept canonical (no trailing 1 unless the whole
// fraction is [1]).  Eventually periodic fractions are kept with minimal
// period and minimal preperiod.  Stream fractions defer to a DigitSource and
// are conceptually infinite.
class ContinuedFraction {
public:
    enum class Kind { Finite, Periodic, Stream };

    static ContinuedFraction finite(std::vector<Int> digits);
    static ContinuedFraction periodic(std::vector<Int> preperiod, std::vector<Int> period);
    static ContinuedFraction stream(std::shared_ptr<const DigitSource> source,
                                    std::size_t offset = 0);
    // Stream with some leading digits overridden (used by splice).
    static ContinuedFraction stream(std::vector<Int> prefix,
                                    std::shared_ptr<const DigitSource> source,
                                    std::size_t offset);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ != Kind::Finite; }

    // Number of digits of a finite fraction.
    std::size_t length() const;
    bool has_digit(std::size_t i) const;
    Int digit(std::size_t i) const;

    const std::vector<Int>& preperiod() const { return pre_; }
    const std::vector<Int>& period() const { return period_; }

    // Stream internals (null / zero for other kinds).
    const std::shared_ptr<const DigitSource>& source() const { return source_; }
    std::size_t source_offset() const { return offset_; }

    // [a_n; a_{n+1}, ...].  Periodic inputs stay periodic with the period
    // rotated; finite inputs must be long enough.
    ContinuedFraction tail(std::size_t n) const;

    // "[a0; a1, a2]" / "[a0; a1, (b1,b2)^w]" / "[a0; a1, a2, ...]" (stream
    // prefix, not round-trippable).
    std::string str(std::size_t stream_digits = 8) const;
    static ContinuedFraction parse(const std::string& text);

    bool operator==(const ContinuedFraction& o) const {
        return kind_ == o.kind_ && pre_ == o.pre_ && period_ == o.period_ &&
               source_ == o.source_ && offset_ == o.offset_;
    }

private:
    ContinuedFraction() = default;

    Kind kind_ = Kind::Finite;
    std::vector<Int> pre_;        // Finite digits, or preperiod, or spliced stream prefix
    std::vector<Int> period_;     // Periodic only
    std::shared_ptr<const DigitSource> source_;  // Stream only
    std::size_t offset_ = 0;      // Stream only: source index of digit pre_.size()
};

struct Convergent {
    std::size_t index;  // N
    Int p;
    Int q;

    Rational value() const { return Rational(p, q); }
};

// One Gauss-map step: digit = floor(x), next = 1/(x - digit).
std::pair<Int, QuadraticSurd> gauss_step(const QuadraticSurd& x);

ContinuedFraction expand_rational(const Rational& x);

// Lagrange: the expansion of an irrational quadratic is eventually periodic.
// Cycle detection runs on canonical surd states, so the period is minimal.
ContinuedFraction expand_quadratic(const QuadraticSurd& x);

Rational eval_finite(std::span<const Int> digits);

// Exact value of a finite or eventually periodic fraction.  The periodic part
// is resolved by solving its Mobius fixed-point equation.
QuadraticSurd eval_periodic(const ContinuedFraction& cf);

// Convergents p_0/q_0 ... p_{n_max}/q_{n_max} via the standard recurrence.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t n_max);

// Incremental convergent state, checkpointable at any index.
class ConvergentWalker {
public:
    explicit ConvergentWalker(ContinuedFraction cf);

    // Convergent for the next index (starting at 0).
    Convergent next();
    std::size_t next_index() const { return index_; }
    // After next() has emitted index N: p_{N-1} and q_{N-1}.
    const Int& prev_p() const { return pm2_; }
    const Int& prev_q() const { return qm2_; }

private:
    ContinuedFraction cf_;
    std::size_t index_ = 0;
    Int pm2_ = 0, qm2_ = 1;  // p_{-2} = 0, q_{-2} = 1
    Int pm1_ = 1, qm1_ = 0;  // p_{-1} = 1, q_{-1} = 0
};

enum class AlternateOrder { Less, Greater, EqualToDepth };

// Order on continued fractions consistent with the real order; finite inputs
// behave as if followed by a virtual +infinity digit.  Streams that agree for
// `depth` digits come back EqualToDepth rather than a guess.
AlternateOrder compare_alternate(const ContinuedFraction& x, const ContinuedFraction& y,
                                 std::size_t depth);

// beta = [c_0, ..., c_N, a_{tail_from}, a_{tail_from + 1}, ...]: prefix digits
// from `prefix`, then the tail of `tail_source`.  |beta - value(prefix)| <
// 2/q_N^2 by the convergent distance bound.
ContinuedFraction splice(const ContinuedFraction& prefix, std::size_t n,
                         const ContinuedFraction& tail_source, std::size_t tail_from);

// q_{N-1}/q_N, equal to [0, a_N, a_{N-1}, ..., a_1].
Rational reversal_ratio(const ContinuedFraction& cf, std::size_t n);

}  // namespace nt
