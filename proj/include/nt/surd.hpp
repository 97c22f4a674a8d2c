#pragma once

#include "nt/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

namespace nt {

// Exact element of Q(sqrt(d)): (p + q*sqrt(d)) / r with integer p, q and r > 0.
//
// Canonical form: gcd(p, q, r) = 1, r > 0, d squarefree.  A rational value is
// normalized to q = 0, d = 0, so equality is plain member comparison.  All
// operations are pure; values are immutable and freely shareable.
class QuadraticSurd {
public:
    // Largest radicand accepted by the canonicalizing constructor.  Square
    // factors are pulled out by trial division, which certifies
    // squarefree-ness only up to bound^2.
    static constexpr long long kRadicandBound = 1000000;

    QuadraticSurd() : p_(0), q_(0), r_(1), d_(0) {}
    QuadraticSurd(Int p, Int q, Int r, Int d);

    static QuadraticSurd from_rational(const Rational& x);
    static QuadraticSurd from_int(const Int& n) { return from_rational(Rational(n)); }
    // sqrt(d) itself.
    static QuadraticSurd sqrt_of(const Int& d) { return QuadraticSurd(0, 1, 1, d); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return q_ == 0 && p_ == 0; }
    Rational as_rational() const;

    QuadraticSurd conjugate() const;
    QuadraticSurd inverse() const;

    QuadraticSurd operator-() const;
    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator/(const QuadraticSurd& o) const;

    QuadraticSurd operator+(const Rational& o) const { return *this + from_rational(o); }
    QuadraticSurd operator-(const Rational& o) const { return *this - from_rational(o); }
    QuadraticSurd operator*(const Rational& o) const { return *this * from_rational(o); }
    QuadraticSurd operator/(const Rational& o) const { return *this / from_rational(o); }

    int sign() const;
    QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

    // Exact order; both operands must live in the same Q(sqrt(d)).
    int compare(const QuadraticSurd& o) const { return (*this - o).sign(); }
    int compare(const Rational& o) const;

    bool operator==(const QuadraticSurd& o) const {
        return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
    }
    bool operator<(const QuadraticSurd& o) const { return compare(o) < 0; }
    bool operator>(const QuadraticSurd& o) const { return compare(o) > 0; }
    bool operator<=(const QuadraticSurd& o) const { return compare(o) <= 0; }
    bool operator>=(const QuadraticSurd& o) const { return compare(o) >= 0; }

    // Exact floor, decided by integer square-root bracketing; never touches
    // floating point.
    Int floor() const;

    double to_double() const;

    // "(p+q*sqrt(d))/r"; rationals print as "p" or "p/r".
    std::string str() const;

private:
    struct canonical_tag {};
    QuadraticSurd(canonical_tag, Int p, Int q, Int r, Int d);

    void normalize();  // gcd reduction + sign of r; d assumed squarefree

    Int p_, q_, r_, d_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x);

// Decimal enclosure of width 10^-digits together with a rounded display
// string.
struct DecimalEnclosure {
    std::string text;  // rounded to `digits` places (exact rationals trimmed)
    Interval interval;
};

DecimalEnclosure to_decimal(const QuadraticSurd& x, unsigned digits);
DecimalEnclosure to_decimal(const Rational& x, unsigned digits);

}  // namespace nt

template <>
struct std::hash<nt::QuadraticSurd> {
    std::size_t operator()(const nt::QuadraticSurd& x) const noexcept;
};
