#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(a / b) for b != 0, rounding towards -infinity.
Int floor_div(const Int& a, const Int& b);

Int floor(const Rational& x);

// Nearest integer to x; halves round up (floor(x + 1/2)).
Int round(const Rational& x);

int sign(const Int& x);
int sign(const Rational& x);

Rational abs(const Rational& x);

// Parses "p/q" or a plain integer.  Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);

// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

}  // namespace nt
