#include "nt/surd.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

namespace nt {

namespace {

bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) {
        if (root) *root = s;
        return true;
    }
    return false;
}

// Pulls square factors out of d: returns (d', f) with d = d' * f^2 and d'
// squarefree.  The squarefree part is searched for directly as the smallest
// divisor d0 with d/d0 a perfect square; any d0 of that shape is
// d' * k^2, so the first hit in ascending order is d' itself.  Radicands
// whose squarefree part exceeds the configured bound are rejected.
std::pair<Int, Int> extract_square_factors(const Int& d) {
    Int root;
    if (is_perfect_square(d, &root)) return {Int(1), root};
    for (Int d0 = 2; d0 <= QuadraticSurd::kRadicandBound && d0 <= d; ++d0) {
        if (d % d0 != 0) continue;
        if (is_perfect_square(Int(d / d0), &root)) return {d0, root};
    }
    throw std::invalid_argument("QuadraticSurd: radicand too large to canonicalize: " + d.str());
}

}  // namespace

QuadraticSurd::QuadraticSurd(Int p, Int q, Int r, Int d) {
    if (r == 0) throw std::invalid_argument("QuadraticSurd: zero denominator");
    if (q != 0) {
        if (d <= 0) throw std::invalid_argument("QuadraticSurd: radicand must be positive");
        auto [df, f] = extract_square_factors(d);
        d = df;
        q *= f;
        if (d == 1) {  // perfect-square radicand degenerates to a rational
            p += q;
            q = 0;
            d = 0;
        }
    } else {
        d = 0;
    }
    p_ = std::move(p);
    q_ = std::move(q);
    r_ = std::move(r);
    d_ = std::move(d);
    normalize();
}

QuadraticSurd::QuadraticSurd(canonical_tag, Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (q_ == 0) d_ = 0;
    normalize();
}

void QuadraticSurd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

QuadraticSurd QuadraticSurd::from_rational(const Rational& x) {
    return QuadraticSurd(canonical_tag{}, numerator(x), 0, denominator(x), 0);
}

Rational QuadraticSurd::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadraticSurd: irrational value has no rational form");
    return Rational(p_, r_);
}

QuadraticSurd QuadraticSurd::conjugate() const {
    return QuadraticSurd(canonical_tag{}, p_, -q_, r_, d_);
}

QuadraticSurd QuadraticSurd::inverse() const {
    if (is_zero()) throw std::domain_error("QuadraticSurd: division by zero");
    // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
    Int denom = p_ * p_ - q_ * q_ * d_;
    return QuadraticSurd(canonical_tag{}, r_ * p_, -r_ * q_, denom, d_);
}

QuadraticSurd QuadraticSurd::operator-() const {
    return QuadraticSurd(canonical_tag{}, -p_, -q_, r_, d_);
}

namespace {
// Common radicand for a binary operation; mixed genuine radicands are
// rejected rather than promoted to a degree-4 field.
Int common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.is_rational()) return b.d();
    if (b.is_rational()) return a.d();
    if (a.d() != b.d())
        throw std::domain_error("QuadraticSurd: mixed radicands " + a.d().str() + " and " + b.d().str());
    return a.d();
}
}  // namespace

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    Int d = common_radicand(*this, o);
    return QuadraticSurd(canonical_tag{}, p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, d);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
    return *this + (-o);
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    Int d = common_radicand(*this, o);
    return QuadraticSurd(canonical_tag{}, p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, r_ * o.r_, d);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
    return *this * o.inverse();
}

int QuadraticSurd::sign() const {
    if (q_ == 0) return p_.sign();
    if (p_ == 0) return q_.sign();
    int sp = p_.sign(), sq = q_.sign();
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against q^2 d (never equal, d squarefree > 1).
    Int lhs = p_ * p_, rhs = q_ * q_ * d_;
    return lhs > rhs ? sp : sq;
}

int QuadraticSurd::compare(const Rational& o) const {
    return (*this - from_rational(o)).sign();
}

Int QuadraticSurd::floor() const {
    if (is_rational()) return floor_div(p_, r_);
    // Bracket q sqrt(d) between consecutive integers, take the low estimate
    // and fix it up with exact comparisons (at most two steps).
    Int s = boost::multiprecision::sqrt(Int(q_ * q_ * d_));  // floor(|q| sqrt d)
    Int approx = q_ > 0 ? Int(p_ + s) : Int(p_ - s - 1);
    Int n = floor_div(approx, r_);
    while (compare(Rational(n + 1)) >= 0) ++n;
    while (compare(Rational(n)) < 0) --n;
    return n;
}

double QuadraticSurd::to_double() const {
    double v = p_.convert_to<double>() / r_.convert_to<double>();
    if (q_ != 0)
        v += q_.convert_to<double>() / r_.convert_to<double>() *
             std::sqrt(d_.convert_to<double>());
    return v;
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return to_string(as_rational());
    std::string s = "(" + p_.str();
    s += (q_ > 0 ? "+" : "-") + (q_ < 0 ? Int(-q_) : q_).str() + "*sqrt(" + d_.str() + "))";
    if (r_ != 1) s += "/" + r_.str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) {
    return os << x.str();
}

namespace {

Int pow10(unsigned digits) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    return scale;
}

std::string format_scaled(const Int& n, unsigned digits, bool trim) {
    bool neg = n < 0;
    std::string mag = (neg ? Int(-n) : n).str();
    if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
    std::string out = mag.substr(0, mag.size() - digits);
    std::string frac = mag.substr(mag.size() - digits);
    if (trim) {
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
    }
    if (!frac.empty()) out += "." + frac;
    return (neg && (out != "0")) ? "-" + out : out;
}

DecimalEnclosure decimal_impl(const QuadraticSurd& x, unsigned digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
    Int scale = pow10(digits);
    QuadraticSurd scaled = x * Rational(scale);
    Int lo = scaled.floor();
    Interval enc{Rational(lo, scale), Rational(lo + 1, scale)};
    std::string text;
    if (x.is_rational() && scale % denominator(x.as_rational()) == 0) {
        text = format_scaled(lo, digits, /*trim=*/true);
        enc = Interval{x.as_rational(), x.as_rational()};
    } else {
        // round-half-up display
        Int rounded = ((scaled * Rational(2) + Rational(1)) / Rational(2)).floor();
        text = format_scaled(rounded, digits, /*trim=*/false);
    }
    return {text, enc};
}

}  // namespace

DecimalEnclosure to_decimal(const QuadraticSurd& x, unsigned digits) {
    return decimal_impl(x, digits);
}

DecimalEnclosure to_decimal(const Rational& x, unsigned digits) {
    return decimal_impl(QuadraticSurd::from_rational(x), digits);
}

}  // namespace nt

std::size_t std::hash<nt::QuadraticSurd>::operator()(const nt::QuadraticSurd& x) const noexcept {
    auto h = [](const nt::Int& n) {
        return std::hash<std::string>{}(n.str());
    };
    std::size_t seed = h(x.p());
    auto mix = [&seed](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
    mix(h(x.q()));
    mix(h(x.r()));
    mix(h(x.d()));
    return seed;
}
