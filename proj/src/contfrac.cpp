#include "nt/contfrac.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace nt {

namespace {

void check_partial_quotients(std::span<const Int> digits, std::size_t first) {
    for (std::size_t i = first; i < digits.size(); ++i)
        if (digits[i] < 1)
            throw std::invalid_argument("ContinuedFraction: partial quotient a_" +
                                        std::to_string(i) + " must be >= 1");
}

}  // namespace

ContinuedFraction ContinuedFraction::finite(std::vector<Int> digits) {
    if (digits.empty()) throw std::invalid_argument("ContinuedFraction: no digits");
    check_partial_quotients(digits, 1);
    // canonical form: [..., a, 1] == [..., a+1]
    if (digits.size() > 1 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    ContinuedFraction cf;
    cf.kind_ = Kind::Finite;
    cf.pre_ = std::move(digits);
    return cf;
}

ContinuedFraction ContinuedFraction::periodic(std::vector<Int> preperiod,
                                              std::vector<Int> period) {
    if (period.empty()) throw std::invalid_argument("ContinuedFraction: empty period");
    check_partial_quotients(preperiod, 1);
    check_partial_quotients(period, 0);
    if (preperiod.empty() && period[0] < 1)
        throw std::invalid_argument("ContinuedFraction: purely periodic a0 must be >= 1");

    // minimal period: shortest w with period = w^k
    for (std::size_t len = 1; len <= period.size() / 2; ++len) {
        if (period.size() % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < period.size() && ok; ++i)
            ok = period[i] == period[i % len];
        if (ok) {
            period.resize(len);
            break;
        }
    }
    // minimal preperiod: absorb digits the rotated period already covers
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        std::rotate(period.begin(), period.end() - 1, period.end());
        preperiod.pop_back();
    }
    ContinuedFraction cf;
    cf.kind_ = Kind::Periodic;
    cf.pre_ = std::move(preperiod);
    cf.period_ = std::move(period);
    return cf;
}

ContinuedFraction ContinuedFraction::stream(std::shared_ptr<const DigitSource> source,
                                            std::size_t offset) {
    return stream({}, std::move(source), offset);
}

ContinuedFraction ContinuedFraction::stream(std::vector<Int> prefix,
                                            std::shared_ptr<const DigitSource> source,
                                            std::size_t offset) {
    if (!source) throw std::invalid_argument("ContinuedFraction: null digit source");
    check_partial_quotients(prefix, 1);
    ContinuedFraction cf;
    cf.kind_ = Kind::Stream;
    cf.pre_ = std::move(prefix);
    cf.source_ = std::move(source);
    cf.offset_ = offset;
    return cf;
}

std::size_t ContinuedFraction::length() const {
    if (kind_ != Kind::Finite)
        throw std::domain_error("ContinuedFraction: infinite fraction has no length");
    return pre_.size();
}

bool ContinuedFraction::has_digit(std::size_t i) const {
    return kind_ != Kind::Finite || i < pre_.size();
}

Int ContinuedFraction::digit(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    switch (kind_) {
        case Kind::Finite:
            throw std::out_of_range("ContinuedFraction: digit index " + std::to_string(i) +
                                    " past end of finite fraction");
        case Kind::Periodic:
            return period_[(i - pre_.size()) % period_.size()];
        case Kind::Stream:
            return source_->digit(offset_ + (i - pre_.size()));
    }
    throw std::logic_error("unreachable");
}

ContinuedFraction ContinuedFraction::tail(std::size_t n) const {
    if (n == 0) return *this;
    switch (kind_) {
        case Kind::Finite: {
            if (n >= pre_.size())
                throw std::out_of_range("ContinuedFraction: tail index out of range");
            return finite({pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end()});
        }
        case Kind::Periodic: {
            if (n <= pre_.size())
                return periodic({pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end()},
                                period_);
            std::size_t shift = (n - pre_.size()) % period_.size();
            std::vector<Int> rotated = period_;
            std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift),
                        rotated.end());
            return periodic({}, std::move(rotated));
        }
        case Kind::Stream: {
            if (n < pre_.size())
                return stream({pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end()},
                              source_, offset_);
            return stream(source_, offset_ + (n - pre_.size()));
        }
    }
    throw std::logic_error("unreachable");
}

std::string ContinuedFraction::str(std::size_t stream_digits) const {
    std::ostringstream os;
    os << "[";
    auto join = [&os](const std::vector<Int>& v, std::size_t from) {
        for (std::size_t i = from; i < v.size(); ++i) {
            if (i > from) os << ", ";
            os << v[i];
        }
    };
    switch (kind_) {
        case Kind::Finite:
            os << pre_[0];
            if (pre_.size() > 1) {
                os << "; ";
                join(pre_, 1);
            }
            break;
        case Kind::Periodic:
            if (!pre_.empty()) {
                os << pre_[0];
                os << "; ";
                if (pre_.size() > 1) {
                    join(pre_, 1);
                    os << ", ";
                }
            }
            os << "(";
            join(period_, 0);
            os << ")^w";
            break;
        case Kind::Stream:
            os << digit(0);
            if (stream_digits > 1) os << "; ";
            for (std::size_t i = 1; i < stream_digits; ++i) {
                if (i > 1) os << ", ";
                os << digit(i);
            }
            os << ", ...";
            break;
    }
    os << "]";
    return os.str();
}

namespace {

struct Tokenizer {
    std::string s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("ContinuedFraction::parse: expected '" +
                                        std::string(1, c) + "' in '" + s + "'");
    }
    Int integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits_start)
            throw std::invalid_argument("ContinuedFraction::parse: expected integer in '" + s + "'");
        return Int(s.substr(start, i - start));
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

}  // namespace

ContinuedFraction ContinuedFraction::parse(const std::string& text) {
    Tokenizer t{text};
    t.expect('[');
    std::vector<Int> pre;
    std::vector<Int> period;
    bool saw_period = false;
    bool first = true;
    while (true) {
        if (t.eat('(')) {
            while (true) {
                period.push_back(t.integer());
                if (!t.eat(',')) break;
            }
            t.expect(')');
            t.expect('^');
            t.expect('w');
            saw_period = true;
            break;
        }
        pre.push_back(t.integer());
        if (first) {
            first = false;
            if (t.eat(';')) continue;
        }
        if (!t.eat(',')) break;
    }
    t.expect(']');
    if (!t.done())
        throw std::invalid_argument("ContinuedFraction::parse: trailing junk in '" + text + "'");
    if (saw_period) return periodic(std::move(pre), std::move(period));
    return finite(std::move(pre));
}

std::pair<Int, QuadraticSurd> gauss_step(const QuadraticSurd& x) {
    Int a = x.floor();
    QuadraticSurd frac = x - Rational(a);
    if (frac.is_zero())
        throw std::domain_error("gauss_step: orbit reached an exact integer");
    return {a, frac.inverse()};
}

ContinuedFraction expand_rational(const Rational& x) {
    std::vector<Int> digits;
    Int num = numerator(x), den = denominator(x);
    while (den != 0) {
        Int a = floor_div(num, den);
        digits.push_back(a);
        Int rem = num - a * den;
        num = den;
        den = rem;
    }
    return ContinuedFraction::finite(std::move(digits));
}

ContinuedFraction expand_quadratic(const QuadraticSurd& x) {
    if (x.is_rational())
        throw std::domain_error("expand_quadratic: input is rational");
    std::vector<Int> digits;
    std::unordered_map<QuadraticSurd, std::size_t> seen;
    QuadraticSurd state = x;
    while (true) {
        auto it = seen.find(state);
        if (it != seen.end()) {
            std::size_t start = it->second;
            std::vector<Int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
            std::vector<Int> per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
            return ContinuedFraction::periodic(std::move(pre), std::move(per));
        }
        seen.emplace(state, digits.size());
        auto [a, next] = gauss_step(state);
        digits.push_back(a);
        state = next;
    }
}

Rational eval_finite(std::span<const Int> digits) {
    if (digits.empty()) throw std::invalid_argument("eval_finite: no digits");
    check_partial_quotients(digits, 1);
    Rational v(digits.back());
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        v = Rational(digits[i]) + 1 / v;
    }
    return v;
}

namespace {

// Continuants of a digit block: (p_{n-1}, p_{n-2}, q_{n-1}, q_{n-2}).
struct Continuants {
    Int p1 = 1, p2 = 0, q1 = 0, q2 = 1;  // before any digit

    void feed(const Int& a) {
        Int p = a * p1 + p2;
        Int q = a * q1 + q2;
        p2 = std::exchange(p1, p);
        q2 = std::exchange(q1, q);
    }
};

}  // namespace

QuadraticSurd eval_periodic(const ContinuedFraction& cf) {
    if (cf.is_finite()) return QuadraticSurd::from_rational(eval_finite(cf.preperiod()));
    if (cf.kind() != ContinuedFraction::Kind::Periodic)
        throw std::domain_error("eval_periodic: stream fraction has no closed form");

    Continuants per;
    for (const Int& a : cf.period()) per.feed(a);
    // y = (p1 y + p2) / (q1 y + q2)  =>  q1 y^2 + (q2 - p1) y - p2 = 0
    Int b = per.q2 - per.p1;
    Int disc = b * b + 4 * per.q1 * per.p2;
    QuadraticSurd y(-b, 1, 2 * per.q1, disc);  // positive root: y > 1

    if (cf.preperiod().empty()) return y;
    Continuants pre;
    for (const Int& a : cf.preperiod()) pre.feed(a);
    return (y * Rational(pre.p1) + Rational(pre.p2)) / (y * Rational(pre.q1) + Rational(pre.q2));
}

ConvergentWalker::ConvergentWalker(ContinuedFraction cf) : cf_(std::move(cf)) {}

Convergent ConvergentWalker::next() {
    Int a = cf_.digit(index_);
    Int p = a * pm1_ + pm2_;
    Int q = a * qm1_ + qm2_;
    pm2_ = std::exchange(pm1_, p);
    qm2_ = std::exchange(qm1_, q);
    return {index_++, pm1_, qm1_};
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t n_max) {
    std::vector<Convergent> out;
    out.reserve(n_max + 1);
    ConvergentWalker walker(cf);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(walker.next());
    return out;
}

AlternateOrder compare_alternate(const ContinuedFraction& x, const ContinuedFraction& y,
                                 std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
        bool hx = x.has_digit(i), hy = y.has_digit(i);
        if (!hx && !hy) return AlternateOrder::EqualToDepth;  // identical finite fractions
        // a missing digit acts as +infinity
        int cmp;
        if (!hx)
            cmp = 1;
        else if (!hy)
            cmp = -1;
        else {
            Int dx = x.digit(i), dy = y.digit(i);
            cmp = dx < dy ? -1 : (dx > dy ? 1 : 0);
        }
        if (cmp != 0) {
            bool x_less = (i % 2 == 0) ? cmp < 0 : cmp > 0;
            return x_less ? AlternateOrder::Less : AlternateOrder::Greater;
        }
    }
    return AlternateOrder::EqualToDepth;
}

ContinuedFraction splice(const ContinuedFraction& prefix, std::size_t n,
                         const ContinuedFraction& tail_source, std::size_t tail_from) {
    std::vector<Int> head;
    head.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) head.push_back(prefix.digit(i));
    if (tail_from == 0 && tail_source.digit(0) < 1)
        throw std::invalid_argument("splice: tail would insert a non-positive digit");
    ContinuedFraction tail = tail_source.tail(tail_from);
    switch (tail.kind()) {
        case ContinuedFraction::Kind::Finite: {
            std::vector<Int> all = std::move(head);
            all.insert(all.end(), tail.preperiod().begin(), tail.preperiod().end());
            return ContinuedFraction::finite(std::move(all));
        }
        case ContinuedFraction::Kind::Periodic: {
            std::vector<Int> pre = std::move(head);
            pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
            return ContinuedFraction::periodic(std::move(pre), tail.period());
        }
        case ContinuedFraction::Kind::Stream: {
            std::vector<Int> pre = std::move(head);
            pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
            return ContinuedFraction::stream(std::move(pre), tail.source(), tail.source_offset());
        }
    }
    throw std::logic_error("unreachable");
}

Rational reversal_ratio(const ContinuedFraction& cf, std::size_t n) {
    if (n == 0) throw std::invalid_argument("reversal_ratio: n must be >= 1");
    ConvergentWalker walker(cf);
    Convergent c{};
    for (std::size_t i = 0; i <= n; ++i) c = walker.next();
    Rational ratio(walker.prev_q(), c.q);

    std::vector<Int> reversed;
    reversed.reserve(n + 1);
    reversed.push_back(0);
    for (std::size_t i = n; i >= 1; --i) reversed.push_back(cf.digit(i));
    if (eval_finite(reversed) != ratio)
        throw std::logic_error("reversal_ratio: mirror identity violated");
    return ratio;
}

}  // namespace nt
