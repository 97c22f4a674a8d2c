#include "nt/rational.hpp"

#include <cctype>

namespace nt {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

Int round(const Rational& x) {
    return floor(x + Rational(1, 2));
}

int sign(const Int& x) { return x.sign(); }

int sign(const Rational& x) { return numerator(x).sign(); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw std::invalid_argument("parse_rational: bad integer '" + text + "'");
        return Rational(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("parse_rational: bad fraction '" + text + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(Int(num), d);
}

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace nt
