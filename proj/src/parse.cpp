#include "nt/parse.hpp"

#include "nt/spectrum.hpp"

#include <cctype>
#include <stdexcept>

namespace nt {

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*
//                         term := factor (('*'|'/') factor)*
//                         factor := '-' factor | primary
//                         primary := integer | "sqrt" '(' integer ')' | '(' expr ')'
class SurdParser {
public:
    explicit SurdParser(const std::string& text) : s_(text) {}

    QuadraticSurd run() {
        QuadraticSurd value = expr();
        skip_space();
        if (pos_ != s_.size())
            throw std::invalid_argument("parse: trailing junk in '" + s_ + "'");
        return value;
    }

private:
    QuadraticSurd expr() {
        QuadraticSurd value = term();
        while (true) {
            skip_space();
            if (eat('+'))
                value = value + term();
            else if (eat('-'))
                value = value - term();
            else
                return value;
        }
    }

    QuadraticSurd term() {
        QuadraticSurd value = factor();
        while (true) {
            skip_space();
            if (eat('*')) {
                value = value * factor();
            } else if (eat('/')) {
                QuadraticSurd rhs = factor();
                if (rhs.is_zero()) throw std::invalid_argument("parse: division by zero");
                value = value / rhs;
            } else {
                return value;
            }
        }
    }

    QuadraticSurd factor() {
        skip_space();
        if (eat('-')) return -factor();
        return primary();
    }

    QuadraticSurd primary() {
        skip_space();
        if (eat('(')) {
            QuadraticSurd value = expr();
            expect(')');
            return value;
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            skip_space();
            expect('(');
            Int d = integer();
            expect(')');
            if (d < 0) throw std::invalid_argument("parse: sqrt of a negative number");
            return QuadraticSurd::sqrt_of(d);
        }
        return QuadraticSurd::from_int(integer());
    }

    Int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start)
            throw std::invalid_argument("parse: expected a number in '" + s_ + "'");
        return Int(s_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_space();
        if (!eat(c))
            throw std::invalid_argument(std::string("parse: expected '") + c + "' in '" + s_ +
                                        "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string trimmed(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return {};
    std::size_t b = text.find_last_not_of(" \t\n\r");
    return text.substr(a, b - a + 1);
}

}  // namespace

QuadraticSurd parse_surd_expression(const std::string& text) {
    return SurdParser(text).run();
}

ParsedNumber parse_number(const std::string& text) {
    std::string t = trimmed(text);
    if (t.empty()) throw std::invalid_argument("parse: empty number literal");
    if (t == "e") return euler_cf();
    if (t == "phi") return QuadraticSurd(1, 1, 2, 5);
    if (t.front() == '[') return ContinuedFraction::parse(t);
    return parse_surd_expression(t);
}

}  // namespace nt
