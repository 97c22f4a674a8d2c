#include "nt/matrix2.hpp"

namespace nt {

Rational mobius_apply(const IntMatrix2& g, const Rational& x) {
    Rational den = Rational(g.e) * x + Rational(g.f);
    if (den == 0) throw std::domain_error("mobius_apply: pole (e*x + f = 0)");
    return (Rational(g.c) * x + Rational(g.d)) / den;
}

QuadraticSurd mobius_apply(const IntMatrix2& g, const QuadraticSurd& x) {
    QuadraticSurd den = x * Rational(g.e) + Rational(g.f);
    if (den.is_zero()) throw std::domain_error("mobius_apply: pole (e*x + f = 0)");
    return (x * Rational(g.c) + Rational(g.d)) / den;
}

}  // namespace nt
