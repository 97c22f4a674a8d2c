#pragma once

#include "nt/rational.hpp"
#include "nt/surd.hpp"

namespace nt {

// Integer 2x2 matrix acting on reals by x -> (c x + d) / (e x + f).
struct IntMatrix2 {
    Int c, d, e, f;

    IntMatrix2() : c(1), d(0), e(0), f(1) {}
    IntMatrix2(Int c_, Int d_, Int e_, Int f_)
        : c(std::move(c_)), d(std::move(d_)), e(std::move(e_)), f(std::move(f_)) {
        if (det() == 0) throw std::invalid_argument("IntMatrix2: singular matrix");
    }

    static IntMatrix2 identity() { return IntMatrix2(); }

    Int det() const { return c * f - d * e; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return IntMatrix2(c * o.c + d * o.e, c * o.d + d * o.f,
                          e * o.c + f * o.e, e * o.d + f * o.f);
    }

    // Inverse within GG; only exact for det = +-1.
    IntMatrix2 inverse() const {
        Int dt = det();
        if (dt != 1 && dt != -1)
            throw std::domain_error("IntMatrix2: inverse only defined for det = +-1");
        return IntMatrix2(dt * f, dt * -d, dt * -e, dt * c);
    }

    bool operator==(const IntMatrix2& o) const = default;
};

Rational mobius_apply(const IntMatrix2& g, const Rational& x);
QuadraticSurd mobius_apply(const IntMatrix2& g, const QuadraticSurd& x);

}  // namespace nt
