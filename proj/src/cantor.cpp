#include "nt/cantor.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nt {

namespace {

using Dec50 = boost::multiprecision::cpp_dec_float_50;

Dec50 to_dec50(const QuadraticSurd& x) {
    auto enc = to_decimal(x, 50);
    Rational mid = enc.interval.midpoint();
    return Dec50(numerator(mid).str()) / Dec50(denominator(mid).str());
}

constexpr std::size_t kMaxCylinders = 1u << 20;

}  // namespace

CantorSpec::CantorSpec(std::vector<Int> letters) : alphabet(std::move(letters)) {
    if (alphabet.empty()) throw std::invalid_argument("CantorSpec: empty alphabet");
    for (const Int& a : alphabet)
        if (a < 1) throw std::invalid_argument("CantorSpec: letters must be >= 1");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
}

CantorExtrema cantor_extrema(const CantorSpec& spec) {
    const Int& lo = spec.min_letter();
    const Int& hi = spec.max_letter();
    CantorExtrema out{
        QuadraticSurd(), QuadraticSurd(),
        ContinuedFraction::periodic({Int(0)}, hi == lo ? std::vector<Int>{lo}
                                                       : std::vector<Int>{hi, lo}),
        ContinuedFraction::periodic({Int(0)}, hi == lo ? std::vector<Int>{lo}
                                                       : std::vector<Int>{lo, hi})};
    // the periodic fixed-point equation is solved exactly by eval_periodic
    out.min = eval_periodic(out.min_cf);
    out.max = eval_periodic(out.max_cf);
    return out;
}

SumsetInterval sumset_interval(const CantorSpec& spec) {
    CantorExtrema ext = cantor_extrema(spec);
    bool hall = spec.alphabet == std::vector<Int>{Int(1), Int(2), Int(3), Int(4)};
    return {ext.min + ext.min, ext.max + ext.max, hall};
}

CoverEstimate ifs_cover(const CantorSpec& spec, std::size_t n) {
    if (n < 1) throw std::invalid_argument("ifs_cover: depth must be >= 1");
    double count_estimate = std::pow(static_cast<double>(spec.alphabet.size()),
                                     static_cast<double>(n));
    if (count_estimate > static_cast<double>(kMaxCylinders))
        throw std::length_error("ifs_cover: cylinder count exceeds the memory budget");

    CantorExtrema ext = cantor_extrema(spec);
    CoverEstimate est;
    est.depth = n;

    // L = 1/(min F + a_min)^2
    QuadraticSurd base = ext.min + Rational(spec.min_letter());
    est.contraction = (base * base).inverse();

    // f_z is decreasing, so each application swaps the endpoint order
    std::vector<CylinderInterval> current{{{}, ext.min, ext.max}};
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<CylinderInterval> next;
        next.reserve(current.size() * spec.alphabet.size());
        for (const auto& cyl : current) {
            for (const Int& z : spec.alphabet) {
                Rational zz(z);
                CylinderInterval child;
                child.digits = cyl.digits;
                child.digits.push_back(z);
                child.lo = (cyl.hi + zz).inverse();
                child.hi = (cyl.lo + zz).inverse();
                next.push_back(std::move(child));
            }
        }
        current = std::move(next);
    }

    est.interval_count = current.size();
    QuadraticSurd widest;
    for (const auto& cyl : current) {
        QuadraticSurd len = cyl.hi - cyl.lo;
        if (widest < len) widest = len;
    }
    est.max_interval_length = widest;

    // verify max length <= |I| L^n exactly
    QuadraticSurd bound = ext.max - ext.min;
    for (std::size_t i = 0; i < n; ++i) bound = bound * est.contraction;
    if (bound < widest) throw std::logic_error("ifs_cover: contraction bound violated");

    est.dimension_upper = hausdorff_bounds(spec).upper;
    est.intervals = std::move(current);
    return est;
}

HausdorffBounds hausdorff_bounds(const CantorSpec& spec) {
    CantorExtrema ext = cantor_extrema(spec);
    HausdorffBounds out;

    QuadraticSurd base = ext.min + Rational(spec.min_letter());

    // upper < 1/2 iff (a_min + min F)^2 > |A|^2, decided exactly
    Rational letters(Int(spec.alphabet.size()));
    out.upper_below_half = base.compare(letters * letters) > 0;

    Dec50 b = to_dec50(base);
    Dec50 upper = log(Dec50(spec.alphabet.size())) / log(b);
    out.upper = upper.convert_to<double>();
    out.upper_digits = upper.str(50);

    if (spec.alphabet == std::vector<Int>{Int(4), Int(5)}) {
        out.lower = 0.263;  // cited constant, not derived here
        out.lower_reported = true;
    }
    return out;
}

}  // namespace nt
