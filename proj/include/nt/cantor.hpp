#pragma once

#include "nt/contfrac.hpp"
#include "nt/rational.hpp"
#include "nt/surd.hpp"

#include <vector>

namespace nt {

// F_0(A) = { [0, a_1, a_2, ...] : a_i in A } for a finite digit alphabet A.
struct CantorSpec {
    explicit CantorSpec(std::vector<Int> letters);  // sorted, deduplicated, all >= 1

    std::vector<Int> alphabet;

    const Int& min_letter() const { return alphabet.front(); }
    const Int& max_letter() const { return alphabet.back(); }
};

// Alternate order: the minimum starts with the largest digit, the maximum
// with the smallest, then they alternate.
struct CantorExtrema {
    QuadraticSurd min;  // [0, (a_max, a_min)^w]
    QuadraticSurd max;  // [0, (a_min, a_max)^w]
    ContinuedFraction min_cf;
    ContinuedFraction max_cf;
};

CantorExtrema cantor_extrema(const CantorSpec& spec);

// Endpoints [2 min, 2 max] of F + F.  interval_filling is asserted only for
// the alphabet {1,2,3,4} (Hall); other alphabets carry endpoints only.
struct SumsetInterval {
    QuadraticSurd lo;
    QuadraticSurd hi;
    bool interval_filling = false;
};

SumsetInterval sumset_interval(const CantorSpec& spec);

// One IFS cylinder f_{a_1} o ... o f_{a_n}(I) with f_z(x) = 1/(z + x) and
// I = [min F, max F]; endpoints are exact.
struct CylinderInterval {
    std::vector<Int> digits;
    QuadraticSurd lo;
    QuadraticSurd hi;
};

struct CoverEstimate {
    std::size_t depth = 0;
    std::size_t interval_count = 0;
    QuadraticSurd max_interval_length;
    QuadraticSurd contraction;  // L = 1/(min F + a_min)^2
    double dimension_upper = 0.0;
    std::vector<CylinderInterval> intervals;
};

// Enumerates all |A|^n cylinders; verifies max length <= |I| L^n exactly.
CoverEstimate ifs_cover(const CantorSpec& spec, std::size_t n);

struct HausdorffBounds {
    double lower = 0.0;           // cited constant (only reported for {4,5})
    bool lower_reported = false;
    double upper = 0.0;           // log |A| / log(a_min + min F)
    std::string upper_digits;     // 50-digit decimal of the upper bound
    bool upper_below_half = false;  // exact: a_min + min F > |A|^2
};

HausdorffBounds hausdorff_bounds(const CantorSpec& spec);

}  // namespace nt
