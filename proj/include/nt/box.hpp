#pragma once

#include "nt/contfrac.hpp"
#include "nt/rational.hpp"
#include "nt/spectrum.hpp"
#include "nt/surd.hpp"

#include <variant>
#include <vector>

namespace nt {

// Rectangular-well eigenvalue lambda_{k,m} = pi^2 (k^2/a^2 - m^2/b^2); pi^2
// is kept symbolic, only its coefficient is stored.  Rational sides give an
// exact rational coefficient, surd sides a rigorous enclosure.
struct BoxEigenvalue {
    Int k;
    Int m;
    std::variant<Rational, Interval> coefficient;
};

// Side lengths: exact rationals or quadratic surds.
using BoxSide = std::variant<Rational, QuadraticSurd>;

// All lambda_{k,m} for 0 <= k <= k_max, 0 <= m <= m_max (lambda is even in
// both indices).  For rational sides the factored identity
// lambda = (pi^2 m^2/a^2)(k/m - a/b)(k/m + a/b) is asserted exactly.
std::vector<BoxEigenvalue> box_eigenvalues(const BoxSide& a, const BoxSide& b, const Int& k_max,
                                           const Int& m_max);

// One value m^2 (k/m - alpha) from the brute-force scanner.
struct ScanHit {
    Int k;
    Int m;
    TermValue value;
};

// Target number for scans: exact surd/rational or a digit stream.
using ScanAlpha = std::variant<QuadraticSurd, ContinuedFraction>;

// Brute force over 1 <= m <= m_max.  Restricted mode tries only
// k = round(m alpha) + {-1, 0, 1} (complete for every value in (-1, 1));
// unrestricted mode derives the exact k-range from the window.
std::vector<ScanHit> singular_scan(const ScanAlpha& alpha, const Interval& window,
                                   const Int& m_max, bool restricted = true);

struct PUEnergy {
    Int n;
    Int m;
    QuadraticSurd energy;  // (n + 1/2) Omega_x - (m + 1/2) Omega_y
};

struct PUSpectrum {
    std::vector<PUEnergy> energies;  // sorted ascending by exact comparison
    QuadraticSurd min_abs_nonzero;
    QuadraticSurd min_gap;
    bool has_zero = false;
};

// Pais-Uhlenbeck grid 0 <= n <= n_max, 0 <= m <= m_max with density
// diagnostics.  Frequencies must live in one quadratic field.
PUSpectrum pu_spectrum(const QuadraticSurd& omega_x, const QuadraticSurd& omega_y,
                       const Int& n_max, const Int& m_max);

}  // namespace nt
