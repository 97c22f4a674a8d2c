#include "nt/box.hpp"

#include <algorithm>
#include <stdexcept>

namespace nt {

namespace {

bool side_positive(const BoxSide& s) {
    if (std::holds_alternative<Rational>(s)) return nt::sign(std::get<Rational>(s)) > 0;
    return std::get<QuadraticSurd>(s).sign() > 0;
}

QuadraticSurd as_surd(const BoxSide& s) {
    if (std::holds_alternative<Rational>(s))
        return QuadraticSurd::from_rational(std::get<Rational>(s));
    return std::get<QuadraticSurd>(s);
}

// k^2 / side^2 as an exact surd in the side's field.
QuadraticSurd inverse_square_times(const QuadraticSurd& side, const Int& k) {
    return (side * side).inverse() * Rational(k * k);
}

}  // namespace

std::vector<BoxEigenvalue> box_eigenvalues(const BoxSide& a, const BoxSide& b, const Int& k_max,
                                           const Int& m_max) {
    if (!side_positive(a) || !side_positive(b))
        throw std::invalid_argument("box_eigenvalues: sides must be positive");
    if (k_max < 1 || m_max < 1)
        throw std::invalid_argument("box_eigenvalues: index bounds must be >= 1");

    const bool rational = std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b);
    std::vector<BoxEigenvalue> out;
    out.reserve(Int((k_max + 1) * (m_max + 1)).convert_to<std::size_t>());

    if (rational) {
        Rational ra = std::get<Rational>(a), rb = std::get<Rational>(b);
        Rational inv_a2 = 1 / (ra * ra), inv_b2 = 1 / (rb * rb);
        Rational alpha = ra / rb;
        for (Int k = 0; k <= k_max; ++k) {
            for (Int m = 0; m <= m_max; ++m) {
                Rational coeff = Rational(k * k) * inv_a2 - Rational(m * m) * inv_b2;
                if (m != 0) {
                    // factored identity (pi^2 m^2/a^2)(k/m - alpha)(k/m + alpha)
                    Rational km(k, m);
                    Rational factored = Rational(m * m) * inv_a2 * (km - alpha) * (km + alpha);
                    if (factored != coeff)
                        throw std::logic_error("box_eigenvalues: factored identity violated");
                }
                out.push_back({k, m, coeff});
            }
        }
        return out;
    }

    QuadraticSurd sa = as_surd(a), sb = as_surd(b);
    bool same_field = sa.is_rational() || sb.is_rational() || sa.d() == sb.d();
    for (Int k = 0; k <= k_max; ++k) {
        for (Int m = 0; m <= m_max; ++m) {
            QuadraticSurd left = inverse_square_times(sa, k);
            QuadraticSurd right = inverse_square_times(sb, m);
            Interval coeff;
            if (same_field) {
                coeff = to_decimal(left - right, 40).interval;
            } else {
                Interval li = to_decimal(left, 40).interval, ri = to_decimal(right, 40).interval;
                coeff = {li.lo - ri.hi, li.hi - ri.lo};
            }
            out.push_back({k, m, coeff});
        }
    }
    return out;
}

namespace {

void push_if_in_window(std::vector<ScanHit>& hits, const Int& k, const Int& m,
                       const QuadraticSurd& alpha, const Interval& window) {
    QuadraticSurd value = (QuadraticSurd::from_rational(Rational(k, m)) - alpha) * Rational(m * m);
    if (value.compare(window.lo) >= 0 && value.compare(window.hi) <= 0)
        hits.push_back({k, m, value});
}

std::vector<ScanHit> scan_exact(const QuadraticSurd& alpha, const Interval& window,
                                const Int& m_max, bool restricted) {
    std::vector<ScanHit> hits;
    for (Int m = 1; m <= m_max; ++m) {
        if (restricted) {
            Int k0 = (alpha * Rational(m) + Rational(1, 2)).floor();
            for (Int k = k0 - 1; k <= k0 + 1; ++k) push_if_in_window(hits, k, m, alpha, window);
        } else {
            // m^2 (k/m - alpha) in [lo, hi]  <=>  k in [m alpha + lo/m, m alpha + hi/m]
            Int k_lo = (alpha * Rational(m) + window.lo / Rational(m)).floor();
            Int k_hi = (alpha * Rational(m) + window.hi / Rational(m)).floor() + 1;
            for (Int k = k_lo; k <= k_hi; ++k) push_if_in_window(hits, k, m, alpha, window);
        }
    }
    return hits;
}

std::vector<ScanHit> scan_stream(const ContinuedFraction& alpha, const Interval& window,
                                 const Int& m_max, bool restricted) {
    // deep rational bracket of alpha: value error is m^2 * width, so push the
    // width far below any window resolution
    Rational precision = Rational(1, Int(1) << 240) / Rational(Int(m_max * m_max));
    std::size_t depth = 8;
    Interval box{};
    for (;; depth *= 2) {
        if (depth > 1 << 16) throw std::runtime_error("singular_scan: stream failed to converge");
        auto cs = convergents(alpha, depth);
        Rational a = cs[depth - 1].value(), b = cs[depth].value();
        box = a < b ? Interval{a, b} : Interval{b, a};
        if (box.width() < precision) break;
    }

    std::vector<ScanHit> hits;
    Rational mid = box.midpoint();
    for (Int m = 1; m <= m_max; ++m) {
        Int k_lo, k_hi;
        if (restricted) {
            k_lo = round(mid * m) - 1;
            k_hi = k_lo + 2;
        } else {
            k_lo = floor(mid * m + window.lo / Rational(m));
            k_hi = floor(mid * m + window.hi / Rational(m)) + 1;
        }
        Rational mm(m * m);
        for (Int k = k_lo; k <= k_hi; ++k) {
            Interval value{Rational(k * m) - mm * box.hi, Rational(k * m) - mm * box.lo};
            if (value.lo >= window.lo && value.hi <= window.hi) hits.push_back({k, m, value});
        }
    }
    return hits;
}

}  // namespace

std::vector<ScanHit> singular_scan(const ScanAlpha& alpha, const Interval& window,
                                   const Int& m_max, bool restricted) {
    if (!(window.lo < window.hi)) throw std::invalid_argument("singular_scan: empty window");
    if (m_max < 1) throw std::invalid_argument("singular_scan: m_max must be >= 1");

    if (std::holds_alternative<QuadraticSurd>(alpha))
        return scan_exact(std::get<QuadraticSurd>(alpha), window, m_max, restricted);

    const ContinuedFraction& cf = std::get<ContinuedFraction>(alpha);
    if (cf.is_finite())
        return scan_exact(QuadraticSurd::from_rational(eval_finite(cf.preperiod())), window,
                          m_max, restricted);
    if (cf.kind() == ContinuedFraction::Kind::Periodic)
        return scan_exact(eval_periodic(cf), window, m_max, restricted);
    return scan_stream(cf, window, m_max, restricted);
}

PUSpectrum pu_spectrum(const QuadraticSurd& omega_x, const QuadraticSurd& omega_y,
                       const Int& n_max, const Int& m_max) {
    if (omega_x.sign() <= 0 || omega_y.sign() <= 0)
        throw std::invalid_argument("pu_spectrum: frequencies must be positive");
    if (n_max < 0 || m_max < 0)
        throw std::invalid_argument("pu_spectrum: grid bounds must be >= 0");

    PUSpectrum out;
    out.energies.reserve(Int((n_max + 1) * (m_max + 1)).convert_to<std::size_t>());
    for (Int n = 0; n <= n_max; ++n) {
        QuadraticSurd xpart = omega_x * Rational(Int(2 * n + 1), 2);
        for (Int m = 0; m <= m_max; ++m) {
            QuadraticSurd e = xpart - omega_y * Rational(Int(2 * m + 1), 2);
            out.energies.push_back({n, m, std::move(e)});
        }
    }
    std::sort(out.energies.begin(), out.energies.end(),
              [](const PUEnergy& a, const PUEnergy& b) { return a.energy < b.energy; });

    bool have_abs = false, have_gap = false;
    for (std::size_t i = 0; i < out.energies.size(); ++i) {
        const QuadraticSurd& e = out.energies[i].energy;
        if (e.is_zero()) {
            out.has_zero = true;
        } else {
            QuadraticSurd a = e.abs();
            if (!have_abs || a < out.min_abs_nonzero) {
                out.min_abs_nonzero = std::move(a);
                have_abs = true;
            }
        }
        if (i > 0) {
            QuadraticSurd gap = e - out.energies[i - 1].energy;
            if (!gap.is_zero() && (!have_gap || gap < out.min_gap)) {
                out.min_gap = std::move(gap);
                have_gap = true;
            }
        }
    }
    return out;
}

}  // namespace nt
