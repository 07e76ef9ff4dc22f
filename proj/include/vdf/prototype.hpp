#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "vdf/analyzer.hpp"
#include "vdf/errors.hpp"

namespace vdf {

/// Bandpass design target. All frequencies are normalized so that 1.0
/// equals half the sampling frequency.
struct FilterSpec {
    double center = 0.14;
    double bandwidth = 0.02;
    double passband_ripple_db = 0.002;
    double stopband_atten_db = 90.0;
    double transition_width = 0.01;

    void validate() const {
        if (!(center > 0.0 && center < 1.0)) throw spec_error("center must be in (0,1)");
        if (!(bandwidth > 0.0)) throw spec_error("bandwidth must be positive");
        if (!(passband_ripple_db > 0.0)) throw spec_error("passband ripple must be positive");
        if (!(stopband_atten_db > 0.0)) throw spec_error("stopband attenuation must be positive");
        if (!(transition_width > 0.0)) throw spec_error("transition width must be positive");
        if (!(center - bandwidth / 2.0 - transition_width > 0.0)) {
            throw spec_error("lower band edge plus transition reaches below DC");
        }
        if (!(center + bandwidth / 2.0 + transition_width < 1.0)) {
            throw spec_error("upper band edge plus transition reaches past Nyquist");
        }
    }
};

/// Fixed-coefficient linear-phase FIR bandpass. The coefficient vector is
/// designed once and never modified while tuning.
struct PrototypeFilter {
    std::vector<double> coeffs;
    FilterSpec spec;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

inline double bessel_i0(double x) {
    // power series; converges fast for the beta range used here
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double t = x / (2.0 * k);
        term *= t * t;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

inline double kaiser_beta(double atten_db) {
    if (atten_db > 50.0) return 0.1102 * (atten_db - 8.7);
    if (atten_db >= 21.0) {
        return 0.5842 * std::pow(atten_db - 21.0, 0.4) + 0.07886 * (atten_db - 21.0);
    }
    return 0.0;
}

/// Kaiser-windowed difference-of-sincs bandpass, even order (type-I
/// linear phase). Built half+mirror so the symmetry h[k] = h[N-k] is
/// exact in floating point.
inline std::vector<double> kaiser_bandpass(int order, double beta, double f_lo, double f_hi) {
    const double pi = 3.14159265358979323846;
    const int n = order + 1;
    std::vector<double> h(static_cast<std::size_t>(n));
    const double i0b = bessel_i0(beta);
    const int mid = order / 2;
    for (int k = mid; k >= 0; --k) {
        const double d = k - order / 2.0;
        double ideal;
        if (d == 0.0) {
            ideal = f_hi - f_lo;
        } else {
            ideal = (std::sin(pi * f_hi * d) - std::sin(pi * f_lo * d)) / (pi * d);
        }
        const double r = 2.0 * d / order;
        const double win = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0b;
        h[static_cast<std::size_t>(k)] = ideal * win;
        h[static_cast<std::size_t>(order - k)] = ideal * win;
    }
    return h;
}

} // namespace detail

/// Extra stopband attenuation to design into the prototype so that the
/// response still meets the nominal spec after coefficient decimation.
/// 10 dB covers the worst measured deterioration for M up to 5.
inline double overdesign_margin(double /*desired_atten_db*/, int max_m) {
    if (max_m < 1) throw spec_error("max decimation factor must be >= 1");
    return max_m <= 1 ? 0.0 : 10.0;
}

inline constexpr int kDesignVerifyGrid = 16384;

/// Design a linear-phase FIR bandpass meeting `spec` as measured by the
/// analyzer. Order starts from the Kaiser length estimate and grows until
/// the measured response passes; the ideal-bandpass cutoffs are calibrated
/// so the measured -3 dB bandwidth lands on spec.bandwidth.
inline PrototypeFilter design_bandpass(const FilterSpec& spec, int max_order = 4096) {
    spec.validate();

    const double delta_s = std::pow(10.0, -spec.stopband_atten_db / 20.0);
    const double rip = std::pow(10.0, spec.passband_ripple_db / 20.0);
    const double delta_p = (rip - 1.0) / (rip + 1.0);
    const double atten = -20.0 * std::log10(std::min(delta_s, delta_p));
    const double beta = detail::kaiser_beta(atten);

    int order = static_cast<int>(std::ceil((atten - 7.95) / (14.36 * spec.transition_width)));
    order = std::max(order + (order % 2), 4);

    for (int attempt = 0; attempt < 12; ++attempt) {
        if (order > max_order) {
            throw spec_error("bandpass spec infeasible within the order cap");
        }
        double offset = 0.0;
        std::vector<double> h;
        BandpassMeasurement meas;
        bool measured = false;
        for (int pass = 0; pass < 4; ++pass) {
            const double lo = spec.center - spec.bandwidth / 2.0 - offset;
            const double hi = spec.center + spec.bandwidth / 2.0 + offset;
            if (lo <= 0.0 || hi >= 1.0) break;
            h = detail::kaiser_bandpass(order, beta, lo, hi);
            ResponseCurve curve = sweep(h, WarpingCoefficient(0.0), kDesignVerifyGrid);
            double peak = 0.0;
            for (const auto& v : curve.values) peak = std::max(peak, std::abs(v));
            if (peak > 0.0) {
                for (double& c : h) c /= peak;
                for (auto& v : curve.values) v /= peak;
            }
            try {
                meas = measure(curve, 2.0 * spec.transition_width);
            } catch (const not_bandpass_error&) {
                measured = false; // order too low for a measurable passband
                break;
            }
            measured = true;
            if (std::abs(meas.bandwidth_3db - spec.bandwidth) < 1e-5) break;
            offset += (spec.bandwidth - meas.bandwidth_3db) / 2.0;
        }
        const bool ok = measured && meas.passband_ripple_db <= spec.passband_ripple_db &&
                        meas.stopband_atten_db >= spec.stopband_atten_db &&
                        std::abs(meas.bandwidth_3db - spec.bandwidth) <= 0.10 * spec.bandwidth &&
                        std::abs(meas.center - spec.center) <= 0.002;
        if (ok) {
            return PrototypeFilter{std::move(h), spec};
        }
        order = static_cast<int>(std::ceil(order * 1.15));
        order += order % 2;
    }
    throw spec_error("bandpass design did not converge to the requested spec");
}

} // namespace vdf
