#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "vdf/prototype.hpp"

namespace testsupport {

inline constexpr double kPi = 3.14159265358979323846;

/// The running design example: center 0.14, bandwidth 0.02, ripple
/// 0.002 dB, 90 dB stopband plus the 10 dB decimation margin. Designing
/// takes a noticeable fraction of a second, so it is cached per binary.
inline const vdf::PrototypeFilter& iv_prototype() {
    static const vdf::PrototypeFilter proto = [] {
        vdf::FilterSpec spec;
        spec.stopband_atten_db += vdf::overdesign_margin(spec.stopband_atten_db, 5);
        return vdf::design_bandpass(spec);
    }();
    return proto;
}

/// Same example without the decimation margin (plain 90 dB).
inline const vdf::PrototypeFilter& iv_prototype_90() {
    static const vdf::PrototypeFilter proto = [] {
        return vdf::design_bandpass(vdf::FilterSpec{});
    }();
    return proto;
}

/// Direct DFT of a real sequence at a single frequency: sum h[n] e^{-jwn}.
inline std::complex<double> dft_at(std::span<const double> h, double omega) {
    std::complex<double> acc{0.0, 0.0};
    // recurrence-free: accumulate with per-sample polar to keep error low
    for (std::size_t n = 0; n < h.size(); ++n) {
        acc += h[n] * std::polar(1.0, -omega * static_cast<double>(n));
    }
    return acc;
}

/// Plain FIR convolution, output truncated to the input length.
inline std::vector<double> direct_convolve(std::span<const double> h,
                                           std::span<const double> x) {
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t n = 0; n < x.size(); ++n) {
        const std::size_t kmax = std::min(n + 1, h.size());
        double acc = 0.0;
        for (std::size_t k = 0; k < kmax; ++k) {
            acc += h[k] * x[n - k];
        }
        y[n] = acc;
    }
    return y;
}

/// Amplitude of the component at normalized frequency f over a window.
inline double tone_amplitude(std::span<const double> x, double freq, std::size_t begin,
                             std::size_t end) {
    std::complex<double> acc{0.0, 0.0};
    const double omega = kPi * freq;
    for (std::size_t n = begin; n < end; ++n) {
        acc += x[n] * std::polar(1.0, -omega * static_cast<double>(n));
    }
    return 2.0 * std::abs(acc) / static_cast<double>(end - begin);
}

inline std::vector<double> random_samples(std::size_t n, unsigned seed,
                                          double lo = -1.0, double hi = 1.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& s : v) s = dist(rng);
    return v;
}

} // namespace testsupport
