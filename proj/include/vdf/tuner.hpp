#pragma once

#include <cmath>
#include <string>

#include "vdf/allpass.hpp"
#include "vdf/cdm.hpp"
#include "vdf/errors.hpp"

namespace vdf {

/// The two runtime knobs plus the targets they were derived from.
/// Frequencies are normalized to Nyquist; internal math uses w = pi*f.
struct VdfConfig {
    WarpingCoefficient alpha;
    int m = 1;
    double target_center = 0.0;
    double target_bandwidth = 0.0;
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

/// Warped-frequency map nu(w) = -theta(w); strictly increasing from 0
/// to pi on [0, pi] for any |alpha| < 1.
inline double warp_map(double alpha, double omega) {
    return omega + 2.0 * std::atan2(alpha * std::sin(omega), 1.0 - alpha * std::cos(omega));
}

} // namespace detail

/// Warping coefficient that moves the decimated center M*f_c0 to the
/// target f_ca:
///   x = (M*w_c0 - w_ca)/2,  alpha = tan x / (sin w_ca + tan x * cos w_ca)
/// The result satisfies M*w_c0 = w_ca + 2 atan(alpha sin w_ca / (1 - alpha cos w_ca))
/// exactly.
inline WarpingCoefficient alpha_for_center(double proto_center, double target_center,
                                           DecimationFactor m) {
    if (!(proto_center > 0.0 && proto_center < 1.0)) {
        throw tuning_error("prototype center must be in (0,1)");
    }
    if (!(target_center > 0.0 && target_center < 1.0)) {
        throw tuning_error("target center must be in (0,1)");
    }
    const int mv = m.value();
    if (mv * proto_center >= 1.0) {
        throw tuning_error("decimated center crosses Nyquist");
    }
    const double w_c0 = detail::kPi * proto_center;
    const double w_ca = detail::kPi * target_center;
    const double x = (mv * w_c0 - w_ca) / 2.0;
    if (std::abs(std::abs(x) - detail::kPi / 2.0) < 1e-12) {
        throw tuning_error("tuning equation hits the tangent singularity");
    }
    const double t = std::tan(x);
    const double alpha = t / (std::sin(w_ca) + t * std::cos(w_ca));
    if (!std::isfinite(alpha) || std::abs(alpha) > WarpingCoefficient::kGuard) {
        throw tuning_error("target center " + std::to_string(target_center) +
                           " needs |alpha| >= 1 at M=" + std::to_string(mv));
    }
    return WarpingCoefficient(alpha);
}

/// Forward map: center frequency realized by (alpha, M) on a prototype
/// centered at f_c0. Solves nu(w) = M*w_c0 by bisection; the left side is
/// strictly increasing on (0, pi).
inline double center_after_tuning(double proto_center, WarpingCoefficient alpha,
                                  DecimationFactor m) {
    const double target = m.value() * detail::kPi * proto_center;
    if (!(target > 0.0 && target < detail::kPi)) {
        throw tuning_error("decimated center has no solution inside (0, Nyquist)");
    }
    const double a = alpha.value();
    double lo = 0.0, hi = detail::kPi;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (detail::warp_map(a, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi) / detail::kPi;
}

/// Nearest integer stretch factor for a bandwidth target, ties rounded
/// half to even, clamped to [1, m_max].
inline DecimationFactor choose_m(double proto_bw, double target_bw, int m_max) {
    if (!(proto_bw > 0.0)) throw spec_error("prototype bandwidth must be positive");
    const double ratio = target_bw / proto_bw;
    double k = std::floor(ratio);
    const double frac = ratio - k;
    if (frac > 0.5) {
        k += 1.0;
    } else if (frac == 0.5 && std::fmod(k, 2.0) != 0.0) {
        k += 1.0;
    }
    int m = static_cast<int>(k);
    m = std::max(1, std::min(m, m_max));
    return DecimationFactor(m, m_max);
}

} // namespace vdf
