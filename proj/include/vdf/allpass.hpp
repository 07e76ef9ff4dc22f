#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace vdf {

/// Warping coefficient of the first-order allpass section
/// A(z) = (-alpha + z^-1) / (1 - alpha z^-1).
///
/// Stability requires |alpha| < 1; a guard band of 0.9999 keeps the
/// IIR tail short enough for truncation-based analysis.
class WarpingCoefficient {
public:
    static constexpr double kGuard = 0.9999;

    explicit WarpingCoefficient(double alpha) : alpha_(alpha) {
        if (!std::isfinite(alpha) || std::abs(alpha) > kGuard) {
            throw std::domain_error("warping coefficient must satisfy |alpha| <= 0.9999");
        }
    }

    double value() const { return alpha_; }

private:
    double alpha_;
};

/// Frequency response A(e^{jw}) of the allpass section. Unit magnitude
/// at every frequency.
inline std::complex<double> allpass_response(WarpingCoefficient alpha, double omega) {
    const double a = alpha.value();
    const std::complex<double> ejw = std::polar(1.0, -omega);
    return (-a + ejw) / (1.0 - a * ejw);
}

/// Phase theta(w) = -w - 2 atan(a sin w / (1 - a cos w)).
/// Monotone decreasing from 0 at DC to -pi at Nyquist.
inline double allpass_phase(WarpingCoefficient alpha, double omega) {
    const double a = alpha.value();
    return -omega - 2.0 * std::atan2(a * std::sin(omega), 1.0 - a * std::cos(omega));
}

/// Phase delay tau_p(w) = -theta(w)/w. At w = 0 the 0/0 form is replaced
/// by its analytic limit (1+a)/(1-a) so the tuning map stays continuous
/// at DC.
inline double allpass_phase_delay(WarpingCoefficient alpha, double omega) {
    const double a = alpha.value();
    if (omega == 0.0) {
        return (1.0 + a) / (1.0 - a);
    }
    return 1.0 + (2.0 / omega) * std::atan2(a * std::sin(omega), 1.0 - a * std::cos(omega));
}

/// Single-multiplier realization of A(z): one coefficient, one delay
/// element. Canonical recurrence:
///   y[n]   = -a*x[n] + w[n]
///   w[n+1] =  x[n] + a*y[n]
struct AllpassState {
    explicit AllpassState(WarpingCoefficient alpha) : alpha(alpha) {}

    WarpingCoefficient alpha;
    double w = 0.0;

    double step(double x) {
        const double a = alpha.value();
        const double y = -a * x + w;
        w = x + a * y;
        return y;
    }

    void reset() { w = 0.0; }
};

} // namespace vdf
