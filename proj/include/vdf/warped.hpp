#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vdf/allpass.hpp"

namespace vdf {

/// Response of the warped FIR structure: every unit delay of the tap
/// chain is replaced by A(z), so the transfer function is
/// sum_k h[k] * A(z)^k. Evaluated by Horner's scheme on A(e^{jw}).
inline std::complex<double> warped_response(std::span<const double> coeffs,
                                            WarpingCoefficient alpha, double omega) {
    if (coeffs.empty()) return {0.0, 0.0};
    const std::complex<double> a = allpass_response(alpha, omega);
    std::complex<double> acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = acc * a + coeffs[k];
    }
    return acc;
}

/// Streaming warped filter in transposed direct form. Each inter-tap
/// delay is one single-multiplier allpass section; the sections feed
/// forward through the accumulator chain, so there is no delay-free loop.
class WarpedEngine {
public:
    WarpedEngine(std::vector<double> coeffs, WarpingCoefficient alpha)
        : coeffs_(std::move(coeffs)), alpha_(alpha.value()) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("warped engine needs at least one coefficient");
        }
        states_.assign(coeffs_.size() - 1, 0.0);
    }

    const std::vector<double>& coeffs() const { return coeffs_; }
    double alpha() const { return alpha_; }
    std::size_t stage_count() const { return states_.size(); }

    void reset() { states_.assign(states_.size(), 0.0); }

    /// Keep the per-stage allpass states but change the warping
    /// coefficient. Stage count is unchanged.
    void set_alpha(WarpingCoefficient alpha) { alpha_ = alpha.value(); }

    double step(double x) {
        const double a = alpha_;
        double acc = coeffs_.back() * x;
        for (std::size_t k = states_.size(); k-- > 0;) {
            // acc passes through allpass stage k, then picks up tap k
            const double y = -a * acc + states_[k];
            states_[k] = acc + a * y;
            acc = coeffs_[k] * x + y;
        }
        return acc;
    }

    std::vector<double> impulse_response(std::size_t n) {
        reset();
        std::vector<double> h(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = step(i == 0 ? 1.0 : 0.0);
        }
        reset();
        return h;
    }

    std::complex<double> response(double omega) const {
        return warped_response(coeffs_, WarpingCoefficient(alpha_), omega);
    }

private:
    std::vector<double> coeffs_;
    double alpha_;
    std::vector<double> states_; // one allpass delay element per stage
};

} // namespace vdf
