#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "vdf/analyzer.hpp"
#include "vdf/errors.hpp"
#include "vdf/prototype.hpp"

namespace vdf {

/// Integer decimation factor M. Keeping every M-th prototype coefficient
/// stretches the frequency response by M.
class DecimationFactor {
public:
    static constexpr int kDefaultMax = 8;

    explicit DecimationFactor(int m, int m_max = kDefaultMax) : m_(m) {
        if (m < 1) throw spec_error("decimation factor must be >= 1");
        if (m > m_max) throw spec_error("decimation factor exceeds the configured maximum");
    }

    int value() const { return m_; }

private:
    int m_;
};

/// Center/bandwidth of the stretched response: both simply scale by M.
inline std::pair<double, double> predicted_stretch(double proto_center, double proto_bw,
                                                   DecimationFactor m) {
    const int mv = m.value();
    if (mv * proto_center >= 1.0) {
        throw tuning_error("stretched center frequency crosses Nyquist");
    }
    return {mv * proto_center, mv * proto_bw};
}

/// Every M-th coefficient, starting at index 0, no renormalization.
/// Output length is floor(N/M)+1. M = 1 copies the input unchanged.
inline std::vector<double> decimate_coefficients_raw(std::span<const double> coeffs, int m) {
    std::vector<double> out;
    out.reserve(coeffs.size() / static_cast<std::size_t>(m) + 1);
    for (std::size_t k = 0; k < coeffs.size(); k += static_cast<std::size_t>(m)) {
        out.push_back(coeffs[k]);
    }
    return out;
}

/// Decimate the prototype and renormalize the stretched response to a
/// 0 dB passband peak so measurements stay comparable across M. For
/// M = 1 the prototype coefficients come back unchanged (the prototype
/// is already peak-normalized at design time).
inline std::vector<double> decimate_coefficients(const PrototypeFilter& proto,
                                                 DecimationFactor m) {
    const int mv = m.value();
    const double upper =
        proto.spec.center + proto.spec.bandwidth / 2.0 + proto.spec.transition_width;
    if (mv * upper >= 1.0) {
        throw tuning_error("decimated passband would cross Nyquist");
    }
    if (mv == 1) return proto.coeffs;

    std::vector<double> d = decimate_coefficients_raw(proto.coeffs, mv);
    const ResponseCurve curve = sweep(d, WarpingCoefficient(0.0), kDefaultGrid);
    double peak = 0.0;
    for (const auto& v : curve.values) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
        for (double& c : d) c /= peak;
    }
    return d;
}

} // namespace vdf
