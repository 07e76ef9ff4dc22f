#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vdf/analyzer.hpp"
#include "vdf/cdm.hpp"
#include "vdf/errors.hpp"
#include "vdf/prototype.hpp"
#include "vdf/tuner.hpp"
#include "vdf/warped.hpp"

namespace vdf {

/// The composite variable filter: a fixed prototype, a decimation factor
/// selecting every M-th coefficient, and a warped tap chain. Center
/// frequency and bandwidth are retuned by changing (alpha, M) only; the
/// prototype coefficients are never touched.
class VariableFilter {
public:
    static VariableFilter build(PrototypeFilter proto, double target_center,
                                double target_bandwidth,
                                int m_max = DecimationFactor::kDefaultMax) {
        auto shared = std::make_shared<const PrototypeFilter>(std::move(proto));
        return VariableFilter(std::move(shared), target_center, target_bandwidth, m_max);
    }

    /// Recompute (alpha, M) for new targets. On a change of M the stage
    /// states are reset (the stage count changes); on an alpha-only change
    /// the states are preserved. If the new targets are infeasible the
    /// previous configuration stays active.
    void retune(double target_center, double target_bandwidth) {
        validate_targets(target_center, target_bandwidth);
        const DecimationFactor m = choose_m(proto_->spec.bandwidth, target_bandwidth, m_max_);
        const WarpingCoefficient alpha = alpha_for_center(proto_->spec.center, target_center, m);
        if (m.value() == config_.m) {
            engine_->set_alpha(alpha);
        } else {
            std::vector<double> coeffs = decimate_coefficients(*proto_, m);
            engine_.emplace(std::move(coeffs), alpha);
        }
        config_ = VdfConfig{alpha, m.value(), target_center, target_bandwidth};
        remeasure();
    }

    /// Stream samples through the warped structure; state persists across
    /// calls.
    std::vector<double> process(std::span<const double> samples) {
        std::vector<double> out(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            out[i] = engine_->step(samples[i]);
        }
        return out;
    }

    void reset() { engine_->reset(); }

    const PrototypeFilter& prototype() const { return *proto_; }
    std::shared_ptr<const PrototypeFilter> prototype_ptr() const { return proto_; }
    const VdfConfig& config() const { return config_; }
    const WarpedEngine& engine() const { return *engine_; }
    WarpedEngine& engine() { return *engine_; }

    /// Center/bandwidth/attenuation actually realized by the current
    /// (alpha, M), measured from the analytic response.
    const BandpassMeasurement& achieved() const { return achieved_; }

    ResponseCurve response(int grid_size = kDefaultGrid) const {
        return sweep(engine_->coeffs(), WarpingCoefficient(engine_->alpha()), grid_size);
    }

private:
    static void validate_targets(double center, double bandwidth) {
        if (!(bandwidth > 0.0) || !(center - bandwidth / 2.0 > 0.0) ||
            !(center + bandwidth / 2.0 < 1.0)) {
            throw tuning_error("target band must lie strictly inside (0, Nyquist)");
        }
    }

    VariableFilter(std::shared_ptr<const PrototypeFilter> proto, double target_center,
                   double target_bandwidth, int m_max)
        : proto_(std::move(proto)),
          m_max_(m_max),
          config_{WarpingCoefficient(0.0), 1, proto_->spec.center, proto_->spec.bandwidth} {
        validate_targets(target_center, target_bandwidth);
        const DecimationFactor m = choose_m(proto_->spec.bandwidth, target_bandwidth, m_max_);
        const WarpingCoefficient alpha = alpha_for_center(proto_->spec.center, target_center, m);
        engine_.emplace(decimate_coefficients(*proto_, m), alpha);
        config_ = VdfConfig{alpha, m.value(), target_center, target_bandwidth};
        remeasure();
    }

    void remeasure() {
        const ResponseCurve curve = response();
        // Transition skirts scale with the realized bandwidth, so widen the
        // stopband guard by the measured/nominal bandwidth ratio.
        const double base_guard = 2.0 * proto_->spec.transition_width;
        const BandpassMeasurement first = measure(curve, base_guard);
        const double scale = std::max(1.0, first.bandwidth_3db / proto_->spec.bandwidth);
        achieved_ = measure(curve, base_guard * scale);
    }

    std::shared_ptr<const PrototypeFilter> proto_;
    int m_max_;
    VdfConfig config_;
    std::optional<WarpedEngine> engine_;
    BandpassMeasurement achieved_;
};

} // namespace vdf
