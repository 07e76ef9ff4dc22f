#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "vdf/allpass.hpp"
#include "vdf/errors.hpp"
#include "vdf/warped.hpp"

namespace vdf {

/// Complex frequency response sampled on a uniform grid of normalized
/// frequencies covering [0, 1], endpoints included (1.0 = Nyquist).
struct ResponseCurve {
    std::vector<double> freqs;
    std::vector<std::complex<double>> values;
};

/// Extracted bandpass metrics, all frequencies normalized to Nyquist.
struct BandpassMeasurement {
    double center = 0.0;
    double bandwidth_3db = 0.0;
    double passband_ripple_db = 0.0;
    double stopband_atten_db = 0.0;
    double peak_db = 0.0;
};

inline constexpr int kDefaultGrid = 8192;

/// dB floor used when a grid point lands on an exact response zero.
inline constexpr double kDbFloor = -400.0;

inline double magnitude_db(std::complex<double> v) {
    const double m = std::abs(v);
    if (m <= 0.0) return kDbFloor;
    return std::max(20.0 * std::log10(m), kDbFloor);
}

/// Evaluate the warped response of a coefficient set on a uniform grid.
/// alpha = 0 gives the plain FIR response.
inline ResponseCurve sweep(std::span<const double> coeffs, WarpingCoefficient alpha,
                           int grid_size = kDefaultGrid) {
    if (grid_size < 16) throw spec_error("sweep grid must have at least 16 points");
    ResponseCurve curve;
    curve.freqs.resize(static_cast<std::size_t>(grid_size));
    curve.values.resize(static_cast<std::size_t>(grid_size));
    const double step = 1.0 / (grid_size - 1);
    for (int i = 0; i < grid_size; ++i) {
        const double f = (i == grid_size - 1) ? 1.0 : i * step;
        curve.freqs[static_cast<std::size_t>(i)] = f;
        const double pi = 3.14159265358979323846;
        curve.values[static_cast<std::size_t>(i)] = warped_response(coeffs, alpha, pi * f);
    }
    return curve;
}

/// Locate the passband of a bandpass-shaped curve and extract its metrics.
///
/// Band edges are the outermost -3 dB crossings adjacent to the global
/// peak, linearly interpolated between grid points. Ripple is taken over
/// the central third of the -3 dB band (the roll-off toward the edges is
/// excluded). Stopband attenuation is measured outside the band edges
/// widened by `stopband_guard` on each side, which keeps the transition
/// skirts out of the stopband; callers pass 2x the transition width of
/// the filter behind the curve.
inline BandpassMeasurement measure(const ResponseCurve& curve, double stopband_guard) {
    const std::size_t n = curve.freqs.size();
    if (n < 16 || curve.values.size() != n) {
        throw not_bandpass_error("curve too short to measure");
    }

    std::vector<double> db(n);
    for (std::size_t i = 0; i < n; ++i) db[i] = magnitude_db(curve.values[i]);

    const std::size_t peak =
        static_cast<std::size_t>(std::max_element(db.begin(), db.end()) - db.begin());
    if (peak == 0 || peak == n - 1) {
        throw not_bandpass_error("response peak sits at a band edge, not a bandpass shape");
    }

    const double thr = db[peak] - 3.0;

    auto interp_edge = [&](std::size_t inside, std::size_t outside) {
        // crossing between grid points `outside` (below thr) and `inside`
        const double f0 = curve.freqs[outside];
        const double f1 = curve.freqs[inside];
        const double d0 = db[outside];
        const double d1 = db[inside];
        return f0 + (thr - d0) * (f1 - f0) / (d1 - d0);
    };

    std::size_t i = peak;
    while (i > 0 && db[i] >= thr) --i;
    if (db[i] >= thr) throw not_bandpass_error("no lower -3 dB crossing");
    const double lower = interp_edge(i + 1, i);

    i = peak;
    while (i < n - 1 && db[i] >= thr) ++i;
    if (db[i] >= thr) throw not_bandpass_error("no upper -3 dB crossing");
    const double upper = interp_edge(i - 1, i);

    BandpassMeasurement m;
    m.peak_db = db[peak];
    m.center = 0.5 * (lower + upper);
    m.bandwidth_3db = upper - lower;

    const double rip_lo = m.center - m.bandwidth_3db / 6.0;
    const double rip_hi = m.center + m.bandwidth_3db / 6.0;
    double rip_max = db[peak];
    double rip_min = db[peak];
    for (std::size_t k = 0; k < n; ++k) {
        if (curve.freqs[k] >= rip_lo && curve.freqs[k] <= rip_hi) {
            rip_max = std::max(rip_max, db[k]);
            rip_min = std::min(rip_min, db[k]);
        }
    }
    m.passband_ripple_db = rip_max - rip_min;

    const double sb_lo = lower - stopband_guard;
    const double sb_hi = upper + stopband_guard;
    double sb_max = kDbFloor;
    for (std::size_t k = 0; k < n; ++k) {
        if (curve.freqs[k] <= sb_lo || curve.freqs[k] >= sb_hi) {
            sb_max = std::max(sb_max, db[k]);
        }
    }
    m.stopband_atten_db = m.peak_db - sb_max;
    return m;
}

inline void write_curve_csv(const ResponseCurve& curve, std::ostream& os) {
    os << "freq,mag_db,phase_rad\n";
    os.precision(17);
    for (std::size_t i = 0; i < curve.freqs.size(); ++i) {
        os << curve.freqs[i] << ',' << magnitude_db(curve.values[i]) << ','
           << std::arg(curve.values[i]) << '\n';
    }
}

inline ResponseCurve read_curve_csv(std::istream& is) {
    ResponseCurve curve;
    std::string line;
    if (!std::getline(is, line) || line.rfind("freq,mag_db,phase_rad", 0) != 0) {
        throw spec_error("missing freq,mag_db,phase_rad header");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double f = 0.0, mag = 0.0, ph = 0.0;
        char c1 = 0, c2 = 0;
        if (!(row >> f >> c1 >> mag >> c2 >> ph) || c1 != ',' || c2 != ',') {
            throw spec_error("malformed curve row: " + line);
        }
        curve.freqs.push_back(f);
        curve.values.push_back(std::polar(std::pow(10.0, mag / 20.0), ph));
    }
    return curve;
}

} // namespace vdf
