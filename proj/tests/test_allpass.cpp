#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "vdf/allpass.hpp"
#include "support.hpp"

using namespace vdf;
using testsupport::kPi;
using Catch::Matchers::WithinAbs;

namespace {

/// Impulse response of (-a + z^-1)/(1 - a z^-1) by long division of the
/// rational transfer function, independent of the streaming code.
std::vector<double> allpass_impulse_by_division(double a, std::size_t n) {
    // b = [-a, 1], denominator [1, -a]: h[k] = b[k] + a*h[k-1]
    std::vector<double> h(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double v = 0.0;
        if (k == 0) v = -a;
        if (k == 1) v = 1.0;
        if (k > 0) v += a * h[k - 1];
        h[k] = v;
    }
    return h;
}

} // namespace

TEST_CASE("warping coefficient validation") {
    CHECK_NOTHROW(WarpingCoefficient(0.0));
    CHECK_NOTHROW(WarpingCoefficient(0.9999));
    CHECK_NOTHROW(WarpingCoefficient(-0.9999));
    CHECK_THROWS_AS(WarpingCoefficient(1.0), std::domain_error);
    CHECK_THROWS_AS(WarpingCoefficient(-1.0), std::domain_error);
    CHECK_THROWS_AS(WarpingCoefficient(1.5), std::domain_error);
    CHECK_THROWS_AS(WarpingCoefficient(std::nan("")), std::domain_error);
}

TEST_CASE("allpass response known values") {
    // DC: (-a + 1)/(1 - a) = 1 for any valid a
    const auto r0 = allpass_response(WarpingCoefficient(0.5), 0.0);
    CHECK_THAT(r0.real(), WithinAbs(1.0, 1e-15));
    CHECK_THAT(r0.imag(), WithinAbs(0.0, 1e-15));

    // a = 0 degenerates to a unit delay
    const double w0 = 0.37 * kPi;
    const auto rd = allpass_response(WarpingCoefficient(0.0), w0);
    CHECK_THAT(rd.real(), WithinAbs(std::cos(w0), 1e-15));
    CHECK_THAT(rd.imag(), WithinAbs(-std::sin(w0), 1e-15));

    // a = 0.5 at quarter band: hand-reduced value -0.8 - 0.6j
    const auto rq = allpass_response(WarpingCoefficient(0.5), kPi / 2.0);
    CHECK_THAT(std::abs(rq), WithinAbs(1.0, 1e-15));
    CHECK_THAT(rq.real(), WithinAbs(-0.8, 1e-15));
    CHECK_THAT(rq.imag(), WithinAbs(-0.6, 1e-15));
    CHECK_THAT(std::arg(rq), WithinAbs(-kPi / 2.0 - 2.0 * std::atan(0.5), 1e-12));
}

TEST_CASE("allpass phase formula") {
    for (double a : {-0.9, -0.4, 0.0, 0.3, 0.8}) {
        CAPTURE(a);
        CHECK_THAT(allpass_phase(WarpingCoefficient(a), 0.0), WithinAbs(0.0, 1e-15));
        CHECK_THAT(allpass_phase(WarpingCoefficient(a), kPi), WithinAbs(-kPi, 1e-12));
    }
    // unit delay phase
    CHECK_THAT(allpass_phase(WarpingCoefficient(0.0), 0.3 * kPi), WithinAbs(-0.3 * kPi, 1e-15));
}

TEST_CASE("phase of the tuned coefficient maps the band center") {
    // alpha moving center 0.14 -> 0.31 at M=1, computed from the closed
    // form used by the tuner; substituting back into the phase formula
    // must return the prototype center.
    const double w_c0 = 0.14 * kPi;
    const double w_ca = 0.31 * kPi;
    const double x = (w_c0 - w_ca) / 2.0;
    const double a = std::tan(x) / (std::sin(w_ca) + std::tan(x) * std::cos(w_ca));
    CHECK_THAT(a, WithinAbs(-0.4064, 2e-4));
    CHECK_THAT(allpass_phase(WarpingCoefficient(a), w_ca), WithinAbs(-0.14 * kPi, 1e-6));
}

TEST_CASE("phase delay values and DC limit") {
    for (double w : {0.1, 0.5, 1.0, kPi}) {
        CHECK_THAT(allpass_phase_delay(WarpingCoefficient(0.0), w), WithinAbs(1.0, 1e-15));
    }
    CHECK_THAT(allpass_phase_delay(WarpingCoefficient(0.5), 0.0), WithinAbs(3.0, 1e-15));
    CHECK_THAT(allpass_phase_delay(WarpingCoefficient(0.5), 1e-6), WithinAbs(3.0, 1e-6));
    CHECK_THAT(allpass_phase_delay(WarpingCoefficient(0.5), kPi), WithinAbs(1.0, 1e-12));

    // continuity at DC for a range of coefficients
    for (double a : {-0.9, -0.5, -0.1, 0.2, 0.6, 0.9}) {
        CAPTURE(a);
        const double limit = (1.0 + a) / (1.0 - a);
        CHECK_THAT(allpass_phase_delay(WarpingCoefficient(a), 1e-8), WithinAbs(limit, 1e-6));
    }
}

TEST_CASE("allpass step impulse response") {
    SECTION("a = 0 is a pure unit delay") {
        AllpassState s{WarpingCoefficient(0.0)};
        CHECK(s.step(1.0) == 0.0);
        CHECK(s.step(0.0) == 1.0);
        CHECK(s.step(0.0) == 0.0);
    }

    SECTION("a = 0.5 matches the long-division expansion") {
        const double a = 0.5;
        AllpassState s{WarpingCoefficient(a)};
        const auto expected = allpass_impulse_by_division(a, 50);
        CHECK_THAT(expected[0], WithinAbs(-0.5, 1e-15));
        CHECK_THAT(expected[1], WithinAbs(0.75, 1e-15));
        CHECK_THAT(expected[2], WithinAbs(0.375, 1e-15));
        CHECK_THAT(expected[3], WithinAbs(0.1875, 1e-15));
        for (std::size_t n = 0; n < expected.size(); ++n) {
            const double y = s.step(n == 0 ? 1.0 : 0.0);
            CHECK_THAT(y, WithinAbs(expected[n], 1e-15));
            // closed form h[n] = (1-a^2) a^(n-1) for n >= 1
            if (n >= 1) {
                CHECK_THAT(y, WithinAbs((1.0 - a * a) * std::pow(a, n - 1.0), 1e-15));
            }
        }
    }

    SECTION("reset clears the delay element") {
        AllpassState s{WarpingCoefficient(0.7)};
        s.step(1.0);
        s.step(0.5);
        s.reset();
        CHECK(s.step(0.0) == 0.0);
    }
}

TEST_CASE("allpass step preserves sinusoid amplitude") {
    for (double a : {-0.6, 0.35}) {
        CAPTURE(a);
        AllpassState s{WarpingCoefficient(a)};
        const std::size_t n = 16384;
        // an integer number of cycles in the measurement window keeps the
        // rectangular-window amplitude estimate leakage-free
        const double f = 2.0 * 942.0 / (n / 2.0);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = s.step(std::sin(kPi * f * static_cast<double>(i)));
        }
        const double amp = testsupport::tone_amplitude(y, f, n / 2, n);
        CHECK_THAT(amp, WithinAbs(1.0, 1e-6));
    }
}

TEST_CASE("allpass identities on a dense grid") {
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        CAPTURE(a);
        const WarpingCoefficient alpha(a);
        double prev_phase = allpass_phase(alpha, 0.0);
        for (int i = 0; i <= 1024; ++i) {
            const double w = kPi * i / 1024.0;
            const auto r = allpass_response(alpha, w);
            REQUIRE(std::abs(std::abs(r) - 1.0) < 1e-12);
            const double ph = allpass_phase(alpha, w);
            const double diff = std::remainder(std::arg(r) - ph, 2.0 * kPi);
            REQUIRE(std::abs(diff) < 1e-9);
            if (i > 0) {
                REQUIRE(ph < prev_phase + 1e-15); // monotone decreasing
                prev_phase = ph;
            }
        }
    }
}

TEST_CASE("allpass streaming impulse response matches the analytic response") {
    const std::size_t len = 4096;
    for (double a : {-0.9, -0.4, 0.6, 0.9}) {
        CAPTURE(a);
        AllpassState s{WarpingCoefficient(a)};
        std::vector<double> h(len);
        for (std::size_t n = 0; n < len; ++n) h[n] = s.step(n == 0 ? 1.0 : 0.0);
        for (int i = 0; i <= 64; ++i) {
            const double w = kPi * i / 64.0;
            const auto analytic = allpass_response(WarpingCoefficient(a), w);
            const auto truncated = testsupport::dft_at(h, w);
            REQUIRE(std::abs(analytic - truncated) < 1e-6);
        }
    }
}
