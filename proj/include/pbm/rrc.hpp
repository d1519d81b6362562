#pragma once
// Raised-cosine / root-raised-cosine pulse generation and the x4096
// coefficient quantization.
//
// Both time responses are expressed in u = t/Ts. The removable
// singularities (u = 0, |2*alpha*u| = 1 for RC, |4*alpha*u| = 1 for RRC)
// are evaluated by their limits. Tap grids are symmetric about the pulse
// center: u_n = (n - (taps-1)/2)/sps, and the sampled sequence is
// normalized to unit peak before quantization so the largest coefficient
// quantizes to exactly 4096.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pbm/qfixed.hpp"

namespace pbm {

enum class PulseShape { rrc, rc };

inline constexpr double kAlphaTable[4] = {0.22, 0.35, 0.5, 0.9};

inline double alpha_for_index(int flt_sel) {
    if (flt_sel < 0 || flt_sel > 3)
        throw std::invalid_argument("flt_sel out of range (expected 0..3)");
    return kAlphaTable[flt_sel];
}

namespace detail {
inline double sinc(double x) {
    if (std::fabs(x) < 1e-12) return 1.0;
    return std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
}
} // namespace detail

// h(u) = sinc(u) * cos(pi*alpha*u) / (1 - (2*alpha*u)^2); h(0) = 1 and
// h(1/(2*alpha)) = (pi/4) * sinc(1/(2*alpha)).
inline double rc_pulse(double u, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw std::invalid_argument("rc_pulse: alpha must be in (0, 1]");
    const double au = 2.0 * alpha * std::fabs(u);
    if (std::fabs(au - 1.0) < 1e-9)
        return (std::numbers::pi / 4.0) * detail::sinc(1.0 / (2.0 * alpha));
    return detail::sinc(u) * std::cos(std::numbers::pi * alpha * u) / (1.0 - au * au);
}

// Standard square-root raised-cosine response; its self-convolution sampled
// at symbol spacing reproduces the raised cosine.
inline double rrc_pulse(double u, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw std::invalid_argument("rrc_pulse: alpha must be in (0, 1]");
    const double pi = std::numbers::pi;
    const double x = std::fabs(u);
    if (x < 1e-12) return 1.0 - alpha + 4.0 * alpha / pi;
    if (std::fabs(4.0 * alpha * x - 1.0) < 1e-9) {
        return (alpha / std::sqrt(2.0)) *
               ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * alpha)) +
                (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * alpha)));
    }
    const double num = std::sin(pi * x * (1.0 - alpha)) +
                       4.0 * alpha * x * std::cos(pi * x * (1.0 + alpha));
    const double den = pi * x * (1.0 - 16.0 * alpha * alpha * x * x);
    return num / den;
}

namespace detail {

inline std::vector<double> sample_pulse(PulseShape shape, double alpha, int taps, int sps) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw std::invalid_argument("coefficient generator: alpha must be in (0, 1]");
    if (taps <= 0 || taps % 2 != 0)
        throw std::invalid_argument("coefficient generator: taps must be even and positive");
    if (sps < 1) throw std::invalid_argument("coefficient generator: sps must be >= 1");
    std::vector<double> h(taps);
    double peak = 0.0;
    for (int n = 0; n < taps; ++n) {
        const double u = (n - (taps - 1) / 2.0) / sps;
        h[n] = shape == PulseShape::rc ? rc_pulse(u, alpha) : rrc_pulse(u, alpha);
        peak = std::max(peak, std::fabs(h[n]));
    }
    for (auto& v : h) v /= peak;
    return h;
}

} // namespace detail

inline std::vector<double> gen_rc_coeffs(double alpha, int taps = 32, int sps = 4) {
    return detail::sample_pulse(PulseShape::rc, alpha, taps, sps);
}

inline std::vector<double> gen_rrc_coeffs(double alpha, int taps = 32, int sps = 4) {
    return detail::sample_pulse(PulseShape::rrc, alpha, taps, sps);
}

// mantissa = round(value * 4096), half away from zero. Width 14 holds the
// full normalized range; anything past it is an overflow error.
inline std::vector<QFixed> quantize_coeffs(const std::vector<double>& real,
                                           std::uint8_t frac_bits = 12,
                                           std::uint8_t width = 14) {
    std::vector<QFixed> q;
    q.reserve(real.size());
    for (double v : real) q.push_back(QFixed::from_real(v, frac_bits, width));
    return q;
}

} // namespace pbm
