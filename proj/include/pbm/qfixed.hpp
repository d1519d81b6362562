#pragma once
// Fixed-point helpers. A QFixed is an integer mantissa with a binary scale:
// value = mantissa / 2^frac_bits. Coefficients use frac_bits = 12 (x4096).

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace pbm {

// Round half away from zero (ties go outward, matching the coefficient
// quantization rule).
inline std::int64_t round_half_away(double x) {
    return static_cast<std::int64_t>(x < 0.0 ? std::ceil(x - 0.5) : std::floor(x + 0.5));
}

inline std::int64_t saturate_to_width(std::int64_t v, int width) {
    const std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
    const std::int64_t lo = -(std::int64_t{1} << (width - 1));
    return v > hi ? hi : (v < lo ? lo : v);
}

inline std::int16_t saturate16(std::int64_t v) {
    return static_cast<std::int16_t>(saturate_to_width(v, 16));
}

// Two's-complement negation saturates: -INT16_MIN has no 16-bit
// representation, so it clamps to INT16_MAX.
inline std::int16_t negate16(std::int16_t v) {
    return v == std::numeric_limits<std::int16_t>::min()
               ? std::numeric_limits<std::int16_t>::max()
               : static_cast<std::int16_t>(-v);
}

// Right shift with round-half-away-from-zero, for scaling accumulators down
// to an output width.
inline std::int64_t shift_round(std::int64_t v, int shift) {
    if (shift <= 0) return v;
    const std::int64_t half = std::int64_t{1} << (shift - 1);
    return v >= 0 ? (v + half) >> shift : -((-v + half) >> shift);
}

struct QFixed {
    std::int32_t mantissa = 0;
    std::uint8_t frac_bits = 12;
    std::uint8_t width = 16;

    double value() const { return std::ldexp(static_cast<double>(mantissa), -int(frac_bits)); }

    // Quantize a real value; |mantissa| >= 2^(width-1) is an overflow error
    // rather than a silent wrap.
    static QFixed from_real(double x, std::uint8_t frac_bits, std::uint8_t width) {
        const std::int64_t m = round_half_away(std::ldexp(x, frac_bits));
        if (std::llabs(m) >= (std::int64_t{1} << (width - 1)))
            throw std::overflow_error("QFixed overflow: mantissa does not fit declared width");
        return QFixed{static_cast<std::int32_t>(m), frac_bits, width};
    }

    bool operator==(const QFixed&) const = default;
};

} // namespace pbm
