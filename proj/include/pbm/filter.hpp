#pragma once
// Polyphase 1:4 interpolating pulse-shaping filter with a multiplier-less
// distributed-arithmetic evaluation path and a direct MAC reference.
//
// The filter consumes one 3-bit two's-complement level code per rail per
// symbol and emits sps = 4 output samples, one per polyphase branch; branch
// p holds quantized coefficients p, p+4, ..., p+28. Each branch has a
// 256-entry table of coefficient subset sums; an address is formed by
// taking bit b of all 8 window words, and the word is reassembled as
//   acc = lut[a0] + 2*lut[a1] - 4*lut[a2]
// (sign plane subtracted). This equals the direct inner product exactly.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pbm/qfixed.hpp"
#include "pbm/rrc.hpp"

namespace pbm {

inline constexpr int kTaps = 32;
inline constexpr int kSps = 4;
inline constexpr int kWindowLen = kTaps / kSps; // current symbol + 7 prior
inline constexpr int kCodeBits = 3;

// Shift register of the 8 most recent level codes; codes[0] is the current
// symbol, codes[7] the oldest.
struct SymbolWindow {
    std::array<std::int8_t, kWindowLen> codes{};

    void push(int code) {
        if (code < -4 || code > 3)
            throw std::invalid_argument("SymbolWindow: code outside 3-bit two's-complement range");
        for (int k = kWindowLen - 1; k > 0; --k) codes[k] = codes[k - 1];
        codes[0] = static_cast<std::int8_t>(code);
    }

    void clear() { codes.fill(0); }
};

struct FilterBank {
    double alpha = 0.0;
    PulseShape shape = PulseShape::rrc;
    std::vector<double> real_coeffs;  // unit peak
    std::vector<QFixed> q_coeffs;     // x4096
    std::array<std::array<std::int32_t, kWindowLen>, kSps> phases{};
    std::array<std::array<std::int32_t, 256>, kSps> da_luts{};
    int out_shift = 0; // applied with round-half-away before 16-bit saturation

    static FilterBank make(double alpha, PulseShape shape = PulseShape::rrc);
};

// Populate the per-branch subset-sum tables from the quantized coefficients.
// lut[p][0] = 0 and lut[p][255] = the branch DC gain.
inline FilterBank build_da_luts(FilterBank bank) {
    if (bank.q_coeffs.size() != kTaps)
        throw std::invalid_argument("build_da_luts: expected 32 quantized coefficients");
    for (int p = 0; p < kSps; ++p) {
        for (int k = 0; k < kWindowLen; ++k)
            bank.phases[p][k] = bank.q_coeffs[static_cast<std::size_t>(p + kSps * k)].mantissa;
        for (int addr = 0; addr < 256; ++addr) {
            std::int32_t sum = 0;
            for (int k = 0; k < kWindowLen; ++k)
                if (addr & (1 << k)) sum += bank.phases[p][k];
            bank.da_luts[p][addr] = sum;
        }
    }
    return bank;
}

inline FilterBank FilterBank::make(double alpha, PulseShape shape) {
    FilterBank bank;
    bank.alpha = alpha;
    bank.shape = shape;
    bank.real_coeffs = shape == PulseShape::rc ? gen_rc_coeffs(alpha, kTaps, kSps)
                                               : gen_rrc_coeffs(alpha, kTaps, kSps);
    bank.q_coeffs = quantize_coeffs(bank.real_coeffs);
    return build_da_luts(std::move(bank));
}

// DA path: per branch, three table lookups and a shift-accumulate.
inline std::array<std::int16_t, kSps> filter_da(const SymbolWindow& win, const FilterBank& bank) {
    std::array<std::uint8_t, kCodeBits> addr{};
    for (int b = 0; b < kCodeBits; ++b) {
        unsigned a = 0;
        for (int k = 0; k < kWindowLen; ++k)
            a |= ((static_cast<unsigned>(win.codes[k]) >> b) & 1u) << k;
        addr[b] = static_cast<std::uint8_t>(a);
    }
    std::array<std::int16_t, kSps> out{};
    for (int p = 0; p < kSps; ++p) {
        const auto& lut = bank.da_luts[p];
        const std::int64_t acc = std::int64_t{lut[addr[0]]} + 2 * std::int64_t{lut[addr[1]]} -
                                 4 * std::int64_t{lut[addr[2]]};
        out[p] = saturate16(shift_round(acc, bank.out_shift));
    }
    return out;
}

// MAC reference; must match filter_da bit for bit.
inline std::array<std::int16_t, kSps> filter_direct(const SymbolWindow& win,
                                                    const FilterBank& bank) {
    std::array<std::int16_t, kSps> out{};
    for (int p = 0; p < kSps; ++p) {
        std::int64_t acc = 0;
        for (int k = 0; k < kWindowLen; ++k)
            acc += std::int64_t{win.codes[k]} * bank.phases[p][k];
        out[p] = saturate16(shift_round(acc, bank.out_shift));
    }
    return out;
}

} // namespace pbm
