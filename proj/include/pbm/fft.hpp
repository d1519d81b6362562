#pragma once
// Minimal iterative radix-2 FFT. The spectral reports only ever need
// power-of-two transform sizes (8192-point filter responses, periodogram
// segments), so this stays dependency-free.

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pbm {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_inplace: size must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Magnitudes of the non-negative-frequency bins (0..n/2) of a real sequence
// zero-padded to n points.
inline std::vector<double> real_spectrum_mag(const std::vector<double>& x, std::size_t n) {
    if (!is_pow2(n)) throw std::invalid_argument("real_spectrum_mag: size must be a power of two");
    if (x.size() > n) throw std::invalid_argument("real_spectrum_mag: input longer than transform");
    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < x.size(); ++i) a[i] = x[i];
    fft_inplace(a);
    std::vector<double> mag(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) mag[k] = std::abs(a[k]);
    return mag;
}

} // namespace pbm
