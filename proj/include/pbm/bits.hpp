#pragma once
// Bit-stream utilities: the serial-to-parallel front end that splits the
// incoming message bits into (even, odd) = (I, Q) pairs.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace pbm {

struct BitPair {
    std::uint8_t i_bit = 0; // even-indexed input bit
    std::uint8_t q_bit = 0; // odd-indexed input bit

    bool operator==(const BitPair&) const = default;
};

enum class OddLengthPolicy { error, zero_pad };

// pair k = (bits[2k], bits[2k+1]); the first arriving bit is the I bit.
inline std::vector<BitPair> split_bits(const std::vector<std::uint8_t>& bits,
                                       OddLengthPolicy policy = OddLengthPolicy::error) {
    for (std::size_t n = 0; n < bits.size(); ++n)
        if (bits[n] > 1) throw std::invalid_argument("split_bits: input is not binary");
    std::vector<std::uint8_t> work = bits;
    if (work.size() % 2 != 0) {
        if (policy == OddLengthPolicy::error)
            throw std::invalid_argument("split_bits: odd-length input (pass zero_pad to pad)");
        work.push_back(0);
    }
    std::vector<BitPair> pairs(work.size() / 2);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        pairs[k] = BitPair{work[2 * k], work[2 * k + 1]};
    return pairs;
}

inline std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    return bits;
}

} // namespace pbm
