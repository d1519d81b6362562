#pragma once
// fs/4 digital upconverter. With the carrier at a quarter of the sample
// rate, cos and sin take only the values {1, 0, -1}, so the mixer reduces
// to a 4:1 multiplexer and a two's complementer: the output cycles through
// +I, +Q, -I, -Q.

#include <cstdint>

#include "pbm/qfixed.hpp"

namespace pbm {

inline std::int16_t upconvert_fs4(std::int16_t i, std::int16_t q, int phase_index) {
    switch (phase_index & 3) {
        case 0: return i;
        case 1: return q;
        case 2: return negate16(i);
        default: return negate16(q);
    }
}

} // namespace pbm
