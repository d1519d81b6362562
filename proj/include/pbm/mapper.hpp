#pragma once
// Symbol mappers for QPSK and its three variants.
//
// Constellation phases are tracked as integer multiples of pi/4 ("octants"
// 0..7) so every emitted point is an exact member of the 5-level amplitude
// set {-1, -sqrt2/2, 0, +sqrt2/2, +1}. Differential encoding is phase
// accumulation: theta(n) = theta(n-1) + dtheta(pair), with dtheta from the
// per-scheme phase-shift table.

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbm/bits.hpp"

namespace pbm {

// Selector values double as the MOD_SEL codes.
enum class Scheme : std::uint8_t { qpsk = 0, pi4dqpsk = 1, dqpsk = 2, oqpsk = 3 };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::qpsk: return "qpsk";
        case Scheme::pi4dqpsk: return "pi4dqpsk";
        case Scheme::dqpsk: return "dqpsk";
        case Scheme::oqpsk: return "oqpsk";
    }
    return "?";
}

// Exact amplitude of one rail.
enum class Level : std::int8_t {
    neg_one = -2,
    neg_rt2 = -1, // -sqrt(2)/2
    zero = 0,
    pos_rt2 = 1,  // +sqrt(2)/2
    pos_one = 2,
};

inline constexpr double kHalfSqrt2 = 0.70710678118654752440;

inline double level_value(Level l) {
    switch (l) {
        case Level::neg_one: return -1.0;
        case Level::neg_rt2: return -kHalfSqrt2;
        case Level::zero: return 0.0;
        case Level::pos_rt2: return kHalfSqrt2;
        case Level::pos_one: return 1.0;
    }
    throw std::invalid_argument("level_value: bad level");
}

// 3-bit two's-complement wire code. +1 maps to 011 (=3), so the diagonal
// levels land on +/-2 — an amplitude of 2/3 instead of 0.707. The analysis
// side compensates for that when it normalizes decision points.
inline int level_code(Level l) {
    switch (l) {
        case Level::neg_one: return -3;
        case Level::neg_rt2: return -2;
        case Level::zero: return 0;
        case Level::pos_rt2: return 2;
        case Level::pos_one: return 3;
    }
    throw std::invalid_argument("level_code: bad level");
}

struct IqSymbol {
    Level i_level = Level::zero;
    Level q_level = Level::zero;
    std::int64_t time_index = 0; // symbol counter; half-symbol steps for OQPSK

    bool operator==(const IqSymbol& o) const {
        return i_level == o.i_level && q_level == o.q_level;
    }
};

// (cos, sin) of k*pi/4 as exact levels.
inline IqSymbol point_at_octant(int octant, std::int64_t time_index = 0) {
    static constexpr Level cos_tab[8] = {Level::pos_one, Level::pos_rt2, Level::zero,
                                         Level::neg_rt2, Level::neg_one, Level::neg_rt2,
                                         Level::zero,    Level::pos_rt2};
    static constexpr Level sin_tab[8] = {Level::zero,    Level::pos_rt2, Level::pos_one,
                                         Level::pos_rt2, Level::zero,    Level::neg_rt2,
                                         Level::neg_one, Level::neg_rt2};
    const int k = ((octant % 8) + 8) % 8;
    return IqSymbol{cos_tab[k], sin_tab[k], time_index};
}

// Inverse of point_at_octant; rejects pairs that are not on the 8-point
// unit circle (e.g. (0,0) or mixed axis/diagonal levels).
inline int octant_of(const IqSymbol& s) {
    for (int k = 0; k < 8; ++k)
        if (point_at_octant(k) == s) return k;
    throw std::invalid_argument("octant_of: not a valid constellation point");
}

// Phase-shift table for QPSK/DQPSK in quarter turns:
// (0,0)->0, (0,1)->pi/2, (1,0)->pi, (1,1)->3pi/2.
inline int quarter_turns(BitPair p) {
    return p.i_bit ? (p.q_bit ? 3 : 2) : (p.q_bit ? 1 : 0);
}

inline BitPair pair_from_quarter_turns(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {0, 0};
        case 1: return {0, 1};
        case 2: return {1, 0};
        default: return {1, 1};
    }
}

// Phase-shift table for pi/4-DQPSK in octants:
// (0,0)->pi/4, (0,1)->3pi/4, (1,0)->5pi/4, (1,1)->7pi/4.
inline int pi4_octants(BitPair p) {
    return p.i_bit ? (p.q_bit ? 7 : 5) : (p.q_bit ? 3 : 1);
}

inline BitPair pair_from_pi4_octants(int d) {
    switch (((d % 8) + 8) % 8) {
        case 1: return {0, 0};
        case 3: return {0, 1};
        case 5: return {1, 0};
        case 7: return {1, 1};
        default:
            throw std::invalid_argument("pair_from_pi4_octants: even phase step");
    }
}

// Differential encoder state. The initial state is phase 0 with encoded
// bits (0,0); the stream encoder emits that reference point ahead of the
// first data-driven symbol.
struct DiffState {
    std::uint8_t prev_i = 0;
    std::uint8_t prev_q = 0;
    int prev_octant = 0; // theta(n-1) in pi/4 units

    double prev_phase() const { return prev_octant * std::numbers::pi / 4.0; }
};

// Absolute mapping, no state: theta straight from the phase-shift table.
inline IqSymbol map_qpsk(BitPair p, std::int64_t time_index = 0) {
    return point_at_octant(2 * quarter_turns(p), time_index);
}

inline std::pair<IqSymbol, DiffState> encode_dqpsk(BitPair p, DiffState st,
                                                   std::int64_t time_index = 0) {
    const int oct = (st.prev_octant + 2 * quarter_turns(p)) % 8;
    const BitPair enc = pair_from_quarter_turns(oct / 2);
    return {point_at_octant(oct, time_index), DiffState{enc.i_bit, enc.q_bit, oct}};
}

inline std::pair<IqSymbol, DiffState> map_pi4dqpsk(BitPair p, DiffState st,
                                                   std::int64_t time_index = 0) {
    const int oct = (st.prev_octant + pi4_octants(p)) % 8;
    return {point_at_octant(oct, time_index), DiffState{st.prev_i, st.prev_q, oct}};
}

inline Level oqpsk_level(std::uint8_t bit) {
    return bit ? Level::neg_rt2 : Level::pos_rt2;
}

// OQPSK at half-symbol granularity: the Q rail lags the I rail by one bit
// period, so pair n appears as (I_n, Q_{n-1}) then (I_n, Q_n). The very
// first half-symbol carries the initialization value Q_{-1} = 0-bit.
inline std::vector<IqSymbol> map_oqpsk(const std::vector<BitPair>& pairs) {
    std::vector<IqSymbol> out;
    out.reserve(2 * pairs.size());
    Level prev_q = oqpsk_level(0);
    std::int64_t h = 0;
    for (const auto& p : pairs) {
        const Level li = oqpsk_level(p.i_bit);
        const Level lq = oqpsk_level(p.q_bit);
        out.push_back(IqSymbol{li, prev_q, h++});
        out.push_back(IqSymbol{li, lq, h++});
        prev_q = lq;
    }
    return out;
}

// Full stream mapping for one scheme. Differential schemes prepend the
// phase-0 reference symbol (only when there is data, so an empty payload
// maps to an empty stream).
inline std::vector<IqSymbol> encode_stream(const std::vector<BitPair>& pairs, Scheme scheme) {
    std::vector<IqSymbol> out;
    switch (scheme) {
        case Scheme::qpsk: {
            out.reserve(pairs.size());
            std::int64_t t = 0;
            for (const auto& p : pairs) out.push_back(map_qpsk(p, t++));
            return out;
        }
        case Scheme::dqpsk:
        case Scheme::pi4dqpsk: {
            if (pairs.empty()) return out;
            out.reserve(pairs.size() + 1);
            DiffState st;
            std::int64_t t = 0;
            out.push_back(point_at_octant(st.prev_octant, t++));
            for (const auto& p : pairs) {
                auto [sym, next] = scheme == Scheme::dqpsk ? encode_dqpsk(p, st, t)
                                                           : map_pi4dqpsk(p, st, t);
                ++t;
                out.push_back(sym);
                st = next;
            }
            return out;
        }
        case Scheme::oqpsk:
            return map_oqpsk(pairs);
    }
    throw std::invalid_argument("encode_stream: bad scheme");
}

namespace detail {

inline void check_octant_parity(int oct, bool want_even, std::size_t index) {
    if ((oct % 2 == 0) != want_even)
        throw std::invalid_argument("diff_decode: symbol " + std::to_string(index) +
                                    " is not a valid constellation point for this scheme");
}

inline int octant_checked(const IqSymbol& s, std::size_t index) {
    try {
        return octant_of(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("diff_decode: symbol " + std::to_string(index) +
                                    " is not a valid constellation point");
    }
}

} // namespace detail

// Inverse mapping, used as the round-trip oracle. QPSK decodes absolutely;
// the differential schemes decode phase differences (the first symbol is
// the reference and yields no output); OQPSK undoes the rail polarity with
// the half-symbol realignment.
inline std::vector<BitPair> diff_decode(const std::vector<IqSymbol>& symbols, Scheme scheme) {
    std::vector<BitPair> pairs;
    switch (scheme) {
        case Scheme::qpsk: {
            pairs.reserve(symbols.size());
            for (std::size_t n = 0; n < symbols.size(); ++n) {
                const int oct = detail::octant_checked(symbols[n], n);
                detail::check_octant_parity(oct, true, n);
                pairs.push_back(pair_from_quarter_turns(oct / 2));
            }
            return pairs;
        }
        case Scheme::dqpsk: {
            if (symbols.empty()) return pairs;
            pairs.reserve(symbols.size() - 1);
            int prev = detail::octant_checked(symbols[0], 0);
            detail::check_octant_parity(prev, true, 0);
            for (std::size_t n = 1; n < symbols.size(); ++n) {
                const int oct = detail::octant_checked(symbols[n], n);
                detail::check_octant_parity(oct, true, n);
                pairs.push_back(pair_from_quarter_turns(((oct - prev) % 8 + 8) % 8 / 2));
                prev = oct;
            }
            return pairs;
        }
        case Scheme::pi4dqpsk: {
            if (symbols.empty()) return pairs;
            pairs.reserve(symbols.size() - 1);
            int prev = detail::octant_checked(symbols[0], 0);
            for (std::size_t n = 1; n < symbols.size(); ++n) {
                const int oct = detail::octant_checked(symbols[n], n);
                const int d = ((oct - prev) % 8 + 8) % 8;
                if (d % 2 == 0)
                    throw std::invalid_argument("diff_decode: symbol " + std::to_string(n) +
                                                " repeats the previous lattice (even phase step)");
                pairs.push_back(pair_from_pi4_octants(d));
                prev = oct;
            }
            return pairs;
        }
        case Scheme::oqpsk: {
            pairs.reserve(symbols.size() / 2);
            for (std::size_t n = 0; n < symbols.size(); ++n) {
                const IqSymbol& s = symbols[n];
                const bool valid = (s.i_level == Level::pos_rt2 || s.i_level == Level::neg_rt2) &&
                                   (s.q_level == Level::pos_rt2 || s.q_level == Level::neg_rt2);
                if (!valid)
                    throw std::invalid_argument("diff_decode: symbol " + std::to_string(n) +
                                                " is not a valid OQPSK rail point");
            }
            // both rails of pair n are aligned in half-symbol 2n+1
            for (std::size_t n = 0; 2 * n + 1 < symbols.size(); ++n) {
                const IqSymbol& s = symbols[2 * n + 1];
                pairs.push_back(BitPair{s.i_level == Level::neg_rt2 ? std::uint8_t{1} : std::uint8_t{0},
                                        s.q_level == Level::neg_rt2 ? std::uint8_t{1} : std::uint8_t{0}});
            }
            return pairs;
        }
    }
    throw std::invalid_argument("diff_decode: bad scheme");
}

} // namespace pbm
