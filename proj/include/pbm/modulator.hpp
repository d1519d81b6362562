#pragma once
// The parameter-controlled pipeline: bits -> symbol mapper -> polyphase
// pulse-shaping interpolator -> fs/4 upconverter. MOD_SEL picks the
// modulation scheme, FLT_SEL the roll-off factor. The pulse-shaped I and Q
// rails are tapped alongside the mixed output.
//
// OQPSK's one-bit-period offset is realized after filtering by delaying the
// Q rail two output samples (half of the 4-sample symbol), which is
// equivalent to the pre-filter one-bit delay at this interpolation factor.
//
// A stream ends with an 8-symbol zero flush so the filter tail is fully
// emitted and stream lengths are deterministic.

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pbm/bits.hpp"
#include "pbm/filter.hpp"
#include "pbm/mapper.hpp"
#include "pbm/upconvert.hpp"

namespace pbm {

struct ModConfig {
    int mod_sel = 0;              // 0 QPSK, 1 pi/4-DQPSK, 2 DQPSK, 3 OQPSK
    int flt_sel = 0;              // 0..3 -> alpha 0.22, 0.35, 0.5, 0.9
    double symbol_rate = 625e3;   // informational metadata
    static constexpr int sps = kSps;

    Scheme scheme() const { return static_cast<Scheme>(mod_sel); }
    double alpha() const { return alpha_for_index(flt_sel); }
    double sample_rate() const { return symbol_rate * sps; }

    bool operator==(const ModConfig&) const = default;
};

inline ModConfig configure(int mod_sel, int flt_sel) {
    if (mod_sel < 0 || mod_sel > 3)
        throw std::invalid_argument("configure: mod_sel out of range (expected 0..3)");
    if (flt_sel < 0 || flt_sel > 3)
        throw std::invalid_argument("configure: flt_sel out of range (expected 0..3)");
    return ModConfig{mod_sel, flt_sel};
}

// One block (or one whole stream) of modulator output. All three rails
// advance at 4 samples per symbol; finalout[k] is +/-irail[k] or
// +/-qrail[k] according to k mod 4.
struct IfStream {
    std::vector<std::int16_t> finalout;
    std::vector<std::int16_t> irail;
    std::vector<std::int16_t> qrail;
    std::uint64_t sample_index = 0; // stream index of the first sample held

    std::size_t size() const { return finalout.size(); }
};

inline constexpr std::size_t kFlushSymbols = kWindowLen;
inline constexpr std::size_t kDefaultBlockSize = 4096;

// Streaming modulator: push bits in, pull fixed-size sample blocks out.
// One instance owns one stream; the filter bank is immutable once built.
class Modulator {
public:
    explicit Modulator(const ModConfig& cfg, std::size_t block_size = kDefaultBlockSize)
        : cfg_(cfg),
          bank_(FilterBank::make(cfg.alpha())),
          block_size_(block_size) {
        if (cfg.mod_sel < 0 || cfg.mod_sel > 3)
            throw std::invalid_argument("Modulator: mod_sel out of range (expected 0..3)");
        if (block_size_ == 0) throw std::invalid_argument("Modulator: block size must be > 0");
    }

    const ModConfig& config() const { return cfg_; }
    const FilterBank& bank() const { return bank_; }
    std::uint64_t samples_emitted() const { return sample_index_; }
    std::size_t pending_samples() const { return finalout_.size(); }

    void push_bits(const std::vector<std::uint8_t>& bits) {
        if (finished_) throw std::logic_error("Modulator: stream already finished");
        for (std::uint8_t b : bits) {
            if (b > 1) throw std::invalid_argument("Modulator: input is not binary");
            if (pending_) {
                push_pair(BitPair{*pending_, b});
                pending_.reset();
            } else {
                pending_ = b;
            }
        }
    }

    void push_pair(BitPair p) {
        if (finished_) throw std::logic_error("Modulator: stream already finished");
        switch (cfg_.scheme()) {
            case Scheme::qpsk: {
                const IqSymbol s = map_qpsk(p);
                emit_levels(s.i_level, s.q_level);
                break;
            }
            case Scheme::dqpsk:
            case Scheme::pi4dqpsk: {
                if (!ref_emitted_) {
                    const IqSymbol ref = point_at_octant(dstate_.prev_octant);
                    emit_levels(ref.i_level, ref.q_level);
                    ref_emitted_ = true;
                }
                auto [s, next] = cfg_.scheme() == Scheme::dqpsk ? encode_dqpsk(p, dstate_)
                                                                : map_pi4dqpsk(p, dstate_);
                dstate_ = next;
                emit_levels(s.i_level, s.q_level);
                break;
            }
            case Scheme::oqpsk:
                emit_levels(oqpsk_level(p.i_bit), oqpsk_level(p.q_bit));
                break;
        }
    }

    // Appends the zero flush; no bits may be pushed afterwards.
    void finish() {
        if (finished_) throw std::logic_error("Modulator: stream already finished");
        if (pending_)
            throw std::invalid_argument(
                "Modulator: odd bit count (complete the pair or use split_bits zero_pad)");
        for (std::size_t n = 0; n < kFlushSymbols; ++n) emit_codes(0, 0);
        finished_ = true;
    }

    // Swap scheme/filter mid-stream. Allowed only at a symbol boundary;
    // mapper state, filter windows and the OQPSK delay line reset so the
    // continuation is identical to a fresh run, while the sample counter
    // keeps advancing.
    void reconfigure(const ModConfig& next) {
        if (pending_)
            throw std::invalid_argument("Modulator: reconfigure mid-symbol (odd bit pending)");
        if (next.mod_sel < 0 || next.mod_sel > 3)
            throw std::invalid_argument("Modulator: mod_sel out of range (expected 0..3)");
        if (next.flt_sel != cfg_.flt_sel) bank_ = FilterBank::make(next.alpha());
        cfg_ = next;
        dstate_ = DiffState{};
        ref_emitted_ = false;
        iwin_.clear();
        qwin_.clear();
        qdelay_ = {0, 0};
        finished_ = false;
    }

    // Move up to block_size samples into `block`. Returns the number moved;
    // 0 means drained.
    std::size_t pull(IfStream& block) {
        const std::size_t n = std::min(block_size_, finalout_.size());
        block.finalout.assign(finalout_.begin(), finalout_.begin() + n);
        block.irail.assign(irail_.begin(), irail_.begin() + n);
        block.qrail.assign(qrail_.begin(), qrail_.begin() + n);
        block.sample_index = pulled_index_;
        finalout_.erase(finalout_.begin(), finalout_.begin() + n);
        irail_.erase(irail_.begin(), irail_.begin() + n);
        qrail_.erase(qrail_.begin(), qrail_.begin() + n);
        pulled_index_ += n;
        return n;
    }

private:
    void emit_levels(Level i, Level q) { emit_codes(level_code(i), level_code(q)); }

    void emit_codes(int icode, int qcode) {
        iwin_.push(icode);
        qwin_.push(qcode);
        const auto fi = filter_da(iwin_, bank_);
        const auto fq = filter_da(qwin_, bank_);
        std::array<std::int16_t, kSps> qv;
        if (cfg_.scheme() == Scheme::oqpsk) {
            qv = {qdelay_[0], qdelay_[1], fq[0], fq[1]};
            qdelay_ = {fq[2], fq[3]};
        } else {
            qv = fq;
        }
        for (int s = 0; s < kSps; ++s) {
            irail_.push_back(fi[s]);
            qrail_.push_back(qv[s]);
            finalout_.push_back(
                upconvert_fs4(fi[s], qv[s], static_cast<int>(sample_index_ & 3)));
            ++sample_index_;
        }
    }

    ModConfig cfg_;
    FilterBank bank_;
    std::size_t block_size_;
    DiffState dstate_{};
    bool ref_emitted_ = false;
    bool finished_ = false;
    std::optional<std::uint8_t> pending_;
    SymbolWindow iwin_{}, qwin_{};
    std::array<std::int16_t, 2> qdelay_{0, 0};
    std::uint64_t sample_index_ = 0;
    std::uint64_t pulled_index_ = 0;
    std::deque<std::int16_t> finalout_, irail_, qrail_;
};

// One-shot modulation of a whole payload, flush included.
inline IfStream modulate(const std::vector<std::uint8_t>& bits, const ModConfig& cfg,
                         OddLengthPolicy policy = OddLengthPolicy::error) {
    Modulator mod(cfg);
    for (const auto& p : split_bits(bits, policy)) mod.push_pair(p);
    mod.finish();
    IfStream out;
    out.finalout.reserve(mod.pending_samples());
    IfStream block;
    while (mod.pull(block) > 0) {
        out.finalout.insert(out.finalout.end(), block.finalout.begin(), block.finalout.end());
        out.irail.insert(out.irail.end(), block.irail.begin(), block.irail.end());
        out.qrail.insert(out.qrail.end(), block.qrail.begin(), block.qrail.end());
    }
    return out;
}

} // namespace pbm
