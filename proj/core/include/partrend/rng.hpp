#pragma once

#include <cmath>
#include <cstdint>

namespace partrend::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Each (key, counter) pair maps to four independent 32-bit outputs, so
// streams can be assigned to work items deterministically and evaluated
// in any order on any number of workers.

struct Block {
    uint32_t x[4];
};

inline Block philox4x32(uint32_t c0, uint32_t c1, uint32_t c2, uint32_t c3,
                        uint32_t k0, uint32_t k1) {
    constexpr uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr uint32_t kWeyl1 = 0xBB67AE85u;
    constexpr uint32_t kMul0 = 0xD2511F53u;
    constexpr uint32_t kMul1 = 0xCD9E8D57u;
    for (int round = 0; round < 10; ++round) {
        const uint64_t p0 = static_cast<uint64_t>(kMul0) * c0;
        const uint64_t p1 = static_cast<uint64_t>(kMul1) * c2;
        const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
        const uint32_t lo0 = static_cast<uint32_t>(p0);
        const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
        const uint32_t lo1 = static_cast<uint32_t>(p1);
        const uint32_t n0 = hi1 ^ c1 ^ k0;
        const uint32_t n1 = lo1;
        const uint32_t n2 = hi0 ^ c3 ^ k1;
        const uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return Block{{c0, c1, c2, c3}};
}

// Derives an independent 64-bit subseed from (seed, a, b). Used to hand
// each replicate or pipeline stage its own stream namespace.
inline uint64_t derive(uint64_t seed, uint64_t a, uint64_t b = 0) {
    const Block blk = philox4x32(
        static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32),
        static_cast<uint32_t>(b), static_cast<uint32_t>(b >> 32),
        static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32));
    return (static_cast<uint64_t>(blk.x[0]) << 32) | blk.x[1];
}

// Sequential view of one Philox stream: (seed, stream) fixes the key and
// the high counter words; the low words count blocks.
class Stream {
public:
    Stream(uint64_t seed, uint64_t stream)
        : key0_(static_cast<uint32_t>(seed)),
          key1_(static_cast<uint32_t>(seed >> 32)),
          stream_lo_(static_cast<uint32_t>(stream)),
          stream_hi_(static_cast<uint32_t>(stream >> 32)) {}

    uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_.x[pos_++];
    }

    uint64_t next_u64() {
        const uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe as a log argument.
    double next_double_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via the Marsaglia polar method.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // +1 or -1 with equal probability.
    double next_rademacher() {
        return (next_u32() & 1u) ? 1.0 : -1.0;
    }

private:
    void refill() {
        buf_ = philox4x32(static_cast<uint32_t>(ctr_),
                          static_cast<uint32_t>(ctr_ >> 32),
                          stream_lo_, stream_hi_, key0_, key1_);
        ++ctr_;
        pos_ = 0;
    }

    uint32_t key0_, key1_;
    uint32_t stream_lo_, stream_hi_;
    uint64_t ctr_ = 0;
    Block buf_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream-id namespaces. Keeps substreams of different pipeline stages
// disjoint even when their indexes coincide.
namespace stream_tag {
inline constexpr uint64_t kPanelSeries = 0x01ull << 56;
inline constexpr uint64_t kNullReplicate = 0x02ull << 56;
inline constexpr uint64_t kStudyReplicate = 0x03ull << 56;
inline constexpr uint64_t kSubsetNull = 0x04ull << 56;
}  // namespace stream_tag

}  // namespace partrend::rng
