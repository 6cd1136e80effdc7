// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Philox4x32-10 counter-based generator. One independent stream per
// (master seed, sweep point, frame) lets frames be sharded across any number
// of worker threads with bit-identical results: the sampled values depend
// only on the stream key and the in-frame draw counter, never on the worker.
// Constants are the standard ones from the Philox paper (SC11).

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace gdma {

// splitmix64 finalizer, used to whiten stream-key material
inline uint64_t mix64(uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Philox {
public:
    explicit Philox(uint64_t key) noexcept : key_{low32(key), high32(key)} {}

    // Stream for frame `frame` of sweep point `point` under `seed`.
    static Philox frame_stream(uint64_t seed, uint64_t point, uint64_t frame) noexcept {
        uint64_t k = mix64(seed ^ mix64(point + 0x517cc1b727220a95ull));
        return Philox(mix64(k ^ mix64(frame + 0x6a09e667f3bcc909ull)));
    }

    uint32_t next_u32() noexcept {
        if (idx_ == 4) {
            block_ = round10(counter_, key_);
            bump();
            idx_ = 0;
        }
        return block_[idx_++];
    }

    uint64_t next_u64() noexcept {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // uniform in [0, 1)
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // unbiased integer in [0, bound) by rejection
    uint32_t next_below(uint32_t bound) noexcept {
        const uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
        uint32_t r = next_u32();
        while (r >= limit) r = next_u32();
        return r % bound;
    }

    // standard normal via Box-Muller; second deviate is cached
    double next_gaussian() noexcept {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1] so log() is finite
        double u1 = (static_cast<double>(next_u32()) + 1.0) * 0x1.0p-32;
        double u2 = static_cast<double>(next_u32()) * 0x1.0p-32;
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(t);
        have_cached_ = true;
        return r * std::cos(t);
    }

private:
    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> counter_{0, 0, 0, 0};
    std::array<uint32_t, 4> block_{};
    int idx_ = 4;
    bool have_cached_ = false;
    double cached_ = 0.0;

    static constexpr uint32_t M0 = 0xD2511F53u;
    static constexpr uint32_t M1 = 0xCD9E8D57u;
    static constexpr uint32_t W0 = 0x9E3779B9u;
    static constexpr uint32_t W1 = 0xBB67AE85u;

    static uint32_t low32(uint64_t v) noexcept { return static_cast<uint32_t>(v); }
    static uint32_t high32(uint64_t v) noexcept { return static_cast<uint32_t>(v >> 32); }

    static void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) noexcept {
        uint64_t prod = static_cast<uint64_t>(a) * b;
        hi = static_cast<uint32_t>(prod >> 32);
        lo = static_cast<uint32_t>(prod);
    }

    static std::array<uint32_t, 4> round10(std::array<uint32_t, 4> ctr,
                                           std::array<uint32_t, 2> key) noexcept {
        for (int r = 0; r < 10; ++r) {
            uint32_t hi0, lo0, hi1, lo1;
            mulhilo(M0, ctr[0], hi0, lo0);
            mulhilo(M1, ctr[2], hi1, lo1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += W0;
            key[1] += W1;
        }
        return ctr;
    }

    void bump() noexcept {
        for (int i = 0; i < 4; ++i)
            if (++counter_[i] != 0) break;
    }
};

} // namespace gdma
