// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Binary <-> p-ary transcoding. A p^m-ary alphabet does not fit a whole
// number of bits unless p^m is a power of two, so the variable-length codes
// here carry an extra "opportunistic" bit on some codewords: with s =
// floor(log2(alphabet)), every word has s bits and a subset get one more.
//
// Shipped code tables:
//   A  : GF(7) alphabet {0, a^0..a^5}, opportunistic bit prepended. Complete
//        (Kraft sum 1) but NOT prefix-free ("11" prefixes "110"), so it
//        cannot be decoded instantaneously and encode() rejects it.
//   A' : same alphabet, opportunistic bit appended; prefix-free.
//   B  : GI(3) alphabet {0, xi^0..xi^7} for Hartley links; prefix-free. The
//        word for xi^5 is 0001 (the only choice compatible with a complete
//        prefix-free code next to xi^1 = 100 and 0 = 0000).
//   direct(p, m): fixed m·log2(p)-bit words when p^m is a power of two; the
//        word is the coefficient vector read high coefficient first.

#pragma once

#include "errors.hpp"
#include "cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdma {

struct CodeSymbol {
    enum class Tag { zero, alpha_power, raw };
    Tag tag = Tag::raw;
    uint32_t k = 0;        // power index for alpha_power, element code for raw
    std::string word;      // binary codeword
    bool opportunistic = false; // carries the extra bit
};

enum class Weighting { uniform_bits, uniform_symbols };

class OpportunisticCode {
public:
    static OpportunisticCode builtin(std::string_view name); // "A", "A'", "B"
    static OpportunisticCode direct(uint32_t p, uint32_t m); // not_power_of_two otherwise

    const std::string& name() const noexcept { return name_; }
    size_t alphabet_size() const noexcept { return symbols_.size(); }
    const std::vector<CodeSymbol>& symbols() const noexcept { return symbols_; }
    uint32_t short_len() const noexcept { return s_; } // s = floor(log2(alphabet))
    bool instantaneous() const noexcept { return instantaneous_; } // prefix-free
    bool complete() const noexcept;                                // Kraft sum == 1
    Rational kraft_sum() const;                                    // exact

    struct EncodeResult {
        std::vector<uint32_t> symbols; // indices into symbols()
        uint32_t pad_bits = 0;         // zeros appended to finish the last word
    };
    // Greedy prefix parse of a bit string ('0'/'1'); requires an
    // instantaneous code. A trailing fragment is zero-padded into a word.
    EncodeResult encode(std::string_view bits) const;

    std::string decode(std::span<const uint32_t> symbol_indices) const;

    // Streaming parse for demodulated bit vectors: consume one codeword
    // starting at pos, return its symbol index and advance pos; nullopt when
    // the remaining bits cannot complete any codeword (truncated tail).
    std::optional<uint32_t> parse_one(std::span<const uint8_t> bits, size_t& pos) const;

    struct RateReport {
        double p_direct;  // probability of an s-bit word
        double p_opp;     // probability of an (s+1)-bit word
        double rate;      // mean bits per symbol
    };
    RateReport average_rate(Weighting w) const; // needs complete + instantaneous

private:
    std::string name_;
    std::vector<CodeSymbol> symbols_;
    uint32_t s_ = 0;
    bool instantaneous_ = false;
    uint32_t max_len_ = 0;

    void finalize(); // computes s_, instantaneous_, max_len_
};

// h = R / log2(M): M-ary channel symbols per source symbol.
double h_param(double rate, uint32_t m_ary);

// channel symbols needed for a frame of n source symbols
double frame_symbols(double h, uint32_t n);

} // namespace gdma
