// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "transcoder.hpp"

#include <algorithm>
#include <cmath>

namespace gdma {

namespace {

CodeSymbol zero_sym(std::string word, bool opp = false) {
    return {CodeSymbol::Tag::zero, 0, std::move(word), opp};
}

CodeSymbol pow_sym(uint32_t k, std::string word, bool opp = false) {
    return {CodeSymbol::Tag::alpha_power, k, std::move(word), opp};
}

} // namespace

void OpportunisticCode::finalize() {
    uint32_t s = 0;
    while ((1ull << (s + 1)) <= symbols_.size()) ++s;
    s_ = s;
    max_len_ = 0;
    for (const CodeSymbol& sym : symbols_)
        max_len_ = std::max(max_len_, static_cast<uint32_t>(sym.word.size()));
    // prefix-freeness by direct pairwise check; alphabets are tiny
    instantaneous_ = true;
    for (size_t a = 0; a < symbols_.size() && instantaneous_; ++a) {
        for (size_t b = 0; b < symbols_.size() && instantaneous_; ++b) {
            if (a == b) continue;
            const std::string& wa = symbols_[a].word;
            const std::string& wb = symbols_[b].word;
            if (wa.size() <= wb.size() && wb.compare(0, wa.size(), wa) == 0)
                instantaneous_ = false;
        }
    }
}

OpportunisticCode OpportunisticCode::builtin(std::string_view name) {
    OpportunisticCode c;
    if (name == "A") {
        // opportunistic bit prepended to the 3-bit words
        c.symbols_ = {
            zero_sym("000", true), pow_sym(0, "001", true), pow_sym(1, "11"),
            pow_sym(2, "010", true), pow_sym(3, "110", true), pow_sym(4, "100", true),
            pow_sym(5, "101", true),
        };
    } else if (name == "A'") {
        // opportunistic bit appended instead; this one is prefix-free
        c.symbols_ = {
            zero_sym("000", true), pow_sym(0, "010", true), pow_sym(1, "11"),
            pow_sym(2, "100", true), pow_sym(3, "101", true), pow_sym(4, "001", true),
            pow_sym(5, "011", true),
        };
    } else if (name == "B") {
        c.symbols_ = {
            zero_sym("0000", true), pow_sym(0, "011"),      pow_sym(1, "100"),
            pow_sym(2, "010"),      pow_sym(3, "101"),      pow_sym(4, "110"),
            pow_sym(5, "0001", true), pow_sym(6, "001"),    pow_sym(7, "111"),
        };
    } else {
        fail(errc::unknown_code, "unknown code \"" + std::string(name) + "\"");
    }
    c.name_ = std::string(name);
    c.finalize();
    return c;
}

OpportunisticCode OpportunisticCode::direct(uint32_t p, uint32_t m) {
    require(p >= 2 && m >= 1, errc::invalid_argument, "need p >= 2 and m >= 1");
    uint64_t size = 1;
    for (uint32_t i = 0; i < m; ++i) size *= p;
    require((size & (size - 1)) == 0, errc::not_power_of_two,
            "direct transcoding needs an alphabet of power-of-two size, got " +
                std::to_string(size));
    uint32_t bits = 0;
    while ((1ull << bits) < size) ++bits;

    OpportunisticCode c;
    c.name_ = "direct(" + std::to_string(p) + "," + std::to_string(m) + ")";
    c.symbols_.reserve(size);
    for (uint32_t code = 0; code < size; ++code) {
        std::string w(bits, '0');
        for (uint32_t b = 0; b < bits; ++b)
            if (code & (1u << b)) w[bits - 1 - b] = '1'; // high coefficient first
        c.symbols_.push_back({CodeSymbol::Tag::raw, code, std::move(w), false});
    }
    c.finalize();
    return c;
}

bool OpportunisticCode::complete() const noexcept {
    Rational k = kraft_sum().reduced();
    return k.num == 1 && k.den == 1;
}

Rational OpportunisticCode::kraft_sum() const {
    int64_t den = 1ll << max_len_;
    int64_t num = 0;
    for (const CodeSymbol& sym : symbols_)
        num += 1ll << (max_len_ - sym.word.size());
    return Rational{num, den};
}

OpportunisticCode::EncodeResult OpportunisticCode::encode(std::string_view bits) const {
    require(instantaneous_, errc::non_instantaneous_code,
            "code " + name_ + " is not prefix-free and cannot be parsed greedily");
    for (char b : bits)
        require(b == '0' || b == '1', errc::invalid_argument,
                "bit string may contain only 0 and 1");

    EncodeResult out;
    size_t pos = 0;
    while (pos < bits.size()) {
        bool matched = false;
        // prefix-free: at most one codeword can match here
        for (uint32_t len = 1; len <= max_len_ && !matched; ++len) {
            if (pos + len > bits.size()) break;
            for (uint32_t idx = 0; idx < symbols_.size(); ++idx) {
                const std::string& w = symbols_[idx].word;
                if (w.size() == len && bits.compare(pos, len, w) == 0) {
                    out.symbols.push_back(idx);
                    pos += len;
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) {
            // trailing fragment: extend with zeros until a word completes
            std::string tail(bits.substr(pos));
            while (tail.size() <= max_len_) {
                for (uint32_t idx = 0; idx < symbols_.size(); ++idx) {
                    if (symbols_[idx].word == tail) {
                        out.symbols.push_back(idx);
                        out.pad_bits = static_cast<uint32_t>(tail.size() - (bits.size() - pos));
                        return out;
                    }
                }
                tail.push_back('0');
            }
            fail(errc::internal, "zero padding failed to complete a codeword (code " +
                                     name_ + " is incomplete)");
        }
    }
    return out;
}

std::string OpportunisticCode::decode(std::span<const uint32_t> symbol_indices) const {
    std::string out;
    for (uint32_t idx : symbol_indices) {
        require(idx < symbols_.size(), errc::unknown_symbol,
                "symbol index " + std::to_string(idx) + " outside the alphabet");
        out += symbols_[idx].word;
    }
    return out;
}

std::optional<uint32_t> OpportunisticCode::parse_one(std::span<const uint8_t> bits,
                                                     size_t& pos) const {
    for (uint32_t len = 1; len <= max_len_; ++len) {
        if (pos + len > bits.size()) return std::nullopt;
        for (uint32_t idx = 0; idx < symbols_.size(); ++idx) {
            const std::string& w = symbols_[idx].word;
            if (w.size() != len) continue;
            bool eq = true;
            for (uint32_t i = 0; i < len && eq; ++i)
                eq = (bits[pos + i] != 0) == (w[i] == '1');
            if (eq) {
                pos += len;
                return idx;
            }
        }
    }
    return std::nullopt;
}

OpportunisticCode::RateReport OpportunisticCode::average_rate(Weighting w) const {
    require(instantaneous_, errc::non_instantaneous_code,
            "average rate is defined for instantaneous codes; " + name_ +
                " is not prefix-free");
    require(complete(), errc::incomplete_code,
            "average rate needs a complete code (Kraft sum 1)");
    RateReport rep{0.0, 0.0, 0.0};
    for (const CodeSymbol& sym : symbols_) {
        double prob;
        if (w == Weighting::uniform_bits)
            prob = std::ldexp(1.0, -static_cast<int>(sym.word.size()));
        else
            prob = 1.0 / static_cast<double>(symbols_.size());
        rep.rate += prob * static_cast<double>(sym.word.size());
        if (sym.word.size() > s_)
            rep.p_opp += prob;
        else
            rep.p_direct += prob;
    }
    return rep;
}

double h_param(double rate, uint32_t m_ary) {
    require(m_ary >= 2, errc::invalid_constellation,
            "constellation order must be >= 2, got " + std::to_string(m_ary));
    require(rate > 0.0, errc::invalid_argument, "rate must be positive");
    return rate / std::log2(static_cast<double>(m_ary));
}

double frame_symbols(double h, uint32_t n) {
    require(h > 0.0, errc::invalid_argument, "h must be positive");
    require(n >= 1, errc::invalid_argument, "frame length must be >= 1");
    return h * static_cast<double>(n);
}

} // namespace gdma
