// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// The multiple-access link: N users each contribute one ground-field symbol
// per frame; the frame is the finite-field transform of that vector (the
// transform sum is the spreading operation), optionally compressed to its
// cyclotomic coset leaders, transcoded to bits, and modulated. Demux runs
// the chain backwards. A link object is immutable configuration plus pure
// functions and can be shared freely across worker threads.

#pragma once

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "modem.hpp"
#include "transcoder.hpp"
#include "transforms.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gdma {

enum class TransformKind { ffft, ffht, none };
enum class SpectrumMode { full, compressed };
enum class EnergyConvention { per_info_bit, per_channel_bit };

const char* transform_name(TransformKind t) noexcept;
const char* mode_name(SpectrumMode m) noexcept; // "FS" / "CC"

struct LinkConfig {
    TransformKind transform = TransformKind::ffft;
    uint32_t p = 2;
    uint32_t m = 4;
    std::vector<uint32_t> poly; // constant term first; empty = shipped default
    uint32_t q = 3;             // GI(q) for ffht
    uint32_t n_users = 15;
    SpectrumMode mode = SpectrumMode::full;
    std::string code = "direct"; // "direct", "A'", "B" ("A" is rejected: not prefix-free)
    Modulation modulation = Modulation::bpsk;
    EnergyConvention energy = EnergyConvention::per_info_bit;
    double symbol_duration = 1.0;
};

struct DemuxResult {
    std::vector<uint32_t> users;
    uint32_t undecodable = 0;     // truncated codewords, decided as symbol 0
    uint32_t out_of_subfield = 0; // inverse transform left the ground field
};

struct FrameTrace {
    std::vector<uint32_t> users_in;
    std::vector<uint32_t> spectrum;    // element codes (ffft) or packed GI (ffht)
    std::vector<uint32_t> tx_symbols;  // leaders in CC mode, full spectrum otherwise
    std::vector<uint8_t> tx_bits;
    uint32_t pad_bits = 0;
    size_t channel_symbols = 0;
    double ebn0_db = 0.0;              // +inf = noiseless
    std::vector<uint8_t> rx_bits;
    std::vector<uint32_t> rx_symbols;
    std::vector<uint32_t> rx_spectrum;
    std::vector<uint32_t> users_out;
    uint32_t undecodable = 0;
    uint32_t out_of_subfield = 0;
};

class GdmaLink {
public:
    explicit GdmaLink(const LinkConfig& cfg);

    const LinkConfig& config() const noexcept { return cfg_; }
    uint32_t n_users() const noexcept { return cfg_.n_users; }
    uint32_t user_alphabet() const noexcept { return user_alphabet_; }
    uint32_t tx_symbol_count() const noexcept { return tx_symbols_; } // per frame
    const OpportunisticCode& code() const noexcept { return code_; }
    const Constellation& constellation() const noexcept { return *constellation_; }
    const ExtensionField* field() const noexcept { return field_ ? &*field_ : nullptr; }
    const GaussianField* gaussian() const noexcept { return gfield_ ? &*gfield_ : nullptr; }
    const CosetPartition* partition() const noexcept { return part_ ? &*part_ : nullptr; }

    Rational gamma() const; // N/nu in CC mode, N/N otherwise
    double h() const;       // channel symbols per source symbol (uniform-bits)
    double payload_bits() const noexcept { return payload_bits_; }
    double expected_channel_symbols() const noexcept { return expected_symbols_; }

    // Eb/N0 (linear, per the configured convention) -> Es/N0 (linear)
    double esn0_from_ebn0(double ebn0) const;

    std::vector<uint8_t> mux(std::span<const uint32_t> users) const;
    DemuxResult demux(std::span<const uint8_t> bits) const;

    // full chain with per-stage capture; ebn0_db = +inf disables noise
    FrameTrace traced_frame(std::span<const uint32_t> users, double ebn0_db,
                            uint64_t seed) const;

    // spectrum (packed codes, same convention as FrameTrace) of a user vector
    std::vector<uint32_t> spectrum_of(std::span<const uint32_t> users) const;

private:
    LinkConfig cfg_;
    std::optional<ExtensionField> field_;
    std::optional<FfftPlan> plan_;
    std::optional<GaussianField> gfield_;
    std::optional<CasKernel> kernel_;
    std::optional<CosetPartition> part_;
    OpportunisticCode code_;
    const Constellation* constellation_ = nullptr;
    uint32_t user_alphabet_ = 2;
    uint32_t tx_symbols_ = 0;
    double payload_bits_ = 0.0;
    double expected_symbols_ = 0.0;
    std::vector<uint32_t> value_of_index_; // code symbol index -> packed value
    std::vector<uint32_t> index_of_value_; // packed value -> code symbol index

    std::vector<uint32_t> tx_values(std::span<const uint32_t> users) const;
    std::vector<uint32_t> parse_values(std::span<const uint8_t> bits, uint32_t* undec) const;
    std::vector<uint32_t> reconstruct(std::span<const uint32_t> values, uint32_t* oos,
                                      std::vector<uint32_t>* full_spectrum) const;
};

// Union bound on the frame error rate: P_frame <= min(1, h*n*pe).
double frame_error_bound(uint32_t n, double h, double pe);

} // namespace gdma
