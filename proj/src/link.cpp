// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "link.hpp"

#include <bit>
#include <cmath>

namespace gdma {

const char* transform_name(TransformKind t) noexcept {
    switch (t) {
        case TransformKind::ffft: return "ffft";
        case TransformKind::ffht: return "ffht";
        case TransformKind::none: return "none";
    }
    return "?";
}

const char* mode_name(SpectrumMode m) noexcept {
    return m == SpectrumMode::compressed ? "CC" : "FS";
}

GdmaLink::GdmaLink(const LinkConfig& cfg) : cfg_(cfg), code_(OpportunisticCode::direct(2, 1)) {
    require(cfg.n_users >= 1, errc::config_invalid, "n_users must be >= 1");
    const uint32_t n = cfg.n_users;

    switch (cfg.transform) {
        case TransformKind::ffft: {
            if (cfg.poly.empty())
                field_.emplace(ExtensionField::with_default_poly(cfg.p, cfg.m));
            else
                field_.emplace(cfg.p, cfg.m, cfg.poly);
            plan_.emplace(*field_, n);
            user_alphabet_ = cfg.p;
            break;
        }
        case TransformKind::ffht: {
            gfield_.emplace(cfg.q);
            kernel_.emplace(*gfield_, n);
            user_alphabet_ = cfg.q;
            break;
        }
        case TransformKind::none: {
            require(cfg.p == 2, errc::config_invalid,
                    "transform \"none\" carries raw bits and needs p = 2");
            user_alphabet_ = 2;
            break;
        }
    }

    if (cfg.mode == SpectrumMode::compressed) {
        require(cfg.transform != TransformKind::none, errc::config_invalid,
                "compressed mode needs a transform");
        uint32_t mult;
        if (cfg.transform == TransformKind::ffft) {
            mult = plan_->conjugacy_multiplier();
        } else {
            auto cm = kernel_->conjugacy_multiplier();
            require(cm.has_value(), errc::config_invalid,
                    "the cas kernel satisfies no Frobenius rule at this length; "
                    "compressed mode is unavailable");
            mult = *cm;
        }
        part_.emplace(cosets_with_multiplier(n, mult));
    }

    // transcoder and the symbol-value <-> codeword-index maps
    uint32_t alphabet;
    if (cfg.transform == TransformKind::ffht)
        alphabet = gfield_->size();
    else if (cfg.transform == TransformKind::ffft)
        alphabet = field_->size();
    else
        alphabet = 2;

    if (cfg.code == "direct") {
        if (cfg.transform == TransformKind::ffft)
            code_ = OpportunisticCode::direct(cfg.p, cfg.m);
        else if (cfg.transform == TransformKind::none)
            code_ = OpportunisticCode::direct(2, 1);
        else
            code_ = OpportunisticCode::direct(cfg.q, 2); // not_power_of_two for odd q
    } else {
        code_ = OpportunisticCode::builtin(cfg.code);
    }
    require(code_.instantaneous(), errc::config_invalid,
            "code " + code_.name() + " is not prefix-free and cannot run a link; use A' "
            "instead of A");
    require(code_.alphabet_size() == alphabet, errc::config_invalid,
            "code " + code_.name() + " covers " + std::to_string(code_.alphabet_size()) +
                " symbols but the spectrum alphabet has " + std::to_string(alphabet));

    value_of_index_.assign(code_.alphabet_size(), 0);
    index_of_value_.assign(alphabet, 0);
    for (uint32_t idx = 0; idx < code_.alphabet_size(); ++idx) {
        const CodeSymbol& sym = code_.symbols()[idx];
        uint32_t value = 0;
        switch (sym.tag) {
            case CodeSymbol::Tag::zero: value = 0; break;
            case CodeSymbol::Tag::raw: value = sym.k; break;
            case CodeSymbol::Tag::alpha_power:
                if (cfg.transform == TransformKind::ffht)
                    value = gfield_->pack(gfield_->pow(gfield_->generator(), sym.k));
                else {
                    require(field_.has_value(), errc::config_invalid,
                            "code " + code_.name() + " needs a field transform");
                    value = field_->alpha_pow(sym.k);
                }
                break;
        }
        value_of_index_[idx] = value;
        index_of_value_[value] = idx;
    }

    constellation_ = &Constellation::get(cfg.modulation);
    tx_symbols_ = part_ ? part_->nu() : n;
    payload_bits_ = n * std::log2(static_cast<double>(user_alphabet_));

    // expected channel symbols per frame; exact for fixed-length codes, the
    // uniform-bits mean for variable-length ones (see README on energy)
    bool fixed = true;
    size_t L = code_.symbols()[0].word.size();
    for (const CodeSymbol& s : code_.symbols()) fixed = fixed && s.word.size() == L;
    const double bps = constellation_->bits_per_symbol();
    if (fixed)
        expected_symbols_ = std::ceil(static_cast<double>(tx_symbols_) * L / bps);
    else
        expected_symbols_ = tx_symbols_ * code_.average_rate(Weighting::uniform_bits).rate / bps;
}

Rational GdmaLink::gamma() const {
    if (part_) return compression_ratio(*part_);
    return {cfg_.n_users, static_cast<int64_t>(cfg_.n_users)};
}

double GdmaLink::h() const {
    double rate;
    bool fixed = true;
    size_t L = code_.symbols()[0].word.size();
    for (const CodeSymbol& s : code_.symbols()) fixed = fixed && s.word.size() == L;
    rate = fixed ? static_cast<double>(L) : code_.average_rate(Weighting::uniform_bits).rate;
    return h_param(rate, constellation_->order());
}

double GdmaLink::esn0_from_ebn0(double ebn0) const {
    require(ebn0 >= 0.0, errc::negative_snr, "Eb/N0 must be non-negative");
    if (cfg_.energy == EnergyConvention::per_channel_bit)
        return ebn0 * constellation_->bits_per_symbol();
    return ebn0 * payload_bits_ / expected_symbols_;
}

std::vector<uint32_t> GdmaLink::spectrum_of(std::span<const uint32_t> users) const {
    require(users.size() == cfg_.n_users, errc::length_mismatch,
            "expected one symbol per user");
    for (uint32_t u : users)
        require(u < user_alphabet_, errc::invalid_argument,
                "user symbol out of range for the ground field");
    switch (cfg_.transform) {
        case TransformKind::ffft: return plan_->forward(users);
        case TransformKind::ffht: {
            std::vector<GaussianInt> h = kernel_->forward(users);
            std::vector<uint32_t> out(h.size());
            for (size_t i = 0; i < h.size(); ++i) out[i] = gfield_->pack(h[i]);
            return out;
        }
        case TransformKind::none: return {users.begin(), users.end()};
    }
    fail(errc::internal, "bad transform kind");
}

std::vector<uint32_t> GdmaLink::tx_values(std::span<const uint32_t> users) const {
    std::vector<uint32_t> spec = spectrum_of(users);
    if (!part_) return spec;
    return compress_spectrum<uint32_t>(spec, *part_);
}

std::vector<uint8_t> GdmaLink::mux(std::span<const uint32_t> users) const {
    std::vector<uint32_t> values = tx_values(users);
    std::vector<uint8_t> bits;
    bits.reserve(values.size() * 4);
    for (uint32_t v : values) {
        const std::string& w = code_.symbols()[index_of_value_[v]].word;
        for (char c : w) bits.push_back(c == '1');
    }
    return bits;
}

std::vector<uint32_t> GdmaLink::parse_values(std::span<const uint8_t> bits,
                                             uint32_t* undec) const {
    std::vector<uint32_t> values(tx_symbols_, 0);
    size_t pos = 0;
    for (uint32_t t = 0; t < tx_symbols_; ++t) {
        auto idx = code_.parse_one(bits, pos);
        if (idx) {
            values[t] = value_of_index_[*idx];
        } else {
            values[t] = value_of_index_[index_of_value_[0]]; // zero symbol fallback
            if (undec) ++*undec;
            pos = bits.size();
        }
    }
    return values;
}

std::vector<uint32_t> GdmaLink::reconstruct(std::span<const uint32_t> values, uint32_t* oos,
                                            std::vector<uint32_t>* full_spectrum) const {
    const uint32_t n = cfg_.n_users;
    std::vector<uint32_t> users(n, 0);
    switch (cfg_.transform) {
        case TransformKind::none: {
            for (uint32_t i = 0; i < n; ++i) users[i] = values[i];
            if (full_spectrum) full_spectrum->assign(values.begin(), values.end());
            return users;
        }
        case TransformKind::ffft: {
            std::vector<uint32_t> spec;
            if (part_)
                spec = expand_spectrum(*field_, values, *part_);
            else
                spec.assign(values.begin(), values.end());
            if (full_spectrum) *full_spectrum = spec;
            std::vector<uint32_t> time = plan_->inverse(spec);
            for (uint32_t i = 0; i < n; ++i) {
                if (field_->in_ground(time[i])) {
                    users[i] = time[i];
                } else {
                    users[i] = 0;
                    if (oos) ++*oos;
                }
            }
            return users;
        }
        case TransformKind::ffht: {
            std::vector<GaussianInt> spec;
            if (part_) {
                std::vector<GaussianInt> leaders(values.size());
                for (size_t i = 0; i < values.size(); ++i)
                    leaders[i] = gfield_->unpack(values[i]);
                spec = expand_spectrum(*gfield_, leaders, *part_);
            } else {
                spec.resize(values.size());
                for (size_t i = 0; i < values.size(); ++i) spec[i] = gfield_->unpack(values[i]);
            }
            if (full_spectrum) {
                full_spectrum->resize(spec.size());
                for (size_t i = 0; i < spec.size(); ++i)
                    (*full_spectrum)[i] = gfield_->pack(spec[i]);
            }
            std::vector<GaussianInt> time = kernel_->inverse(spec);
            for (uint32_t i = 0; i < n; ++i) {
                if (time[i].im == 0) {
                    users[i] = time[i].re;
                } else {
                    users[i] = 0;
                    if (oos) ++*oos;
                }
            }
            return users;
        }
    }
    fail(errc::internal, "bad transform kind");
}

DemuxResult GdmaLink::demux(std::span<const uint8_t> bits) const {
    DemuxResult res;
    std::vector<uint32_t> values = parse_values(bits, &res.undecodable);
    res.users = reconstruct(values, &res.out_of_subfield, nullptr);
    return res;
}

FrameTrace GdmaLink::traced_frame(std::span<const uint32_t> users, double ebn0_db,
                                  uint64_t seed) const {
    FrameTrace tr;
    tr.users_in.assign(users.begin(), users.end());
    tr.ebn0_db = ebn0_db;
    tr.spectrum = spectrum_of(users);
    tr.tx_symbols = part_ ? compress_spectrum<uint32_t>(tr.spectrum, *part_) : tr.spectrum;

    tr.tx_bits.clear();
    for (uint32_t v : tr.tx_symbols) {
        const std::string& w = code_.symbols()[index_of_value_[v]].word;
        for (char c : w) tr.tx_bits.push_back(c == '1');
    }

    std::vector<std::complex<double>> samples = modulate(*constellation_, tr.tx_bits, tr.pad_bits);
    tr.channel_symbols = samples.size();
    if (std::isfinite(ebn0_db)) {
        double esn0 = esn0_from_ebn0(std::pow(10.0, ebn0_db / 10.0));
        Philox rng = Philox::frame_stream(seed, std::bit_cast<uint64_t>(ebn0_db), 0);
        add_awgn(samples, 1.0 / esn0, rng);
    }
    tr.rx_bits = demodulate(*constellation_, samples);
    tr.rx_bits.resize(tr.tx_bits.size()); // drop pad fill

    tr.rx_symbols = parse_values(tr.rx_bits, &tr.undecodable);
    tr.users_out = reconstruct(tr.rx_symbols, &tr.out_of_subfield, &tr.rx_spectrum);
    return tr;
}

double frame_error_bound(uint32_t n, double h, double pe) {
    require(pe >= 0.0 && pe <= 1.0, errc::invalid_probability,
            "symbol error probability must lie in [0, 1]");
    require(h > 0.0 && n >= 1, errc::invalid_argument, "need h > 0 and n >= 1");
    return std::min(1.0, h * static_cast<double>(n) * pe);
}

} // namespace gdma
