// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "render.hpp"

#include <array>
#include <cfenv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace gdma {

namespace {
const char* kAlpha = "\xce\xb1"; // α
const char* kXi = "\xce\xbe";    // ξ
}

std::string format_gi(const GaussianField& gf, GaussianInt a) {
    gf.check_element(a);
    if (a.re == 0 && a.im == 0) return "0";
    std::string s;
    if (a.re != 0) s = std::to_string(a.re);
    if (a.im != 0) {
        if (!s.empty()) s += " + ";
        if (a.im != 1) s += std::to_string(a.im);
        s += "j";
    }
    return s;
}

std::string format_power(const ExtensionField& f, uint32_t code) {
    if (code == 0) return "0";
    uint32_t k = f.log(code);
    if (k == 0) return "1";
    if (k == 1) return kAlpha;
    return std::string(kAlpha) + "^" + std::to_string(k);
}

std::string format_gi_power(const GaussianField& gf, GaussianInt a) {
    if (a == gf.zero()) return "0";
    if (a == gf.one()) return "1";
    GaussianInt xi = gf.generator();
    GaussianInt cur = xi;
    for (uint32_t k = 1; k < gf.order(); ++k) {
        if (cur == a) return k == 1 ? kXi : std::string(kXi) + "^" + std::to_string(k);
        cur = gf.mul(cur, xi);
    }
    fail(errc::internal, "element not in the cyclic group"); // unreachable in a field
}

std::string format_vector(const ExtensionField& f, uint32_t code) {
    std::vector<uint32_t> c = f.coeffs(code);
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s += std::to_string(*it);
    return s;
}

std::string render_field_table(const ExtensionField& f) {
    std::ostringstream os;
    os << "GF(" << f.size() << "), p = " << f.p() << ", m = " << f.m() << ", modulus = ";
    const auto& poly = f.modulus();
    bool first = true;
    for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d) {
        if (poly[d] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || poly[d] != 1) os << poly[d];
        if (d >= 1) os << "x";
        if (d >= 2) os << "^" << d;
    }
    os << "\n";
    os << "0 = " << format_vector(f, 0) << "\n";
    for (uint32_t k = 0; k < f.order(); ++k) {
        uint32_t code = f.alpha_pow(k);
        os << format_power(f, code) << " = " << format_vector(f, code) << "\n";
    }
    return os.str();
}

std::string render_gaussian_table(const GaussianField& gf) {
    std::ostringstream os;
    GaussianInt xi = gf.generator();
    os << "GI(" << gf.q() << "), j^2 = -1, " << kXi << " = " << format_gi(gf, xi)
       << " of order " << gf.order() << "\n";
    for (uint32_t k = 0; k < gf.order(); ++k) {
        os << kXi << "^" << k << " = " << format_gi(gf, gf.pow(xi, k)) << "\n";
    }
    return os.str();
}

std::string render_rational(const Rational& r) {
    std::string s = std::to_string(r.num) + "/" + std::to_string(r.den);
    Rational red = r.reduced();
    if (red.den == 1) return s + " = " + std::to_string(red.num);
    if (red.num == r.num && red.den == r.den) return s;
    return s + " = " + std::to_string(red.num) + "/" + std::to_string(red.den);
}

std::string render_cosets(const CosetPartition& part) {
    std::ostringstream os;
    for (size_t c = 0; c < part.cosets.size(); ++c) {
        os << "C" << part.leaders[c] << " = (";
        for (size_t i = 0; i < part.cosets[c].size(); ++i) {
            if (i) os << ", ";
            os << part.cosets[c][i];
        }
        os << ")\n";
    }
    os << "nu = " << part.nu() << "\n";
    os << "gamma_cc = " << render_rational(compression_ratio(part)) << "\n";
    return os.str();
}

std::string render_code_table(const OpportunisticCode& code) {
    std::ostringstream os;
    os << "code " << code.name() << ", alphabet " << code.alphabet_size() << ", s = "
       << code.short_len() << ", " << (code.instantaneous() ? "prefix-free" : "NOT prefix-free");
    Rational kraft = code.kraft_sum();
    os << ", Kraft sum = " << kraft.num << "/" << kraft.den;
    if (code.complete()) os << " = 1";
    os << "\n";
    for (const CodeSymbol& sym : code.symbols()) {
        std::string label;
        switch (sym.tag) {
            case CodeSymbol::Tag::zero: label = "0"; break;
            case CodeSymbol::Tag::alpha_power: {
                const char* base = code.name() == "B" ? kXi : kAlpha;
                label = sym.k == 0 ? std::string(base) + "^0"
                                   : (sym.k == 1 ? base : std::string(base) + "^" +
                                                              std::to_string(sym.k));
                break;
            }
            case CodeSymbol::Tag::raw: label = std::to_string(sym.k); break;
        }
        os << label << " -> " << sym.word;
        if (sym.opportunistic) os << "  (carries opportunistic bit)";
        os << "\n";
    }
    return os.str();
}

std::string render_spectrum(const ExtensionField& f, std::span<const uint32_t> values) {
    std::ostringstream p, v;
    p << "power : ";
    v << "vector: ";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) {
            p << " ";
            v << " ";
        }
        p << format_power(f, values[i]);
        v << format_vector(f, values[i]);
    }
    return p.str() + "\n" + v.str() + "\n";
}

std::string render_gi_spectrum(const GaussianField& gf, std::span<const uint32_t> packed) {
    std::ostringstream p, v;
    p << "power : ";
    v << "value : ";
    for (size_t i = 0; i < packed.size(); ++i) {
        if (i) {
            p << " ";
            v << ", ";
        }
        GaussianInt a = gf.unpack(packed[i]);
        p << format_gi_power(gf, a);
        v << format_gi(gf, a);
    }
    return p.str() + "\n" + v.str() + "\n";
}

namespace {

std::string join_symbols(const GdmaLink& link, std::span<const uint32_t> values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << " ";
        if (link.field())
            os << format_power(*link.field(), values[i]);
        else if (link.gaussian())
            os << format_gi_power(*link.gaussian(), link.gaussian()->unpack(values[i]));
        else
            os << values[i];
    }
    return os.str();
}

std::string join_users(std::span<const uint32_t> users) {
    std::ostringstream os;
    for (size_t i = 0; i < users.size(); ++i) {
        if (i) os << " ";
        os << users[i];
    }
    return os.str();
}

} // namespace

// codeword groups with the opportunistic bit bracketed: "10[1]" or "[1]10"
std::string render_codeword_bits(const OpportunisticCode& code, std::span<const uint8_t> bits) {
    std::ostringstream os;
    size_t pos = 0;
    bool first = true;
    while (pos < bits.size()) {
        size_t start = pos;
        auto idx = code.parse_one(bits, pos);
        if (!first) os << " ";
        first = false;
        if (!idx) {
            for (size_t i = start; i < bits.size(); ++i) os << int(bits[i]);
            break;
        }
        const CodeSymbol& sym = code.symbols()[*idx];
        size_t len = sym.word.size();
        bool front = sym.opportunistic && code.name() == "A";
        for (size_t i = 0; i < len; ++i) {
            bool bracket = sym.opportunistic && (front ? i == 0 : i + 1 == len);
            if (bracket) os << "[";
            os << int(bits[start + i]);
            if (bracket) os << "]";
        }
    }
    return os.str();
}

std::string render_frame_trace(const GdmaLink& link, const FrameTrace& tr) {
    std::ostringstream os;
    const LinkConfig& cfg = link.config();
    os << "link      : " << transform_name(cfg.transform);
    if (link.field())
        os << " over GF(" << link.field()->size() << ")";
    else if (link.gaussian())
        os << " over GI(" << link.gaussian()->q() << ")";
    os << ", N = " << cfg.n_users << ", mode = " << mode_name(cfg.mode) << ", code = "
       << link.code().name() << ", modulation = " << link.constellation().name() << "\n";
    os << "users in  : " << join_users(tr.users_in) << "\n";
    os << "spectrum  : " << join_symbols(link, tr.spectrum) << "\n";
    if (link.partition()) {
        os << "leaders   : ";
        const CosetPartition& part = *link.partition();
        for (size_t c = 0; c < part.leaders.size(); ++c) {
            if (c) os << " ";
            os << "k=" << part.leaders[c] << ":";
            std::array<uint32_t, 1> one{tr.tx_symbols[c]};
            os << join_symbols(link, one);
        }
        os << "\n";
    }
    os << "tx bits   : " << render_codeword_bits(link.code(), tr.tx_bits) << "\n";
    os << "channel   : " << tr.channel_symbols << " " << link.constellation().name()
       << " symbols, pad bits = " << tr.pad_bits << ", Eb/N0 = ";
    if (std::isinf(tr.ebn0_db))
        os << "inf (noiseless)";
    else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g dB", tr.ebn0_db);
        os << buf;
    }
    os << "\n";
    os << "rx bits   : " << render_codeword_bits(link.code(), tr.rx_bits) << "\n";
    os << "rx symbols: " << join_symbols(link, tr.rx_symbols) << "\n";
    os << "spectrum' : " << join_symbols(link, tr.rx_spectrum) << "\n";
    os << "users out : " << join_users(tr.users_out) << "\n";
    uint32_t errs = 0;
    for (size_t i = 0; i < tr.users_in.size(); ++i) errs += tr.users_in[i] != tr.users_out[i];
    os << "result    : user symbol errors = " << errs << ", undecodable = " << tr.undecodable
       << ", out-of-subfield = " << tr.out_of_subfield << "\n";
    return os.str();
}

std::string render_bound_report(const BoundReport& rep, uint32_t p) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "gamma_cc = %g, SNR = %g (%.2f dB)\n", rep.gamma, rep.snr,
                  10.0 * std::log10(rep.snr));
    os << buf;
    std::snprintf(buf, sizeof buf, "bound: gamma_cc <= log_%u(1 + SNR) = %.4f -> %s\n", p,
                  rep.gamma_max, rep.satisfied ? "satisfied" : "VIOLATED");
    os << buf;
    std::snprintf(buf, sizeof buf, "minimum SNR for this ratio: %g (%.2f dB)\n", rep.min_snr,
                  rep.min_snr_db);
    os << buf;
    return os.str();
}

std::string render_link_budget(const LinkBudget& b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "R = %g bits/s, W = %g Hz\n", b.rate_bits_per_s,
                  b.bandwidth_hz);
    return buf;
}

std::string render_code_analysis(const SpectralCodeReport& rep, const ExtensionField& f,
                                 uint32_t n) {
    std::ostringstream os;
    os << "valid spectra over GF(" << f.size() << "), N = " << n << "\n";
    os << "code size = " << rep.size << "\n";
    os << "GF(2)-linear = " << (rep.linear ? "yes" : "no") << "\n";
    os << "minimum distance = " << rep.min_distance << "\n";
    os << "lightest nonzero codeword (spectrum): ";
    for (size_t i = 0; i < rep.min_weight_spectrum.size(); ++i) {
        if (i) os << " ";
        os << format_power(f, rep.min_weight_spectrum[i]);
    }
    os << "\n";
    os << "its time-domain input: ";
    for (size_t i = 0; i < rep.min_weight_input.size(); ++i) {
        if (i) os << " ";
        os << rep.min_weight_input[i];
    }
    os << "\n";
    return os.str();
}

std::string format_fixed3(double v) {
    double scaled = std::nearbyint(v * 1000.0); // FE_TONEAREST: ties to even
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", scaled / 1000.0);
    return buf;
}

} // namespace gdma
