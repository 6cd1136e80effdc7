// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Cyclotomic cosets mod N and the spectrum compression built on them: a
// valid transform spectrum of a ground-field-valued signal is determined by
// its values at the coset leaders, the rest following from the Frobenius
// rule V_{ck mod N} = V_k^p. Also the Shannon-type bound on the compression
// ratio and the frame rate/bandwidth budget derived from it.

#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "gaussian.hpp"

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace gdma {

struct CosetPartition {
    uint32_t n = 0;
    uint32_t multiplier = 0; // orbit map k -> multiplier * k mod n
    std::vector<std::vector<uint32_t>> cosets; // orbit order from each leader; sorted by leader
    std::vector<uint32_t> leaders;

    uint32_t nu() const noexcept { return static_cast<uint32_t>(cosets.size()); }
};

// Orbits of k -> c*k mod n on Z_n. gcd(c, n) must be 1 for the map to permute.
CosetPartition cosets_with_multiplier(uint32_t n, uint32_t c);

// Classical cyclotomic cosets: multiplier = characteristic p mod n.
CosetPartition cyclotomic_cosets(uint32_t n, uint32_t p);

// Exact compression ratio N / nu, kept as a fraction for display and tests.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    Rational reduced() const noexcept {
        int64_t g = std::gcd(num, den);
        return g ? Rational{num / g, den / g} : *this;
    }
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational compression_ratio(const CosetPartition& part);

// Keep the spectrum values at the coset leaders, in leader order.
template <typename T>
std::vector<T> compress_spectrum(std::span<const T> big_v, const CosetPartition& part) {
    require(big_v.size() == part.n, errc::length_mismatch,
            "spectrum length does not match the coset modulus");
    std::vector<T> out;
    out.reserve(part.leaders.size());
    for (uint32_t l : part.leaders) out.push_back(big_v[l]);
    return out;
}

// Rebuild a full spectrum from leader values by walking each orbit and
// raising to the p-th power at every step.
std::vector<uint32_t> expand_spectrum(const ExtensionField& f, std::span<const uint32_t> leaders,
                                      const CosetPartition& part);
std::vector<GaussianInt> expand_spectrum(const GaussianField& gf,
                                         std::span<const GaussianInt> leaders,
                                         const CosetPartition& part);

// gamma_cc <= log_p(1 + SNR)
double shannon_bound(double snr, uint32_t p);
double min_snr_for_ratio(double gamma, uint32_t p); // p^gamma - 1

struct BoundReport {
    double gamma;       // achieved ratio
    double snr;         // operating SNR (linear)
    double gamma_max;   // log_p(1 + snr)
    bool satisfied;     // gamma <= gamma_max
    double min_snr;     // SNR needed for this gamma (linear)
    double min_snr_db;
};

BoundReport check_bound(Rational gamma, double snr, uint32_t p);

// Frame rate R = N log2(p) / (2T) bits/s and bandwidth W = N / (2 T gamma) Hz.
struct LinkBudget {
    double rate_bits_per_s;
    double bandwidth_hz;
};

LinkBudget link_budget(uint32_t n, uint32_t p, double symbol_duration_s, Rational gamma);

// Exhaustive enumeration of the spectra of all GF(2)^n signals under the
// length-n transform over f. The image is a GF(2)-linear code of size 2^n.
struct SpectralCodeReport {
    uint64_t size = 0;
    bool linear = false;
    uint32_t min_distance = 0;
    std::vector<uint32_t> min_weight_spectrum;
    std::vector<uint32_t> min_weight_input; // preimage of the lightest nonzero codeword
};

SpectralCodeReport enumerate_valid_spectra(const ExtensionField& f, uint32_t n);

} // namespace gdma
