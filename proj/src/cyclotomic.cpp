// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cyclotomic.hpp"
#include "rng.hpp"
#include "transforms.hpp"

#include <algorithm>
#include <cmath>

namespace gdma {

CosetPartition cosets_with_multiplier(uint32_t n, uint32_t c) {
    require(n >= 1, errc::invalid_argument, "coset modulus must be >= 1");
    c %= n;
    require(std::gcd(c, n) == 1, errc::non_coprime_length,
            "multiplier " + std::to_string(c) + " shares a factor with n = " +
                std::to_string(n) + ", orbits do not partition Z_n");
    CosetPartition part;
    part.n = n;
    part.multiplier = c;
    std::vector<bool> seen(n, false);
    for (uint32_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<uint32_t> orbit;
        uint32_t k = start;
        do {
            seen[k] = true;
            orbit.push_back(k);
            k = static_cast<uint32_t>((static_cast<uint64_t>(k) * c) % n);
        } while (k != start);
        // start is the smallest unseen element, hence the orbit leader
        part.leaders.push_back(start);
        part.cosets.push_back(std::move(orbit));
    }
    return part;
}

CosetPartition cyclotomic_cosets(uint32_t n, uint32_t p) {
    require(is_prime(p), errc::non_prime_modulus,
            "p = " + std::to_string(p) + " must be prime");
    require(n % p != 0, errc::non_coprime_length,
            "n = " + std::to_string(n) + " and p = " + std::to_string(p) +
                " are not coprime");
    return cosets_with_multiplier(n, p % n);
}

Rational compression_ratio(const CosetPartition& part) {
    return {static_cast<int64_t>(part.n), static_cast<int64_t>(part.nu())};
}

std::vector<uint32_t> expand_spectrum(const ExtensionField& f, std::span<const uint32_t> leaders,
                                      const CosetPartition& part) {
    require(leaders.size() == part.nu(), errc::length_mismatch,
            "leader count does not match the coset partition");
    std::vector<uint32_t> out(part.n, 0);
    for (size_t c = 0; c < part.cosets.size(); ++c) {
        uint32_t val = leaders[c];
        f.check_element(val);
        for (uint32_t idx : part.cosets[c]) {
            out[idx] = val;
            val = f.pow(val, f.p());
        }
    }
    return out;
}

std::vector<GaussianInt> expand_spectrum(const GaussianField& gf,
                                         std::span<const GaussianInt> leaders,
                                         const CosetPartition& part) {
    require(leaders.size() == part.nu(), errc::length_mismatch,
            "leader count does not match the coset partition");
    std::vector<GaussianInt> out(part.n, gf.zero());
    for (size_t c = 0; c < part.cosets.size(); ++c) {
        GaussianInt val = leaders[c];
        gf.check_element(val);
        for (uint32_t idx : part.cosets[c]) {
            out[idx] = val;
            val = gf.pow(val, gf.q());
        }
    }
    return out;
}

double shannon_bound(double snr, uint32_t p) {
    require(snr >= 0.0, errc::negative_snr, "SNR must be non-negative");
    require(p >= 2, errc::invalid_argument, "p must be >= 2");
    return std::log2(1.0 + snr) / std::log2(static_cast<double>(p));
}

double min_snr_for_ratio(double gamma, uint32_t p) {
    require(gamma > 0.0, errc::invalid_argument, "compression ratio must be positive");
    require(p >= 2, errc::invalid_argument, "p must be >= 2");
    return std::pow(static_cast<double>(p), gamma) - 1.0;
}

BoundReport check_bound(Rational gamma, double snr, uint32_t p) {
    BoundReport rep{};
    rep.gamma = gamma.value();
    rep.snr = snr;
    rep.gamma_max = shannon_bound(snr, p);
    rep.satisfied = rep.gamma <= rep.gamma_max;
    rep.min_snr = min_snr_for_ratio(rep.gamma, p);
    rep.min_snr_db = 10.0 * std::log10(rep.min_snr);
    return rep;
}

LinkBudget link_budget(uint32_t n, uint32_t p, double symbol_duration_s, Rational gamma) {
    require(symbol_duration_s > 0.0, errc::invalid_argument,
            "symbol duration must be positive");
    require(n >= 1, errc::invalid_argument, "frame length must be >= 1");
    require(p >= 2, errc::invalid_argument, "p must be >= 2");
    require(gamma.value() > 0.0, errc::invalid_argument, "compression ratio must be positive");
    LinkBudget b{};
    b.rate_bits_per_s = n * std::log2(static_cast<double>(p)) / (2.0 * symbol_duration_s);
    b.bandwidth_hz = n / (2.0 * symbol_duration_s * gamma.value());
    return b;
}

SpectralCodeReport enumerate_valid_spectra(const ExtensionField& f, uint32_t n) {
    require(f.p() == 2, errc::invalid_argument,
            "spectrum enumeration is implemented for characteristic 2");
    require(n <= 16, errc::enumeration_too_large,
            "2^n spectra with n > 16 exceed the desk-scale enumeration guard");
    FfftPlan plan(f, n);

    const uint64_t count = 1ull << n;
    std::vector<std::vector<uint32_t>> spectra;
    spectra.reserve(count);
    std::vector<uint32_t> v(n);
    for (uint64_t word = 0; word < count; ++word) {
        for (uint32_t i = 0; i < n; ++i) v[i] = (word >> i) & 1u;
        spectra.push_back(plan.forward(v));
    }

    SpectralCodeReport rep;
    {
        auto sorted = spectra;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        rep.size = sorted.size();
    }

    // GF(2)-linearity: closed under componentwise addition. Exhaustive for
    // small codes, randomized pairs otherwise (the full check is quadratic).
    auto add_vec = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> s(n);
        for (uint32_t i = 0; i < n; ++i) s[i] = f.add(a[i], b[i]);
        return s;
    };
    auto sorted = spectra;
    std::sort(sorted.begin(), sorted.end());
    auto contains = [&](const std::vector<uint32_t>& x) {
        return std::binary_search(sorted.begin(), sorted.end(), x);
    };
    rep.linear = true;
    if (count <= 256) {
        for (size_t a = 0; a < spectra.size() && rep.linear; ++a)
            for (size_t b = a; b < spectra.size() && rep.linear; ++b)
                rep.linear = contains(add_vec(spectra[a], spectra[b]));
    } else {
        uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&]() {
            state = mix64(state);
            return state;
        };
        for (int t = 0; t < 4096 && rep.linear; ++t) {
            size_t a = next() % spectra.size();
            size_t b = next() % spectra.size();
            rep.linear = contains(add_vec(spectra[a], spectra[b]));
        }
    }

    // By linearity the minimum distance is the minimum nonzero Hamming weight.
    uint32_t best = n + 1;
    uint64_t best_word = 0;
    for (uint64_t word = 1; word < count; ++word) {
        uint32_t w = 0;
        for (uint32_t k = 0; k < n; ++k) w += spectra[word][k] != 0;
        if (w < best) {
            best = w;
            best_word = word;
        }
    }
    rep.min_distance = best;
    rep.min_weight_spectrum = spectra[best_word];
    rep.min_weight_input.resize(n);
    for (uint32_t i = 0; i < n; ++i) rep.min_weight_input[i] = (best_word >> i) & 1u;
    return rep;
}

} // namespace gdma
