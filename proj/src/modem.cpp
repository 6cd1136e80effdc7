// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "modem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace gdma {

Modulation modulation_from_name(std::string_view name) {
    if (name == "bpsk") return Modulation::bpsk;
    if (name == "qpsk") return Modulation::qpsk;
    if (name == "8psk") return Modulation::psk8;
    if (name == "16qam") return Modulation::qam16;
    if (name == "32qam") return Modulation::qam32;
    if (name == "64qam") return Modulation::qam64;
    fail(errc::invalid_constellation, "unknown modulation \"" + std::string(name) +
                                          "\" (expected bpsk, qpsk, 8psk, 16qam, 32qam, 64qam)");
}

const char* modulation_name(Modulation m) noexcept {
    switch (m) {
        case Modulation::bpsk: return "bpsk";
        case Modulation::qpsk: return "qpsk";
        case Modulation::psk8: return "8psk";
        case Modulation::qam16: return "16qam";
        case Modulation::qam32: return "32qam";
        case Modulation::qam64: return "64qam";
    }
    return "?";
}

Constellation::Constellation(Modulation kind, std::string name,
                             std::vector<std::complex<double>> pts,
                             std::vector<uint32_t> labels)
    : kind_(kind), name_(std::move(name)), points_(std::move(pts)),
      label_of_point_(std::move(labels)) {
    uint32_t m = order();
    bits_ = 0;
    while ((1u << bits_) < m) ++bits_;
    require((1u << bits_) == m, errc::invalid_constellation,
            "constellation order must be a power of two");
    point_of_label_.assign(m, 0);
    std::vector<bool> seen(m, false);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t l = label_of_point_[i];
        require(l < m && !seen[l], errc::invalid_constellation, "labels must be a permutation");
        seen[l] = true;
        point_of_label_[l] = i;
    }
}

namespace {

// reflected Gray code on b bits
uint32_t gray(uint32_t k) { return k ^ (k >> 1); }

// levels indexed so that Gray label 0 sits on the most positive amplitude
// (an all-zero label maps to the (+, +) quadrant, e.g. QPSK 00 -> (1+i)/sqrt 2)
std::vector<double> pam_levels(uint32_t count) {
    std::vector<double> lv(count);
    for (uint32_t i = 0; i < count; ++i)
        lv[i] = static_cast<double>(count - 1) - 2.0 * i;
    return lv;
}

Constellation make_bpsk() {
    return {Modulation::bpsk, "bpsk", {{1.0, 0.0}, {-1.0, 0.0}}, {0, 1}};
}

// Square QAM on 2^(2b) points (QPSK is the b = 1 case): independent
// Gray-mapped PAM per axis, first b label bits on I, scaled to unit energy.
Constellation make_square_qam(Modulation kind, const char* name, uint32_t bits_per_axis) {
    uint32_t side = 1u << bits_per_axis;
    std::vector<double> lv = pam_levels(side);
    double energy = 0.0;
    for (double x : lv) energy += x * x;
    energy = 2.0 * energy / side; // two axes
    double scale = 1.0 / std::sqrt(energy);

    std::vector<std::complex<double>> pts;
    std::vector<uint32_t> labels;
    for (uint32_t i = 0; i < side; ++i) {
        for (uint32_t j = 0; j < side; ++j) {
            pts.emplace_back(lv[i] * scale, lv[j] * scale);
            labels.push_back((gray(i) << bits_per_axis) | gray(j));
        }
    }
    return {kind, name, std::move(pts), std::move(labels)};
}

Constellation make_8psk() {
    std::vector<std::complex<double>> pts;
    std::vector<uint32_t> labels;
    for (uint32_t k = 0; k < 8; ++k) {
        double ang = 2.0 * M_PI * k / 8.0;
        pts.emplace_back(std::cos(ang), std::sin(ang));
        labels.push_back(gray(k));
    }
    return {Modulation::psk8, "8psk", std::move(pts), std::move(labels)};
}

// 32-point cross: the 6x6 grid minus its four corners, natural labeling.
Constellation make_32qam() {
    std::vector<double> lv = pam_levels(6);
    std::vector<std::complex<double>> pts;
    double energy = 0.0;
    for (uint32_t i = 0; i < 6; ++i) {
        for (uint32_t j = 0; j < 6; ++j) {
            bool corner = (i == 0 || i == 5) && (j == 0 || j == 5);
            if (corner) continue;
            pts.emplace_back(lv[i], lv[j]);
            energy += lv[i] * lv[i] + lv[j] * lv[j];
        }
    }
    double scale = 1.0 / std::sqrt(energy / pts.size());
    std::vector<uint32_t> labels(pts.size());
    for (uint32_t k = 0; k < pts.size(); ++k) {
        pts[k] *= scale;
        labels[k] = k;
    }
    return {Modulation::qam32, "32qam", std::move(pts), std::move(labels)};
}

} // namespace

const Constellation& Constellation::get(Modulation m) {
    static const Constellation bpsk = make_bpsk();
    static const Constellation qpsk = make_square_qam(Modulation::qpsk, "qpsk", 1);
    static const Constellation psk8 = make_8psk();
    static const Constellation qam16 = make_square_qam(Modulation::qam16, "16qam", 2);
    static const Constellation qam32 = make_32qam();
    static const Constellation qam64 = make_square_qam(Modulation::qam64, "64qam", 3);
    switch (m) {
        case Modulation::bpsk: return bpsk;
        case Modulation::qpsk: return qpsk;
        case Modulation::psk8: return psk8;
        case Modulation::qam16: return qam16;
        case Modulation::qam32: return qam32;
        case Modulation::qam64: return qam64;
    }
    fail(errc::invalid_constellation, "unknown modulation id");
}

bool Constellation::exact_ser() const noexcept {
    switch (kind_) {
        case Modulation::bpsk:
        case Modulation::qpsk:
        case Modulation::qam16:
        case Modulation::qam64: return true;
        default: return false;
    }
}

double Constellation::average_energy() const noexcept {
    double e = 0.0;
    for (const auto& p : points_) e += std::norm(p);
    return e / points_.size();
}

double Constellation::min_distance() const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (size_t a = 0; a < points_.size(); ++a)
        for (size_t b = a + 1; b < points_.size(); ++b)
            best = std::min(best, std::abs(points_[a] - points_[b]));
    return best;
}

double Constellation::average_neighbours() const noexcept {
    double d = min_distance();
    double total = 0.0;
    for (size_t a = 0; a < points_.size(); ++a)
        for (size_t b = 0; b < points_.size(); ++b)
            if (a != b && std::abs(points_[a] - points_[b]) < d * (1.0 + 1e-9)) total += 1.0;
    return total / points_.size();
}

std::vector<std::complex<double>> modulate(const Constellation& c, std::span<const uint8_t> bits,
                                           uint32_t& pad_bits) {
    const uint32_t bps = c.bits_per_symbol();
    const size_t nsym = (bits.size() + bps - 1) / bps;
    pad_bits = static_cast<uint32_t>(nsym * bps - bits.size());
    std::vector<std::complex<double>> out;
    out.reserve(nsym);
    size_t pos = 0;
    for (size_t s = 0; s < nsym; ++s) {
        uint32_t label = 0;
        for (uint32_t b = 0; b < bps; ++b) {
            uint8_t bit = (pos < bits.size()) ? bits[pos] : 0;
            require(bit <= 1, errc::invalid_argument, "bit values must be 0 or 1");
            label = (label << 1) | bit;
            ++pos;
        }
        out.push_back(c.points()[c.point_of_label(label)]);
    }
    return out;
}

void add_awgn(std::span<std::complex<double>> samples, double n0, Philox& rng) {
    require(n0 >= 0.0, errc::invalid_argument, "noise density must be non-negative");
    if (n0 == 0.0) return;
    const double sigma = std::sqrt(n0 / 2.0);
    for (auto& s : samples)
        s += std::complex<double>(sigma * rng.next_gaussian(), sigma * rng.next_gaussian());
}

uint32_t nearest_point(const Constellation& c, std::complex<double> y) {
    const auto& pts = c.points();
    uint32_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (uint32_t i = 0; i < pts.size(); ++i) {
        double d = std::norm(y - pts[i]);
        if (d < best_d) { // strict: ties stay with the lowest index
            best_d = d;
            best = i;
        }
    }
    return best;
}

std::vector<uint8_t> demodulate(const Constellation& c,
                                std::span<const std::complex<double>> samples) {
    const uint32_t bps = c.bits_per_symbol();
    std::vector<uint8_t> bits;
    bits.reserve(samples.size() * bps);
    for (const auto& y : samples) {
        uint32_t label = c.label_of_point(nearest_point(c, y));
        for (uint32_t b = 0; b < bps; ++b)
            bits.push_back(static_cast<uint8_t>((label >> (bps - 1 - b)) & 1u));
    }
    return bits;
}

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double theoretical_ser(const Constellation& c, double esn0) {
    require(esn0 >= 0.0, errc::negative_snr, "Es/N0 must be non-negative");
    switch (c.kind()) {
        case Modulation::bpsk:
            return qfunc(std::sqrt(2.0 * esn0));
        case Modulation::qpsk: {
            double p = qfunc(std::sqrt(esn0));
            return 2.0 * p - p * p;
        }
        case Modulation::psk8:
            return 2.0 * qfunc(std::sqrt(2.0 * esn0) * std::sin(M_PI / 8.0));
        case Modulation::qam16:
        case Modulation::qam64: {
            double m = c.order();
            double a = 1.0 - 1.0 / std::sqrt(m);
            double arg = std::sqrt(3.0 * esn0 / (m - 1.0));
            double inner = 1.0 - 2.0 * a * qfunc(arg);
            return 1.0 - inner * inner;
        }
        case Modulation::qam32: {
            // nearest-neighbour union estimate from the actual geometry,
            // clipped since the union bound exceeds 1 at low SNR
            double d = c.min_distance();
            double nbar = c.average_neighbours();
            return std::min(1.0, nbar * qfunc(std::sqrt(d * d * esn0 / 2.0)));
        }
    }
    fail(errc::invalid_constellation, "unknown modulation id");
}

} // namespace gdma
