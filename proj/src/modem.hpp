// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Baseband digital modem: unit-average-energy constellations, bit mapping,
// AWGN, hard nearest-point decisions, and closed-form symbol error rates.
//
// Bit conventions: labels are read MSB first; QPSK/16-QAM/64-QAM use
// per-axis reflected Gray mapping with the first half of the label on the
// in-phase axis; 8-PSK uses binary-reflected Gray around the circle; 32-QAM
// (cross) uses natural labeling in point order since no Gray code exists on
// the cross without penalty, and only its SER is quoted.

#pragma once

#include "errors.hpp"
#include "rng.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gdma {

enum class Modulation { bpsk, qpsk, psk8, qam16, qam32, qam64 };

Modulation modulation_from_name(std::string_view name); // lowercase names
const char* modulation_name(Modulation m) noexcept;

class Constellation {
public:
    static const Constellation& get(Modulation m);

    Modulation kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    uint32_t order() const noexcept { return static_cast<uint32_t>(points_.size()); }
    uint32_t bits_per_symbol() const noexcept { return bits_; }
    const std::vector<std::complex<double>>& points() const noexcept { return points_; }
    uint32_t label_of_point(uint32_t idx) const { return label_of_point_[idx]; }
    uint32_t point_of_label(uint32_t label) const { return point_of_label_[label]; }

    // true when theoretical_ser() below is exact rather than nearest-neighbour
    bool exact_ser() const noexcept;

    double average_energy() const noexcept; // should be 1 within fp error
    double min_distance() const noexcept;
    double average_neighbours() const noexcept; // at min distance

    Constellation(Modulation kind, std::string name, std::vector<std::complex<double>> pts,
                  std::vector<uint32_t> labels);

private:
    Modulation kind_;
    std::string name_;
    uint32_t bits_ = 0;
    std::vector<std::complex<double>> points_;
    std::vector<uint32_t> label_of_point_;
    std::vector<uint32_t> point_of_label_;
};

// Bits (values 0/1) to symbols, MSB first per label; the last symbol is
// zero-padded, pad_bits reports how many filler bits were appended.
std::vector<std::complex<double>> modulate(const Constellation& c, std::span<const uint8_t> bits,
                                           uint32_t& pad_bits);

// Complex AWGN with variance n0/2 per real dimension; n0 = 0 is a no-op.
void add_awgn(std::span<std::complex<double>> samples, double n0, Philox& rng);

// Hard nearest-point decisions; ties resolve to the lowest point index.
std::vector<uint8_t> demodulate(const Constellation& c,
                                std::span<const std::complex<double>> samples);
uint32_t nearest_point(const Constellation& c, std::complex<double> y);

double qfunc(double x); // Gaussian tail

// Symbol error rate at the given Es/N0 (linear). Exact for BPSK, QPSK and
// square QAM; standard approximations for 8-PSK and cross 32-QAM.
double theoretical_ser(const Constellation& c, double esn0);

} // namespace gdma
