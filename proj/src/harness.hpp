// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded Monte Carlo BER/SER/FER estimation. Frames are simulated in fixed
// batches; every frame owns a counter-based RNG stream keyed by (master
// seed, point key, frame index), so sharding a batch across worker threads
// cannot change any sampled value, and stop decisions taken only at batch
// boundaries cannot depend on the worker count either. Counters merge by
// integer addition in worker order.

#pragma once

#include "errors.hpp"
#include "link.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gdma {

struct StopRule {
    uint64_t min_bits = 1'000'000; // must be >= 1000
    uint64_t min_errors = 200;
    uint64_t max_bits = 100'000'000; // hard cap; reaching it flags the record
};

struct SimulationSpec {
    LinkConfig link;                      // base; mode/modulation swept below
    std::vector<SpectrumMode> modes;      // defaults to {link.mode}
    std::vector<Modulation> modulations;  // defaults to {link.modulation}
    std::vector<double> ebn0_points_db;   // strictly increasing; +inf = noiseless
    StopRule stop;
    uint64_t master_seed = 1;
    uint32_t workers = 1;
};

struct BerRecord {
    std::string mode;
    std::string modulation;
    std::string transform;
    uint32_t n_users = 0;
    double ebn0_db = 0.0;
    uint64_t bits_observed = 0;
    uint64_t bit_errors = 0;
    double ber = 0.0;
    uint64_t symbols_observed = 0;
    uint64_t symbol_errors = 0;
    double ser = 0.0;
    uint64_t frames = 0;
    uint64_t frame_errors = 0;
    double fer = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    uint64_t seed = 0;
    bool budget_exhausted = false; // min_errors unreachable within max_bits
};

// 95% Wilson score interval for a binomial proportion.
std::pair<double, double> confidence_interval(uint64_t errors, uint64_t trials);

void validate(const SimulationSpec& spec);

// One sweep point. The RNG point key is derived from (mode, modulation,
// ebn0), so the result does not depend on the point's position in a sweep.
BerRecord run_point(const GdmaLink& link, const StopRule& stop, double ebn0_db,
                    uint64_t master_seed, uint32_t workers);
BerRecord run_point(const SimulationSpec& spec, double ebn0_db);

// mode-major, then modulation, then Eb/N0 point
std::vector<BerRecord> sweep(const SimulationSpec& spec);

std::string to_csv(std::span<const BerRecord> records);

// Per-constellation hard-decision SER check of the modem alone.
std::string modem_selftest_csv(std::span<const double> esn0_points_db,
                               uint64_t symbols_per_point, uint64_t seed);

} // namespace gdma
