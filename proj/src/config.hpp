// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Flat key-value config for simulation sweeps. One `key = value` pair per
// line, '#' starts a comment, lists are comma separated. Unknown keys are
// hard errors. Keys mirror the SimulationSpec fields:
//
//   transform       ffft | ffht | none
//   p, m            FFFT field parameters
//   poly            modulus coefficients, highest degree first (e.g. 1,0,0,1,1)
//   q               GI(q) characteristic for FFHT
//   n_users         transform length N
//   modes           FS,CC (any subset)
//   modulations     bpsk,qpsk,8psk,16qam,32qam,64qam
//   code            direct | A' | B
//   energy          per_info_bit | per_channel_bit
//   symbol_duration seconds (default 1.0)
//   ebn0_db         sweep points, strictly increasing; "inf" disables noise
//   min_bits, min_errors, max_bits   stop rule
//   master_seed     RNG seed
//   workers         worker threads

#pragma once

#include "harness.hpp"

#include <string>
#include <string_view>

namespace gdma {

SimulationSpec parse_simulation_spec(std::string_view text);

} // namespace gdma
