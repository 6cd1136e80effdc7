// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Human-readable rendering: tables, spectra in power notation, frame traces.
// The CLI prints these strings verbatim and the golden-file tests freeze
// them, so formatting changes here are contract changes.

#pragma once

#include "cyclotomic.hpp"
#include "field.hpp"
#include "gaussian.hpp"
#include "link.hpp"
#include "transcoder.hpp"

#include <string>

namespace gdma {

// "0", "1", "2", "j", "2j", "1 + j", "2 + 2j", ...
std::string format_gi(const GaussianField& gf, GaussianInt a);

// power notation: "0", "1", "α", "α^2", ...
std::string format_power(const ExtensionField& f, uint32_t code);
std::string format_gi_power(const GaussianField& gf, GaussianInt a);

// coefficient digits, highest degree first: GF(16) code 3 -> "0011"
std::string format_vector(const ExtensionField& f, uint32_t code);

std::string render_field_table(const ExtensionField& f);
std::string render_gaussian_table(const GaussianField& gf);
std::string render_cosets(const CosetPartition& part);
std::string render_code_table(const OpportunisticCode& code);

// two lines: power notation and vector notation
std::string render_spectrum(const ExtensionField& f, std::span<const uint32_t> values);
std::string render_gi_spectrum(const GaussianField& gf, std::span<const uint32_t> packed);

// codeword groups with the opportunistic bit bracketed: "101 100 1[1] 011 1[1]"
std::string render_codeword_bits(const OpportunisticCode& code, std::span<const uint8_t> bits);

std::string render_rational(const Rational& r); // "15/5 = 3" or "8/6 = 4/3"

std::string render_frame_trace(const GdmaLink& link, const FrameTrace& tr);

std::string render_bound_report(const BoundReport& rep, uint32_t p);
std::string render_link_budget(const LinkBudget& b);

std::string render_code_analysis(const SpectralCodeReport& rep, const ExtensionField& f,
                                 uint32_t n);

// round-half-even to three decimals, e.g. 1.5625 -> "1.562"
std::string format_fixed3(double v);

} // namespace gdma
