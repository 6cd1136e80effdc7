// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Error taxonomy shared by the C++ core and the C API layer. Every failure
// mode the library can report maps to one errc value; the C API exposes the
// same numbering through gdma_status.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gdma {

enum class errc : int32_t {
    ok = 0,
    invalid_argument,
    non_prime_modulus,
    non_primitive_polynomial,
    field_mismatch,
    division_by_zero,
    zero_element,
    even_characteristic,
    minus_one_is_residue,
    length_mismatch,
    non_invertible_length,
    non_coprime_length,
    singular_kernel_matrix,
    invalid_spectrum,
    unknown_code,
    not_power_of_two,
    non_instantaneous_code,
    incomplete_code,
    unknown_symbol,
    invalid_constellation,
    negative_snr,
    invalid_probability,
    enumeration_too_large,
    config_invalid,
    undecodable_symbol,
    budget_exhausted,
    io_error,
    internal,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace gdma
