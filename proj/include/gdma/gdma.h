/* SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the GDMA laboratory: finite fields, Gaussian-integer
 * fields, finite-field Fourier/Hartley transforms, cyclotomic compression,
 * binary transcoding, a baseband modem and a Monte Carlo BER harness.
 *
 * Conventions
 *   - Every fallible call returns gdma_status; GDMA_OK is 0. On failure a
 *     thread-local message is available from gdma_last_error().
 *   - GF(p^m) elements are uint32_t codes: the coefficient vector packed in
 *     base p, constant term in the lowest digit. GI(q) elements are (re, im)
 *     pairs, or re*q + im when a single packed value is called for.
 *   - Polynomials are passed constant term first and must be monic.
 *   - Strings returned through char** are heap-allocated; release them with
 *     gdma_string_free().
 */

#ifndef GDMA_H
#define GDMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GDMA_API __declspec(dllexport)
#else
#define GDMA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdma_status {
    GDMA_OK = 0,
    GDMA_ERR_INVALID_ARGUMENT,
    GDMA_ERR_NON_PRIME_MODULUS,
    GDMA_ERR_NON_PRIMITIVE_POLYNOMIAL,
    GDMA_ERR_FIELD_MISMATCH,
    GDMA_ERR_DIVISION_BY_ZERO,
    GDMA_ERR_ZERO_ELEMENT,
    GDMA_ERR_EVEN_CHARACTERISTIC,
    GDMA_ERR_MINUS_ONE_IS_RESIDUE,
    GDMA_ERR_LENGTH_MISMATCH,
    GDMA_ERR_NON_INVERTIBLE_LENGTH,
    GDMA_ERR_NON_COPRIME_LENGTH,
    GDMA_ERR_SINGULAR_KERNEL_MATRIX,
    GDMA_ERR_INVALID_SPECTRUM,
    GDMA_ERR_UNKNOWN_CODE,
    GDMA_ERR_NOT_POWER_OF_TWO,
    GDMA_ERR_NON_INSTANTANEOUS_CODE,
    GDMA_ERR_INCOMPLETE_CODE,
    GDMA_ERR_UNKNOWN_SYMBOL,
    GDMA_ERR_INVALID_CONSTELLATION,
    GDMA_ERR_NEGATIVE_SNR,
    GDMA_ERR_INVALID_PROBABILITY,
    GDMA_ERR_ENUMERATION_TOO_LARGE,
    GDMA_ERR_CONFIG_INVALID,
    GDMA_ERR_UNDECODABLE_SYMBOL,
    GDMA_ERR_BUDGET_EXHAUSTED,
    GDMA_ERR_IO,
    GDMA_ERR_INTERNAL
} gdma_status;

GDMA_API const char* gdma_status_name(gdma_status s);
GDMA_API const char* gdma_last_error(void); /* thread-local, valid until next call */
GDMA_API const char* gdma_version(void);
GDMA_API void gdma_string_free(char* s);
GDMA_API void gdma_buffer_free(void* buf);

/* ---- GF(p^m) ---------------------------------------------------------- */

typedef struct gdma_field gdma_field;

/* poly = NULL picks the shipped default (exists for (2,4) and (2,3) only) */
GDMA_API gdma_status gdma_field_create(uint32_t p, uint32_t m, const uint32_t* poly,
                                       size_t poly_len, gdma_field** out);
GDMA_API void gdma_field_destroy(gdma_field* f);

GDMA_API uint32_t gdma_field_p(const gdma_field* f);
GDMA_API uint32_t gdma_field_m(const gdma_field* f);
GDMA_API uint32_t gdma_field_size(const gdma_field* f);
GDMA_API uint32_t gdma_field_order(const gdma_field* f);

GDMA_API gdma_status gdma_field_add(const gdma_field* f, uint32_t a, uint32_t b, uint32_t* out);
GDMA_API gdma_status gdma_field_sub(const gdma_field* f, uint32_t a, uint32_t b, uint32_t* out);
GDMA_API gdma_status gdma_field_mul(const gdma_field* f, uint32_t a, uint32_t b, uint32_t* out);
GDMA_API gdma_status gdma_field_div(const gdma_field* f, uint32_t a, uint32_t b, uint32_t* out);
GDMA_API gdma_status gdma_field_inv(const gdma_field* f, uint32_t a, uint32_t* out);
GDMA_API gdma_status gdma_field_pow(const gdma_field* f, uint32_t a, int64_t e, uint32_t* out);
GDMA_API gdma_status gdma_field_alpha_pow(const gdma_field* f, int64_t k, uint32_t* out);
GDMA_API gdma_status gdma_field_log(const gdma_field* f, uint32_t a, uint32_t* out);
GDMA_API gdma_status gdma_field_element_order(const gdma_field* f, uint32_t a, uint32_t* out);

GDMA_API gdma_status gdma_field_render_table(const gdma_field* f, char** out);
GDMA_API gdma_status gdma_field_render_spectrum(const gdma_field* f, const uint32_t* v,
                                                size_t n, char** out);

/* ---- GI(q) ------------------------------------------------------------ */

typedef struct gdma_gaussian gdma_gaussian;

GDMA_API gdma_status gdma_gaussian_create(uint32_t q, gdma_gaussian** out);
GDMA_API void gdma_gaussian_destroy(gdma_gaussian* g);
GDMA_API uint32_t gdma_gaussian_q(const gdma_gaussian* g);

GDMA_API gdma_status gdma_gaussian_add(const gdma_gaussian* g, uint32_t are, uint32_t aim,
                                       uint32_t bre, uint32_t bim, uint32_t* re, uint32_t* im);
GDMA_API gdma_status gdma_gaussian_mul(const gdma_gaussian* g, uint32_t are, uint32_t aim,
                                       uint32_t bre, uint32_t bim, uint32_t* re, uint32_t* im);
GDMA_API gdma_status gdma_gaussian_inv(const gdma_gaussian* g, uint32_t are, uint32_t aim,
                                       uint32_t* re, uint32_t* im);
GDMA_API gdma_status gdma_gaussian_pow(const gdma_gaussian* g, uint32_t are, uint32_t aim,
                                       int64_t e, uint32_t* re, uint32_t* im);
GDMA_API gdma_status gdma_gaussian_generator(const gdma_gaussian* g, uint32_t* re, uint32_t* im);
GDMA_API gdma_status gdma_gaussian_element_order(const gdma_gaussian* g, uint32_t re,
                                                 uint32_t im, uint32_t* out);

GDMA_API gdma_status gdma_gaussian_render_table(const gdma_gaussian* g, char** out);
/* packed = re*q + im, n entries */
GDMA_API gdma_status gdma_gaussian_render_spectrum(const gdma_gaussian* g,
                                                   const uint32_t* packed, size_t n,
                                                   char** out);

/* ---- transforms -------------------------------------------------------- */

/* in and out are length n; n must divide p^m - 1 (resp. q^2 - 1) */
GDMA_API gdma_status gdma_ffft(const gdma_field* f, const uint32_t* in, size_t n,
                               uint32_t* out);
GDMA_API gdma_status gdma_iffft(const gdma_field* f, const uint32_t* in, size_t n,
                                uint32_t* out);
/* ffht input: GF(q) symbols; output packed GI values re*q+im. iffht both packed. */
GDMA_API gdma_status gdma_ffht(const gdma_gaussian* g, const uint32_t* in, size_t n,
                               uint32_t* out_packed);
GDMA_API gdma_status gdma_iffht(const gdma_gaussian* g, const uint32_t* in_packed, size_t n,
                                uint32_t* out_packed);

/* ---- cyclotomic cosets, bound, budget ---------------------------------- */

typedef struct gdma_cosets gdma_cosets;

GDMA_API gdma_status gdma_cosets_create(uint32_t n, uint32_t p, gdma_cosets** out);
GDMA_API void gdma_cosets_destroy(gdma_cosets* c);
GDMA_API uint32_t gdma_cosets_count(const gdma_cosets* c);
GDMA_API gdma_status gdma_cosets_members(const gdma_cosets* c, uint32_t idx,
                                         const uint32_t** members, size_t* len,
                                         uint32_t* leader);
GDMA_API gdma_status gdma_cosets_gamma(const gdma_cosets* c, int64_t* num, int64_t* den);
GDMA_API gdma_status gdma_cosets_render(const gdma_cosets* c, char** out);

GDMA_API gdma_status gdma_check_bound(int64_t gamma_num, int64_t gamma_den, double snr,
                                      uint32_t p, char** report);
GDMA_API gdma_status gdma_link_budget_render(uint32_t n, uint32_t p, double symbol_duration_s,
                                             int64_t gamma_num, int64_t gamma_den,
                                             double* rate_bits_per_s, double* bandwidth_hz,
                                             char** report);

/* enumerate the image of GF(2)^n under the length-n transform over f */
GDMA_API gdma_status gdma_code_analysis(const gdma_field* f, uint32_t n, uint64_t* code_size,
                                        int* linear, uint32_t* min_distance, char** report);

/* ---- transcoder --------------------------------------------------------- */

typedef struct gdma_code gdma_code;

/* name: "A", "A'", "B", or "direct" (direct uses p and m; others ignore them) */
GDMA_API gdma_status gdma_code_create(const char* name, uint32_t p, uint32_t m,
                                      gdma_code** out);
GDMA_API void gdma_code_destroy(gdma_code* c);
GDMA_API gdma_status gdma_code_encode(const gdma_code* c, const char* bits,
                                      uint32_t** symbol_indices, size_t* count,
                                      uint32_t* pad_bits);
GDMA_API gdma_status gdma_code_decode(const gdma_code* c, const uint32_t* symbol_indices,
                                      size_t count, char** bits);
GDMA_API gdma_status gdma_code_kraft(const gdma_code* c, int64_t* num, int64_t* den);
/* weighting: 0 = uniform bits, 1 = uniform symbols */
GDMA_API gdma_status gdma_code_rate(const gdma_code* c, int weighting, double* p_direct,
                                    double* p_opp, double* rate);
GDMA_API gdma_status gdma_code_render(const gdma_code* c, char** out);
/* one power-notation token per symbol index, space separated */
GDMA_API gdma_status gdma_code_symbol_names(const gdma_code* c, const uint32_t* symbol_indices,
                                            size_t count, char** out);
/* three lines: encoded symbols in power notation, codeword bit groups with
 * the opportunistic bit bracketed, and the pad-bit count */
GDMA_API gdma_status gdma_code_render_encoding(const gdma_code* c, const char* bits,
                                               char** out);

GDMA_API gdma_status gdma_h_param(double rate, uint32_t m_ary, double* h);

/* ---- modem -------------------------------------------------------------- */

GDMA_API gdma_status gdma_theoretical_ser(const char* modulation, double esn0, double* ser);
GDMA_API gdma_status gdma_modem_selftest(const double* esn0_db, size_t n_points,
                                         uint64_t symbols_per_point, uint64_t seed,
                                         char** csv);

/* ---- link --------------------------------------------------------------- */

typedef struct gdma_link gdma_link;

/* transform: "ffft" | "ffht" | "none"; mode: "FS" | "CC";
 * code: "direct" | "A'" | "B"; energy: "per_info_bit" | "per_channel_bit";
 * poly = NULL for the shipped default. */
GDMA_API gdma_status gdma_link_create(const char* transform, uint32_t p, uint32_t m,
                                      const uint32_t* poly, size_t poly_len, uint32_t q,
                                      uint32_t n_users, const char* mode, const char* code,
                                      const char* modulation, const char* energy,
                                      double symbol_duration_s, gdma_link** out);
GDMA_API void gdma_link_destroy(gdma_link* l);

GDMA_API uint32_t gdma_link_n_users(const gdma_link* l);
GDMA_API uint32_t gdma_link_tx_symbols(const gdma_link* l);
GDMA_API gdma_status gdma_link_gamma(const gdma_link* l, int64_t* num, int64_t* den);
GDMA_API gdma_status gdma_link_h(const gdma_link* l, double* h);

/* bits buffer is allocated by the library; free with gdma_buffer_free */
GDMA_API gdma_status gdma_link_mux(const gdma_link* l, const uint32_t* users, size_t n,
                                   uint8_t** bits, size_t* n_bits);
GDMA_API gdma_status gdma_link_demux(const gdma_link* l, const uint8_t* bits, size_t n_bits,
                                     uint32_t* users_out, uint32_t* undecodable,
                                     uint32_t* out_of_subfield);
/* users = NULL runs the all-ones frame; ebn0_db = INFINITY disables noise */
GDMA_API gdma_status gdma_link_frame_trace(const gdma_link* l, const uint32_t* users,
                                           double ebn0_db, uint64_t seed, char** text);

GDMA_API gdma_status gdma_frame_error_bound(uint32_t n, double h, double pe, double* bound);

/* ---- simulation ---------------------------------------------------------- */

typedef struct gdma_sim gdma_sim;

/* config_text: flat key-value format, see the config file documentation */
GDMA_API gdma_status gdma_sim_create(const char* config_text, gdma_sim** out);
GDMA_API void gdma_sim_destroy(gdma_sim* s);
GDMA_API gdma_status gdma_sim_set_seed(gdma_sim* s, uint64_t seed);
GDMA_API gdma_status gdma_sim_set_workers(gdma_sim* s, uint32_t workers);
GDMA_API gdma_status gdma_sim_run_csv(const gdma_sim* s, char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GDMA_H */
