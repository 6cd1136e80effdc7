// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// extern "C" surface. Exceptions from the core are caught here and turned
// into status codes; the message lands in a thread-local slot readable via
// gdma_last_error().

#include "gdma/gdma.h"

#include "config.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "gaussian.hpp"
#include "harness.hpp"
#include "link.hpp"
#include "modem.hpp"
#include "render.hpp"
#include "transcoder.hpp"
#include "transforms.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace gdma;

namespace {

thread_local std::string g_last_error;

gdma_status status_of(errc c) noexcept {
    switch (c) {
        case errc::ok: return GDMA_OK;
        case errc::invalid_argument: return GDMA_ERR_INVALID_ARGUMENT;
        case errc::non_prime_modulus: return GDMA_ERR_NON_PRIME_MODULUS;
        case errc::non_primitive_polynomial: return GDMA_ERR_NON_PRIMITIVE_POLYNOMIAL;
        case errc::field_mismatch: return GDMA_ERR_FIELD_MISMATCH;
        case errc::division_by_zero: return GDMA_ERR_DIVISION_BY_ZERO;
        case errc::zero_element: return GDMA_ERR_ZERO_ELEMENT;
        case errc::even_characteristic: return GDMA_ERR_EVEN_CHARACTERISTIC;
        case errc::minus_one_is_residue: return GDMA_ERR_MINUS_ONE_IS_RESIDUE;
        case errc::length_mismatch: return GDMA_ERR_LENGTH_MISMATCH;
        case errc::non_invertible_length: return GDMA_ERR_NON_INVERTIBLE_LENGTH;
        case errc::non_coprime_length: return GDMA_ERR_NON_COPRIME_LENGTH;
        case errc::singular_kernel_matrix: return GDMA_ERR_SINGULAR_KERNEL_MATRIX;
        case errc::invalid_spectrum: return GDMA_ERR_INVALID_SPECTRUM;
        case errc::unknown_code: return GDMA_ERR_UNKNOWN_CODE;
        case errc::not_power_of_two: return GDMA_ERR_NOT_POWER_OF_TWO;
        case errc::non_instantaneous_code: return GDMA_ERR_NON_INSTANTANEOUS_CODE;
        case errc::incomplete_code: return GDMA_ERR_INCOMPLETE_CODE;
        case errc::unknown_symbol: return GDMA_ERR_UNKNOWN_SYMBOL;
        case errc::invalid_constellation: return GDMA_ERR_INVALID_CONSTELLATION;
        case errc::negative_snr: return GDMA_ERR_NEGATIVE_SNR;
        case errc::invalid_probability: return GDMA_ERR_INVALID_PROBABILITY;
        case errc::enumeration_too_large: return GDMA_ERR_ENUMERATION_TOO_LARGE;
        case errc::config_invalid: return GDMA_ERR_CONFIG_INVALID;
        case errc::undecodable_symbol: return GDMA_ERR_UNDECODABLE_SYMBOL;
        case errc::budget_exhausted: return GDMA_ERR_BUDGET_EXHAUSTED;
        case errc::io_error: return GDMA_ERR_IO;
        case errc::internal: return GDMA_ERR_INTERNAL;
    }
    return GDMA_ERR_INTERNAL;
}

template <typename Fn>
gdma_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return GDMA_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return GDMA_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GDMA_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GDMA_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gdma_status check_ptr(const void* p) noexcept {
    if (p) return GDMA_OK;
    g_last_error = "null pointer argument";
    return GDMA_ERR_INVALID_ARGUMENT;
}

} // namespace

struct gdma_field {
    ExtensionField f;
};
struct gdma_gaussian {
    GaussianField g;
};
struct gdma_cosets {
    CosetPartition part;
};
struct gdma_code {
    OpportunisticCode code;
};
struct gdma_link {
    GdmaLink link;
};
struct gdma_sim {
    SimulationSpec spec;
};

extern "C" {

const char* gdma_status_name(gdma_status s) {
    switch (s) {
        case GDMA_OK: return "ok";
        case GDMA_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case GDMA_ERR_NON_PRIME_MODULUS: return "non_prime_modulus";
        case GDMA_ERR_NON_PRIMITIVE_POLYNOMIAL: return "non_primitive_polynomial";
        case GDMA_ERR_FIELD_MISMATCH: return "field_mismatch";
        case GDMA_ERR_DIVISION_BY_ZERO: return "division_by_zero";
        case GDMA_ERR_ZERO_ELEMENT: return "zero_element";
        case GDMA_ERR_EVEN_CHARACTERISTIC: return "even_characteristic";
        case GDMA_ERR_MINUS_ONE_IS_RESIDUE: return "minus_one_is_residue";
        case GDMA_ERR_LENGTH_MISMATCH: return "length_mismatch";
        case GDMA_ERR_NON_INVERTIBLE_LENGTH: return "non_invertible_length";
        case GDMA_ERR_NON_COPRIME_LENGTH: return "non_coprime_length";
        case GDMA_ERR_SINGULAR_KERNEL_MATRIX: return "singular_kernel_matrix";
        case GDMA_ERR_INVALID_SPECTRUM: return "invalid_spectrum";
        case GDMA_ERR_UNKNOWN_CODE: return "unknown_code";
        case GDMA_ERR_NOT_POWER_OF_TWO: return "not_power_of_two";
        case GDMA_ERR_NON_INSTANTANEOUS_CODE: return "non_instantaneous_code";
        case GDMA_ERR_INCOMPLETE_CODE: return "incomplete_code";
        case GDMA_ERR_UNKNOWN_SYMBOL: return "unknown_symbol";
        case GDMA_ERR_INVALID_CONSTELLATION: return "invalid_constellation";
        case GDMA_ERR_NEGATIVE_SNR: return "negative_snr";
        case GDMA_ERR_INVALID_PROBABILITY: return "invalid_probability";
        case GDMA_ERR_ENUMERATION_TOO_LARGE: return "enumeration_too_large";
        case GDMA_ERR_CONFIG_INVALID: return "config_invalid";
        case GDMA_ERR_UNDECODABLE_SYMBOL: return "undecodable_symbol";
        case GDMA_ERR_BUDGET_EXHAUSTED: return "budget_exhausted";
        case GDMA_ERR_IO: return "io_error";
        case GDMA_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* gdma_last_error(void) { return g_last_error.c_str(); }

const char* gdma_version(void) { return "0.1.0"; }

void gdma_string_free(char* s) { ::operator delete(s); }
void gdma_buffer_free(void* buf) { ::operator delete(buf); }

/* ---- field ---- */

gdma_status gdma_field_create(uint32_t p, uint32_t m, const uint32_t* poly, size_t poly_len,
                              gdma_field** out) {
    if (gdma_status s = check_ptr(out)) return s;
    *out = nullptr;
    return guarded([&] {
        if (poly) {
            *out = new gdma_field{ExtensionField(p, m, std::span(poly, poly_len))};
        } else {
            *out = new gdma_field{ExtensionField::with_default_poly(p, m)};
        }
    });
}

void gdma_field_destroy(gdma_field* f) { delete f; }

uint32_t gdma_field_p(const gdma_field* f) { return f->f.p(); }
uint32_t gdma_field_m(const gdma_field* f) { return f->f.m(); }
uint32_t gdma_field_size(const gdma_field* f) { return f->f.size(); }
uint32_t gdma_field_order(const gdma_field* f) { return f->f.order(); }

#define GDMA_FIELD_BINOP(name, method)                                                      \
    gdma_status name(const gdma_field* f, uint32_t a, uint32_t b, uint32_t* out) {          \
        if (gdma_status s = check_ptr(f)) return s;                                         \
        if (gdma_status s = check_ptr(out)) return s;                                       \
        return guarded([&] { *out = f->f.method(a, b); });                                  \
    }

GDMA_FIELD_BINOP(gdma_field_add, add)
GDMA_FIELD_BINOP(gdma_field_sub, sub)
GDMA_FIELD_BINOP(gdma_field_mul, mul)
GDMA_FIELD_BINOP(gdma_field_div, div)

gdma_status gdma_field_inv(const gdma_field* f, uint32_t a, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = f->f.inv(a); });
}

gdma_status gdma_field_pow(const gdma_field* f, uint32_t a, int64_t e, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = f->f.pow(a, e); });
}

gdma_status gdma_field_alpha_pow(const gdma_field* f, int64_t k, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = f->f.alpha_pow(k); });
}

gdma_status gdma_field_log(const gdma_field* f, uint32_t a, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = f->f.log(a); });
}

gdma_status gdma_field_element_order(const gdma_field* f, uint32_t a, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = f->f.element_order(a); });
}

gdma_status gdma_field_render_table(const gdma_field* f, char** out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = dup_string(render_field_table(f->f)); });
}

gdma_status gdma_field_render_spectrum(const gdma_field* f, const uint32_t* v, size_t n,
                                       char** out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(v)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = dup_string(render_spectrum(f->f, std::span(v, n))); });
}

/* ---- gaussian ---- */

gdma_status gdma_gaussian_create(uint32_t q, gdma_gaussian** out) {
    if (gdma_status s = check_ptr(out)) return s;
    *out = nullptr;
    return guarded([&] { *out = new gdma_gaussian{GaussianField(q)}; });
}

void gdma_gaussian_destroy(gdma_gaussian* g) { delete g; }

uint32_t gdma_gaussian_q(const gdma_gaussian* g) { return g->g.q(); }

gdma_status gdma_gaussian_add(const gdma_gaussian* g, uint32_t are, uint32_t aim, uint32_t bre,
                              uint32_t bim, uint32_t* re, uint32_t* im) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(re)) return s;
    if (gdma_status s = check_ptr(im)) return s;
    return guarded([&] {
        GaussianInt r = g->g.add({are, aim}, {bre, bim});
        *re = r.re;
        *im = r.im;
    });
}

gdma_status gdma_gaussian_mul(const gdma_gaussian* g, uint32_t are, uint32_t aim, uint32_t bre,
                              uint32_t bim, uint32_t* re, uint32_t* im) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(re)) return s;
    if (gdma_status s = check_ptr(im)) return s;
    return guarded([&] {
        GaussianInt r = g->g.mul({are, aim}, {bre, bim});
        *re = r.re;
        *im = r.im;
    });
}

gdma_status gdma_gaussian_inv(const gdma_gaussian* g, uint32_t are, uint32_t aim, uint32_t* re,
                              uint32_t* im) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(re)) return s;
    if (gdma_status s = check_ptr(im)) return s;
    return guarded([&] {
        GaussianInt r = g->g.inv({are, aim});
        *re = r.re;
        *im = r.im;
    });
}

gdma_status gdma_gaussian_pow(const gdma_gaussian* g, uint32_t are, uint32_t aim, int64_t e,
                              uint32_t* re, uint32_t* im) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(re)) return s;
    if (gdma_status s = check_ptr(im)) return s;
    return guarded([&] {
        GaussianInt r = g->g.pow({are, aim}, e);
        *re = r.re;
        *im = r.im;
    });
}

gdma_status gdma_gaussian_generator(const gdma_gaussian* g, uint32_t* re, uint32_t* im) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(re)) return s;
    if (gdma_status s = check_ptr(im)) return s;
    return guarded([&] {
        GaussianInt r = g->g.generator();
        *re = r.re;
        *im = r.im;
    });
}

gdma_status gdma_gaussian_element_order(const gdma_gaussian* g, uint32_t re, uint32_t im,
                                        uint32_t* out) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = g->g.element_order({re, im}); });
}

gdma_status gdma_gaussian_render_table(const gdma_gaussian* g, char** out) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = dup_string(render_gaussian_table(g->g)); });
}

gdma_status gdma_gaussian_render_spectrum(const gdma_gaussian* g, const uint32_t* packed,
                                          size_t n, char** out) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(packed)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = dup_string(render_gi_spectrum(g->g, std::span(packed, n))); });
}

/* ---- transforms ---- */

gdma_status gdma_ffft(const gdma_field* f, const uint32_t* in, size_t n, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(in)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] {
        std::vector<uint32_t> r = ffft(f->f, std::span(in, n));
        std::copy(r.begin(), r.end(), out);
    });
}

gdma_status gdma_iffft(const gdma_field* f, const uint32_t* in, size_t n, uint32_t* out) {
    if (gdma_status s = check_ptr(f)) return s;
    if (gdma_status s = check_ptr(in)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] {
        std::vector<uint32_t> r = iffft(f->f, std::span(in, n));
        std::copy(r.begin(), r.end(), out);
    });
}

gdma_status gdma_ffht(const gdma_gaussian* g, const uint32_t* in, size_t n,
                      uint32_t* out_packed) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(in)) return s;
    if (gdma_status s = check_ptr(out_packed)) return s;
    return guarded([&] {
        CasKernel k(g->g, static_cast<uint32_t>(n));
        std::vector<GaussianInt> r = k.forward(std::span(in, n));
        for (size_t i = 0; i < r.size(); ++i) out_packed[i] = g->g.pack(r[i]);
    });
}

gdma_status gdma_iffht(const gdma_gaussian* g, const uint32_t* in_packed, size_t n,
                       uint32_t* out_packed) {
    if (gdma_status s = check_ptr(g)) return s;
    if (gdma_status s = check_ptr(in_packed)) return s;
    if (gdma_status s = check_ptr(out_packed)) return s;
    return guarded([&] {
        CasKernel k(g->g, static_cast<uint32_t>(n));
        std::vector<GaussianInt> in(n);
        for (size_t i = 0; i < n; ++i) in[i] = g->g.unpack(in_packed[i]);
        std::vector<GaussianInt> r = k.inverse(in);
        for (size_t i = 0; i < r.size(); ++i) out_packed[i] = g->g.pack(r[i]);
    });
}

/* ---- cosets ---- */

gdma_status gdma_cosets_create(uint32_t n, uint32_t p, gdma_cosets** out) {
    if (gdma_status s = check_ptr(out)) return s;
    *out = nullptr;
    return guarded([&] { *out = new gdma_cosets{cyclotomic_cosets(n, p)}; });
}

void gdma_cosets_destroy(gdma_cosets* c) { delete c; }

uint32_t gdma_cosets_count(const gdma_cosets* c) { return c->part.nu(); }

gdma_status gdma_cosets_members(const gdma_cosets* c, uint32_t idx, const uint32_t** members,
                                size_t* len, uint32_t* leader) {
    if (gdma_status s = check_ptr(c)) return s;
    return guarded([&] {
        require(idx < c->part.nu(), errc::invalid_argument, "coset index out of range");
        if (members) *members = c->part.cosets[idx].data();
        if (len) *len = c->part.cosets[idx].size();
        if (leader) *leader = c->part.leaders[idx];
    });
}

gdma_status gdma_cosets_gamma(const gdma_cosets* c, int64_t* num, int64_t* den) {
    if (gdma_status s = check_ptr(c)) return s;
    return guarded([&] {
        Rational g = compression_ratio(c->part);
        if (num) *num = g.num;
        if (den) *den = g.den;
    });
}

gdma_status gdma_cosets_render(const gdma_cosets* c, char** out) {
    if (gdma_status s = check_ptr(c)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = dup_string(render_cosets(c->part)); });
}

/* ---- bound / budget / code analysis ---- */

gdma_status gdma_check_bound(int64_t gamma_num, int64_t gamma_den, double snr, uint32_t p,
                             char** report) {
    if (gdma_status s = check_ptr(report)) return s;
    return guarded([&] {
        require(gamma_den != 0, errc::invalid_argument, "gamma denominator is zero");
        BoundReport rep = check_bound({gamma_num, gamma_den}, snr, p);
        *report = dup_string(render_bound_report(rep, p));
    });
}

gdma_status gdma_link_budget_render(uint32_t n, uint32_t p, double symbol_duration_s,
                                    int64_t gamma_num, int64_t gamma_den,
                                    double* rate_bits_per_s, double* bandwidth_hz,
                                    char** report) {
    return guarded([&] {
        require(gamma_den != 0, errc::invalid_argument, "gamma denominator is zero");
        LinkBudget b = link_budget(n, p, symbol_duration_s, {gamma_num, gamma_den});
        if (rate_bits_per_s) *rate_bits_per_s = b.rate_bits_per_s;
        if (bandwidth_hz) *bandwidth_hz = b.bandwidth_hz;
        if (report) *report = dup_string(render_link_budget(b));
    });
}

gdma_status gdma_code_analysis(const gdma_field* f, uint32_t n, uint64_t* code_size,
                               int* linear, uint32_t* min_distance, char** report) {
    if (gdma_status s = check_ptr(f)) return s;
    return guarded([&] {
        SpectralCodeReport rep = enumerate_valid_spectra(f->f, n);
        if (code_size) *code_size = rep.size;
        if (linear) *linear = rep.linear ? 1 : 0;
        if (min_distance) *min_distance = rep.min_distance;
        if (report) *report = dup_string(render_code_analysis(rep, f->f, n));
    });
}

/* ---- transcoder ---- */

gdma_status gdma_code_create(const char* name, uint32_t p, uint32_t m, gdma_code** out) {
    if (gdma_status s = check_ptr(name)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    *out = nullptr;
    return guarded([&] {
        std::string n = name;
        if (n == "direct")
            *out = new gdma_code{OpportunisticCode::direct(p, m)};
        else
            *out = new gdma_code{OpportunisticCode::builtin(n)};
    });
}

void gdma_code_destroy(gdma_code* c) { delete c; }

gdma_status gdma_code_encode(const gdma_code* c, const char* bits, uint32_t** symbol_indices,
                             size_t* count, uint32_t* pad_bits) {
    if (gdma_status s = check_ptr(c)) return s;
    if (gdma_status s = check_ptr(bits)) return s;
    if (gdma_status s = check_ptr(symbol_indices)) return s;
    if (gdma_status s = check_ptr(count)) return s;
    return guarded([&] {
        OpportunisticCode::EncodeResult r = c->code.encode(bits);
        auto* buf = static_cast<uint32_t*>(::operator new(r.symbols.size() * sizeof(uint32_t)));
        std::copy(r.symbols.begin(), r.symbols.end(), buf);
        *symbol_indices = buf;
        *count = r.symbols.size();
        if (pad_bits) *pad_bits = r.pad_bits;
    });
}

gdma_status gdma_code_decode(const gdma_code* c, const uint32_t* symbol_indices, size_t count,
                             char** bits) {
    if (gdma_status s = check_ptr(c)) return s;
    if (gdma_status s = check_ptr(symbol_indices)) return s;
    if (gdma_status s = check_ptr(bits)) return s;
    return guarded([&] {
        *bits = dup_string(c->code.decode(std::span(symbol_indices, count)));
    });
}

gdma_status gdma_code_kraft(const gdma_code* c, int64_t* num, int64_t* den) {
    if (gdma_status s = check_ptr(c)) return s;
    return guarded([&] {
        Rational k = c->code.kraft_sum();
        if (num) *num = k.num;
        if (den) *den = k.den;
    });
}

gdma_status gdma_code_rate(const gdma_code* c, int weighting, double* p_direct, double* p_opp,
                           double* rate) {
    if (gdma_status s = check_ptr(c)) return s;
    return guarded([&] {
        require(weighting == 0 || weighting == 1, errc::invalid_argument,
                "weighting must be 0 (uniform bits) or 1 (uniform symbols)");
        auto rep = c->code.average_rate(weighting == 0 ? Weighting::uniform_bits
                                                       : Weighting::uniform_symbols);
        if (p_direct) *p_direct = rep.p_direct;
        if (p_opp) *p_opp = rep.p_opp;
        if (rate) *rate = rep.rate;
    });
}

gdma_status gdma_code_render(const gdma_code* c, char** out) {
    if (gdma_status s = check_ptr(c)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] { *out = dup_string(render_code_table(c->code)); });
}

namespace {

std::string symbol_names_string(const OpportunisticCode& code,
                                std::span<const uint32_t> indices) {
    std::string s;
    for (size_t i = 0; i < indices.size(); ++i) {
        uint32_t idx = indices[i];
        require(idx < code.alphabet_size(), errc::unknown_symbol, "symbol index out of range");
        const CodeSymbol& sym = code.symbols()[idx];
        if (i) s += " ";
        switch (sym.tag) {
            case CodeSymbol::Tag::zero: s += "0"; break;
            case CodeSymbol::Tag::raw: s += std::to_string(sym.k); break;
            case CodeSymbol::Tag::alpha_power: {
                const char* base = code.name() == "B" ? "\xce\xbe" : "\xce\xb1";
                if (sym.k == 0)
                    s += std::string(base) + "^0";
                else if (sym.k == 1)
                    s += base;
                else
                    s += std::string(base) + "^" + std::to_string(sym.k);
                break;
            }
        }
    }
    return s;
}

} // namespace

gdma_status gdma_code_symbol_names(const gdma_code* c, const uint32_t* symbol_indices,
                                   size_t count, char** out) {
    if (gdma_status s = check_ptr(c)) return s;
    if (gdma_status s = check_ptr(symbol_indices)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] {
        *out = dup_string(symbol_names_string(c->code, std::span(symbol_indices, count)));
    });
}

gdma_status gdma_code_render_encoding(const gdma_code* c, const char* bits, char** out) {
    if (gdma_status s = check_ptr(c)) return s;
    if (gdma_status s = check_ptr(bits)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    return guarded([&] {
        OpportunisticCode::EncodeResult r = c->code.encode(bits);
        std::vector<uint8_t> padded;
        for (uint32_t idx : r.symbols)
            for (char b : c->code.symbols()[idx].word) padded.push_back(b == '1');
        std::string text = "symbols : " + symbol_names_string(c->code, r.symbols) + "\n" +
                           "bits    : " + render_codeword_bits(c->code, padded) + "\n" +
                           "pad bits: " + std::to_string(r.pad_bits) + "\n";
        *out = dup_string(text);
    });
}

gdma_status gdma_h_param(double rate, uint32_t m_ary, double* h) {
    if (gdma_status s = check_ptr(h)) return s;
    return guarded([&] { *h = h_param(rate, m_ary); });
}

/* ---- modem ---- */

gdma_status gdma_theoretical_ser(const char* modulation, double esn0, double* ser) {
    if (gdma_status s = check_ptr(modulation)) return s;
    if (gdma_status s = check_ptr(ser)) return s;
    return guarded([&] {
        const Constellation& c = Constellation::get(modulation_from_name(modulation));
        *ser = theoretical_ser(c, esn0);
    });
}

gdma_status gdma_modem_selftest(const double* esn0_db, size_t n_points,
                                uint64_t symbols_per_point, uint64_t seed, char** csv) {
    if (gdma_status s = check_ptr(esn0_db)) return s;
    if (gdma_status s = check_ptr(csv)) return s;
    return guarded([&] {
        *csv = dup_string(modem_selftest_csv(std::span(esn0_db, n_points), symbols_per_point,
                                             seed));
    });
}

/* ---- link ---- */

namespace {

LinkConfig build_link_config(const char* transform, uint32_t p, uint32_t m,
                             const uint32_t* poly, size_t poly_len, uint32_t q,
                             uint32_t n_users, const char* mode, const char* code,
                             const char* modulation, const char* energy,
                             double symbol_duration_s) {
    LinkConfig cfg;
    std::string t = transform ? transform : "ffft";
    if (t == "ffft")
        cfg.transform = TransformKind::ffft;
    else if (t == "ffht")
        cfg.transform = TransformKind::ffht;
    else if (t == "none")
        cfg.transform = TransformKind::none;
    else
        fail(errc::config_invalid, "transform must be ffft, ffht or none");
    cfg.p = p;
    cfg.m = m;
    if (poly) cfg.poly.assign(poly, poly + poly_len);
    cfg.q = q;
    cfg.n_users = n_users;
    std::string md = mode ? mode : "FS";
    if (md == "FS")
        cfg.mode = SpectrumMode::full;
    else if (md == "CC")
        cfg.mode = SpectrumMode::compressed;
    else
        fail(errc::config_invalid, "mode must be FS or CC");
    cfg.code = code ? code : "direct";
    cfg.modulation = modulation_from_name(modulation ? modulation : "bpsk");
    std::string en = energy ? energy : "per_info_bit";
    if (en == "per_info_bit")
        cfg.energy = EnergyConvention::per_info_bit;
    else if (en == "per_channel_bit")
        cfg.energy = EnergyConvention::per_channel_bit;
    else
        fail(errc::config_invalid, "energy must be per_info_bit or per_channel_bit");
    cfg.symbol_duration = symbol_duration_s;
    return cfg;
}

} // namespace

gdma_status gdma_link_create(const char* transform, uint32_t p, uint32_t m,
                             const uint32_t* poly, size_t poly_len, uint32_t q,
                             uint32_t n_users, const char* mode, const char* code,
                             const char* modulation, const char* energy,
                             double symbol_duration_s, gdma_link** out) {
    if (gdma_status s = check_ptr(out)) return s;
    *out = nullptr;
    return guarded([&] {
        LinkConfig cfg = build_link_config(transform, p, m, poly, poly_len, q, n_users, mode,
                                           code, modulation, energy, symbol_duration_s);
        *out = new gdma_link{GdmaLink(cfg)};
    });
}

void gdma_link_destroy(gdma_link* l) { delete l; }

uint32_t gdma_link_n_users(const gdma_link* l) { return l->link.n_users(); }
uint32_t gdma_link_tx_symbols(const gdma_link* l) { return l->link.tx_symbol_count(); }

gdma_status gdma_link_gamma(const gdma_link* l, int64_t* num, int64_t* den) {
    if (gdma_status s = check_ptr(l)) return s;
    return guarded([&] {
        Rational g = l->link.gamma();
        if (num) *num = g.num;
        if (den) *den = g.den;
    });
}

gdma_status gdma_link_h(const gdma_link* l, double* h) {
    if (gdma_status s = check_ptr(l)) return s;
    if (gdma_status s = check_ptr(h)) return s;
    return guarded([&] { *h = l->link.h(); });
}

gdma_status gdma_link_mux(const gdma_link* l, const uint32_t* users, size_t n, uint8_t** bits,
                          size_t* n_bits) {
    if (gdma_status s = check_ptr(l)) return s;
    if (gdma_status s = check_ptr(users)) return s;
    if (gdma_status s = check_ptr(bits)) return s;
    if (gdma_status s = check_ptr(n_bits)) return s;
    return guarded([&] {
        std::vector<uint8_t> b = l->link.mux(std::span(users, n));
        auto* buf = static_cast<uint8_t*>(::operator new(b.size()));
        std::copy(b.begin(), b.end(), buf);
        *bits = buf;
        *n_bits = b.size();
    });
}

gdma_status gdma_link_demux(const gdma_link* l, const uint8_t* bits, size_t n_bits,
                            uint32_t* users_out, uint32_t* undecodable,
                            uint32_t* out_of_subfield) {
    if (gdma_status s = check_ptr(l)) return s;
    if (gdma_status s = check_ptr(bits)) return s;
    if (gdma_status s = check_ptr(users_out)) return s;
    return guarded([&] {
        DemuxResult res = l->link.demux(std::span(bits, n_bits));
        std::copy(res.users.begin(), res.users.end(), users_out);
        if (undecodable) *undecodable = res.undecodable;
        if (out_of_subfield) *out_of_subfield = res.out_of_subfield;
    });
}

gdma_status gdma_link_frame_trace(const gdma_link* l, const uint32_t* users, double ebn0_db,
                                  uint64_t seed, char** text) {
    if (gdma_status s = check_ptr(l)) return s;
    if (gdma_status s = check_ptr(text)) return s;
    return guarded([&] {
        std::vector<uint32_t> u;
        if (users) {
            u.assign(users, users + l->link.n_users());
        } else {
            u.assign(l->link.n_users(), 1);
        }
        FrameTrace tr = l->link.traced_frame(u, ebn0_db, seed);
        *text = dup_string(render_frame_trace(l->link, tr));
    });
}

gdma_status gdma_frame_error_bound(uint32_t n, double h, double pe, double* bound) {
    if (gdma_status s = check_ptr(bound)) return s;
    return guarded([&] { *bound = frame_error_bound(n, h, pe); });
}

/* ---- simulation ---- */

gdma_status gdma_sim_create(const char* config_text, gdma_sim** out) {
    if (gdma_status s = check_ptr(config_text)) return s;
    if (gdma_status s = check_ptr(out)) return s;
    *out = nullptr;
    return guarded([&] { *out = new gdma_sim{parse_simulation_spec(config_text)}; });
}

void gdma_sim_destroy(gdma_sim* s) { delete s; }

gdma_status gdma_sim_set_seed(gdma_sim* s, uint64_t seed) {
    if (gdma_status st = check_ptr(s)) return st;
    s->spec.master_seed = seed;
    return GDMA_OK;
}

gdma_status gdma_sim_set_workers(gdma_sim* s, uint32_t workers) {
    if (gdma_status st = check_ptr(s)) return st;
    if (workers < 1) {
        g_last_error = "workers must be >= 1";
        return GDMA_ERR_CONFIG_INVALID;
    }
    s->spec.workers = workers;
    return GDMA_OK;
}

gdma_status gdma_sim_run_csv(const gdma_sim* s, char** csv) {
    if (gdma_status st = check_ptr(s)) return st;
    if (gdma_status st = check_ptr(csv)) return st;
    return guarded([&] {
        std::vector<BerRecord> records = sweep(s->spec);
        *csv = dup_string(to_csv(records));
    });
}

} /* extern "C" */
