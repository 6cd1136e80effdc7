// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "field.hpp"

#include <numeric>
#include <sstream>

namespace gdma {

bool is_prime(uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
    require(is_prime(p), errc::non_prime_modulus,
            "modulus " + std::to_string(p) + " is not prime");
}

uint32_t PrimeField::inv(uint32_t a) const {
    a %= p_;
    require(a != 0, errc::division_by_zero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (a, p)
    int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        int64_t quo = r / nr;
        t -= quo * nt; std::swap(t, nt);
        r -= quo * nr; std::swap(r, nr);
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
}

uint32_t PrimeField::pow(uint32_t a, int64_t e) const {
    a %= p_;
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

namespace {

uint64_t ipow_checked(uint32_t p, uint32_t m) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        require(q <= (1u << 30), errc::invalid_argument, "field size p^m too large");
    }
    return q;
}

} // namespace

ExtensionField::ExtensionField(uint32_t p, uint32_t m, std::span<const uint32_t> poly)
    : p_(p), m_(m), q_(0), alpha_(0), ground_(p), poly_(poly.begin(), poly.end()) {
    require(m >= 1, errc::invalid_argument, "extension degree m must be >= 1");
    q_ = static_cast<uint32_t>(ipow_checked(p, m));
    require(poly_.size() == m_ + 1, errc::invalid_argument,
            "modulus polynomial must have degree m (m+1 coefficients, constant term first)");
    for (uint32_t c : poly_)
        require(c < p_, errc::invalid_argument, "polynomial coefficient out of range for GF(p)");
    require(poly_[m_] == 1, errc::invalid_argument, "modulus polynomial must be monic");
    require(poly_[0] != 0, errc::non_primitive_polynomial,
            "modulus polynomial has root 0, x cannot generate the multiplicative group");

    // alpha = x: coefficient vector (0,1,0,...) when m > 1; for m = 1 the
    // residue of x is -a0.
    alpha_ = (m_ == 1) ? ground_.neg(poly_[0]) : p_;

    // Build the antilog table by repeated multiplication by x, verifying that
    // x has full order q-1 on the way. Reaching 1 early or hitting 0 (possible
    // when the modulus is reducible) means the polynomial is not primitive.
    const uint32_t n = q_ - 1;
    antilog_.assign(n, 0);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t k = 0; k < n; ++k) {
        require(cur != 0, errc::non_primitive_polynomial,
                "modulus polynomial is reducible (power of x vanished)");
        require(!(cur == 1 && k > 0), errc::non_primitive_polynomial,
                "x has order " + std::to_string(k) + " < " + std::to_string(n) +
                    ", polynomial is not primitive");
        antilog_[k] = cur;
        log_[cur] = k;
        cur = mul_by_x(cur);
    }
    require(cur == 1, errc::non_primitive_polynomial,
            "x^" + std::to_string(n) + " != 1, polynomial is not primitive");

    // Dense addition table for the small fields this project works in.
    if (q_ <= 256) {
        add_tab_.assign(static_cast<size_t>(q_) * q_, 0);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b)
                add_tab_[static_cast<size_t>(a) * q_ + b] = add_digits(a, b);
    }
}

bool ExtensionField::has_default_poly(uint32_t p, uint32_t m) noexcept {
    return (p == 2 && m == 4) || (p == 2 && m == 3);
}

ExtensionField ExtensionField::with_default_poly(uint32_t p, uint32_t m) {
    if (p == 2 && m == 4) {
        const uint32_t c[] = {1, 1, 0, 0, 1}; // x^4 + x + 1
        return ExtensionField(2, 4, c);
    }
    if (p == 2 && m == 3) {
        const uint32_t c[] = {1, 1, 0, 1}; // x^3 + x + 1
        return ExtensionField(2, 3, c);
    }
    fail(errc::invalid_argument,
         "no default primitive polynomial for p=" + std::to_string(p) +
             ", m=" + std::to_string(m) + "; supply one explicitly");
}

uint32_t ExtensionField::add_digits(uint32_t a, uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += ((a + b) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t ExtensionField::mul_by_x(uint32_t a) const noexcept {
    // shift coefficients up one degree, reduce with the monic modulus
    std::vector<uint32_t> c(m_ + 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        c[i + 1] = a % p_;
        a /= p_;
    }
    uint32_t top = c[m_];
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t digit = (c[i] + p_ - ground_.mul(top, poly_[i])) % p_;
        out += digit * mult;
        mult *= p_;
    }
    return out;
}

void ExtensionField::check_element(uint32_t a) const {
    require(a < q_, errc::invalid_argument,
            "element code " + std::to_string(a) + " out of range for field of size " +
                std::to_string(q_));
}

uint32_t ExtensionField::add(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    if (!add_tab_.empty()) return add_tab_[static_cast<size_t>(a) * q_ + b];
    return add_digits(a, b);
}

uint32_t ExtensionField::neg(uint32_t a) const {
    check_element(a);
    if (p_ == 2) return a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += ground_.neg(a % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t ExtensionField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t ExtensionField::mul(uint32_t a, uint32_t b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    uint64_t k = static_cast<uint64_t>(log_[a]) + log_[b];
    return antilog_[k % order()];
}

uint32_t ExtensionField::inv(uint32_t a) const {
    check_element(a);
    require(a != 0, errc::division_by_zero, "inverse of the zero element");
    uint32_t k = log_[a];
    return antilog_[(order() - k) % order()];
}

uint32_t ExtensionField::div(uint32_t a, uint32_t b) const {
    check_element(a);
    return mul(a, inv(b));
}

uint32_t ExtensionField::pow(uint32_t a, int64_t e) const {
    check_element(a);
    if (a == 0) {
        if (e == 0) return 1;
        require(e > 0, errc::division_by_zero, "negative power of the zero element");
        return 0;
    }
    int64_t k = static_cast<int64_t>(log_[a]) * (e % order());
    int64_t n = order();
    int64_t r = ((k % n) + n) % n;
    return antilog_[static_cast<size_t>(r)];
}

uint32_t ExtensionField::alpha_pow(int64_t k) const {
    int64_t n = order();
    int64_t r = ((k % n) + n) % n;
    return antilog_[static_cast<size_t>(r)];
}

uint32_t ExtensionField::log(uint32_t a) const {
    check_element(a);
    require(a != 0, errc::zero_element, "discrete log of the zero element");
    return log_[a];
}

uint32_t ExtensionField::element_order(uint32_t a) const {
    check_element(a);
    require(a != 0, errc::zero_element, "multiplicative order of the zero element");
    // brute force; fields here are desk-scale
    uint32_t cur = a;
    for (uint32_t n = 1; n <= order(); ++n) {
        if (cur == 1) return n;
        cur = mul(cur, a);
    }
    fail(errc::internal, "element order not found");
}

std::vector<uint32_t> ExtensionField::coeffs(uint32_t a) const {
    check_element(a);
    std::vector<uint32_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

uint32_t ExtensionField::from_coeffs(std::span<const uint32_t> c) const {
    require(c.size() == m_, errc::length_mismatch, "coefficient vector must have length m");
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        require(c[i] < p_, errc::invalid_argument, "coefficient out of range for GF(p)");
        out += c[i] * mult;
        mult *= p_;
    }
    return out;
}

bool ExtensionField::same_field(const ExtensionField& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
}

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::ok: return "ok";
        case errc::invalid_argument: return "invalid_argument";
        case errc::non_prime_modulus: return "non_prime_modulus";
        case errc::non_primitive_polynomial: return "non_primitive_polynomial";
        case errc::field_mismatch: return "field_mismatch";
        case errc::division_by_zero: return "division_by_zero";
        case errc::zero_element: return "zero_element";
        case errc::even_characteristic: return "even_characteristic";
        case errc::minus_one_is_residue: return "minus_one_is_residue";
        case errc::length_mismatch: return "length_mismatch";
        case errc::non_invertible_length: return "non_invertible_length";
        case errc::non_coprime_length: return "non_coprime_length";
        case errc::singular_kernel_matrix: return "singular_kernel_matrix";
        case errc::invalid_spectrum: return "invalid_spectrum";
        case errc::unknown_code: return "unknown_code";
        case errc::not_power_of_two: return "not_power_of_two";
        case errc::non_instantaneous_code: return "non_instantaneous_code";
        case errc::incomplete_code: return "incomplete_code";
        case errc::unknown_symbol: return "unknown_symbol";
        case errc::invalid_constellation: return "invalid_constellation";
        case errc::negative_snr: return "negative_snr";
        case errc::invalid_probability: return "invalid_probability";
        case errc::enumeration_too_large: return "enumeration_too_large";
        case errc::config_invalid: return "config_invalid";
        case errc::undecodable_symbol: return "undecodable_symbol";
        case errc::budget_exhausted: return "budget_exhausted";
        case errc::io_error: return "io_error";
        case errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace gdma
