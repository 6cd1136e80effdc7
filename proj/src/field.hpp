// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Prime fields GF(p) and extension fields GF(p^m) with log/antilog tables.
// Elements of GF(p^m) are handled as uint32_t codes: the coefficient vector
// (a0, a1, ..., a_{m-1}) of the residue-class polynomial packed in base p,
// code = sum a_i p^i. For p = 2 this is plain bit packing.

#pragma once

#include "errors.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gdma {

bool is_prime(uint64_t n) noexcept;

// Arithmetic mod a verified prime.
class PrimeField {
public:
    explicit PrimeField(uint32_t p);

    uint32_t p() const noexcept { return p_; }
    uint32_t add(uint32_t a, uint32_t b) const noexcept { return (a + b) % p_; }
    uint32_t sub(uint32_t a, uint32_t b) const noexcept { return (a + p_ - b % p_) % p_; }
    uint32_t neg(uint32_t a) const noexcept { return (p_ - a % p_) % p_; }
    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        return static_cast<uint32_t>((uint64_t)a * b % p_);
    }
    uint32_t inv(uint32_t a) const; // division_by_zero on a == 0
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a % p_, inv(b)); }
    uint32_t pow(uint32_t a, int64_t e) const;

private:
    uint32_t p_;
};

// GF(p^m) generated by a primitive polynomial over GF(p). The polynomial is
// given constant-term first, monic, degree m; primitivity (x has full
// multiplicative order p^m - 1) is verified while the antilog table is built.
class ExtensionField {
public:
    ExtensionField(uint32_t p, uint32_t m, std::span<const uint32_t> poly);

    // Shipped defaults exist for (2,4) = x^4+x+1 and (2,3) = x^3+x+1 only.
    static ExtensionField with_default_poly(uint32_t p, uint32_t m);
    static bool has_default_poly(uint32_t p, uint32_t m) noexcept;

    uint32_t p() const noexcept { return p_; }
    uint32_t m() const noexcept { return m_; }
    uint32_t size() const noexcept { return q_; }          // p^m
    uint32_t order() const noexcept { return q_ - 1; }     // multiplicative group order
    const std::vector<uint32_t>& modulus() const noexcept { return poly_; }
    const PrimeField& ground() const noexcept { return ground_; }

    uint32_t zero() const noexcept { return 0; }
    uint32_t one() const noexcept { return 1; }
    uint32_t alpha() const noexcept { return alpha_; }     // residue class of x

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t div(uint32_t a, uint32_t b) const;            // division_by_zero on b == 0
    uint32_t inv(uint32_t a) const;                        // division_by_zero on a == 0
    uint32_t pow(uint32_t a, int64_t e) const;             // 0^0 = 1, 0^-e errors

    uint32_t alpha_pow(int64_t k) const;                   // antilog, exponent mod order
    uint32_t log(uint32_t a) const;                        // zero_element on a == 0
    uint32_t element_order(uint32_t a) const;              // smallest n >= 1: a^n = 1

    // Coefficient view: returns (a0, ..., a_{m-1}).
    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t from_coeffs(std::span<const uint32_t> c) const;

    // Ground-subfield helpers: GF(p) embeds as the codes 0..p-1.
    bool in_ground(uint32_t a) const noexcept { return a < p_; }

    bool same_field(const ExtensionField& other) const noexcept;
    void check_element(uint32_t a) const;

private:
    uint32_t p_, m_, q_;
    uint32_t alpha_;
    PrimeField ground_;
    std::vector<uint32_t> poly_;     // a0 ... a_m, monic
    std::vector<uint32_t> antilog_;  // antilog_[k] = code of alpha^k, k in [0, q-2]
    std::vector<uint32_t> log_;      // log_[code], code >= 1
    std::vector<uint32_t> add_tab_;  // q*q table (desk-scale fields only)

    uint32_t add_digits(uint32_t a, uint32_t b) const noexcept;
    uint32_t mul_by_x(uint32_t a) const noexcept;
};

// Element-with-field value type for callers that want operator syntax and
// cross-field misuse detection. Thin wrapper over the code-based API.
class ExtElement {
public:
    ExtElement(const ExtensionField& f, uint32_t code) : f_(&f), code_(code) {
        f.check_element(code);
    }

    uint32_t code() const noexcept { return code_; }
    const ExtensionField& field() const noexcept { return *f_; }

    ExtElement operator+(const ExtElement& o) const { return wrap(f_->add(code_, same(o))); }
    ExtElement operator-(const ExtElement& o) const { return wrap(f_->sub(code_, same(o))); }
    ExtElement operator*(const ExtElement& o) const { return wrap(f_->mul(code_, same(o))); }
    ExtElement operator/(const ExtElement& o) const { return wrap(f_->div(code_, same(o))); }
    ExtElement operator-() const { return wrap(f_->neg(code_)); }
    ExtElement pow(int64_t e) const { return wrap(f_->pow(code_, e)); }
    ExtElement inv() const { return wrap(f_->inv(code_)); }
    uint32_t order() const { return f_->element_order(code_); }
    bool operator==(const ExtElement& o) const { return code_ == same(o); }
    bool operator!=(const ExtElement& o) const { return !(*this == o); }

private:
    const ExtensionField* f_;
    uint32_t code_;

    ExtElement wrap(uint32_t c) const { return ExtElement(*f_, c); }
    uint32_t same(const ExtElement& o) const {
        require(f_->same_field(*o.f_), errc::field_mismatch,
                "operands belong to different fields");
        return o.code_;
    }
};

} // namespace gdma
