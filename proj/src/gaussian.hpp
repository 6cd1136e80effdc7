// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Gaussian integers over GF(q): elements a + jb with a, b in GF(q) and
// j^2 = -1. The construction is a field exactly when -1 is a quadratic
// non-residue mod q (q odd prime with q = 3 mod 4), and is then isomorphic
// to GF(q^2). Membership of -1 in the squares is checked exhaustively.

#pragma once

#include "errors.hpp"
#include "field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gdma {

struct GaussianInt {
    uint32_t re = 0;
    uint32_t im = 0;
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

class GaussianField {
public:
    explicit GaussianField(uint32_t q);

    uint32_t q() const noexcept { return q_; }
    uint32_t size() const noexcept { return q_ * q_; }
    uint32_t order() const noexcept { return q_ * q_ - 1; }
    const PrimeField& base() const noexcept { return base_; }

    GaussianInt zero() const noexcept { return {0, 0}; }
    GaussianInt one() const noexcept { return {1, 0}; }
    GaussianInt j() const noexcept { return {0, 1}; }

    void check_element(GaussianInt a) const;

    GaussianInt add(GaussianInt a, GaussianInt b) const;
    GaussianInt sub(GaussianInt a, GaussianInt b) const;
    GaussianInt neg(GaussianInt a) const;
    GaussianInt mul(GaussianInt a, GaussianInt b) const;
    GaussianInt conj(GaussianInt a) const;
    uint32_t norm(GaussianInt a) const;            // a * conj(a), real by construction
    GaussianInt inv(GaussianInt a) const;          // division_by_zero on 0
    GaussianInt div(GaussianInt a, GaussianInt b) const;
    GaussianInt pow(GaussianInt a, int64_t e) const;
    GaussianInt scale(uint32_t c, GaussianInt a) const; // c in GF(q)

    uint32_t element_order(GaussianInt a) const;   // brute force, zero_element on 0
    GaussianInt generator() const;                  // smallest (re, im) with full order

    // packs as re*q + im; the C API and code tables use this
    uint32_t pack(GaussianInt a) const;
    GaussianInt unpack(uint32_t code) const;

private:
    uint32_t q_;
    PrimeField base_;
    mutable GaussianInt gen_{0, 0};
    mutable bool gen_found_ = false;
};

} // namespace gdma
