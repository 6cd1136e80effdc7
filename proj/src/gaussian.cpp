// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "gaussian.hpp"

namespace gdma {

namespace {

uint32_t validated_q(uint32_t q) {
    require(q % 2 != 0, errc::even_characteristic,
            "Gaussian integers need odd characteristic, got q = " + std::to_string(q));
    require(is_prime(q), errc::non_prime_modulus,
            "q = " + std::to_string(q) + " is not prime (prime powers q = p^r with r > 1 "
            "are not supported)");
    return q;
}

} // namespace

GaussianField::GaussianField(uint32_t q) : q_(q), base_(validated_q(q)) {
    // j^2 = -1 must have no solution in GF(q): check every square.
    const uint32_t minus_one = q - 1;
    for (uint32_t x = 0; x < q; ++x) {
        require(base_.mul(x, x) != minus_one, errc::minus_one_is_residue,
                "-1 is a quadratic residue mod " + std::to_string(q) + " (" +
                    std::to_string(x) + "^2 = -1), GI(" + std::to_string(q) +
                    ") is not a field");
    }
}

void GaussianField::check_element(GaussianInt a) const {
    require(a.re < q_ && a.im < q_, errc::invalid_argument,
            "Gaussian integer component out of range for GI(" + std::to_string(q_) + ")");
}

GaussianInt GaussianField::add(GaussianInt a, GaussianInt b) const {
    check_element(a);
    check_element(b);
    return {base_.add(a.re, b.re), base_.add(a.im, b.im)};
}

GaussianInt GaussianField::sub(GaussianInt a, GaussianInt b) const {
    check_element(a);
    check_element(b);
    return {base_.sub(a.re, b.re), base_.sub(a.im, b.im)};
}

GaussianInt GaussianField::neg(GaussianInt a) const {
    check_element(a);
    return {base_.neg(a.re), base_.neg(a.im)};
}

GaussianInt GaussianField::mul(GaussianInt a, GaussianInt b) const {
    check_element(a);
    check_element(b);
    // (a1 + j b1)(a2 + j b2) = (a1 a2 - b1 b2) + j (a1 b2 + a2 b1)
    uint32_t re = base_.sub(base_.mul(a.re, b.re), base_.mul(a.im, b.im));
    uint32_t im = base_.add(base_.mul(a.re, b.im), base_.mul(a.im, b.re));
    return {re, im};
}

GaussianInt GaussianField::conj(GaussianInt a) const {
    check_element(a);
    return {a.re, base_.neg(a.im)};
}

uint32_t GaussianField::norm(GaussianInt a) const {
    check_element(a);
    return base_.add(base_.mul(a.re, a.re), base_.mul(a.im, a.im));
}

GaussianInt GaussianField::inv(GaussianInt a) const {
    check_element(a);
    require(!(a.re == 0 && a.im == 0), errc::division_by_zero,
            "inverse of 0 in GI(" + std::to_string(q_) + ")");
    // a^-1 = conj(a) / norm(a); norm is nonzero since -1 is a non-residue
    uint32_t ninv = base_.inv(norm(a));
    GaussianInt c = conj(a);
    return {base_.mul(c.re, ninv), base_.mul(c.im, ninv)};
}

GaussianInt GaussianField::div(GaussianInt a, GaussianInt b) const {
    return mul(a, inv(b));
}

GaussianInt GaussianField::pow(GaussianInt a, int64_t e) const {
    check_element(a);
    if (a.re == 0 && a.im == 0) {
        if (e == 0) return one();
        require(e > 0, errc::division_by_zero, "negative power of 0");
        return zero();
    }
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    GaussianInt r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

GaussianInt GaussianField::scale(uint32_t c, GaussianInt a) const {
    check_element(a);
    c %= q_;
    return {base_.mul(c, a.re), base_.mul(c, a.im)};
}

uint32_t GaussianField::element_order(GaussianInt a) const {
    check_element(a);
    require(!(a.re == 0 && a.im == 0), errc::zero_element,
            "multiplicative order of the zero element");
    GaussianInt cur = a;
    for (uint32_t n = 1; n <= order(); ++n) {
        if (cur == one()) return n;
        cur = mul(cur, a);
    }
    fail(errc::internal, "element order not found");
}

GaussianInt GaussianField::generator() const {
    if (gen_found_) return gen_;
    for (uint32_t re = 0; re < q_; ++re) {
        for (uint32_t im = 0; im < q_; ++im) {
            GaussianInt c{re, im};
            if (c == zero()) continue;
            if (element_order(c) == order()) {
                gen_ = c;
                gen_found_ = true;
                return gen_;
            }
        }
    }
    fail(errc::internal, "no generator found"); // unreachable for a field
}

uint32_t GaussianField::pack(GaussianInt a) const {
    check_element(a);
    return a.re * q_ + a.im;
}

GaussianInt GaussianField::unpack(uint32_t code) const {
    require(code < size(), errc::invalid_argument, "packed Gaussian integer out of range");
    return {code / q_, code % q_};
}

} // namespace gdma
