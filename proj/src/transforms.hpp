// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Finite-field transforms.
//
// FfftPlan: the finite field Fourier transform of length N over GF(p^m),
//   V_k = sum_i v_i alpha_N^{ik}, with alpha_N of multiplicative order N.
//   N must divide p^m - 1; the inverse needs gcd(N, p) = 1 so that N has an
//   inverse in the field.
//
// CasKernel: the finite field Hartley transform of length N over GI(q),
//   H_k = sum_i v_i cas(ik), cas(i) = cos(i) + sin(i) built from a root zeta
//   of order N: cos(i) = (zeta^i + zeta^-i)/2, sin(i) = (zeta^i - zeta^-i)/(2j).
//   The kernel verifies at construction which Frobenius rule the cas table
//   satisfies (cas(k)^p = cas(ck) for c = p or c = -p mod N); that multiplier
//   drives cyclotomic compression of Hartley spectra.

#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "gaussian.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gdma {

class FfftPlan {
public:
    FfftPlan(const ExtensionField& f, uint32_t n);

    uint32_t n() const noexcept { return n_; }
    const ExtensionField& field() const noexcept { return *f_; }
    uint32_t kernel() const noexcept { return kernel_; } // alpha_N, order n

    // forward: input over the whole field (ground-field user symbols embed)
    std::vector<uint32_t> forward(std::span<const uint32_t> v) const;
    std::vector<uint32_t> inverse(std::span<const uint32_t> big_v) const;

    // Frobenius conjugacy: spectra of ground-field-valued signals satisfy
    // V_{pk mod n} = V_k^p. Exposed as the multiplier for coset partitioning.
    uint32_t conjugacy_multiplier() const noexcept { return p_mod_n_; }

    bool spectrum_valid(std::span<const uint32_t> big_v) const;

private:
    const ExtensionField* f_;
    uint32_t n_;
    uint32_t kernel_;
    uint32_t n_inv_;                // field code of (n mod p)^-1
    uint32_t p_mod_n_;
    std::vector<uint32_t> pow_;     // pow_[t] = kernel_^t, t in [0, n)
};

std::vector<uint32_t> ffft(const ExtensionField& f, std::span<const uint32_t> v);
std::vector<uint32_t> iffft(const ExtensionField& f, std::span<const uint32_t> big_v);

class CasKernel {
public:
    // zeta is picked canonically as g^((q^2-1)/n) for the smallest generator g.
    CasKernel(const GaussianField& gf, uint32_t n);

    uint32_t n() const noexcept { return n_; }
    const GaussianField& field() const noexcept { return *gf_; }
    GaussianInt zeta() const noexcept { return zeta_; }
    GaussianInt cas(uint32_t i) const { return cas_[i % n_]; }

    // multiplier c with cas(k)^q = cas(ck mod n) for all k, if one of
    // c = q mod n or c = n - q mod n holds; nullopt otherwise
    std::optional<uint32_t> conjugacy_multiplier() const noexcept { return conj_mult_; }

    // true when the cas matrix M satisfies M^2 = n I (then M^-1 = n^-1 M)
    bool self_inverse() const noexcept { return self_inverse_; }

    std::vector<GaussianInt> forward(std::span<const uint32_t> v) const;    // v over GF(q)
    std::vector<GaussianInt> forward_gi(std::span<const GaussianInt> v) const;
    std::vector<GaussianInt> inverse(std::span<const GaussianInt> big_h) const;

    // inverse forced through the explicit inverse matrix (testing hook; the
    // public inverse() takes the n^-1 M shortcut when self_inverse() holds)
    std::vector<GaussianInt> inverse_by_matrix(std::span<const GaussianInt> big_h) const;

private:
    const GaussianField* gf_;
    uint32_t n_;
    GaussianInt zeta_;
    std::vector<GaussianInt> cas_;
    std::vector<GaussianInt> inv_matrix_;   // row-major n x n
    std::optional<uint32_t> conj_mult_;
    bool self_inverse_ = false;
    GaussianInt n_inv_{0, 0};

    void build_inverse_matrix();
};

std::vector<GaussianInt> ffht(const CasKernel& k, std::span<const uint32_t> v);
std::vector<GaussianInt> iffht(const CasKernel& k, std::span<const GaussianInt> big_h);

} // namespace gdma
