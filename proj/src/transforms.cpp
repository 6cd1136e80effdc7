// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "transforms.hpp"

#include <numeric>

namespace gdma {

FfftPlan::FfftPlan(const ExtensionField& f, uint32_t n) : f_(&f), n_(n) {
    require(n >= 1, errc::length_mismatch, "transform length must be >= 1");
    require(f.order() % n == 0, errc::length_mismatch,
            "transform length " + std::to_string(n) + " does not divide the multiplicative "
            "group order " + std::to_string(f.order()));
    require(n % f.p() != 0, errc::non_invertible_length,
            "transform length shares a factor with the characteristic, no inverse exists");
    kernel_ = f.alpha_pow(f.order() / n);
    p_mod_n_ = f.p() % n;

    pow_.resize(n_);
    for (uint32_t t = 0; t < n_; ++t) pow_[t] = f.pow(kernel_, t);

    // (n mod p)^-1 embedded in the field; n is coprime to p, so n mod p != 0
    n_inv_ = f.inv(n % f.p());
}

std::vector<uint32_t> FfftPlan::forward(std::span<const uint32_t> v) const {
    require(v.size() == n_, errc::length_mismatch,
            "input length " + std::to_string(v.size()) + " != transform length " +
                std::to_string(n_));
    const ExtensionField& f = *f_;
    for (uint32_t x : v) f.check_element(x);
    std::vector<uint32_t> out(n_, 0);
    for (uint32_t k = 0; k < n_; ++k) {
        uint32_t acc = 0;
        uint64_t ik = 0;
        for (uint32_t i = 0; i < n_; ++i) {
            acc = f.add(acc, f.mul(v[i], pow_[ik]));
            ik += k;
            if (ik >= n_) ik -= n_;
        }
        out[k] = acc;
    }
    return out;
}

std::vector<uint32_t> FfftPlan::inverse(std::span<const uint32_t> big_v) const {
    require(big_v.size() == n_, errc::length_mismatch,
            "spectrum length " + std::to_string(big_v.size()) + " != transform length " +
                std::to_string(n_));
    const ExtensionField& f = *f_;
    for (uint32_t x : big_v) f.check_element(x);
    std::vector<uint32_t> out(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t acc = 0;
        uint64_t ik = 0; // runs through -ik mod n via n - ik
        for (uint32_t k = 0; k < n_; ++k) {
            uint32_t idx = static_cast<uint32_t>((n_ - ik) % n_);
            acc = f.add(acc, f.mul(big_v[k], pow_[idx]));
            ik += i;
            if (ik >= n_) ik -= n_;
        }
        out[i] = f.mul(n_inv_, acc);
    }
    return out;
}

bool FfftPlan::spectrum_valid(std::span<const uint32_t> big_v) const {
    if (big_v.size() != n_) return false;
    const ExtensionField& f = *f_;
    for (uint32_t k = 0; k < n_; ++k) {
        uint32_t target = big_v[(static_cast<uint64_t>(p_mod_n_) * k) % n_];
        if (f.pow(big_v[k], f.p()) != target) return false;
    }
    return true;
}

std::vector<uint32_t> ffft(const ExtensionField& f, std::span<const uint32_t> v) {
    return FfftPlan(f, static_cast<uint32_t>(v.size())).forward(v);
}

std::vector<uint32_t> iffft(const ExtensionField& f, std::span<const uint32_t> big_v) {
    return FfftPlan(f, static_cast<uint32_t>(big_v.size())).inverse(big_v);
}

CasKernel::CasKernel(const GaussianField& gf, uint32_t n) : gf_(&gf), n_(n) {
    require(n >= 1, errc::length_mismatch, "transform length must be >= 1");
    require(gf.order() % n == 0, errc::length_mismatch,
            "transform length " + std::to_string(n) + " does not divide the multiplicative "
            "group order " + std::to_string(gf.order()));

    zeta_ = gf.pow(gf.generator(), gf.order() / n);

    // cas(i) = (zeta^i + zeta^-i)/2 + (zeta^i - zeta^-i)/(2j)
    const GaussianInt inv2 = gf.inv({2 % gf.q(), 0});
    const GaussianInt inv2j = gf.inv(gf.mul({2 % gf.q(), 0}, gf.j()));
    cas_.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        GaussianInt zi = gf.pow(zeta_, i);
        GaussianInt zmi = gf.pow(zeta_, -(static_cast<int64_t>(i)));
        GaussianInt cos_i = gf.mul(gf.add(zi, zmi), inv2);
        GaussianInt sin_i = gf.mul(gf.sub(zi, zmi), inv2j);
        cas_[i] = gf.add(cos_i, sin_i);
    }

    // Which Frobenius rule does the table satisfy? cas(k)^q = cas(ck) for all
    // k pins the conjugacy of spectra of GF(q)-valued inputs by linearity.
    const uint32_t q = gf.q();
    for (uint32_t cand : {q % n_, (n_ - q % n_) % n_}) {
        bool ok = true;
        for (uint32_t k = 0; k < n_ && ok; ++k)
            ok = gf.pow(cas_[k], q) == cas_[(static_cast<uint64_t>(cand) * k) % n_];
        if (ok) {
            conj_mult_ = cand;
            break;
        }
    }

    // M^2 = n I check for the fast inverse path
    const GaussianInt n_scalar{n_ % q, 0};
    self_inverse_ = true;
    for (uint32_t i = 0; i < n_ && self_inverse_; ++i) {
        for (uint32_t l = 0; l < n_ && self_inverse_; ++l) {
            GaussianInt acc = gf.zero();
            for (uint32_t k = 0; k < n_; ++k)
                acc = gf.add(acc, gf.mul(cas_[(static_cast<uint64_t>(i) * k) % n_],
                                         cas_[(static_cast<uint64_t>(k) * l) % n_]));
            GaussianInt want = (i == l) ? n_scalar : gf.zero();
            self_inverse_ = (acc == want);
        }
    }
    if (self_inverse_) {
        require(n_ % q != 0, errc::singular_kernel_matrix,
                "transform length is divisible by the characteristic");
        n_inv_ = gf.inv(n_scalar);
    }

    build_inverse_matrix();
}

void CasKernel::build_inverse_matrix() {
    const GaussianField& gf = *gf_;
    const uint32_t n = n_;
    // Gauss-Jordan on [M | I] over GI(q)
    std::vector<GaussianInt> a(static_cast<size_t>(n) * 2 * n, gf.zero());
    auto at = [&](uint32_t r, uint32_t c) -> GaussianInt& { return a[static_cast<size_t>(r) * 2 * n + c]; };
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c)
            at(r, c) = cas_[(static_cast<uint64_t>(r) * c) % n];
        at(r, n + r) = gf.one();
    }
    for (uint32_t col = 0; col < n; ++col) {
        uint32_t piv = col;
        while (piv < n && at(piv, col) == gf.zero()) ++piv;
        require(piv < n, errc::singular_kernel_matrix,
                "cas kernel matrix is singular, transform not invertible");
        if (piv != col)
            for (uint32_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
        GaussianInt pinv = gf.inv(at(col, col));
        for (uint32_t c = 0; c < 2 * n; ++c) at(col, c) = gf.mul(at(col, c), pinv);
        for (uint32_t r = 0; r < n; ++r) {
            if (r == col || at(r, col) == gf.zero()) continue;
            GaussianInt factor = at(r, col);
            for (uint32_t c = 0; c < 2 * n; ++c)
                at(r, c) = gf.sub(at(r, c), gf.mul(factor, at(col, c)));
        }
    }
    inv_matrix_.assign(static_cast<size_t>(n) * n, gf.zero());
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c)
            inv_matrix_[static_cast<size_t>(r) * n + c] = at(r, n + c);
}

std::vector<GaussianInt> CasKernel::forward(std::span<const uint32_t> v) const {
    require(v.size() == n_, errc::length_mismatch,
            "input length " + std::to_string(v.size()) + " != transform length " +
                std::to_string(n_));
    const GaussianField& gf = *gf_;
    for (uint32_t x : v)
        require(x < gf.q(), errc::invalid_argument, "input symbol out of range for GF(q)");
    std::vector<GaussianInt> out(n_, gf.zero());
    for (uint32_t k = 0; k < n_; ++k) {
        GaussianInt acc = gf.zero();
        uint64_t ik = 0;
        for (uint32_t i = 0; i < n_; ++i) {
            acc = gf.add(acc, gf.scale(v[i], cas_[ik]));
            ik += k;
            if (ik >= n_) ik -= n_;
        }
        out[k] = acc;
    }
    return out;
}

std::vector<GaussianInt> CasKernel::forward_gi(std::span<const GaussianInt> v) const {
    require(v.size() == n_, errc::length_mismatch,
            "input length " + std::to_string(v.size()) + " != transform length " +
                std::to_string(n_));
    const GaussianField& gf = *gf_;
    std::vector<GaussianInt> out(n_, gf.zero());
    for (uint32_t k = 0; k < n_; ++k) {
        GaussianInt acc = gf.zero();
        uint64_t ik = 0;
        for (uint32_t i = 0; i < n_; ++i) {
            acc = gf.add(acc, gf.mul(v[i], cas_[ik]));
            ik += k;
            if (ik >= n_) ik -= n_;
        }
        out[k] = acc;
    }
    return out;
}

std::vector<GaussianInt> CasKernel::inverse(std::span<const GaussianInt> big_h) const {
    if (self_inverse_) {
        std::vector<GaussianInt> t = forward_gi(big_h);
        for (GaussianInt& x : t) x = gf_->mul(n_inv_, x);
        return t;
    }
    return inverse_by_matrix(big_h);
}

std::vector<GaussianInt> CasKernel::inverse_by_matrix(std::span<const GaussianInt> big_h) const {
    require(big_h.size() == n_, errc::length_mismatch,
            "spectrum length " + std::to_string(big_h.size()) + " != transform length " +
                std::to_string(n_));
    const GaussianField& gf = *gf_;
    std::vector<GaussianInt> out(n_, gf.zero());
    for (uint32_t i = 0; i < n_; ++i) {
        GaussianInt acc = gf.zero();
        for (uint32_t k = 0; k < n_; ++k)
            acc = gf.add(acc, gf.mul(inv_matrix_[static_cast<size_t>(i) * n_ + k], big_h[k]));
        out[i] = acc;
    }
    return out;
}

std::vector<GaussianInt> ffht(const CasKernel& k, std::span<const uint32_t> v) {
    return k.forward(v);
}

std::vector<GaussianInt> iffht(const CasKernel& k, std::span<const GaussianInt> big_h) {
    return k.inverse(big_h);
}

} // namespace gdma
