// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "rng.hpp"
#include "transforms.hpp"

#include <vector>

using namespace gdma;

TEST_CASE("FFFT kernel selection over GF(16)") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    FfftPlan plan(f, 15);
    CHECK(plan.kernel() == f.alpha()); // (q-1)/N = 1, kernel is alpha itself
    CHECK(plan.conjugacy_multiplier() == 2);

    FfftPlan plan5(f, 5);
    CHECK(plan5.kernel() == f.alpha_pow(3)); // order 5
    CHECK(f.element_order(plan5.kernel()) == 5);

    FfftPlan plan3(f, 3);
    CHECK(f.element_order(plan3.kernel()) == 3);

    FfftPlan plan1(f, 1);
    CHECK(plan1.kernel() == f.one());
}

TEST_CASE("FFFT rejects impossible lengths") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    CHECK_THROWS_AS(FfftPlan(f, 7), error);  // 7 does not divide 15
    CHECK_THROWS_AS(FfftPlan(f, 16), error);
    CHECK_THROWS_AS(FfftPlan(f, 0), error);
    try {
        FfftPlan(f, 4);
    } catch (const error& e) {
        CHECK(e.code() == errc::length_mismatch);
    }

    // every divisor of p^m - 1 is automatically coprime to p, so all valid
    // lengths admit an inverse transform
    ExtensionField g(3, 2, std::vector<uint32_t>{2, 2, 1}); // GF(9), order 8
    CHECK_NOTHROW(FfftPlan(g, 8));
    CHECK_NOTHROW(FfftPlan(g, 4));
    CHECK_NOTHROW(FfftPlan(g, 2));
    ExtensionField h(7, 1, std::vector<uint32_t>{4, 1}); // GF(7), alpha = 3, order 6
    CHECK(h.element_order(h.alpha()) == 6);
    CHECK_NOTHROW(FfftPlan(h, 6));
}

TEST_CASE("FFFT forward matches the defining sum") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    FfftPlan plan(f, 15);
    Philox rng(2024);
    for (int t = 0; t < 50; ++t) {
        std::vector<uint32_t> v(15);
        for (auto& x : v) x = rng.next_below(16);
        std::vector<uint32_t> big = plan.forward(v);
        for (uint32_t k = 0; k < 15; ++k) {
            uint32_t acc = 0;
            for (uint32_t i = 0; i < 15; ++i)
                acc = f.add(acc, f.mul(v[i], f.pow(plan.kernel(), (int64_t)i * k)));
            CHECK(big[k] == acc);
        }
    }
}

TEST_CASE("FFFT round trip on random GF(2)-valued vectors") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    FfftPlan plan(f, 15);
    Philox rng(7);
    for (int t = 0; t < 10000; ++t) {
        std::vector<uint32_t> v(15);
        for (auto& x : v) x = rng.next_below(2);
        std::vector<uint32_t> big = plan.forward(v);
        CHECK(plan.inverse(big) == v);

        // conjugacy rule for ground-field signals: V_{2k} = V_k^2
        for (uint32_t k = 0; k < 15; ++k) CHECK(big[2 * k % 15] == f.mul(big[k], big[k]));
    }
    // whole-field inputs round trip as well
    for (int t = 0; t < 1000; ++t) {
        std::vector<uint32_t> v(15);
        for (auto& x : v) x = rng.next_below(16);
        CHECK(plan.inverse(plan.forward(v)) == v);
    }
}

TEST_CASE("FFFT subfield lengths and spectrum validity") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    for (uint32_t n : {1u, 3u, 5u, 15u}) {
        FfftPlan plan(f, n);
        Philox rng(100 + n);
        for (int t = 0; t < 200; ++t) {
            std::vector<uint32_t> v(n);
            for (auto& x : v) x = rng.next_below(2);
            std::vector<uint32_t> big = plan.forward(v);
            CHECK(plan.inverse(big) == v);
            CHECK(plan.spectrum_valid(big));
        }
    }
    // a spectrum violating the conjugacy rule is flagged
    FfftPlan plan(f, 15);
    std::vector<uint32_t> bad(15, 0);
    bad[1] = f.alpha(); // V_2 should be alpha^2, left 0
    CHECK_FALSE(plan.spectrum_valid(bad));
}

TEST_CASE("free function wrappers round trip") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    std::vector<uint32_t> ones(15, 1);
    std::vector<uint32_t> big = ffft(f, ones);
    std::vector<uint32_t> expect(15, 0);
    expect[0] = 1; // sum of 15 ones in characteristic 2
    CHECK(big == expect);
    CHECK(iffft(f, big) == ones);
}

TEST_CASE("cas table over GI(3), length 8, frozen") {
    GaussianField gf(3);
    CasKernel k(gf, 8);

    // zeta = generator (1+j) since (q^2-1)/8 = 1
    CHECK(k.zeta() == GaussianInt{1, 1});

    // cas(i) = cos(i) + sin(i) with the standard half/2j splits:
    // 1, 0, 2, j, 2, 0, 1, 2j
    const GaussianInt expect[8] = {
        {1, 0}, {0, 0}, {2, 0}, {0, 1}, {2, 0}, {0, 0}, {1, 0}, {0, 2},
    };
    for (uint32_t i = 0; i < 8; ++i) CHECK(k.cas(i) == expect[i]);

    // the Frobenius multiplier for this kernel is reflected: cas(k)^3 = cas(-3k)
    REQUIRE(k.conjugacy_multiplier().has_value());
    CHECK(*k.conjugacy_multiplier() == 5); // -3 mod 8

    // and the direct rule would be wrong: cas(1)^3 = 0 but cas(3) = j
    GaussianInt c1 = k.cas(1);
    CHECK(gf.pow(c1, 3) == gf.zero());
    CHECK(k.cas(3) == GaussianInt{0, 1});

    // M^2 = 8I = 2I holds, enabling the self-inverse fast path
    CHECK(k.self_inverse());
}

TEST_CASE("FFHT round trip on every GF(3) vector of length 8") {
    GaussianField gf(3);
    CasKernel k(gf, 8);
    std::vector<uint32_t> v(8, 0);
    for (uint32_t code = 0; code < 6561; ++code) { // 3^8
        uint32_t c = code;
        for (int i = 0; i < 8; ++i) {
            v[i] = c % 3;
            c /= 3;
        }
        std::vector<GaussianInt> big = k.forward(v);
        std::vector<GaussianInt> back = k.inverse(big);
        bool ok = true;
        for (int i = 0; i < 8; ++i) ok = ok && back[i] == GaussianInt{v[i], 0};
        CHECK(ok);

        // reflected conjugacy rule on the spectrum: H_k^3 = H_{-3k mod 8}
        for (uint32_t kk = 0; kk < 8; ++kk) {
            uint32_t target = (5 * kk) % 8;
            CHECK(gf.pow(big[kk], 3) == big[target]);
        }
    }
}

TEST_CASE("FFHT fast inverse equals the matrix inverse") {
    GaussianField gf(3);
    CasKernel k(gf, 8);
    REQUIRE(k.self_inverse());
    Philox rng(99);
    for (int t = 0; t < 500; ++t) {
        std::vector<GaussianInt> h(8);
        for (auto& x : h) x = {rng.next_below(3), rng.next_below(3)};
        CHECK(k.inverse(h) == k.inverse_by_matrix(h));
    }
}

TEST_CASE("FFHT handles GI-valued inputs and subfield lengths") {
    GaussianField gf(3);
    for (uint32_t n : {1u, 2u, 4u, 8u}) {
        CasKernel k(gf, n);
        Philox rng(55 + n);
        for (int t = 0; t < 200; ++t) {
            std::vector<GaussianInt> v(n);
            for (auto& x : v) x = {rng.next_below(3), rng.next_below(3)};
            std::vector<GaussianInt> big = k.forward_gi(v);
            CHECK(k.inverse(big) == v);
        }
    }
    GaussianField g7(7);
    CasKernel k16(g7, 16); // 16 | 48
    Philox rng(1234);
    for (int t = 0; t < 100; ++t) {
        std::vector<GaussianInt> v(16);
        for (auto& x : v) x = {rng.next_below(7), rng.next_below(7)};
        CHECK(k16.inverse(k16.forward_gi(v)) == v);
    }
}

TEST_CASE("FFHT rejects bad lengths and out-of-range input") {
    GaussianField gf(3);
    CHECK_THROWS_AS(CasKernel(gf, 3), error);  // 3 does not divide 8
    CHECK_THROWS_AS(CasKernel(gf, 16), error);
    CHECK_THROWS_AS(CasKernel(gf, 0), error);
    CasKernel k(gf, 8);
    std::vector<uint32_t> bad(8, 3); // 3 is not a GF(3) digit
    CHECK_THROWS_AS(k.forward(bad), error);
    std::vector<uint32_t> short_v(7, 1);
    CHECK_THROWS_AS(k.forward(short_v), error);
}

TEST_CASE("FFHT free functions") {
    GaussianField gf(3);
    CasKernel k(gf, 8);
    std::vector<uint32_t> ones(8, 1);
    std::vector<GaussianInt> big = ffht(k, ones);
    CHECK(big[0] == GaussianInt{2, 0}); // 8 mod 3
    for (int i = 1; i < 8; ++i) CHECK(big[i] == gf.zero());
    std::vector<GaussianInt> back = iffht(k, big);
    for (int i = 0; i < 8; ++i) CHECK(back[i] == GaussianInt{1, 0});
}
