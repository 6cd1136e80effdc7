// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "cyclotomic.hpp"
#include "rng.hpp"
#include "transforms.hpp"

#include <cmath>
#include <set>

using namespace gdma;

TEST_CASE("cyclotomic cosets mod 15 under doubling, frozen") {
    CosetPartition part = cyclotomic_cosets(15, 2);
    CHECK(part.n == 15);
    CHECK(part.multiplier == 2);
    REQUIRE(part.nu() == 5);
    CHECK(part.leaders == std::vector<uint32_t>{0, 1, 3, 5, 7});
    CHECK(part.cosets[0] == std::vector<uint32_t>{0});
    CHECK(part.cosets[1] == std::vector<uint32_t>{1, 2, 4, 8});
    CHECK(part.cosets[2] == std::vector<uint32_t>{3, 6, 12, 9});
    CHECK(part.cosets[3] == std::vector<uint32_t>{5, 10});
    CHECK(part.cosets[4] == std::vector<uint32_t>{7, 14, 13, 11});

    Rational g = compression_ratio(part);
    CHECK(g == Rational{15, 5});
    CHECK(g.reduced() == Rational{3, 1});
    CHECK(g.value() == doctest::Approx(3.0));
}

TEST_CASE("cosets partition the residues for any valid multiplier") {
    for (auto [n, c] : std::vector<std::pair<uint32_t, uint32_t>>{
             {15, 2}, {15, 4}, {8, 5}, {8, 3}, {7, 2}, {63, 2}, {21, 4}}) {
        CosetPartition part = cosets_with_multiplier(n, c);
        std::set<uint32_t> seen;
        for (size_t i = 0; i < part.cosets.size(); ++i) {
            const auto& coset = part.cosets[i];
            REQUIRE(!coset.empty());
            CHECK(coset.front() == part.leaders[i]);
            for (size_t j = 0; j < coset.size(); ++j) {
                // orbit order: each member is multiplier * previous
                CHECK(coset[(j + 1) % coset.size()] ==
                      (uint64_t)coset[j] * part.multiplier % n);
                // the leader is the orbit minimum
                CHECK(part.leaders[i] <= coset[j]);
                CHECK(seen.insert(coset[j]).second); // disjoint
            }
        }
        CHECK(seen.size() == n); // exhaustive
        // leaders sorted ascending
        for (size_t i = 1; i < part.leaders.size(); ++i)
            CHECK(part.leaders[i - 1] < part.leaders[i]);
    }
}

TEST_CASE("coset construction rejects degenerate multipliers") {
    CHECK_THROWS_AS(cosets_with_multiplier(15, 3), error); // gcd(3, 15) != 1
    CHECK_THROWS_AS(cosets_with_multiplier(0, 2), error);
    CHECK_NOTHROW(cosets_with_multiplier(1, 1));
    CHECK(cosets_with_multiplier(1, 1).nu() == 1);
}

TEST_CASE("Hartley cosets over GI(3) length 8 use the reflected multiplier") {
    GaussianField gf(3);
    CasKernel k(gf, 8);
    REQUIRE(k.conjugacy_multiplier().has_value());
    CosetPartition part = cosets_with_multiplier(8, *k.conjugacy_multiplier());
    CHECK(part.multiplier == 5);
    CHECK(part.nu() == 6);
    CHECK(part.leaders == std::vector<uint32_t>{0, 1, 2, 3, 4, 6});
    Rational g = compression_ratio(part);
    CHECK(g == Rational{8, 6});
    CHECK(g.reduced() == Rational{4, 3});
}

TEST_CASE("compress keeps leader values in leader order") {
    CosetPartition part = cyclotomic_cosets(15, 2);
    std::vector<uint32_t> spec(15);
    for (uint32_t i = 0; i < 15; ++i) spec[i] = 100 + i;
    std::vector<uint32_t> lead = compress_spectrum<uint32_t>(spec, part);
    CHECK(lead == std::vector<uint32_t>{100, 101, 103, 105, 107});
    std::vector<uint32_t> wrong(14);
    CHECK_THROWS_AS(compress_spectrum<uint32_t>(wrong, part), error);
}

TEST_CASE("compress then expand restores valid FFFT spectra") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    FfftPlan plan(f, 15);
    CosetPartition part = cyclotomic_cosets(15, 2);
    Philox rng(31337);
    for (int t = 0; t < 2000; ++t) {
        std::vector<uint32_t> v(15);
        for (auto& x : v) x = rng.next_below(2);
        std::vector<uint32_t> spec = plan.forward(v);
        std::vector<uint32_t> lead = compress_spectrum<uint32_t>(spec, part);
        REQUIRE(lead.size() == 5);
        CHECK(expand_spectrum(f, lead, part) == spec);
    }
}

TEST_CASE("compress then expand restores valid FFHT spectra") {
    GaussianField gf(3);
    CasKernel k(gf, 8);
    CosetPartition part = cosets_with_multiplier(8, *k.conjugacy_multiplier());
    std::vector<uint32_t> v(8);
    for (uint32_t code = 0; code < 6561; ++code) {
        uint32_t c = code;
        for (int i = 0; i < 8; ++i) {
            v[i] = c % 3;
            c /= 3;
        }
        std::vector<GaussianInt> spec = k.forward(v);
        std::vector<GaussianInt> lead = compress_spectrum<GaussianInt>(spec, part);
        REQUIRE(lead.size() == 6);
        bool same = expand_spectrum(gf, lead, part) == spec;
        CHECK(same);
    }
}

TEST_CASE("expansion rejects leader vectors of the wrong size") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    CosetPartition part = cyclotomic_cosets(15, 2);
    std::vector<uint32_t> lead(4, 0);
    CHECK_THROWS_AS(expand_spectrum(f, lead, part), error);
}

TEST_CASE("Shannon-type bound on the compression ratio") {
    // gamma <= log2(1 + SNR): for gamma = 3 the minimum SNR is exactly 7
    CHECK(min_snr_for_ratio(3.0, 2) == doctest::Approx(7.0));
    CHECK(10.0 * std::log10(min_snr_for_ratio(3.0, 2)) == doctest::Approx(8.45).epsilon(0.001));
    CHECK(shannon_bound(7.0, 2) == doctest::Approx(3.0));
    CHECK(shannon_bound(8.0, 3) == doctest::Approx(2.0));
    CHECK(min_snr_for_ratio(2.0, 3) == doctest::Approx(8.0));

    BoundReport rep = check_bound(Rational{15, 5}, 7.0, 2);
    CHECK(rep.gamma == doctest::Approx(3.0));
    CHECK(rep.satisfied);
    CHECK(rep.min_snr == doctest::Approx(7.0));
    CHECK(rep.min_snr_db == doctest::Approx(8.45098));

    BoundReport tight = check_bound(Rational{15, 5}, 6.9, 2);
    CHECK_FALSE(tight.satisfied);

    CHECK_THROWS_AS(check_bound(Rational{3, 1}, -1.0, 2), error);
    CHECK_THROWS_AS(check_bound(Rational{3, 1}, 1.0, 1), error);
}

TEST_CASE("rate and bandwidth budget") {
    // N = 15 binary users, T = 1 s, gamma = 3:
    // R = 15 * 1 / 2 = 7.5 bits/s, W = 15 / (2 * 3) = 2.5 Hz
    LinkBudget b = link_budget(15, 2, 1.0, Rational{3, 1});
    CHECK(b.rate_bits_per_s == doctest::Approx(7.5));
    CHECK(b.bandwidth_hz == doctest::Approx(2.5));

    // without compression the bandwidth is the full N/(2T)
    LinkBudget full = link_budget(15, 2, 1.0, Rational{1, 1});
    CHECK(full.bandwidth_hz == doctest::Approx(7.5));

    // faster signalling scales both linearly
    LinkBudget fast = link_budget(15, 2, 0.001, Rational{3, 1});
    CHECK(fast.rate_bits_per_s == doctest::Approx(7500.0));
    CHECK(fast.bandwidth_hz == doctest::Approx(2500.0));

    CHECK_THROWS_AS(link_budget(15, 2, 0.0, Rational{3, 1}), error);
    CHECK_THROWS_AS(link_budget(15, 2, 1.0, Rational{0, 1}), error);
}

TEST_CASE("binary input spectra over GF(8) length 7 form a small linear code") {
    ExtensionField f = ExtensionField::with_default_poly(2, 3);
    SpectralCodeReport rep = enumerate_valid_spectra(f, 7);
    CHECK(rep.size == 128);
    CHECK(rep.linear);
    CHECK(rep.min_distance == 1);

    // witness: the all-ones input transforms to weight-1 spectrum (1, 0, ..., 0)
    std::vector<uint32_t> expect_spec(7, 0);
    expect_spec[0] = 1;
    CHECK(rep.min_weight_spectrum == expect_spec);
    CHECK(rep.min_weight_input == std::vector<uint32_t>(7, 1));

    // cross-check the witness through the transform itself
    CHECK(ffft(f, rep.min_weight_input) == rep.min_weight_spectrum);
}

TEST_CASE("spectra enumeration also covers GF(16) length 15") {
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    SpectralCodeReport rep = enumerate_valid_spectra(f, 15);
    CHECK(rep.size == 32768); // 2^15 distinct spectra
    CHECK(rep.linear);
    CHECK(rep.min_distance == 1);

    // shorter lengths over the same field stay injective and linear too
    SpectralCodeReport sub = enumerate_valid_spectra(f, 5);
    CHECK(sub.size == 32);
    CHECK(sub.linear);
}

TEST_CASE("enumeration guard rejects oversized problems") {
    ExtensionField f(2, 8, std::vector<uint32_t>{1, 0, 1, 1, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(enumerate_valid_spectra(f, 255), error);
    try {
        enumerate_valid_spectra(f, 255);
    } catch (const error& e) {
        CHECK(e.code() == errc::enumeration_too_large);
    }
}
