// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "modem.hpp"
#include "rng.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

using namespace gdma;

namespace {

const Modulation kAll[] = {Modulation::bpsk,  Modulation::qpsk,  Modulation::psk8,
                           Modulation::qam16, Modulation::qam32, Modulation::qam64};

} // namespace

TEST_CASE("names round trip and unknown names are rejected") {
    for (Modulation m : kAll) CHECK(modulation_from_name(modulation_name(m)) == m);
    CHECK(modulation_from_name("bpsk") == Modulation::bpsk);
    CHECK_THROWS_AS(modulation_from_name("qam16"), error); // names are 16qam style
    CHECK_THROWS_AS(modulation_from_name(""), error);
}

TEST_CASE("every constellation has unit average energy") {
    for (Modulation m : kAll) {
        const Constellation& c = Constellation::get(m);
        CAPTURE(c.name());
        CHECK(c.average_energy() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.order() == (1u << c.bits_per_symbol()));
    }
    CHECK(Constellation::get(Modulation::bpsk).bits_per_symbol() == 1);
    CHECK(Constellation::get(Modulation::qpsk).bits_per_symbol() == 2);
    CHECK(Constellation::get(Modulation::psk8).bits_per_symbol() == 3);
    CHECK(Constellation::get(Modulation::qam16).bits_per_symbol() == 4);
    CHECK(Constellation::get(Modulation::qam32).bits_per_symbol() == 5);
    CHECK(Constellation::get(Modulation::qam64).bits_per_symbol() == 6);
}

TEST_CASE("pinned geometry and labels") {
    const Constellation& b = Constellation::get(Modulation::bpsk);
    CHECK(b.points()[b.point_of_label(0)] == std::complex<double>(1.0, 0.0));
    CHECK(b.points()[b.point_of_label(1)] == std::complex<double>(-1.0, 0.0));

    // QPSK: first label bit on I, second on Q, 0 means positive
    const Constellation& q = Constellation::get(Modulation::qpsk);
    const double r = 1.0 / std::sqrt(2.0);
    auto at = [](const Constellation& c, uint32_t label) {
        return c.points()[c.point_of_label(label)];
    };
    CHECK(at(q, 0b00).real() == doctest::Approx(r));
    CHECK(at(q, 0b00).imag() == doctest::Approx(r));
    CHECK(at(q, 0b01).real() == doctest::Approx(r));
    CHECK(at(q, 0b01).imag() == doctest::Approx(-r));
    CHECK(at(q, 0b10).real() == doctest::Approx(-r));
    CHECK(at(q, 0b10).imag() == doctest::Approx(r));
    CHECK(at(q, 0b11).real() == doctest::Approx(-r));
    CHECK(at(q, 0b11).imag() == doctest::Approx(-r));

    // 16-QAM: levels {3,1,-1,-3}/sqrt 10, all-zero label in the (+,+) corner
    const Constellation& s = Constellation::get(Modulation::qam16);
    const double u = 1.0 / std::sqrt(10.0);
    CHECK(at(s, 0b0000).real() == doctest::Approx(3 * u));
    CHECK(at(s, 0b0000).imag() == doctest::Approx(3 * u));
    CHECK(s.min_distance() == doctest::Approx(2 * u));

    // 64-QAM: levels {7,...,-7}/sqrt 42
    const Constellation& x = Constellation::get(Modulation::qam64);
    CHECK(at(x, 0).real() == doctest::Approx(7.0 / std::sqrt(42.0)));
    CHECK(x.min_distance() == doctest::Approx(2.0 / std::sqrt(42.0)));

    // 8-PSK: point k at angle 2 pi k / 8 with reflected Gray label
    const Constellation& p = Constellation::get(Modulation::psk8);
    const uint32_t gray[8] = {0, 1, 3, 2, 6, 7, 5, 4};
    for (uint32_t k = 0; k < 8; ++k) {
        CHECK(p.label_of_point(k) == gray[k]);
        CHECK(p.points()[k].real() == doctest::Approx(std::cos(2.0 * M_PI * k / 8)));
        CHECK(p.points()[k].imag() == doctest::Approx(std::sin(2.0 * M_PI * k / 8)));
    }

    // 32-QAM cross: 6x6 grid minus corners, unit energy fixes dmin = 2/sqrt 20
    const Constellation& c32 = Constellation::get(Modulation::qam32);
    CHECK(c32.order() == 32);
    CHECK(c32.min_distance() == doctest::Approx(2.0 / std::sqrt(20.0)));
    CHECK(c32.average_neighbours() == doctest::Approx(3.25));
}

TEST_CASE("minimum-distance neighbours differ in one label bit where Gray applies") {
    for (Modulation m : {Modulation::qpsk, Modulation::psk8, Modulation::qam16,
                         Modulation::qam64}) {
        const Constellation& c = Constellation::get(m);
        CAPTURE(c.name());
        const double d = c.min_distance() * (1.0 + 1e-9);
        for (uint32_t a = 0; a < c.order(); ++a)
            for (uint32_t b = a + 1; b < c.order(); ++b)
                if (std::abs(c.points()[a] - c.points()[b]) < d)
                    CHECK(std::popcount(c.label_of_point(a) ^ c.label_of_point(b)) == 1);
    }
}

TEST_CASE("modulate and demodulate invert each other without noise") {
    Philox rng(0x51ab);
    for (Modulation m : kAll) {
        const Constellation& c = Constellation::get(m);
        CAPTURE(c.name());
        std::vector<uint8_t> bits(997); // deliberately not a multiple of any bps
        for (auto& b : bits) b = static_cast<uint8_t>(rng.next_below(2));
        uint32_t pad = 0;
        auto sym = modulate(c, bits, pad);
        CHECK(pad < c.bits_per_symbol());
        CHECK((bits.size() + pad) % c.bits_per_symbol() == 0);
        CHECK(sym.size() == (bits.size() + pad) / c.bits_per_symbol());
        auto back = demodulate(c, sym);
        REQUIRE(back.size() == bits.size() + pad);
        for (size_t i = 0; i < bits.size(); ++i) CHECK(back[i] == bits[i]);
        for (size_t i = bits.size(); i < back.size(); ++i) CHECK(back[i] == 0);
    }
}

TEST_CASE("modulate validates bit values and reports pad counts") {
    const Constellation& q = Constellation::get(Modulation::qpsk);
    uint32_t pad = 9;
    auto sym = modulate(q, std::vector<uint8_t>{}, pad);
    CHECK(sym.empty());
    CHECK(pad == 0);

    std::vector<uint8_t> five(5, 1);
    auto s2 = modulate(Constellation::get(Modulation::qam16), five, pad);
    CHECK(s2.size() == 2);
    CHECK(pad == 3);

    std::vector<uint8_t> bad = {0, 2};
    CHECK_THROWS_AS(modulate(q, bad, pad), error);
}

TEST_CASE("nearest-point ties resolve to the lowest index") {
    const Constellation& b = Constellation::get(Modulation::bpsk);
    CHECK(nearest_point(b, {0.0, 0.0}) == 0); // midpoint of +1 and -1
    CHECK(nearest_point(b, {-0.001, 5.0}) == 1);

    const Constellation& q = Constellation::get(Modulation::qpsk);
    CHECK(nearest_point(q, {0.0, 0.0}) == 0); // equidistant to all four
}

TEST_CASE("awgn is a no-op at zero density and matches its moments otherwise") {
    Philox rng(7);
    std::vector<std::complex<double>> s = {{1.0, -2.0}, {0.25, 0.75}};
    auto copy = s;
    add_awgn(s, 0.0, rng);
    CHECK(s == copy);
    CHECK_THROWS_AS(add_awgn(s, -0.1, rng), error);

    const size_t n = 200000;
    const double n0 = 0.5;
    std::vector<std::complex<double>> z(n, {0.0, 0.0});
    add_awgn(z, n0, rng);
    double mr = 0, mi = 0, vr = 0, vi = 0;
    for (const auto& v : z) {
        mr += v.real();
        mi += v.imag();
        vr += v.real() * v.real();
        vi += v.imag() * v.imag();
    }
    mr /= n;
    mi /= n;
    vr = vr / n - mr * mr;
    vi = vi / n - mi * mi;
    // per-dimension variance n0 / 2; means are 0 within a few sigma / sqrt(n)
    CHECK(std::abs(mr) < 4.0 * std::sqrt(n0 / 2.0 / n));
    CHECK(std::abs(mi) < 4.0 * std::sqrt(n0 / 2.0 / n));
    CHECK(vr == doctest::Approx(n0 / 2.0).epsilon(0.02));
    CHECK(vi == doctest::Approx(n0 / 2.0).epsilon(0.02));
}

TEST_CASE("closed-form symbol error rates, frozen values") {
    auto ser = [](Modulation m, double esn0) {
        return theoretical_ser(Constellation::get(m), esn0);
    };
    CHECK(qfunc(0.0) == doctest::Approx(0.5));
    CHECK(qfunc(1.6448536269514722) == doctest::Approx(0.05).epsilon(1e-12));

    CHECK(ser(Modulation::bpsk, 1.0) == doctest::Approx(0.07864960352514257).epsilon(1e-12));
    CHECK(ser(Modulation::qpsk, 1.0) == doctest::Approx(0.29213901826285904).epsilon(1e-12));
    CHECK(ser(Modulation::qpsk, std::pow(10.0, 0.7)) ==
          doctest::Approx(0.025015632841471274).epsilon(1e-12));
    CHECK(ser(Modulation::psk8, 10.0) == doctest::Approx(0.08700502129401143).epsilon(1e-12));
    CHECK(ser(Modulation::qam16, 10.0) == doctest::Approx(0.22203085027243796).epsilon(1e-12));
    CHECK(ser(Modulation::qam64, 100.0) == doctest::Approx(0.05027040508595626).epsilon(1e-12));
    CHECK(ser(Modulation::qam32, 20.0) == doctest::Approx(0.25561121145671345).epsilon(1e-12));

    // the union estimate is clipped at 1 instead of overshooting
    CHECK(ser(Modulation::qam32, 1e-6) == doctest::Approx(1.0));
    CHECK(ser(Modulation::bpsk, 0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ser(Modulation::bpsk, -1.0), error);

    CHECK(Constellation::get(Modulation::qam16).exact_ser());
    CHECK_FALSE(Constellation::get(Modulation::psk8).exact_ser());
    CHECK_FALSE(Constellation::get(Modulation::qam32).exact_ser());
}

TEST_CASE("measured symbol error rate tracks the closed forms") {
    struct Point {
        Modulation m;
        double esn0;
        double slack; // relative allowance on top of counting noise
    };
    // Es/N0 picked so SER sits near 1e-2..1e-1: good statistics at this size.
    // Exact formulas get counting noise only; the 8-PSK and 32-QAM forms are
    // approximations and get a few percent of headroom.
    const Point points[] = {
        {Modulation::bpsk, std::pow(10.0, 0.4), 0.0},
        {Modulation::qpsk, std::pow(10.0, 0.7), 0.0},
        {Modulation::qam16, 10.0, 0.0},
        {Modulation::qam64, std::pow(10.0, 1.8), 0.0},
        {Modulation::psk8, 10.0, 0.05},
        {Modulation::qam32, 20.0, 0.15},
    };
    for (const Point& pt : points) {
        const Constellation& c = Constellation::get(pt.m);
        CAPTURE(c.name());
        const size_t n = 200000;
        const double expect = theoretical_ser(c, pt.esn0);
        Philox rng(0xce11 + static_cast<uint64_t>(pt.m));
        size_t errors = 0;
        std::vector<std::complex<double>> y(1);
        for (size_t i = 0; i < n; ++i) {
            uint32_t idx = rng.next_below(c.order());
            y[0] = c.points()[idx];
            add_awgn(y, 1.0 / pt.esn0, rng);
            if (nearest_point(c, y[0]) != idx) ++errors;
        }
        double measured = static_cast<double>(errors) / n;
        double sigma = std::sqrt(expect * (1.0 - expect) / n);
        CHECK(std::abs(measured - expect) <= 4.0 * sigma + pt.slack * expect);
    }
}
