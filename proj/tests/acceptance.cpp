// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance battery. Every criterion is a standalone check that prints the
// evidence it gathered and exactly one verdict line:
//
//   criterion <id> PASS|FAIL: <what was checked>
//
// Run with one id (01..11, or 09s) to check a single criterion, or with no
// arguments for the whole battery. Exit status 0 means every requested
// criterion passed.
//
// Criterion 09 measures the compression gain with energy charged per
// information bit. The two chains then buy very different symbol energies
// from the same Eb/N0, the measured gain sits far above the 1.5 dB ceiling,
// and the criterion fails. That outcome is reported honestly rather than
// hidden; 09s repeats the measurement with energy charged per channel bit,
// where the comparison is fair and the gain lands inside the window.

#include "cyclotomic.hpp"
#include "field.hpp"
#include "gaussian.hpp"
#include "harness.hpp"
#include "link.hpp"
#include "modem.hpp"
#include "render.hpp"
#include "rng.hpp"
#include "transcoder.hpp"
#include "transforms.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace gdma;

namespace {

bool verdict(const char* id, bool pass, const char* what) {
    std::printf("criterion %s %s: %s\n", id, pass ? "PASS" : "FAIL", what);
    return pass;
}

// ---- 01: coset partition of Z_15 under doubling ---------------------------

bool c01() {
    CosetPartition part = cyclotomic_cosets(15, 2);
    const std::vector<std::vector<uint32_t>> expect = {
        {0}, {1, 2, 4, 8}, {3, 6, 12, 9}, {5, 10}, {7, 14, 13, 11}};
    bool ok = part.cosets == expect && part.leaders == std::vector<uint32_t>{0, 1, 3, 5, 7};
    Rational gamma = compression_ratio(part).reduced();
    ok = ok && gamma == Rational{3, 1};
    std::printf("  %u cosets with leaders 0 1 3 5 7, compression ratio %lld/%lld\n",
                part.nu(), static_cast<long long>(gamma.num),
                static_cast<long long>(gamma.den));
    return verdict("01", ok, "doubling cosets mod 15 and the 3x compression ratio");
}

// ---- 02: multiplicative table of GI(3) -------------------------------------

bool c02() {
    GaussianField g(3);
    GaussianInt xi = g.generator();
    const GaussianInt expect[8] = {{1, 0}, {1, 1}, {0, 2}, {1, 2},
                                   {2, 0}, {2, 2}, {0, 1}, {2, 1}};
    bool ok = xi.re == 1 && xi.im == 1;
    for (uint32_t k = 0; k < 8; ++k) {
        GaussianInt v = g.pow(xi, k);
        if (v.re != expect[k].re || v.im != expect[k].im) ok = false;
    }
    std::printf("  xi = 1 + j has order %u; all eight powers match the fixed table\n",
                g.element_order(xi));
    return verdict("02", ok, "powers of xi = 1 + j enumerate GI(3) without zero");
}

// ---- 03: transform identities ----------------------------------------------

bool c03() {
    bool ok = true;

    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    FfftPlan plan(f, 15);
    Philox rng(0xacce55);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        std::vector<uint32_t> v(15);
        for (auto& x : v) x = rng.next_below(2);
        std::vector<uint32_t> spec = plan.forward(v);
        for (uint32_t k = 0; k < 15; ++k)
            if (spec[(2 * k) % 15] != f.mul(spec[k], spec[k])) ok = false;
        if (plan.inverse(spec) != v) ok = false;
    }
    std::printf("  10000 random binary length-15 vectors: round trip and V_2k = V_k^2\n");

    GaussianField g(3);
    CasKernel kernel(g, 8);
    for (uint32_t code = 0; code < 6561 && ok; ++code) {
        std::vector<uint32_t> v(8);
        uint32_t t = code;
        for (auto& x : v) {
            x = t % 3;
            t /= 3;
        }
        std::vector<GaussianInt> spec = kernel.forward(v);
        std::vector<GaussianInt> back = kernel.inverse(spec);
        for (int i = 0; i < 8; ++i)
            if (back[i].re != v[i] || back[i].im != 0) ok = false;
    }
    std::printf("  all 6561 ternary length-8 vectors: Hartley round trip\n");

    return verdict("03", ok, "forward/inverse identities for both transforms");
}

// ---- 04: the set of valid binary spectra over GF(8), N = 7 ------------------

bool c04() {
    ExtensionField f = ExtensionField::with_default_poly(2, 3);
    SpectralCodeReport rep = enumerate_valid_spectra(f, 7);
    bool ok = rep.size == 128 && rep.linear && rep.min_distance == 1;
    std::vector<uint32_t> e0(7, 0);
    e0[0] = 1;
    ok = ok && rep.min_weight_spectrum == e0;
    ok = ok && rep.min_weight_input == std::vector<uint32_t>(7, 1);
    std::printf("  %llu spectra, linear = %s, minimum weight %u achieved by the "
                "all-ones input\n",
                static_cast<unsigned long long>(rep.size), rep.linear ? "yes" : "no",
                rep.min_distance);
    return verdict("04", ok, "binary spectra over GF(8) form a (7, 2^7, 1) linear code");
}

// ---- 05: transcoder tables and rates ----------------------------------------

bool c05() {
    OpportunisticCode a = OpportunisticCode::builtin("A'");
    auto res = a.encode("1011001101111");
    const uint32_t powers[] = {3, 2, 1, 5, 1};
    bool ok = res.symbols.size() == 5 && res.pad_bits == 0;
    for (size_t i = 0; i < 5 && ok; ++i) {
        const CodeSymbol& s = a.symbols()[res.symbols[i]];
        ok = s.tag == CodeSymbol::Tag::alpha_power && s.k == powers[i];
    }
    std::printf("  1011001101111 -> alpha powers 3 2 1 5 1 with no padding\n");

    OpportunisticCode b = OpportunisticCode::builtin("B");
    ok = ok && a.kraft_sum().reduced() == Rational{1, 1};
    ok = ok && b.kraft_sum().reduced() == Rational{1, 1};
    double rate = b.average_rate(Weighting::uniform_bits).rate;
    ok = ok && rate == 3.125; // 25/8, exact in binary floating point
    std::printf("  Kraft sums exactly 1; code B carries %.3f bits per symbol\n", rate);

    const uint32_t orders[] = {2, 4, 8, 16, 32, 64};
    const char* expect[] = {"3.125", "1.562", "1.042", "0.781", "0.625", "0.521"};
    for (int i = 0; i < 6; ++i) {
        std::string got = format_fixed3(h_param(rate, orders[i]));
        if (got != expect[i]) ok = false;
    }
    std::printf("  h across the six constellations: 3.125 1.562 1.042 0.781 0.625 0.521\n");

    return verdict("05", ok, "prefix-code tables, Kraft sums, rate and h values");
}

// ---- 06: compression bound and the rate/bandwidth budget --------------------

bool c06() {
    BoundReport rep = check_bound(Rational{3, 1}, 7.0, 2);
    bool ok = std::abs(rep.min_snr - 7.0) < 1e-9;
    ok = ok && std::abs(rep.min_snr_db - 8.45) <= 0.01;
    ok = ok && rep.satisfied; // gamma = 3 is exactly achievable at SNR 7
    std::printf("  ratio 3 over binary users needs SNR >= %.4g (%.2f dB)\n", rep.min_snr,
                rep.min_snr_db);

    LinkBudget budget = link_budget(15, 2, 1.0, Rational{3, 1});
    ok = ok && std::abs(budget.rate_bits_per_s - 7.5) < 1e-12;
    ok = ok && std::abs(budget.bandwidth_hz - 2.5) < 1e-12;
    std::printf("  15 binary users at T = 1 s: %.4g bits/s in %.4g Hz\n",
                budget.rate_bits_per_s, budget.bandwidth_hz);

    return verdict("06", ok, "minimum SNR for ratio 3 and the 15-user budget");
}

// ---- 07: modem calibration against the Gaussian tail ------------------------

bool c07() {
    SimulationSpec spec;
    spec.link.transform = TransformKind::none;
    spec.link.p = 2;
    spec.link.n_users = 100;
    spec.link.code = "direct";
    spec.link.modulation = Modulation::bpsk;
    spec.ebn0_points_db = {0.0, 2.0, 4.0, 6.0};
    spec.stop.min_bits = 1'000'000;
    spec.stop.min_errors = 1;
    spec.workers = 4;
    spec.master_seed = 2026;

    bool ok = true;
    for (const BerRecord& r : sweep(spec)) {
        double p = qfunc(std::sqrt(2.0 * std::pow(10.0, r.ebn0_db / 10.0)));
        double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(r.bits_observed));
        double dev = (r.ber - p) / sigma;
        std::printf("  %4.1f dB: measured %.5e vs exact %.5e over %llu bits (%+.2f sigma)\n",
                    r.ebn0_db, r.ber, p, static_cast<unsigned long long>(r.bits_observed),
                    dev);
        if (std::abs(r.ber - p) > 3.0 * sigma) ok = false;
    }
    return verdict("07", ok, "uncoded BPSK inside the 3-sigma band at 0, 2, 4, 6 dB");
}

// ---- 08: union bound on the frame error rate ---------------------------------

bool c08() {
    bool ok = true;
    struct Case {
        Modulation mod;
        std::vector<double> points_db;
    };
    const Case cases[] = {
        {Modulation::bpsk, {4.0, 8.0, 10.0, 12.0}},
        {Modulation::qam16, {8.0, 10.0, 12.0, 14.0, 16.0}},
    };
    for (const Case& cs : cases) {
        LinkConfig cfg;
        cfg.transform = TransformKind::ffft;
        cfg.p = 2;
        cfg.m = 4;
        cfg.n_users = 15;
        cfg.mode = SpectrumMode::full;
        cfg.code = "direct";
        cfg.modulation = cs.mod;
        GdmaLink link(cfg);
        StopRule stop;
        stop.min_bits = 100'000;
        stop.min_errors = 1;
        for (double db : cs.points_db) {
            BerRecord r = run_point(link, stop, db, 8 + static_cast<uint64_t>(db), 4);
            double esn0 = link.esn0_from_ebn0(std::pow(10.0, db / 10.0));
            double pe1 = theoretical_ser(link.constellation(), esn0);
            double bound = frame_error_bound(link.n_users(), link.h(), pe1);
            double sigma =
                std::sqrt(r.fer * (1.0 - r.fer) / static_cast<double>(r.frames));
            std::printf("  %s %4.1f dB: FER %.4e <= bound %.4e + 3 * %.1e\n",
                        modulation_name(cs.mod), db, r.fer, bound, sigma);
            if (r.fer > bound + 3.0 * sigma) ok = false;
        }
    }
    return verdict("08", ok, "measured FER below the per-symbol union bound");
}

// ---- 09: compression gain at BER 1e-3 ----------------------------------------

std::vector<BerRecord> ber_curve(SpectrumMode mode, EnergyConvention energy, double lo_db,
                                 double hi_db) {
    SimulationSpec spec;
    spec.link.transform = TransformKind::ffft;
    spec.link.p = 2;
    spec.link.m = 4;
    spec.link.n_users = 15;
    spec.link.mode = mode;
    spec.link.code = "direct";
    spec.link.modulation = Modulation::bpsk;
    spec.link.energy = energy;
    for (double db = lo_db; db <= hi_db + 1e-9; db += 1.0) spec.ebn0_points_db.push_back(db);
    spec.stop.min_bits = 200'000;
    spec.stop.min_errors = 200;
    spec.stop.max_bits = 4'000'000;
    spec.master_seed = 0x90;
    spec.workers = 4;
    return sweep(spec);
}

std::optional<double> threshold_db(const std::vector<BerRecord>& rows, double target) {
    for (size_t i = 1; i < rows.size(); ++i) {
        double a = rows[i - 1].ber, b = rows[i].ber;
        if (a >= target && target >= b && b > 0.0) {
            double la = std::log10(a), lb = std::log10(b), lt = std::log10(target);
            double da = rows[i - 1].ebn0_db, db_ = rows[i].ebn0_db;
            return da + (db_ - da) * (la - lt) / (la - lb);
        }
    }
    return std::nullopt;
}

bool gain_within_window(const char* id, EnergyConvention energy, double fs_lo, double fs_hi,
                        double cc_lo, double cc_hi) {
    auto fs = ber_curve(SpectrumMode::full, energy, fs_lo, fs_hi);
    auto cc = ber_curve(SpectrumMode::compressed, energy, cc_lo, cc_hi);
    auto fs_req = threshold_db(fs, 1e-3);
    auto cc_req = threshold_db(cc, 1e-3);
    if (!fs_req || !cc_req) {
        std::printf("  a curve never crossed BER 1e-3 inside its sweep\n");
        return verdict(id, false, "compression gain at BER 1e-3 inside [-0.25, +1.5] dB");
    }
    double gain = *fs_req - *cc_req;
    bool ok = gain >= -0.25 && gain <= 1.5;
    std::printf("  full spectrum needs %.2f dB, compressed needs %.2f dB at BER 1e-3\n",
                *fs_req, *cc_req);
    std::printf("  compression gain %.2f dB, window [-0.25, +1.5] dB\n", gain);
    if (!ok && energy == EnergyConvention::per_info_bit) {
        std::printf(
            "  analysis: the 15 information bits of a frame ride on 60 channel symbols\n"
            "  in full-spectrum mode but on 20 in compressed mode. Charging energy per\n"
            "  information bit therefore hands the compressed chain 10*log10(60/20) =\n"
            "  4.77 dB of extra symbol energy at the same Eb/N0 axis position, and the\n"
            "  measured gain above is that accounting artifact, not a property of the\n"
            "  transform. Criterion 09s repeats the measurement charging energy per\n"
            "  channel bit, where both chains buy identical symbol energy and the gain\n"
            "  reflects compression alone.\n");
    }
    return verdict(id, ok, "compression gain at BER 1e-3 inside [-0.25, +1.5] dB");
}

bool c09() {
    return gain_within_window("09", EnergyConvention::per_info_bit, 12.0, 16.0, 7.0, 11.0);
}

bool c09s() {
    return gain_within_window("09s", EnergyConvention::per_channel_bit, 6.0, 10.0, 6.0, 10.0);
}

// ---- 10: worker-count determinism --------------------------------------------

bool c10() {
    SimulationSpec spec;
    spec.link.transform = TransformKind::ffft;
    spec.link.p = 2;
    spec.link.m = 4;
    spec.link.n_users = 15;
    spec.link.mode = SpectrumMode::compressed;
    spec.link.code = "direct";
    spec.link.modulation = Modulation::bpsk;
    spec.ebn0_points_db = {0.0, 2.0, 4.0};
    spec.stop.min_bits = 100'000;
    spec.stop.min_errors = 100;
    spec.master_seed = 424242;

    spec.workers = 1;
    std::string csv1 = to_csv(sweep(spec));
    spec.workers = 8;
    std::string csv8 = to_csv(sweep(spec));
    bool ok = csv1 == csv8;
    std::printf("  1-worker and 8-worker sweeps: %zu bytes of CSV, byte-identical = %s\n",
                csv1.size(), ok ? "yes" : "no");
    return verdict("10", ok, "CSV output independent of the worker count");
}

// ---- 11: property battery ------------------------------------------------------

bool c11() {
    bool ok = true;

    // field axioms on GF(16), sampled
    ExtensionField f = ExtensionField::with_default_poly(2, 4);
    Philox rng(0x11);
    for (int trial = 0; trial < 300; ++trial) {
        uint32_t a = rng.next_below(16), b = rng.next_below(16), c = rng.next_below(16);
        if (f.add(a, b) != f.add(b, a)) ok = false;
        if (f.mul(a, b) != f.mul(b, a)) ok = false;
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
        if (f.add(a, f.add(b, c)) != f.add(f.add(a, b), c)) ok = false;
        if (f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c)) ok = false;
        if (a != 0 && f.mul(a, f.inv(a)) != 1) ok = false;
    }
    std::printf("  GF(16) axioms on 300 sampled triples\n");

    // Gaussian-integer fields: 3 and 7 admit j^2 = -1, 5 does not
    bool g3 = false, g7 = false, g5_rejected = false;
    try {
        GaussianField g(3);
        g3 = g.size() == 9;
    } catch (const error&) {}
    try {
        GaussianField g(7);
        g7 = g.size() == 49;
    } catch (const error&) {}
    try {
        GaussianField g(5);
    } catch (const error& e) {
        g5_rejected = e.code() == errc::minus_one_is_residue;
    }
    ok = ok && g3 && g7 && g5_rejected;
    std::printf("  GI(3) and GI(7) constructed; GI(5) rejected (-1 is a square mod 5)\n");

    // prefix properties of the shipped codes
    OpportunisticCode a = OpportunisticCode::builtin("A");
    OpportunisticCode ap = OpportunisticCode::builtin("A'");
    OpportunisticCode b = OpportunisticCode::builtin("B");
    ok = ok && !a.instantaneous() && a.complete();
    ok = ok && ap.instantaneous() && ap.complete();
    ok = ok && b.instantaneous() && b.complete();
    std::printf("  code A complete but not prefix-free; A' and B prefix-free and complete\n");

    // noiseless demux(mux) identity on both transforms, both modes
    for (SpectrumMode mode : {SpectrumMode::full, SpectrumMode::compressed}) {
        LinkConfig cfg;
        cfg.transform = TransformKind::ffft;
        cfg.p = 2;
        cfg.m = 4;
        cfg.n_users = 15;
        cfg.mode = mode;
        cfg.code = "direct";
        GdmaLink link(cfg);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<uint32_t> users(15);
            for (auto& u : users) u = rng.next_below(2);
            if (link.demux(link.mux(users)).users != users) ok = false;
        }

        LinkConfig gcfg;
        gcfg.transform = TransformKind::ffht;
        gcfg.q = 3;
        gcfg.n_users = 8;
        gcfg.mode = mode;
        gcfg.code = "B";
        GdmaLink glink(gcfg);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<uint32_t> users(8);
            for (auto& u : users) u = rng.next_below(3);
            if (glink.demux(glink.mux(users)).users != users) ok = false;
        }
    }
    std::printf("  demux(mux(x)) = x on both transforms in both modes, 1200 vectors\n");

    return verdict("11", ok, "axioms, field admissibility, prefix codes, round trips");
}

} // namespace

int main(int argc, char** argv) {
    const std::map<std::string, bool (*)()> criteria = {
        {"01", c01}, {"02", c02},   {"03", c03}, {"04", c04}, {"05", c05},
        {"06", c06}, {"07", c07},   {"08", c08}, {"09", c09}, {"09s", c09s},
        {"10", c10}, {"11", c11},
    };

    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion-id]\n", argv[0]);
        return 2;
    }
    if (argc == 2) {
        auto it = criteria.find(argv[1]);
        if (it == criteria.end()) {
            std::fprintf(stderr, "unknown criterion id \"%s\" (use 01..11 or 09s)\n",
                         argv[1]);
            return 2;
        }
        return it->second() ? 0 : 1;
    }

    int failures = 0;
    for (const auto& [id, fn] : criteria)
        if (!fn()) ++failures;
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
