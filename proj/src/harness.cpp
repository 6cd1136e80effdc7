// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "harness.hpp"
#include "rng.hpp"

#include <algorithm>
#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <thread>

namespace gdma {

std::pair<double, double> confidence_interval(uint64_t errors, uint64_t trials) {
    require(trials >= 1, errc::invalid_argument, "need at least one trial");
    require(errors <= trials, errc::invalid_argument, "errors cannot exceed trials");
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = phat + z2 / (2.0 * n);
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    double low = (center - half) / denom;
    double high = (center + half) / denom;
    if (errors == 0) low = 0.0;
    if (errors == trials) high = 1.0;
    return {std::max(0.0, low), std::min(1.0, high)};
}

void validate(const SimulationSpec& spec) {
    require(spec.stop.min_bits >= 1000, errc::config_invalid, "min_bits must be >= 1000");
    require(spec.stop.max_bits >= spec.stop.min_bits, errc::config_invalid,
            "max_bits must be >= min_bits");
    require(!spec.ebn0_points_db.empty(), errc::config_invalid,
            "at least one Eb/N0 point is required");
    for (size_t i = 1; i < spec.ebn0_points_db.size(); ++i)
        require(spec.ebn0_points_db[i] > spec.ebn0_points_db[i - 1], errc::config_invalid,
                "Eb/N0 points must be strictly increasing");
    require(spec.workers >= 1, errc::config_invalid, "workers must be >= 1");
}

namespace {

struct Counters {
    uint64_t bits = 0, bit_errors = 0;
    uint64_t symbols = 0, symbol_errors = 0;
    uint64_t frames = 0, frame_errors = 0;

    void merge(const Counters& o) noexcept {
        bits += o.bits;
        bit_errors += o.bit_errors;
        symbols += o.symbols;
        symbol_errors += o.symbol_errors;
        frames += o.frames;
        frame_errors += o.frame_errors;
    }
};

constexpr uint64_t kBatchFrames = 8192;

uint64_t point_key(const GdmaLink& link, double ebn0_db) {
    uint64_t k = std::bit_cast<uint64_t>(ebn0_db);
    k = mix64(k ^ (static_cast<uint64_t>(link.config().mode == SpectrumMode::compressed) << 32));
    k = mix64(k ^ static_cast<uint64_t>(link.constellation().order()));
    return k;
}

// one frame end to end; accumulates into c
void simulate_frame(const GdmaLink& link, double n0, uint64_t seed, uint64_t pkey,
                    uint64_t frame, std::vector<uint32_t>& users, Counters& c) {
    const uint32_t n = link.n_users();
    const uint32_t alphabet = link.user_alphabet();
    Philox rng = Philox::frame_stream(seed, pkey, frame);

    users.resize(n);
    for (uint32_t i = 0; i < n; ++i) users[i] = rng.next_below(alphabet);

    std::vector<uint8_t> bits = link.mux(users);
    uint32_t pad = 0;
    std::vector<std::complex<double>> samples = modulate(link.constellation(), bits, pad);
    if (n0 > 0.0) add_awgn(samples, n0, rng);
    std::vector<uint8_t> rx = demodulate(link.constellation(), samples);
    rx.resize(bits.size()); // pad bits carry no payload and are not counted

    DemuxResult res = link.demux(rx);

    uint32_t errs = 0;
    for (uint32_t i = 0; i < n; ++i) errs += res.users[i] != users[i];
    c.symbols += n;
    c.symbol_errors += errs;
    // for binary users a symbol is a bit; wider alphabets report ser as ber
    c.bits += n;
    c.bit_errors += errs;
    c.frames += 1;
    c.frame_errors += errs != 0;
}

} // namespace

BerRecord run_point(const GdmaLink& link, const StopRule& stop, double ebn0_db,
                    uint64_t master_seed, uint32_t workers) {
    require(workers >= 1, errc::config_invalid, "workers must be >= 1");
    require(stop.min_bits >= 1000, errc::config_invalid, "min_bits must be >= 1000");

    const bool noiseless = std::isinf(ebn0_db) && ebn0_db > 0;
    double n0 = 0.0;
    if (!noiseless) {
        double esn0 = link.esn0_from_ebn0(std::pow(10.0, ebn0_db / 10.0));
        n0 = 1.0 / esn0; // constellations are unit average energy
    }
    const uint64_t pkey = point_key(link, ebn0_db);

    Counters total;
    uint64_t next_frame = 0;
    bool exhausted = false;

    while (true) {
        // run one fixed batch, sharded contiguously across workers
        std::vector<Counters> parts(workers);
        const uint64_t lo = next_frame;
        const uint64_t per = kBatchFrames / workers;
        const uint64_t extra = kBatchFrames % workers;
        auto run_shard = [&](uint32_t w, uint64_t first, uint64_t last) {
            std::vector<uint32_t> users;
            for (uint64_t f = first; f < last; ++f)
                simulate_frame(link, n0, master_seed, pkey, f, users, parts[w]);
        };
        if (workers == 1) {
            run_shard(0, lo, lo + kBatchFrames);
        } else {
            std::vector<std::thread> pool;
            uint64_t cursor = lo;
            for (uint32_t w = 0; w < workers; ++w) {
                uint64_t count = per + (w < extra ? 1 : 0);
                pool.emplace_back(run_shard, w, cursor, cursor + count);
                cursor += count;
            }
            for (auto& t : pool) t.join();
        }
        for (const Counters& p : parts) total.merge(p); // fixed merge order
        next_frame += kBatchFrames;

        if (noiseless) {
            if (total.bits >= stop.min_bits) break;
        } else if (total.bits >= stop.min_bits && total.bit_errors >= stop.min_errors) {
            break;
        } else if (total.bits >= stop.max_bits) {
            exhausted = total.bit_errors < stop.min_errors;
            break;
        }
    }

    BerRecord rec;
    rec.mode = mode_name(link.config().mode);
    rec.modulation = link.constellation().name();
    rec.transform = transform_name(link.config().transform);
    rec.n_users = link.n_users();
    rec.ebn0_db = ebn0_db;
    rec.bits_observed = total.bits;
    rec.bit_errors = total.bit_errors;
    rec.ber = static_cast<double>(total.bit_errors) / static_cast<double>(total.bits);
    rec.symbols_observed = total.symbols;
    rec.symbol_errors = total.symbol_errors;
    rec.ser = static_cast<double>(total.symbol_errors) / static_cast<double>(total.symbols);
    rec.frames = total.frames;
    rec.frame_errors = total.frame_errors;
    rec.fer = static_cast<double>(total.frame_errors) / static_cast<double>(total.frames);
    std::tie(rec.ci_low, rec.ci_high) = confidence_interval(total.bit_errors, total.bits);
    rec.seed = master_seed;
    rec.budget_exhausted = exhausted;
    return rec;
}

BerRecord run_point(const SimulationSpec& spec, double ebn0_db) {
    validate(spec);
    GdmaLink link(spec.link);
    return run_point(link, spec.stop, ebn0_db, spec.master_seed, spec.workers);
}

std::vector<BerRecord> sweep(const SimulationSpec& spec) {
    validate(spec);
    std::vector<SpectrumMode> modes =
        spec.modes.empty() ? std::vector<SpectrumMode>{spec.link.mode} : spec.modes;
    std::vector<Modulation> mods = spec.modulations.empty()
                                       ? std::vector<Modulation>{spec.link.modulation}
                                       : spec.modulations;
    std::vector<BerRecord> out;
    for (SpectrumMode mode : modes) {
        for (Modulation mod : mods) {
            LinkConfig cfg = spec.link;
            cfg.mode = mode;
            cfg.modulation = mod;
            GdmaLink link(cfg);
            for (double ebn0 : spec.ebn0_points_db)
                out.push_back(run_point(link, spec.stop, ebn0, spec.master_seed, spec.workers));
        }
    }
    return out;
}

namespace {

void append_double(std::string& s, double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    s += buf;
}

} // namespace

std::string to_csv(std::span<const BerRecord> records) {
    std::string s = "mode,modulation,transform,n_users,ebn0_db,bits_observed,bit_errors,ber,"
                    "symbols_observed,symbol_errors,ser,frames,frame_errors,fer,ci_low,ci_high,"
                    "seed\n";
    char buf[128];
    for (const BerRecord& r : records) {
        s += r.mode;
        s += ',';
        s += r.modulation;
        s += ',';
        s += r.transform;
        s += ',';
        std::snprintf(buf, sizeof buf, "%u,", r.n_users);
        s += buf;
        append_double(s, r.ebn0_db, "%g");
        std::snprintf(buf, sizeof buf, ",%" PRIu64 ",%" PRIu64 ",", r.bits_observed,
                      r.bit_errors);
        s += buf;
        append_double(s, r.ber, "%.5e");
        std::snprintf(buf, sizeof buf, ",%" PRIu64 ",%" PRIu64 ",", r.symbols_observed,
                      r.symbol_errors);
        s += buf;
        append_double(s, r.ser, "%.5e");
        std::snprintf(buf, sizeof buf, ",%" PRIu64 ",%" PRIu64 ",", r.frames, r.frame_errors);
        s += buf;
        append_double(s, r.fer, "%.5e");
        s += ',';
        append_double(s, r.ci_low, "%.5e");
        s += ',';
        append_double(s, r.ci_high, "%.5e");
        std::snprintf(buf, sizeof buf, ",%" PRIu64 "\n", r.seed);
        s += buf;
    }
    return s;
}

std::string modem_selftest_csv(std::span<const double> esn0_points_db,
                               uint64_t symbols_per_point, uint64_t seed) {
    require(symbols_per_point >= 1000, errc::invalid_argument,
            "selftest needs at least 1000 symbols per point");
    static const Modulation kAll[] = {Modulation::bpsk,  Modulation::qpsk,
                                      Modulation::psk8,  Modulation::qam16,
                                      Modulation::qam32, Modulation::qam64};
    std::string s = "modulation,esn0_db,symbols,errors,ser,theory_ser\n";
    char buf[160];
    for (Modulation m : kAll) {
        const Constellation& c = Constellation::get(m);
        for (double db : esn0_points_db) {
            double esn0 = std::pow(10.0, db / 10.0);
            double n0 = 1.0 / esn0;
            uint64_t pkey = mix64(std::bit_cast<uint64_t>(db) ^ (c.order() * 0x10001ull));
            Philox rng = Philox::frame_stream(seed, pkey, 0);
            const double sigma = std::sqrt(n0 / 2.0);
            uint64_t errs = 0;
            for (uint64_t t = 0; t < symbols_per_point; ++t) {
                uint32_t idx = rng.next_below(c.order());
                std::complex<double> y = c.points()[idx];
                y += std::complex<double>(sigma * rng.next_gaussian(),
                                          sigma * rng.next_gaussian());
                errs += nearest_point(c, y) != idx;
            }
            double ser = static_cast<double>(errs) / static_cast<double>(symbols_per_point);
            std::snprintf(buf, sizeof buf, "%s,%g,%" PRIu64 ",%" PRIu64 ",%.5e,%.5e\n",
                          c.name().c_str(), db, symbols_per_point, errs, ser,
                          theoretical_ser(c, esn0));
            s += buf;
        }
    }
    return s;
}

} // namespace gdma
