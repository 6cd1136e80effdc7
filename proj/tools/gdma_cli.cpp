// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Talks to the library strictly through the C ABI
// in gdma/gdma.h. Decibel values are converted to linear ratios here and
// nowhere else. Exit codes: 0 success, 2 usage or validation error, 1
// runtime error.

#include <gdma/gdma.h>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { gdma_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

[[noreturn]] void die_status(gdma_status st) {
    std::cerr << "error: " << gdma_last_error() << " (" << gdma_status_name(st) << ")\n";
    switch (st) {
        case GDMA_ERR_IO:
        case GDMA_ERR_INTERNAL:
        case GDMA_ERR_BUDGET_EXHAUSTED:
        case GDMA_ERR_UNDECODABLE_SYMBOL:
            std::exit(1);
        default:
            std::exit(2);
    }
}

void check(gdma_status st) {
    if (st != GDMA_OK) die_status(st);
}

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

std::vector<uint32_t> parse_u32_list(const std::string& text) {
    std::vector<uint32_t> out;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream is(cleaned);
    long long v;
    while (is >> v) {
        if (v < 0) usage_error("negative value in list: " + text);
        out.push_back(static_cast<uint32_t>(v));
    }
    if (!is.eof()) usage_error("could not parse integer list: " + text);
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) {
        if (tok == "inf") {
            out.push_back(std::numeric_limits<double>::infinity());
        } else {
            try {
                size_t used = 0;
                out.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                usage_error("could not parse number: " + tok);
            }
        }
    }
    return out;
}

// modulus digits, highest degree first on the command line
std::vector<uint32_t> parse_poly(const std::string& text) {
    std::vector<uint32_t> high_first;
    if (text.find(' ') != std::string::npos || text.find(',') != std::string::npos) {
        high_first = parse_u32_list(text);
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') usage_error("polynomial digits must be 0-9");
            high_first.push_back(static_cast<uint32_t>(c - '0'));
        }
    }
    return {high_first.rbegin(), high_first.rend()}; // constant term first
}

struct FieldHandle {
    gdma_field* f = nullptr;
    ~FieldHandle() { gdma_field_destroy(f); }
};
struct GaussianHandle {
    gdma_gaussian* g = nullptr;
    ~GaussianHandle() { gdma_gaussian_destroy(g); }
};
struct CosetsHandle {
    gdma_cosets* c = nullptr;
    ~CosetsHandle() { gdma_cosets_destroy(c); }
};
struct CodeHandle {
    gdma_code* c = nullptr;
    ~CodeHandle() { gdma_code_destroy(c); }
};
struct LinkHandle {
    gdma_link* l = nullptr;
    ~LinkHandle() { gdma_link_destroy(l); }
};
struct SimHandle {
    gdma_sim* s = nullptr;
    ~SimHandle() { gdma_sim_destroy(s); }
};

void make_field(uint32_t p, uint32_t m, const std::string& poly_text, FieldHandle& fh) {
    if (poly_text.empty()) {
        check(gdma_field_create(p, m, nullptr, 0, &fh.f));
    } else {
        std::vector<uint32_t> poly = parse_poly(poly_text);
        check(gdma_field_create(p, m, poly.data(), poly.size(), &fh.f));
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        std::exit(1);
    }
    os << text;
    if (!os.flush()) {
        std::cerr << "error: short write to " << out_path << "\n";
        std::exit(1);
    }
}

const char* kModulations[6] = {"bpsk", "qpsk", "8psk", "16qam", "32qam", "64qam"};

// round-half-even to three decimals, matching the library's table rendering
std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", std::nearbyint(v * 1000.0) / 1000.0);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale laboratory for Galois-division multiple access"};
    app.set_version_flag("--version", gdma_version());
    app.require_subcommand(1);

    // ---- field table ----
    auto* field_cmd = app.add_subcommand("field", "finite field utilities");
    field_cmd->require_subcommand(1);
    auto* table_cmd = field_cmd->add_subcommand("table", "print the full element table");
    bool tbl_gaussian = false;
    uint32_t tbl_p = 2, tbl_m = 4, tbl_q = 3;
    std::string tbl_poly;
    table_cmd->add_flag("--gaussian", tbl_gaussian, "Gaussian integer field GI(q)");
    table_cmd->add_option("--p", tbl_p, "characteristic");
    table_cmd->add_option("--m", tbl_m, "extension degree");
    table_cmd->add_option("--q", tbl_q, "GI modulus (with --gaussian)");
    table_cmd->add_option("--poly", tbl_poly, "modulus digits, highest degree first");
    table_cmd->callback([&] {
        StringOut out;
        if (tbl_gaussian) {
            GaussianHandle gh;
            check(gdma_gaussian_create(tbl_q, &gh.g));
            check(gdma_gaussian_render_table(gh.g, &out.s));
        } else {
            FieldHandle fh;
            make_field(tbl_p, tbl_m, tbl_poly, fh);
            check(gdma_field_render_table(fh.f, &out.s));
        }
        std::cout << out.str();
    });

    // ---- cosets ----
    auto* cosets_cmd = app.add_subcommand("cosets", "cyclotomic cosets of k -> p*k mod n");
    uint32_t cs_n = 0, cs_p = 0;
    cosets_cmd->add_option("--n", cs_n, "modulus / transform length")->required();
    cosets_cmd->add_option("--p", cs_p, "characteristic")->required();
    cosets_cmd->callback([&] {
        CosetsHandle ch;
        check(gdma_cosets_create(cs_n, cs_p, &ch.c));
        StringOut out;
        check(gdma_cosets_render(ch.c, &out.s));
        std::cout << out.str();
    });

    // ---- transform ----
    auto* tf_cmd = app.add_subcommand("transform", "transform a symbol vector");
    bool tf_gaussian = false, tf_inverse = false;
    uint32_t tf_p = 2, tf_m = 4, tf_q = 3;
    std::string tf_poly, tf_values;
    tf_cmd->add_flag("--gaussian", tf_gaussian, "Hartley transform over GI(q)");
    tf_cmd->add_flag("--inverse", tf_inverse, "apply the inverse transform");
    tf_cmd->add_option("--p", tf_p, "characteristic");
    tf_cmd->add_option("--m", tf_m, "extension degree");
    tf_cmd->add_option("--q", tf_q, "GI modulus (with --gaussian)");
    tf_cmd->add_option("--poly", tf_poly, "modulus digits, highest degree first");
    tf_cmd->add_option("--values", tf_values,
                       "input vector; GF codes, or for --gaussian GF(q) digits "
                       "(forward) / packed re*q+im (inverse)")
        ->required();
    tf_cmd->callback([&] {
        std::vector<uint32_t> in = parse_u32_list(tf_values);
        std::vector<uint32_t> out(in.size());
        StringOut text;
        if (tf_gaussian) {
            GaussianHandle gh;
            check(gdma_gaussian_create(tf_q, &gh.g));
            if (tf_inverse)
                check(gdma_iffht(gh.g, in.data(), in.size(), out.data()));
            else
                check(gdma_ffht(gh.g, in.data(), in.size(), out.data()));
            check(gdma_gaussian_render_spectrum(gh.g, out.data(), out.size(), &text.s));
        } else {
            FieldHandle fh;
            make_field(tf_p, tf_m, tf_poly, fh);
            if (tf_inverse)
                check(gdma_iffft(fh.f, in.data(), in.size(), out.data()));
            else
                check(gdma_ffft(fh.f, in.data(), in.size(), out.data()));
            check(gdma_field_render_spectrum(fh.f, out.data(), out.size(), &text.s));
        }
        std::cout << text.str();
    });

    // ---- transcode ----
    auto* tc_cmd = app.add_subcommand("transcode", "binary <-> p-ary transcoding");
    std::string tc_action, tc_code = "A'", tc_bits, tc_symbols;
    uint32_t tc_p = 2, tc_m = 4;
    tc_cmd->add_option("action", tc_action, "encode | decode | table")
        ->required()
        ->check(CLI::IsMember({"encode", "decode", "table"}));
    tc_cmd->add_option("--code", tc_code, "A | A' | B | direct (default A')");
    tc_cmd->add_option("--p", tc_p, "characteristic for --code direct");
    tc_cmd->add_option("--m", tc_m, "extension degree for --code direct");
    tc_cmd->add_option("--bits", tc_bits, "bit string to encode");
    tc_cmd->add_option("--symbols", tc_symbols, "alphabet indices to decode");
    tc_cmd->callback([&] {
        CodeHandle ch;
        check(gdma_code_create(tc_code.c_str(), tc_p, tc_m, &ch.c));
        StringOut out;
        if (tc_action == "table") {
            check(gdma_code_render(ch.c, &out.s));
        } else if (tc_action == "encode") {
            if (tc_bits.empty()) usage_error("encode needs --bits");
            check(gdma_code_render_encoding(ch.c, tc_bits.c_str(), &out.s));
        } else {
            if (tc_symbols.empty()) usage_error("decode needs --symbols");
            std::vector<uint32_t> idx = parse_u32_list(tc_symbols);
            check(gdma_code_decode(ch.c, idx.data(), idx.size(), &out.s));
            std::cout << out.str() << "\n";
            return;
        }
        std::cout << out.str();
    });

    // ---- frame ----
    auto* fr_cmd = app.add_subcommand("frame", "run one traced multiplex frame");
    std::string fr_transform = "ffft", fr_mode = "FS", fr_code = "direct";
    std::string fr_modulation = "bpsk", fr_energy = "per_info_bit", fr_poly, fr_values;
    uint32_t fr_p = 2, fr_m = 4, fr_q = 3, fr_users = 15;
    double fr_ebn0 = std::numeric_limits<double>::infinity();
    uint64_t fr_seed = 1;
    fr_cmd->add_option("--transform", fr_transform, "ffft | ffht | none");
    fr_cmd->add_option("--p", fr_p, "characteristic (ffft)");
    fr_cmd->add_option("--m", fr_m, "extension degree (ffft)");
    fr_cmd->add_option("--q", fr_q, "GI modulus (ffht)");
    fr_cmd->add_option("--poly", fr_poly, "modulus digits, highest degree first");
    fr_cmd->add_option("--users", fr_users, "number of users N");
    fr_cmd->add_option("--mode", fr_mode, "FS (full spectrum) | CC (compressed)");
    fr_cmd->add_option("--code", fr_code, "direct | A' | B");
    fr_cmd->add_option("--modulation", fr_modulation, "bpsk qpsk 8psk 16qam 32qam 64qam");
    fr_cmd->add_option("--energy", fr_energy, "per_info_bit | per_channel_bit");
    fr_cmd->add_option("--ebn0", fr_ebn0, "Eb/N0 in dB (default: noiseless)");
    fr_cmd->add_option("--seed", fr_seed, "noise seed");
    fr_cmd->add_option("--values", fr_values, "user symbols (default: all ones)");
    fr_cmd->callback([&] {
        LinkHandle lh;
        std::vector<uint32_t> poly;
        const uint32_t* poly_ptr = nullptr;
        size_t poly_len = 0;
        if (!fr_poly.empty()) {
            poly = parse_poly(fr_poly);
            poly_ptr = poly.data();
            poly_len = poly.size();
        }
        check(gdma_link_create(fr_transform.c_str(), fr_p, fr_m, poly_ptr, poly_len, fr_q,
                               fr_users, fr_mode.c_str(), fr_code.c_str(),
                               fr_modulation.c_str(), fr_energy.c_str(), 1.0, &lh.l));
        const uint32_t* users_ptr = nullptr;
        std::vector<uint32_t> users;
        if (!fr_values.empty()) {
            users = parse_u32_list(fr_values);
            if (users.size() != gdma_link_n_users(lh.l))
                usage_error("--values must list exactly N user symbols");
            users_ptr = users.data();
        }
        StringOut out;
        check(gdma_link_frame_trace(lh.l, users_ptr, fr_ebn0, fr_seed, &out.s));
        std::cout << out.str();
    });

    // ---- bound ----
    auto* bd_cmd = app.add_subcommand("bound", "Shannon bound check for a compression ratio");
    std::string bd_gamma;
    double bd_snr_db = 0.0;
    uint32_t bd_p = 2, bd_n = 0;
    double bd_ts = 1.0;
    bd_cmd->add_option("--gamma", bd_gamma, "compression ratio, e.g. 3 or 15/5")->required();
    bd_cmd->add_option("--snr-db", bd_snr_db, "channel SNR in dB")->required();
    bd_cmd->add_option("--p", bd_p, "alphabet characteristic");
    bd_cmd->add_option("--n", bd_n, "also print the N-user rate/bandwidth budget");
    bd_cmd->add_option("--symbol-duration", bd_ts, "symbol duration in seconds");
    bd_cmd->callback([&] {
        int64_t num = 0, den = 1;
        size_t slash = bd_gamma.find('/');
        try {
            if (slash == std::string::npos) {
                num = std::stoll(bd_gamma);
            } else {
                num = std::stoll(bd_gamma.substr(0, slash));
                den = std::stoll(bd_gamma.substr(slash + 1));
            }
        } catch (const std::exception&) {
            usage_error("could not parse --gamma: " + bd_gamma);
        }
        double snr = std::pow(10.0, bd_snr_db / 10.0);
        StringOut report;
        check(gdma_check_bound(num, den, snr, bd_p, &report.s));
        std::cout << report.str();
        if (bd_n > 0) {
            StringOut budget;
            check(gdma_link_budget_render(bd_n, bd_p, bd_ts, num, den, nullptr, nullptr,
                                          &budget.s));
            std::cout << budget.str();
        }
    });

    // ---- hparam ----
    auto* hp_cmd = app.add_subcommand("hparam", "channel symbols per Galois symbol");
    std::string hp_code = "B", hp_modulation;
    uint32_t hp_p = 2, hp_m = 4;
    hp_cmd->add_option("--code", hp_code, "A' | B | direct (default B)");
    hp_cmd->add_option("--modulation", hp_modulation, "print one value instead of the table");
    hp_cmd->add_option("--p", hp_p, "characteristic for --code direct");
    hp_cmd->add_option("--m", hp_m, "extension degree for --code direct");
    hp_cmd->callback([&] {
        CodeHandle ch;
        check(gdma_code_create(hp_code.c_str(), hp_p, hp_m, &ch.c));
        double rate = 0.0;
        check(gdma_code_rate(ch.c, 0, nullptr, nullptr, &rate));
        if (!hp_modulation.empty()) {
            uint32_t order = 0;
            for (const char* name : kModulations)
                if (hp_modulation == name)
                    order = name == std::string("bpsk")    ? 2
                            : name == std::string("qpsk")  ? 4
                            : name == std::string("8psk")  ? 8
                            : name == std::string("16qam") ? 16
                            : name == std::string("32qam") ? 32
                                                           : 64;
            if (order == 0) usage_error("unknown modulation: " + hp_modulation);
            double h = 0.0;
            check(gdma_h_param(rate, order, &h));
            std::cout << fixed3(h) << "\n";
            return;
        }
        std::cout << "code " << hp_code << ", R = " << fixed3(rate)
                  << " bits per symbol (uniform bits)\n";
        uint32_t orders[6] = {2, 4, 8, 16, 32, 64};
        for (int i = 0; i < 6; ++i) {
            double h = 0.0;
            check(gdma_h_param(rate, orders[i], &h));
            std::printf("%-6s %s\n", kModulations[i], fixed3(h).c_str());
        }
    });

    // ---- code-analysis ----
    auto* ca_cmd = app.add_subcommand("code-analysis",
                                      "enumerate spectra of binary inputs to the transform");
    uint32_t ca_p = 2, ca_m = 3, ca_n = 7;
    std::string ca_poly;
    ca_cmd->add_option("--p", ca_p, "characteristic");
    ca_cmd->add_option("--m", ca_m, "extension degree");
    ca_cmd->add_option("--n", ca_n, "transform length");
    ca_cmd->add_option("--poly", ca_poly, "modulus digits, highest degree first");
    ca_cmd->callback([&] {
        FieldHandle fh;
        make_field(ca_p, ca_m, ca_poly, fh);
        StringOut report;
        check(gdma_code_analysis(fh.f, ca_n, nullptr, nullptr, nullptr, &report.s));
        std::cout << report.str();
    });

    // ---- modem selftest ----
    auto* md_cmd = app.add_subcommand("modem", "modem utilities");
    md_cmd->require_subcommand(1);
    auto* st_cmd = md_cmd->add_subcommand("selftest",
                                          "simulated vs. theoretical symbol error rates");
    std::string st_esn0 = "0 2 4 6 8 10", st_out;
    uint64_t st_symbols = 100000, st_seed = 1;
    st_cmd->add_option("--esn0-db", st_esn0, "Es/N0 grid in dB");
    st_cmd->add_option("--symbols", st_symbols, "symbols per grid point");
    st_cmd->add_option("--seed", st_seed, "noise seed");
    st_cmd->add_option("--out", st_out, "CSV path (default stdout)");
    st_cmd->callback([&] {
        std::vector<double> grid = parse_double_list(st_esn0);
        if (grid.empty()) usage_error("--esn0-db needs at least one point");
        StringOut csv;
        check(gdma_modem_selftest(grid.data(), grid.size(), st_symbols, st_seed, &csv.s));
        write_output(csv.str(), st_out);
    });

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo BER sweep from a config file");
    std::string sim_config, sim_out;
    uint64_t sim_seed = 0;
    uint32_t sim_workers = 0;
    sim_cmd->add_option("--config", sim_config, "key = value config file")
        ->required()
        ->check(CLI::ExistingFile);
    sim_cmd->add_option("--seed", sim_seed, "override master_seed");
    sim_cmd->add_option("--workers", sim_workers, "override worker count");
    sim_cmd->add_option("--out", sim_out, "CSV path (default stdout)");
    bool sim_seed_set = false, sim_workers_set = false;
    sim_cmd->callback([&] {
        sim_seed_set = sim_cmd->count("--seed") > 0;
        sim_workers_set = sim_cmd->count("--workers") > 0;
        std::ifstream is(sim_config, std::ios::binary);
        if (!is) {
            std::cerr << "error: cannot read " << sim_config << "\n";
            std::exit(1);
        }
        std::stringstream buf;
        buf << is.rdbuf();
        SimHandle sh;
        check(gdma_sim_create(buf.str().c_str(), &sh.s));
        if (sim_seed_set) check(gdma_sim_set_seed(sh.s, sim_seed));
        if (sim_workers_set) check(gdma_sim_set_workers(sh.s, sim_workers));
        StringOut csv;
        check(gdma_sim_run_csv(sh.s, &csv.s));
        write_output(csv.str(), sim_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion& e) {
        std::cout << gdma_version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run '" << (argc > 0 ? argv[0] : "gdma") << " --help' for usage\n";
        return 2;
    }
    return 0;
}
