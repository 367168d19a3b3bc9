// nclwe: key lifecycle, analysis reports and statistical harness runs for
// the LWE schemes over M_{2^t}, Z_q (Regev) and the Sylow subgroup of Z*_p.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nclwe/baselines.hpp"
#include "nclwe/dist.hpp"
#include "nclwe/harness.hpp"
#include "nclwe/io.hpp"
#include "nclwe/pke_m2t.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;
constexpr int kExitNotInCycle = 2;

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw nclwe::Error("cannot open output file: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw nclwe::Error("cannot open input file: " + path);
    return is;
}

int cmd_keygen(const std::string& scheme, unsigned t, std::size_t m, std::size_t n,
               std::size_t nc, double sigma, std::uint64_t seed, const std::string& out_pub,
               const std::string& out_sec) {
    nclwe::RandomSource src(seed);
    auto pub = open_out(out_pub);
    auto sec = open_out(out_sec);
    if (scheme == "m2t") {
        nclwe::M2tParams params;
        params.group = nclwe::GroupParams::for_t(t);
        params.m = m;
        params.n = n;
        params.n_c = nc;
        params.sigma = sigma > 0 ? sigma : std::pow(static_cast<double>(params.group.rho), 0.25);
        auto [pk, sk] = nclwe::keygen(src, params);
        nclwe::io::serialize(pub, pk);
        nclwe::io::serialize(sec, sk);
    } else if (scheme == "regev") {
        const auto params = nclwe::RegevParams::create(n, sigma > 0 ? sigma : 2.0);
        auto [pk, sk] = nclwe::regev_keygen(src, params);
        nclwe::io::serialize(pub, pk);
        nclwe::io::serialize(sec, sk);
    } else {
        nclwe::SylowInstanceParams params;
        params.sylow = nclwe::sylow_param_gen(src, n);
        params.n = n;
        params.m = m ? m : nclwe::RegevParams::create(n, 1.0).m;
        params.sigma = sigma > 0 ? sigma : 1.5;
        auto [pk, sk] = nclwe::sylow_keygen(src, params);
        nclwe::io::serialize(pub, pk);
        nclwe::io::serialize(sec, sk);
    }
    return 0;
}

int cmd_encrypt(const std::string& pub_path, int bit, std::uint64_t seed,
                const std::string& out_path) {
    auto in = open_in(pub_path);
    auto out = open_out(out_path);
    nclwe::RandomSource src(seed);
    const std::string fmt = nclwe::io::format_of(in);
    if (fmt == "m2t-pub") {
        const auto pk = nclwe::io::parse_m2t_public(in);
        nclwe::io::serialize(out, nclwe::encrypt(src, pk, bit), pk.params.group);
    } else if (fmt == "regev-pub") {
        const auto pk = nclwe::io::parse_regev_public(in);
        nclwe::io::serialize(out, nclwe::regev_encrypt(src, pk, bit), pk.params);
    } else if (fmt == "sylow-pub") {
        const auto pk = nclwe::io::parse_sylow_public(in);
        nclwe::io::serialize(out, nclwe::sylow_encrypt(src, pk, bit), pk.params);
    } else {
        throw nclwe::FormatError("unknown public key format: " + fmt);
    }
    return 0;
}

int cmd_decrypt(const std::string& sec_path, const std::string& ct_path) {
    auto sec = open_in(sec_path);
    auto ctf = open_in(ct_path);
    const std::string fmt = nclwe::io::format_of(sec);
    int bit = 0;
    if (fmt == "m2t-sec") {
        bit = nclwe::decrypt(nclwe::io::parse_m2t_secret(sec),
                             nclwe::io::parse_m2t_ciphertext(ctf));
    } else if (fmt == "regev-sec") {
        bit = nclwe::regev_decrypt(nclwe::io::parse_regev_secret(sec),
                                   nclwe::io::parse_regev_ciphertext(ctf));
    } else if (fmt == "sylow-sec") {
        bit = nclwe::sylow_decrypt(nclwe::io::parse_sylow_secret(sec),
                                   nclwe::io::parse_sylow_ciphertext(ctf));
    } else {
        throw nclwe::FormatError("unknown secret key format: " + fmt);
    }
    std::cout << bit << '\n';
    return 0;
}

int cmd_failure_table(const std::vector<unsigned>& r_list,
                      const std::vector<unsigned>& log2rho_list, const std::string& out_path) {
    const auto rows = nclwe::dist::table_report(r_list, log2rho_list);
    if (out_path.empty()) {
        nclwe::dist::write_report_csv(std::cout, rows);
    } else {
        auto os = open_out(out_path);
        nclwe::dist::write_report_csv(os, rows);
    }
    return 0;
}

int cmd_fig_data(const std::string& out_path) {
    const auto fig = nclwe::dist::fig_export();
    if (out_path.empty()) {
        nclwe::dist::write_fig_csv(std::cout, fig);
    } else {
        auto os = open_out(out_path);
        nclwe::dist::write_fig_csv(os, fig);
    }
    return 0;
}

int cmd_distinguish(unsigned t, std::size_t n, std::size_t nc, std::size_t m, std::size_t trials,
                    std::uint64_t seed, const std::string& out_path) {
    nclwe::M2tParams params;
    params.group = nclwe::GroupParams::for_t(t);
    params.m = m ? m : 2 * n;
    params.n = n;
    params.n_c = nc;
    params.sigma = std::pow(static_cast<double>(params.group.rho), 0.25);
    params.validate();

    std::vector<nclwe::HarnessReportRow> rows;

    // chi-square of the v-marginal of O_enc samples against uniform over 2^t
    {
        nclwe::RandomSource src(seed);
        const auto instance = nclwe::make_oracle_instance(src, params);
        std::vector<std::uint64_t> counts(std::size_t{2} * params.group.rho, 0);
        for (std::size_t i = 0; i < trials; ++i) {
            const auto s = nclwe::oracle_enc(src, instance);
            ++counts[std::size_t{s.v.alpha} * params.group.rho + s.v.k];
        }
        const auto chi = nclwe::chi_square_uniformity(counts);
        rows.push_back({"oracle_enc_v_uniformity", t, n, trials, chi.statistic, chi.p_value, 0.0,
                        0.0});
    }

    const std::pair<std::string, nclwe::Adversary> adversaries[] = {
        {"adv_constant0", nclwe::constant_adversary(0)},
        {"adv_alpha_bit", nclwe::alpha_bit_adversary()},
        {"adv_k_parity", nclwe::k_parity_adversary()},
        {"adv_k_range", nclwe::k_range_adversary(params.group)},
    };
    for (const auto& [name, adv] : adversaries) {
        const auto est = nclwe::attack_game(seed, params, adv, trials);
        rows.push_back({name, t, n, trials, 0.0, 0.0, est.advantage, est.ci95});
    }

    if (out_path.empty()) {
        nclwe::write_harness_csv(std::cout, rows);
    } else {
        auto os = open_out(out_path);
        nclwe::write_harness_csv(os, rows);
    }
    return 0;
}

int cmd_selftest() {
    using namespace nclwe;
    std::size_t failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        if (!ok) ++failures;
    };

    for (unsigned t : {4u, 5u}) {
        const GroupParams p = GroupParams::for_t(t);
        const CayleyTable oracle(p);
        const std::size_t order = oracle.order();

        bool mult_ok = true, pow_ok = true, inv_ok = true, assoc_ok = true;
        for (std::size_t i = 0; i < order; ++i) {
            const GroupElement w1 = oracle.element_at(i);
            for (std::size_t j = 0; j < order; ++j) {
                const GroupElement w2 = oracle.element_at(j);
                if (multiply(p, w1, w2) != oracle.product(w1, w2)) mult_ok = false;
                for (std::size_t k = 0; k < order; ++k) {
                    const GroupElement w3 = oracle.element_at(k);
                    if (multiply(p, multiply(p, w1, w2), w3) !=
                        multiply(p, w1, multiply(p, w2, w3)))
                        assoc_ok = false;
                }
            }
            GroupElement acc = identity(p);
            for (std::uint64_t nn = 0; nn < p.rho; ++nn) {
                if (power(p, w1, static_cast<std::int64_t>(nn)) != acc) pow_ok = false;
                acc = multiply(p, acc, w1);
            }
            if (multiply(p, w1, inverse(p, w1)) != identity(p)) inv_ok = false;
        }
        const std::string suffix = " (t=" + std::to_string(t) + ")";
        check(mult_ok, "multiply agrees with presentation oracle" + suffix);
        check(pow_ok, "power agrees with repeated multiplication" + suffix);
        check(inv_ok, "two-sided inverses" + suffix);
        check(assoc_ok, "associativity on all triples" + suffix);
    }

    {
        M2tParams params;
        params.group = GroupParams::for_t(11);
        params.m = 32;
        params.n = 16;
        params.n_c = 8;
        params.sigma = std::pow(static_cast<double>(params.group.rho), 0.25);
        RandomSource src(1);
        auto [pk, sk] = keygen(src, params);
        bool roundtrip_ok = true;
        for (int bit : {0, 1})
            for (int rep = 0; rep < 50; ++rep)
                if (decrypt(sk, encrypt(src, pk, bit)) != bit) roundtrip_ok = false;
        check(roundtrip_ok, "m2t roundtrip (t=11, m=32, n=16, nc=8)");
    }

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LWE in the non-commuting group M_{2^t}: keys, analysis, harness"};
    app.require_subcommand(1);

    std::string scheme = "m2t", pub_path, sec_path, ct_path, out_path, out_pub, out_sec;
    unsigned t = 11;
    std::size_t m = 0, n = 0, nc = 0, trials = 100000;
    double sigma = 0.0;
    std::uint64_t seed = 1;
    int bit = 0;
    std::vector<unsigned> r_list, log2rho_list;

    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--scheme", scheme)->check(CLI::IsMember({"m2t", "regev", "sylow"}));
    keygen->add_option("--t", t, "group size parameter (m2t)");
    keygen->add_option("--m", m, "number of equations");
    keygen->add_option("--n", n, "number of unknowns")->required();
    keygen->add_option("--nc", nc, "leading <ba> columns (m2t)");
    keygen->add_option("--sigma", sigma, "Gaussian std dev (default per scheme)");
    keygen->add_option("--seed", seed);
    keygen->add_option("--out-pub", out_pub)->required();
    keygen->add_option("--out-sec", out_sec)->required();

    auto* encrypt = app.add_subcommand("encrypt", "encrypt one bit");
    encrypt->add_option("--pub", pub_path)->required();
    encrypt->add_option("--bit", bit)->check(CLI::Range(0, 1))->required();
    encrypt->add_option("--seed", seed);
    encrypt->add_option("--out", out_path)->required();

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext, print the bit");
    decrypt->add_option("--sec", sec_path)->required();
    decrypt->add_option("--ct", ct_path)->required();

    auto* table = app.add_subcommand("failure-table", "exact decryption failure probabilities");
    table->add_option("--r-list", r_list, "numbers of multiplied equations")
        ->required()
        ->delimiter(',');
    table->add_option("--log2rho-list", log2rho_list, "log2 of the cycle order rho")
        ->required()
        ->delimiter(',');
    table->add_option("--out", out_path, "CSV path (stdout if omitted)");

    auto* fig = app.add_subcommand("fig-data", "error-term pmf series (rho=256, sigma=4, r=10)");
    fig->add_option("--out", out_path, "CSV path (stdout if omitted)");

    auto* dist = app.add_subcommand("distinguish", "uniformity and attack-game harness");
    dist->add_option("--t", t)->required();
    dist->add_option("--n", n)->required();
    dist->add_option("--nc", nc)->required();
    dist->add_option("--m", m, "equations (default 2n)");
    dist->add_option("--trials", trials);
    dist->add_option("--seed", seed);
    dist->add_option("--out", out_path, "CSV path (stdout if omitted)");

    app.add_subcommand("selftest", "exhaustive t=4/5 group oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("keygen"))
            return cmd_keygen(scheme, t, m, n, nc, sigma, seed, out_pub, out_sec);
        if (app.got_subcommand("encrypt")) return cmd_encrypt(pub_path, bit, seed, out_path);
        if (app.got_subcommand("decrypt")) return cmd_decrypt(sec_path, ct_path);
        if (app.got_subcommand("failure-table"))
            return cmd_failure_table(r_list, log2rho_list, out_path);
        if (app.got_subcommand("fig-data")) return cmd_fig_data(out_path);
        if (app.got_subcommand("distinguish"))
            return cmd_distinguish(t, n, nc, m, trials, seed, out_path);
        if (app.got_subcommand("selftest")) return cmd_selftest();
    } catch (const nclwe::NotInCycle& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotInCycle;
    } catch (const nclwe::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const nclwe::InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
