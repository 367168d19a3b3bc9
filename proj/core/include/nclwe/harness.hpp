#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nclwe/pke_m2t.hpp"

namespace nclwe {

// A fixed secret and parameter set shared by all samples of one oracle run.
struct OracleInstance {
    M2tParams params;
    ExponentVector x;
};

OracleInstance make_oracle_instance(RandomSource& src, const M2tParams& params);

struct OracleSample {
    ElementVector w;
    GroupElement v;
};

// (w, eps * w^x): fresh uniform row per the n_c cycle split, Gaussian error
// eps in <ba> on the left.
OracleSample oracle_enc(RandomSource& src, const OracleInstance& instance);

// (w, v) with v uniform over all 2^t elements.
OracleSample oracle_rand(RandomSource& src, const M2tParams& params);

// Counts of w1 * w2 over all w1 in <ba>, w2 in <a>, indexed alpha*rho + k.
// Perfect uniformity (each count = 2^(t-2)) is the exact form of the
// sample-uniformity argument. t <= 8.
std::vector<std::uint64_t> exact_product_distribution(const GroupParams& p);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t dof = 0;
};

// Pearson statistic against the uniform law over counts.size() cells.
ChiSquareResult chi_square_uniformity(const std::vector<std::uint64_t>& counts);

struct AdvantageEstimate {
    std::size_t trials = 0;
    std::size_t wins = 0;
    double advantage = 0.0;  // |wins/trials - 1/2|
    double ci95 = 0.0;       // half-width of the 95% binomial CI on the win rate
    double ci99 = 0.0;
};

using Adversary = std::function<int(const M2tCiphertext&)>;

// Real-vs-random attack game. Each trial draws an independent instance and
// randomness from a counter-derived seed, so parallel and sequential runs
// see the same transcript set.
AdvantageEstimate attack_game(std::uint64_t master_seed, const M2tParams& params,
                              const Adversary& adversary, std::size_t trials);

Adversary constant_adversary(int guess);
Adversary alpha_bit_adversary();
Adversary k_parity_adversary();
// Guesses from which half of Z_rho the a-exponent of c came.
Adversary k_range_adversary(const GroupParams& p);

struct HarnessReportRow {
    std::string test;
    unsigned t = 0;
    std::size_t n = 0;
    std::size_t trials = 0;
    double statistic = 0.0;
    double p_value = 0.0;
    double advantage = 0.0;
    double ci95 = 0.0;
};

// CSV: header `test,t,n,trials,statistic,p_value,advantage,ci95`.
void write_harness_csv(std::ostream& os, const std::vector<HarnessReportRow>& rows);

}  // namespace nclwe
