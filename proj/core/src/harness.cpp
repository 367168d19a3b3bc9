#include "nclwe/harness.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include <boost/math/special_functions/gamma.hpp>

namespace nclwe {

OracleInstance make_oracle_instance(RandomSource& src, const M2tParams& params) {
    params.validate();
    OracleInstance instance;
    instance.params = params;
    instance.x.resize(params.n);
    for (auto& xi : instance.x) xi = uniform_mod(src, params.group.rho);
    return instance;
}

namespace {

ElementVector sample_row(RandomSource& src, const M2tParams& params) {
    ElementVector w(params.n);
    for (std::size_t j = 0; j < params.n; ++j)
        w[j] = uniform_cycle_element(src, params.group,
                                     j < params.n_c ? CycleBase::ba : CycleBase::a);
    return w;
}

}  // namespace

OracleSample oracle_enc(RandomSource& src, const OracleInstance& instance) {
    const GroupParams& g = instance.params.group;
    OracleSample s;
    s.w = sample_row(src, instance.params);
    const GroupElement eps =
        power(g, cycle_generator(g, CycleBase::ba),
              static_cast<std::int64_t>(
                  gaussian_exponent(src, GaussianSpec{instance.params.sigma, g.rho})));
    s.v = multiply(g, eps, rmpf_vec(g, s.w, instance.x));
    return s;
}

OracleSample oracle_rand(RandomSource& src, const M2tParams& params) {
    const GroupParams& g = params.group;
    OracleSample s;
    s.w = sample_row(src, params);
    s.v = GroupElement{static_cast<std::uint32_t>(src.next() & 1), uniform_mod(src, g.rho)};
    return s;
}

std::vector<std::uint64_t> exact_product_distribution(const GroupParams& p) {
    if (p.t > 8) throw ParamsTooLarge("exact_product_distribution supports t <= 8");
    std::vector<std::uint64_t> counts(std::size_t{2} * p.rho, 0);
    const GroupElement ba = cycle_generator(p, CycleBase::ba);
    const GroupElement a = cycle_generator(p, CycleBase::a);
    for (std::uint64_t n1 = 0; n1 < p.rho; ++n1) {
        const GroupElement w1 = power(p, ba, static_cast<std::int64_t>(n1));
        for (std::uint64_t n2 = 0; n2 < p.rho; ++n2) {
            const GroupElement w2 = power(p, a, static_cast<std::int64_t>(n2));
            const GroupElement w0 = multiply(p, w1, w2);
            ++counts[std::size_t{w0.alpha} * p.rho + w0.k];
        }
    }
    return counts;
}

ChiSquareResult chi_square_uniformity(const std::vector<std::uint64_t>& counts) {
    if (counts.empty()) throw EmptySample("chi_square_uniformity: no cells");
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    if (total == 0) throw EmptySample("chi_square_uniformity: empty sample");
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    ChiSquareResult r;
    r.dof = counts.size() - 1;
    for (std::uint64_t c : counts) {
        const double diff = static_cast<double>(c) - expected;
        r.statistic += diff * diff / expected;
    }
    r.p_value = r.statistic <= 0.0
                    ? 1.0
                    : boost::math::gamma_q(static_cast<double>(r.dof) / 2.0, r.statistic / 2.0);
    return r;
}

AdvantageEstimate attack_game(std::uint64_t master_seed, const M2tParams& params,
                              const Adversary& adversary, std::size_t trials) {
    params.validate();
    const GroupParams& g = params.group;
    std::size_t wins = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        RandomSource src(master_seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
        auto [pk, sk] = keygen(src, params);
        const int beta = static_cast<int>(src.next() & 1);
        M2tCiphertext ct;
        if (beta == 0) {
            // real world: encrypt the adversary's bit; a uniform bit stands
            // in for A's choice of mu
            ct = encrypt(src, pk, static_cast<int>(src.next() & 1));
        } else {
            // random world: fold columns as Bob would, mask is a fresh ba^k
            const std::vector<std::size_t> subset = random_subset(src, params.m);
            ct.w = column_fold(g, pk.W, subset);
            ct.c = GroupElement{1, uniform_mod(src, g.rho)};
        }
        if (adversary(ct) == beta) ++wins;
    }
    AdvantageEstimate est;
    est.trials = trials;
    est.wins = wins;
    const double phat = static_cast<double>(wins) / static_cast<double>(trials);
    est.advantage = std::abs(phat - 0.5);
    const double se = std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
    est.ci95 = 1.959964 * se;
    est.ci99 = 2.575829 * se;
    return est;
}

Adversary constant_adversary(int guess) {
    return [guess](const M2tCiphertext&) { return guess; };
}

Adversary alpha_bit_adversary() {
    return [](const M2tCiphertext& ct) { return static_cast<int>(ct.c.alpha); };
}

Adversary k_parity_adversary() {
    return [](const M2tCiphertext& ct) { return static_cast<int>(ct.c.k & 1); };
}

Adversary k_range_adversary(const GroupParams& p) {
    const std::uint64_t half = p.rho / 2;
    return [half](const M2tCiphertext& ct) { return ct.c.k < half ? 0 : 1; };
}

void write_harness_csv(std::ostream& os, const std::vector<HarnessReportRow>& rows) {
    os << "test,t,n,trials,statistic,p_value,advantage,ci95\n";
    os << std::setprecision(6);
    for (const HarnessReportRow& r : rows)
        os << r.test << ',' << r.t << ',' << r.n << ',' << r.trials << ',' << r.statistic << ','
           << r.p_value << ',' << r.advantage << ',' << r.ci95 << '\n';
}

}  // namespace nclwe
