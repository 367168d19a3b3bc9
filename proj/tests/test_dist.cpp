#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nclwe/dist.hpp"

using namespace nclwe;
using nclwe::dist::ExactPmf;
using nclwe::dist::real;

namespace {

double log10_of(const real& v) { return static_cast<double>(log10(v)); }

bool close_rel(const real& a, const real& b, double tol = 1e-40) {
    if (a.is_zero() && b.is_zero()) return true;
    return static_cast<double>(abs(a - b) / (abs(a) + abs(b))) < tol;
}

}  // namespace

TEST_CASE("point mass and uniform") {
    const auto pm = dist::point_mass(8, 3);
    CHECK(pm.weights[3] == 1);
    CHECK(close_rel(pm.total_mass(), real(1)));

    const auto u = dist::uniform_pmf(8);
    CHECK(close_rel(u.total_mass(), real(1)));
    for (const auto& w : u.weights) CHECK(close_rel(w, real(1) / 8));
}

TEST_CASE("gaussian pmf normalization and symmetry") {
    const GaussianSpec spec{std::pow(1024.0, 0.25), 1024};
    const auto pmf = dist::gaussian_pmf(spec);
    CHECK(static_cast<double>(abs(pmf.total_mass() - 1)) < std::pow(2.0, -200));
    for (std::uint64_t x = 1; x < pmf.rho; ++x)
        CHECK(close_rel(pmf.weights[x], pmf.weights[pmf.rho - x]));

    // pmf(0) equals the independently computed normalization ratio
    const auto tail = static_cast<std::int64_t>(std::ceil(12.0 * spec.sigma));
    const real s(spec.sigma);
    real total = 0, at0 = 0;
    for (std::int64_t v = -tail; v <= tail; ++v) {
        const real w = exp(-real(v) * v / (2 * s * s));
        total += w;
        if (((v % 1024) + 1024) % 1024 == 0) at0 += w;
    }
    CHECK(close_rel(pmf.weights[0], at0 / total));
}

TEST_CASE("binomial pmf") {
    const auto b2 = dist::binomial_pmf(2, 16);
    CHECK(close_rel(b2.weights[0], real(1) / 4));
    CHECK(close_rel(b2.weights[1], real(1) / 2));
    CHECK(close_rel(b2.weights[2], real(1) / 4));

    const auto b1 = dist::binomial_pmf(1, 16);
    CHECK(close_rel(b1.weights[0], real(1) / 2));
    CHECK(close_rel(b1.weights[1], real(1) / 2));

    const auto b16 = dist::binomial_pmf(16, 1024);
    CHECK(close_rel(b16.weights[8], real(12870) / 65536));

    // wrap mod rho when r >= rho
    const auto b9 = dist::binomial_pmf(9, 8);
    CHECK(close_rel(b9.weights[0], (real(1) + 9) / 512));  // C(9,0) + C(9,8)
}

TEST_CASE("convolution algebra") {
    const auto q = dist::gaussian_pmf(GaussianSpec{1.3, 8});
    const auto pm0 = dist::point_mass(8, 0);
    const auto conv = dist::convolve(pm0, q);
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(close_rel(conv.weights[x], q.weights[x]));

    const auto pm3 = dist::point_mass(8, 3);
    const auto pm5 = dist::point_mass(8, 5);
    const auto cancel = dist::convolve(pm3, pm5);
    CHECK(close_rel(cancel.weights[0], real(1)));

    const auto u = dist::uniform_pmf(8);
    const auto absorbed = dist::convolve(u, q);
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(close_rel(absorbed.weights[x], real(1) / 8));

    // commutative and associative (rho = 8, three distinct pmfs)
    const auto r1 = dist::binomial_pmf(3, 8);
    const auto ab = dist::convolve(q, r1);
    const auto ba = dist::convolve(r1, q);
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(close_rel(ab.weights[x], ba.weights[x]));
    const auto abc1 = dist::convolve(dist::convolve(q, r1), pm3);
    const auto abc2 = dist::convolve(q, dist::convolve(r1, pm3));
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(close_rel(abc1.weights[x], abc2.weights[x]));

    CHECK_THROWS_AS(dist::convolve(q, dist::point_mass(16, 0)), ModulusMismatch);
}

TEST_CASE("repeated squaring equals sequential convolution") {
    const auto g = dist::gaussian_pmf(GaussianSpec{2.0, 64});
    for (unsigned r : {1u, 2u, 3u, 5u, 8u}) {
        const auto fast = dist::self_convolve_pow(g, r);
        ExactPmf slow = g;
        for (unsigned i = 1; i < r; ++i) slow = dist::convolve(slow, g);
        for (std::uint64_t x = 0; x < 64; ++x) CHECK(close_rel(fast.weights[x], slow.weights[x]));
    }
}

TEST_CASE("error term pmf") {
    // degenerate Gaussian: r=1 leaves only the Bernoulli tau, mass 1/2 on 0 and 1
    const auto degenerate = dist::error_term_pmf(1, GaussianSpec{1e-3, 64});
    CHECK(close_rel(degenerate.weights[0], real(1) / 2));
    CHECK(close_rel(degenerate.weights[1], real(1) / 2));

    const auto pmf = dist::error_term_pmf(10, GaussianSpec{4.0, 256});
    CHECK(static_cast<double>(abs(pmf.total_mass() - 1)) < std::pow(2.0, -200));
    // unimodal near small t, wrapped: peak in the zero region
    std::uint64_t peak = 0;
    for (std::uint64_t x = 1; x < 256; ++x)
        if (pmf.weights[x] > pmf.weights[peak]) peak = x;
    CHECK((peak <= 64 || peak >= 192));
}

TEST_CASE("shift pmf") {
    const auto pmf = dist::error_term_pmf(4, GaussianSpec{2.0, 64});
    const auto s0 = dist::shift_pmf(pmf, 0);
    const auto roundtrip = dist::shift_pmf(dist::shift_pmf(pmf, 32), 32);
    for (std::uint64_t x = 0; x < 64; ++x) {
        CHECK(s0.weights[x] == pmf.weights[x]);
        CHECK(roundtrip.weights[x] == pmf.weights[x]);
    }
    const auto pm = dist::shift_pmf(dist::point_mass(64, 0), 32);
    CHECK(pm.weights[32] == 1);
}

TEST_CASE("failure probability edge laws") {
    CHECK(dist::failure_probability(dist::point_mass(64, 0)).is_zero());
    // mass just outside the zero region fails both bit cases
    CHECK(close_rel(dist::failure_probability(dist::point_mass(64, 17)), real(1)));
    // boundary rho/4 itself decodes as 0: bit 0 fine, bit 1 wrong
    CHECK(close_rel(dist::failure_probability(dist::point_mass(64, 16)), real(1) / 2));
}

TEST_CASE("failure probability monotone in sigma") {
    const std::uint64_t rho = 256;
    real prev = -1;
    for (double sigma : {2.0, 4.0, 8.0, 16.0}) {
        const real p = dist::failure_probability(dist::error_term_pmf(16, GaussianSpec{sigma, rho}));
        CHECK(p >= prev);
        prev = p;
    }
}

TEST_CASE("published failure cell r=16 rho=2^10") {
    const std::uint64_t rho = 1024;
    const double sigma = std::pow(static_cast<double>(rho), 0.25);
    const real p = dist::failure_probability(dist::error_term_pmf(16, GaussianSpec{sigma, rho}));
    CHECK(std::abs(log10_of(p) - std::log10(4.8e-28)) < 1.0);
}

TEST_CASE("precision rerun stability") {
    const std::uint64_t rho = 1024;
    const double sigma = std::pow(static_cast<double>(rho), 0.25);
    const double base_bits = dist::precision_bits();
    const double p768 =
        log10_of(dist::failure_probability(dist::error_term_pmf(16, GaussianSpec{sigma, rho})));
    dist::set_precision_bits(1024);
    const double p1024 =
        log10_of(dist::failure_probability(dist::error_term_pmf(16, GaussianSpec{sigma, rho})));
    dist::set_precision_bits(static_cast<unsigned>(base_bits));
    // < 1% relative change in the probability
    CHECK(std::abs(p768 - p1024) < std::log10(1.01));
}

TEST_CASE("table report and csv") {
    const auto rows = dist::table_report({16}, {10});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].r == 16);
    CHECK(rows[0].rho == 1024);
    CHECK(rows[0].sigma == doctest::Approx(std::pow(1024.0, 0.25)));

    std::ostringstream os;
    dist::write_report_csv(os, rows);
    const std::string csv = os.str();
    CHECK(csv.rfind("r,log2_rho,sigma,p_fail\n", 0) == 0);
    CHECK(csv.find("16,10,") != std::string::npos);
    CHECK(csv.find("e-") != std::string::npos);
}

TEST_CASE("fig export") {
    const auto fig = dist::fig_export();
    REQUIRE(fig.rho == 256);
    real s0 = 0, s1 = 0;
    for (const auto& w : fig.p0) s0 += w;
    for (const auto& w : fig.p1) s1 += w;
    CHECK(static_cast<double>(abs(s0 - 1)) < std::pow(2.0, -200));
    CHECK(static_cast<double>(abs(s1 - 1)) < std::pow(2.0, -200));
    for (std::uint64_t t = 0; t < 256; ++t) CHECK(fig.p1[(t + 128) % 256] == fig.p0[t]);

    std::ostringstream os;
    dist::write_fig_csv(os, fig);
    CHECK(os.str().rfind("t,p0,p1\n", 0) == 0);
}
