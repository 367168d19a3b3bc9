#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "nclwe/errors.hpp"
#include "nclwe/sampling.hpp"

namespace nclwe::dist {

using real = boost::multiprecision::mpfr_float;

// Mantissa precision used for pmf weights; 768 bits by default. Applies to
// values created after the call (per thread).
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Probability mass function over Z_rho with high-precision weights.
struct ExactPmf {
    std::uint64_t rho = 0;
    std::vector<real> weights;

    real total_mass() const;
};

ExactPmf point_mass(std::uint64_t rho, std::uint64_t x);
ExactPmf uniform_pmf(std::uint64_t rho);

// Discrete Gaussian D_{Z,sigma} truncated at +-ceil(12 sigma), folded mod rho
// and normalized.
ExactPmf gaussian_pmf(const GaussianSpec& spec);

// Binomial(r, 1/2) on {0,...,r}, reduced mod rho.
ExactPmf binomial_pmf(unsigned r, std::uint64_t rho);

// Cyclic convolution mod rho.
ExactPmf convolve(const ExactPmf& a, const ExactPmf& b);

// r-fold self-convolution by repeated squaring.
ExactPmf self_convolve_pow(const ExactPmf& pmf, unsigned r);

// Distribution of tau + sum_{i=1..r} beta_i mod rho, tau ~ Binomial(r, 1/2),
// beta_i ~ discrete Gaussian: the exponent of the residual error element.
ExactPmf error_term_pmf(unsigned r, const GaussianSpec& spec);

// pmf'(t) = pmf(t - s mod rho).
ExactPmf shift_pmf(const ExactPmf& pmf, std::uint64_t s);

// Decryption failure probability for the given bit-0 error pmf under the
// decision regions ZeroRegion = [0, rho/4] u [3 rho/4, rho), OneRegion its
// complement, with a uniform bit prior.
real failure_probability(const ExactPmf& pmf);

struct FailureReportRow {
    unsigned r = 0;
    std::uint64_t rho = 0;
    double sigma = 0.0;  // rho^(1/4)
    real p_fail;
};

std::vector<FailureReportRow> table_report(const std::vector<unsigned>& r_list,
                                           const std::vector<unsigned>& log2_rho_list);

struct FigSeries {
    std::uint64_t rho = 0;
    std::vector<real> p0;  // bit-0 error pmf
    std::vector<real> p1;  // its rho/2 shift
};

FigSeries fig_export(std::uint64_t rho = 256, double sigma = 4.0, unsigned r = 10);

// CSV: header `t,p0,p1`, one row per t in [0, rho).
void write_fig_csv(std::ostream& os, const FigSeries& fig);

// CSV: header `r,log2_rho,sigma,p_fail`, p_fail scientific with 6 significant
// digits.
void write_report_csv(std::ostream& os, const std::vector<FailureReportRow>& rows);

}  // namespace nclwe::dist
