#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nclwe/group.hpp"

namespace nclwe {

// Deterministic, seedable stream of uniform 64-bit words. mt19937_64 is
// fully specified by the standard, so transcripts are platform-stable.
// Single-owner: not shareable between concurrent tasks.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Uniform on {0,...,rho-1} for a power-of-two rho, rejection-free masking.
std::uint64_t uniform_mod(RandomSource& src, std::uint64_t rho);

// Uniform on {0,...,bound-1} for arbitrary bound >= 1, by rejection.
std::uint64_t uniform_below(RandomSource& src, std::uint64_t bound);

GroupElement uniform_cycle_element(RandomSource& src, const GroupParams& p, CycleBase base);

struct GaussianSpec {
    double sigma = 1.0;
    std::uint64_t rho = 0;  // reduction modulus
};

// Discrete Gaussian on Z with pmf proportional to exp(-x^2 / (2 sigma^2)),
// truncated to |x| <= ceil(12 sigma) (truncated mass < e^-72), sampled by
// inverse CDF over a precomputed table and reduced mod rho.
class GaussianSampler {
public:
    explicit GaussianSampler(const GaussianSpec& spec);

    std::int64_t sample_signed(RandomSource& src) const;
    std::uint64_t sample(RandomSource& src) const;  // signed sample mod rho

    const GaussianSpec& spec() const { return spec_; }

private:
    GaussianSpec spec_;
    std::int64_t tail_ = 0;
    std::vector<double> cdf_;  // over support [-tail, tail]
};

std::uint64_t gaussian_exponent(RandomSource& src, const GaussianSpec& spec);

// Nonempty subset of {0,...,m-1}: each index included with probability 1/2,
// the whole draw resampled while empty; returned ascending.
std::vector<std::size_t> random_subset(RandomSource& src, std::size_t m);

}  // namespace nclwe
