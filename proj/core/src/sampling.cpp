#include "nclwe/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace nclwe {

std::uint64_t uniform_mod(RandomSource& src, std::uint64_t rho) {
    if (rho == 0 || (rho & (rho - 1)) != 0)
        throw InvalidParams("uniform_mod requires a power-of-two modulus");
    return src.next() & (rho - 1);
}

std::uint64_t uniform_below(RandomSource& src, std::uint64_t bound) {
    if (bound == 0) throw InvalidParams("uniform_below: bound must be >= 1");
    if ((bound & (bound - 1)) == 0) return src.next() & (bound - 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t v = src.next();
        if (v < limit) return v % bound;
    }
}

GroupElement uniform_cycle_element(RandomSource& src, const GroupParams& p, CycleBase base) {
    return power(p, cycle_generator(p, base),
                 static_cast<std::int64_t>(uniform_mod(src, p.rho)));
}

GaussianSampler::GaussianSampler(const GaussianSpec& spec) : spec_(spec) {
    if (!(spec.sigma > 0)) throw InvalidParams("gaussian sigma must be positive");
    if (spec.rho == 0) throw InvalidParams("gaussian modulus must be >= 1");
    tail_ = static_cast<std::int64_t>(std::ceil(12.0 * spec.sigma));
    const double inv2s2 = 1.0 / (2.0 * spec.sigma * spec.sigma);
    cdf_.reserve(static_cast<std::size_t>(2 * tail_ + 1));
    double acc = 0.0;
    for (std::int64_t v = -tail_; v <= tail_; ++v) {
        acc += std::exp(-static_cast<double>(v) * static_cast<double>(v) * inv2s2);
        cdf_.push_back(acc);
    }
    for (double& c : cdf_) c /= acc;
}

std::int64_t GaussianSampler::sample_signed(RandomSource& src) const {
    const double u = src.next_unit();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const auto idx = std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                              static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
    return -tail_ + idx;
}

std::uint64_t GaussianSampler::sample(RandomSource& src) const {
    const std::int64_t v = sample_signed(src);
    const auto r = static_cast<std::int64_t>(spec_.rho);
    return static_cast<std::uint64_t>(((v % r) + r) % r);
}

std::uint64_t gaussian_exponent(RandomSource& src, const GaussianSpec& spec) {
    return GaussianSampler(spec).sample(src);
}

std::vector<std::size_t> random_subset(RandomSource& src, std::size_t m) {
    if (m == 0) throw InvalidParams("random_subset: m must be >= 1");
    std::vector<std::size_t> subset;
    do {
        subset.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (src.next() & 1) subset.push_back(i);
    } while (subset.empty());
    return subset;
}

}  // namespace nclwe
