#include "nclwe/dist.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace nclwe::dist {

namespace {

unsigned g_precision_bits = 768;

void apply_precision() {
    // boost mpfr backend takes decimal digits; round up from bits
    const auto digits10 =
        static_cast<unsigned>(std::ceil(static_cast<double>(g_precision_bits) * 0.30103)) + 2;
    real::default_precision(digits10);
}

struct PrecisionInit {
    PrecisionInit() { apply_precision(); }
};

void ensure_precision() {
    thread_local PrecisionInit init;
    (void)init;
}

}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 64) throw InvalidParams("precision must be at least 64 bits");
    g_precision_bits = bits;
    apply_precision();
}

unsigned precision_bits() { return g_precision_bits; }

real ExactPmf::total_mass() const {
    real s = 0;
    for (const real& w : weights) s += w;
    return s;
}

ExactPmf point_mass(std::uint64_t rho, std::uint64_t x) {
    ensure_precision();
    if (rho == 0) throw InvalidParams("pmf modulus must be >= 1");
    ExactPmf pmf{rho, std::vector<real>(rho, real(0))};
    pmf.weights[x % rho] = 1;
    return pmf;
}

ExactPmf uniform_pmf(std::uint64_t rho) {
    ensure_precision();
    if (rho == 0) throw InvalidParams("pmf modulus must be >= 1");
    ExactPmf pmf{rho, std::vector<real>(rho, real(1) / rho)};
    return pmf;
}

ExactPmf gaussian_pmf(const GaussianSpec& spec) {
    ensure_precision();
    if (!(spec.sigma > 0)) throw InvalidParams("gaussian sigma must be positive");
    if (spec.rho == 0) throw InvalidParams("gaussian modulus must be >= 1");
    const auto tail = static_cast<std::int64_t>(std::ceil(12.0 * spec.sigma));
    const real sigma(spec.sigma);
    const real inv2s2 = real(1) / (2 * sigma * sigma);
    ExactPmf pmf{spec.rho, std::vector<real>(spec.rho, real(0))};
    real total = 0;
    const auto r = static_cast<std::int64_t>(spec.rho);
    for (std::int64_t v = -tail; v <= tail; ++v) {
        const real w = exp(-real(v) * v * inv2s2);
        pmf.weights[static_cast<std::uint64_t>(((v % r) + r) % r)] += w;
        total += w;
    }
    for (real& w : pmf.weights) w /= total;
    return pmf;
}

ExactPmf binomial_pmf(unsigned r, std::uint64_t rho) {
    ensure_precision();
    if (r < 1) throw InvalidParams("binomial_pmf: r must be >= 1");
    if (rho == 0) throw InvalidParams("pmf modulus must be >= 1");
    ExactPmf pmf{rho, std::vector<real>(rho, real(0))};
    real coeff = pow(real(2), -static_cast<int>(r));  // C(r,0) / 2^r
    for (unsigned t = 0; t <= r; ++t) {
        pmf.weights[t % rho] += coeff;
        coeff = coeff * (r - t) / (t + 1);
    }
    return pmf;
}

ExactPmf convolve(const ExactPmf& a, const ExactPmf& b) {
    ensure_precision();
    if (a.rho != b.rho)
        throw ModulusMismatch("convolve: moduli " + std::to_string(a.rho) + " vs " +
                              std::to_string(b.rho));
    const std::uint64_t rho = a.rho;
    ExactPmf out{rho, std::vector<real>(rho, real(0))};
    for (std::uint64_t i = 0; i < rho; ++i) {
        if (a.weights[i].is_zero()) continue;
        for (std::uint64_t j = 0; j < rho; ++j) {
            if (b.weights[j].is_zero()) continue;
            std::uint64_t k = i + j;
            if (k >= rho) k -= rho;
            out.weights[k] += a.weights[i] * b.weights[j];
        }
    }
    return out;
}

ExactPmf self_convolve_pow(const ExactPmf& pmf, unsigned r) {
    ensure_precision();
    if (r < 1) throw InvalidParams("self_convolve_pow: r must be >= 1");
    ExactPmf result = point_mass(pmf.rho, 0);
    ExactPmf base = pmf;
    unsigned e = r;
    for (;;) {
        if (e & 1) result = convolve(result, base);
        e >>= 1;
        if (e == 0) break;
        base = convolve(base, base);
    }
    return result;
}

ExactPmf error_term_pmf(unsigned r, const GaussianSpec& spec) {
    return convolve(binomial_pmf(r, spec.rho), self_convolve_pow(gaussian_pmf(spec), r));
}

ExactPmf shift_pmf(const ExactPmf& pmf, std::uint64_t s) {
    ensure_precision();
    const std::uint64_t rho = pmf.rho;
    ExactPmf out{rho, std::vector<real>(rho, real(0))};
    for (std::uint64_t t = 0; t < rho; ++t) out.weights[(t + s) % rho] = pmf.weights[t];
    return out;
}

namespace {

bool in_zero_region(std::uint64_t d, std::uint64_t rho) {
    // "closer to 0 than to 2^(t-2)" with ties to 0
    return 4 * d <= rho || 4 * d >= 3 * rho;
}

}  // namespace

real failure_probability(const ExactPmf& pmf) {
    ensure_precision();
    const std::uint64_t rho = pmf.rho;
    const ExactPmf shifted = shift_pmf(pmf, rho / 2);
    real fail0 = 0;  // bit 0 sent, d lands in OneRegion
    real fail1 = 0;  // bit 1 sent, shifted d lands in ZeroRegion
    for (std::uint64_t d = 0; d < rho; ++d) {
        if (!in_zero_region(d, rho))
            fail0 += pmf.weights[d];
        else
            fail1 += shifted.weights[d];
    }
    return (fail0 + fail1) / 2;
}

std::vector<FailureReportRow> table_report(const std::vector<unsigned>& r_list,
                                           const std::vector<unsigned>& log2_rho_list) {
    ensure_precision();
    std::vector<FailureReportRow> rows;
    for (unsigned lg : log2_rho_list) {
        if (lg == 0 || lg > 40) throw InvalidParams("log2 rho out of range");
        const std::uint64_t rho = std::uint64_t{1} << lg;
        const double sigma = std::pow(static_cast<double>(rho), 0.25);
        for (unsigned r : r_list) {
            FailureReportRow row;
            row.r = r;
            row.rho = rho;
            row.sigma = sigma;
            row.p_fail = failure_probability(error_term_pmf(r, GaussianSpec{sigma, rho}));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

FigSeries fig_export(std::uint64_t rho, double sigma, unsigned r) {
    const ExactPmf p0 = error_term_pmf(r, GaussianSpec{sigma, rho});
    const ExactPmf p1 = shift_pmf(p0, rho / 2);
    return FigSeries{rho, p0.weights, p1.weights};
}

void write_fig_csv(std::ostream& os, const FigSeries& fig) {
    os << "t,p0,p1\n";
    os << std::scientific << std::setprecision(17);
    for (std::uint64_t t = 0; t < fig.rho; ++t)
        os << t << ',' << static_cast<double>(fig.p0[t]) << ',' << static_cast<double>(fig.p1[t])
           << '\n';
}

void write_report_csv(std::ostream& os, const std::vector<FailureReportRow>& rows) {
    os << "r,log2_rho,sigma,p_fail\n";
    for (const FailureReportRow& row : rows) {
        unsigned lg = 0;
        while ((std::uint64_t{1} << lg) < row.rho) ++lg;
        os << row.r << ',' << lg << ',' << std::defaultfloat << std::setprecision(6) << row.sigma
           << ',' << std::scientific << std::setprecision(5) << row.p_fail << '\n';
    }
}

}  // namespace nclwe::dist
