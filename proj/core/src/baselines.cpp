#include "nclwe/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nclwe {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// ---- Regev ----

RegevParams RegevParams::create(std::size_t n, double sigma) {
    if (n < 2) throw InvalidParams("regev: n must be >= 2");
    if (!(sigma > 0)) throw InvalidParams("regev: sigma must be positive");
    const std::uint64_t lo = static_cast<std::uint64_t>(n) * n;
    std::uint64_t q = lo;
    while (q <= 2 * lo && !is_prime(q)) ++q;
    if (q > 2 * lo) throw SearchExhausted("regev: no prime in [n^2, 2n^2]");
    RegevParams p;
    p.n = n;
    p.q = q;
    p.sigma = sigma;
    constexpr double eps = 0.1;
    p.m = static_cast<std::size_t>(
        std::ceil((1.0 + eps) * static_cast<double>(n + 1) * std::log2(static_cast<double>(q))));
    return p;
}

std::pair<RegevPublicKey, RegevSecretKey> regev_keygen(RandomSource& src,
                                                       const RegevParams& params) {
    RegevSecretKey sk;
    sk.params = params;
    sk.x.resize(params.n);
    for (auto& xi : sk.x) xi = uniform_below(src, params.q);

    const GaussianSampler noise(GaussianSpec{params.sigma, params.q});
    RegevPublicKey pk;
    pk.params = params;
    pk.A.assign(params.m, std::vector<std::uint64_t>(params.n));
    pk.b.resize(params.m);
    for (std::size_t i = 0; i < params.m; ++i) {
        unsigned __int128 dot = 0;
        for (std::size_t j = 0; j < params.n; ++j) {
            pk.A[i][j] = uniform_below(src, params.q);
            dot += static_cast<unsigned __int128>(pk.A[i][j]) * sk.x[j];
        }
        pk.b[i] = static_cast<std::uint64_t>((dot + noise.sample(src)) % params.q);
    }
    return {std::move(pk), std::move(sk)};
}

RegevCiphertext regev_encrypt(RandomSource& src, const RegevPublicKey& pk, int bit) {
    if (bit != 0 && bit != 1) throw InvalidParams("regev: bit must be 0 or 1");
    const std::uint64_t q = pk.params.q;
    const std::vector<std::size_t> subset = random_subset(src, pk.params.m);
    RegevCiphertext ct;
    ct.a.assign(pk.params.n, 0);
    std::uint64_t c = 0;
    for (std::size_t i : subset) {
        for (std::size_t j = 0; j < pk.params.n; ++j) ct.a[j] = (ct.a[j] + pk.A[i][j]) % q;
        c = (c + pk.b[i]) % q;
    }
    if (bit == 1) c = (c + q / 2) % q;
    ct.c = c;
    return ct;
}

int regev_decrypt_raw(std::uint64_t q, const std::vector<std::uint64_t>& x,
                      const RegevCiphertext& ct) {
    if (ct.a.size() != x.size()) throw DimensionMismatch("regev decrypt: length mismatch");
    unsigned __int128 dot = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        dot += static_cast<unsigned __int128>(ct.a[j]) * x[j];
    const std::uint64_t d = (ct.c + q - static_cast<std::uint64_t>(dot % q)) % q;
    const std::uint64_t dist0 = std::min(d, q - d);
    const std::uint64_t half = q / 2;
    const std::uint64_t dist1 = d > half ? d - half : half - d;
    return dist0 <= dist1 ? 0 : 1;
}

int regev_decrypt(const RegevSecretKey& sk, const RegevCiphertext& ct) {
    return regev_decrypt_raw(sk.params.q, sk.x, ct);
}

// ---- Sylow ----

SylowParams sylow_param_gen(RandomSource& src, std::size_t n) {
    if (n < 2) throw InvalidParams("sylow: n must be >= 2");
    const std::uint64_t lo = static_cast<std::uint64_t>(n) * n;
    std::uint64_t q = lo;
    while (q <= 2 * lo && !is_prime(q)) ++q;
    if (q > 2 * lo) throw SearchExhausted("sylow: no prime in [n^2, 2n^2]");
    // smallest prime p = 2kq + 1
    std::uint64_t p = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << 20); ++k) {
        const std::uint64_t cand = 2 * k * q + 1;
        if (is_prime(cand)) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw SearchExhausted("sylow: no prime p with q | p-1 found");
    std::uint64_t g = 1;
    while (g == 1) g = pow_mod(2 + uniform_below(src, p - 3), (p - 1) / q, p);
    return SylowParams{p, q, g};
}

std::pair<SylowPublicKey, SylowSecretKey> sylow_keygen(RandomSource& src,
                                                       const SylowInstanceParams& params) {
    const auto [p, q, g] = params.sylow;
    if (p == 0 || q == 0 || g <= 1) throw InvalidParams("sylow: params not initialized");
    if (params.n < 2 || params.m < 2) throw InvalidParams("sylow: need n, m >= 2");

    SylowSecretKey sk;
    sk.params = params;
    sk.x.resize(params.n);
    for (auto& xi : sk.x) xi = uniform_below(src, q);

    const GaussianSampler noise(GaussianSpec{params.sigma, q});
    SylowPublicKey pk;
    pk.params = params;
    pk.A.assign(params.m, std::vector<std::uint64_t>(params.n));
    pk.b.resize(params.m);
    for (std::size_t i = 0; i < params.m; ++i) {
        unsigned __int128 prod = 1;
        for (std::size_t j = 0; j < params.n; ++j) {
            pk.A[i][j] = pow_mod(g, uniform_below(src, q), p);
            prod = prod * pow_mod(pk.A[i][j], sk.x[j], p) % p;
        }
        pk.b[i] =
            static_cast<std::uint64_t>(prod * pow_mod(g, noise.sample(src), p) % p);
    }
    return {std::move(pk), std::move(sk)};
}

SylowCiphertext sylow_encrypt(RandomSource& src, const SylowPublicKey& pk, int bit) {
    if (bit != 0 && bit != 1) throw InvalidParams("sylow: bit must be 0 or 1");
    const auto [p, q, g] = pk.params.sylow;
    const std::vector<std::size_t> subset = random_subset(src, pk.params.m);
    SylowCiphertext ct;
    ct.a.assign(pk.params.n, 1);
    unsigned __int128 c = 1;
    for (std::size_t i : subset) {
        for (std::size_t j = 0; j < pk.params.n; ++j)
            ct.a[j] = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(ct.a[j]) * pk.A[i][j] % p);
        c = c * pk.b[i] % p;
    }
    if (bit == 1) c = c * pow_mod(g, q / 2, p) % p;
    ct.c = static_cast<std::uint64_t>(c);
    return ct;
}

int sylow_decrypt(const SylowSecretKey& sk, const SylowCiphertext& ct) {
    const auto [p, q, g] = sk.params.sylow;
    if (ct.a.size() != sk.x.size()) throw DimensionMismatch("sylow decrypt: length mismatch");
    unsigned __int128 ax = 1;
    for (std::size_t j = 0; j < sk.x.size(); ++j) ax = ax * pow_mod(ct.a[j], sk.x[j], p) % p;
    const std::uint64_t leftover = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(ct.c) * inv_mod(static_cast<std::uint64_t>(ax), p) % p);
    std::uint64_t r = 0;
    try {
        r = dlog_bsgs(g, leftover, q, p);
    } catch (const NotInSubgroup&) {
        throw DlogFailure("sylow decrypt: residual element outside <g>");
    }
    // closeness rule in Z_q, circular distances, ties to 0
    const std::uint64_t dist0 = std::min(r, q - r);
    const std::uint64_t half = q / 2;
    const std::uint64_t diff = r > half ? r - half : half - r;
    const std::uint64_t dist1 = std::min(diff, q - diff);
    return dist0 <= dist1 ? 0 : 1;
}

std::uint64_t dlog_bsgs(std::uint64_t g, std::uint64_t h, std::uint64_t q, std::uint64_t p) {
    if (pow_mod(h, q, p) != 1) throw NotInSubgroup("dlog_bsgs: element outside the subgroup");
    const std::uint64_t step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(q))));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> baby;  // (g^j, j)
    baby.reserve(step);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < step; ++j) {
        baby.emplace_back(cur, j);
        cur = static_cast<std::uint64_t>(static_cast<unsigned __int128>(cur) * g % p);
    }
    std::sort(baby.begin(), baby.end());
    const std::uint64_t giant = inv_mod(cur, p);  // g^-step
    std::uint64_t gamma = h;
    for (std::uint64_t i = 0; i < step + 1; ++i) {
        auto it = std::lower_bound(baby.begin(), baby.end(),
                                   std::make_pair(gamma, std::uint64_t{0}));
        if (it != baby.end() && it->first == gamma) {
            const std::uint64_t e = (i * step + it->second) % q;
            if (pow_mod(g, e, p) == h) return e;
        }
        gamma = static_cast<std::uint64_t>(static_cast<unsigned __int128>(gamma) * giant % p);
    }
    throw NotInSubgroup("dlog_bsgs: exponent not found");
}

AdditiveInstance sylow_to_additive(const SylowPublicKey& pk) {
    const auto [p, q, g] = pk.params.sylow;
    AdditiveInstance inst;
    inst.q = q;
    inst.A.assign(pk.params.m, std::vector<std::uint64_t>(pk.params.n));
    inst.b.resize(pk.params.m);
    try {
        for (std::size_t i = 0; i < pk.params.m; ++i) {
            for (std::size_t j = 0; j < pk.params.n; ++j)
                inst.A[i][j] = dlog_bsgs(g, pk.A[i][j], q, p);
            inst.b[i] = dlog_bsgs(g, pk.b[i], q, p);
        }
    } catch (const NotInSubgroup&) {
        throw DlogFailure("sylow_to_additive: instance entry outside <g>");
    }
    return inst;
}

RegevCiphertext sylow_ct_to_additive(const SylowInstanceParams& params,
                                     const SylowCiphertext& ct) {
    const auto [p, q, g] = params.sylow;
    RegevCiphertext out;
    out.a.resize(ct.a.size());
    try {
        for (std::size_t j = 0; j < ct.a.size(); ++j) out.a[j] = dlog_bsgs(g, ct.a[j], q, p);
        out.c = dlog_bsgs(g, ct.c, q, p);
    } catch (const NotInSubgroup&) {
        throw DlogFailure("sylow_ct_to_additive: ciphertext entry outside <g>");
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> solve_linear_mod(
    std::vector<std::vector<std::uint64_t>> A, std::vector<std::uint64_t> b, std::uint64_t q) {
    const std::size_t m = A.size();
    if (m == 0) return std::nullopt;
    const std::size_t n = A[0].size();
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && A[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(A[piv], A[row]);
        std::swap(b[piv], b[row]);
        const std::uint64_t inv = inv_mod(A[row][col], q);
        for (std::size_t j = col; j < n; ++j)
            A[row][j] = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(A[row][j]) * inv % q);
        b[row] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b[row]) * inv % q);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col] == 0) continue;
            const std::uint64_t f = A[i][col];
            for (std::size_t j = col; j < n; ++j) {
                const std::uint64_t sub = static_cast<std::uint64_t>(
                    static_cast<unsigned __int128>(f) * A[row][j] % q);
                A[i][j] = (A[i][j] + q - sub) % q;
            }
            const std::uint64_t sub = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(f) * b[row] % q);
            b[i] = (b[i] + q - sub) % q;
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() < n) return std::nullopt;  // underdetermined
    for (std::size_t i = row; i < m; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace nclwe
