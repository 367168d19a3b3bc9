#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nclwe/sampling.hpp"

namespace nclwe {

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);  // p prime

// ---- Scheme 1: additive Regev PKE over Z_q ----

struct RegevParams {
    std::size_t n = 0;
    std::uint64_t q = 0;  // prime in [n^2, 2n^2]
    std::size_t m = 0;    // ceil((1 + eps)(n + 1) log2 q), eps = 0.1
    double sigma = 0.0;

    // Picks the smallest admissible prime q and derives m.
    static RegevParams create(std::size_t n, double sigma);
};

struct RegevSecretKey {
    RegevParams params;
    std::vector<std::uint64_t> x;
};

struct RegevPublicKey {
    RegevParams params;
    std::vector<std::vector<std::uint64_t>> A;  // m rows of length n
    std::vector<std::uint64_t> b;               // b = A x + eps
};

struct RegevCiphertext {
    std::vector<std::uint64_t> a;
    std::uint64_t c = 0;
};

std::pair<RegevPublicKey, RegevSecretKey> regev_keygen(RandomSource& src,
                                                       const RegevParams& params);
RegevCiphertext regev_encrypt(RandomSource& src, const RegevPublicKey& pk, int bit);
int regev_decrypt(const RegevSecretKey& sk, const RegevCiphertext& ct);
// Shared decision core: d = c - a.x mod q, 0 iff d is at least as close to 0
// as to floor(q/2).
int regev_decrypt_raw(std::uint64_t q, const std::vector<std::uint64_t>& x,
                      const RegevCiphertext& ct);

// ---- Scheme 2: multiplicative PKE in the Sylow subgroup G_q of Z*_p ----

struct SylowParams {
    std::uint64_t p = 0;  // prime field modulus
    std::uint64_t q = 0;  // prime subgroup order, q | p-1, n^2 <= q <= 2n^2
    std::uint64_t g = 0;  // generator of the order-q subgroup
};

SylowParams sylow_param_gen(RandomSource& src, std::size_t n);

struct SylowInstanceParams {
    SylowParams sylow;
    std::size_t n = 0;
    std::size_t m = 0;
    double sigma = 0.0;
};

struct SylowSecretKey {
    SylowInstanceParams params;
    std::vector<std::uint64_t> x;  // exponents in Z_q
};

struct SylowPublicKey {
    SylowInstanceParams params;
    std::vector<std::vector<std::uint64_t>> A;  // m x n over G_q
    std::vector<std::uint64_t> b;               // b_i = prod_j a_ij^x_j * g^r_i
};

struct SylowCiphertext {
    std::vector<std::uint64_t> a;
    std::uint64_t c = 0;
};

std::pair<SylowPublicKey, SylowSecretKey> sylow_keygen(RandomSource& src,
                                                       const SylowInstanceParams& params);
SylowCiphertext sylow_encrypt(RandomSource& src, const SylowPublicKey& pk, int bit);
int sylow_decrypt(const SylowSecretKey& sk, const SylowCiphertext& ct);

// Baby-step giant-step in the order-q subgroup; throws NotInSubgroup when h
// is outside <g>.
std::uint64_t dlog_bsgs(std::uint64_t g, std::uint64_t h, std::uint64_t q, std::uint64_t p);

// Entrywise dlog base g: maps a Sylow instance to the additive LWE instance
// A' x + r = b' over Z_q.
struct AdditiveInstance {
    std::uint64_t q = 0;
    std::vector<std::vector<std::uint64_t>> A;
    std::vector<std::uint64_t> b;
};

AdditiveInstance sylow_to_additive(const SylowPublicKey& pk);
RegevCiphertext sylow_ct_to_additive(const SylowInstanceParams& params, const SylowCiphertext& ct);

// Gaussian elimination over Z_q (q prime); returns a solution of A x = b if
// the system is consistent and determines x uniquely.
std::optional<std::vector<std::uint64_t>> solve_linear_mod(
    std::vector<std::vector<std::uint64_t>> A, std::vector<std::uint64_t> b, std::uint64_t q);

}  // namespace nclwe
