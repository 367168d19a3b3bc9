#pragma once

#include <cstdint>
#include <utility>

#include "nclwe/mpf.hpp"
#include "nclwe/sampling.hpp"

namespace nclwe {

// Parameters of the M_{2^t} one-bit encryption scheme: W is m x n, the first
// n_c columns drawn from <ba> and the rest from <a>.
struct M2tParams {
    GroupParams group;
    std::size_t m = 0;    // equations (rows of W)
    std::size_t n = 0;    // unknowns (columns of W, length of x)
    std::size_t n_c = 0;  // leading <ba> columns
    double sigma = 0.0;

    void validate() const;
};

struct M2tSecretKey {
    GroupParams group;
    ExponentVector x;
};

struct M2tPublicKey {
    M2tParams params;
    ElementMatrix W;
    ElementVector v;  // v_i = eps_i * (W^x)_i, error on the left
};

struct M2tCiphertext {
    ElementVector w;
    GroupElement c;
};

std::pair<M2tPublicKey, M2tSecretKey> keygen(RandomSource& src, const M2tParams& params);

M2tCiphertext encrypt(RandomSource& src, const M2tPublicKey& pk, int bit);

// Throws NotInCycle if the residual error element leaves <ba>.
int decrypt(const M2tSecretKey& sk, const M2tCiphertext& ct);

// 0 iff d <= rho/4 or d >= 3 rho/4 (ties to 0), else 1.
int decision(const GroupParams& p, std::uint64_t d);

}  // namespace nclwe
