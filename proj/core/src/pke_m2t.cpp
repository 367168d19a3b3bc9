#include "nclwe/pke_m2t.hpp"

#include <cmath>

namespace nclwe {

void M2tParams::validate() const {
    if (group.rho == 0) throw InvalidParams("m2t: group params not initialized");
    if (m < 2) throw InvalidParams("m2t: need m >= 2 equations");
    if (n < 2) throw InvalidParams("m2t: need n >= 2 unknowns");
    if (n_c < 1 || n_c > n - 1)
        throw InvalidParams("m2t: n_c must be in [1, n-1], got " + std::to_string(n_c));
    if (!(sigma > 0)) throw InvalidParams("m2t: sigma must be positive");
    const double bound = std::pow(2.0, static_cast<double>(group.t - 1) / 4.0);
    if (sigma > bound)
        throw InvalidParams("m2t: sigma exceeds 2^((t-1)/4) = " + std::to_string(bound));
}

std::pair<M2tPublicKey, M2tSecretKey> keygen(RandomSource& src, const M2tParams& params) {
    params.validate();
    const GroupParams& g = params.group;

    M2tSecretKey sk;
    sk.group = g;
    sk.x.resize(params.n);
    for (auto& xi : sk.x) xi = uniform_mod(src, g.rho);

    M2tPublicKey pk;
    pk.params = params;
    pk.W = ElementMatrix(params.m, params.n);
    for (std::size_t i = 0; i < params.m; ++i)
        for (std::size_t j = 0; j < params.n; ++j)
            pk.W.at(i, j) = uniform_cycle_element(
                src, g, j < params.n_c ? CycleBase::ba : CycleBase::a);

    const GaussianSampler noise(GaussianSpec{params.sigma, g.rho});
    const GroupElement ba = cycle_generator(g, CycleBase::ba);
    pk.v.resize(params.m);
    for (std::size_t i = 0; i < params.m; ++i) {
        const GroupElement u_i = rmpf_vec(g, pk.W.row(i), sk.x);
        const GroupElement eps_i =
            power(g, ba, static_cast<std::int64_t>(noise.sample(src)));
        pk.v[i] = multiply(g, eps_i, u_i);
    }
    return {std::move(pk), std::move(sk)};
}

M2tCiphertext encrypt(RandomSource& src, const M2tPublicKey& pk, int bit) {
    if (bit != 0 && bit != 1) throw InvalidParams("encrypt: bit must be 0 or 1");
    const GroupParams& g = pk.params.group;
    const GroupElement ba = cycle_generator(g, CycleBase::ba);
    const GroupElement e = identity(g);

    const std::vector<std::size_t> subset = random_subset(src, pk.params.m);

    // The first chosen equation must carry generator b, all later ones must
    // not; delta in {e, ba} fixes the alpha bit accordingly.
    GroupElement v_prime = e;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const GroupElement& v_i = pk.v[subset[i]];
        const bool want_b = (i == 0);
        const GroupElement delta = ((v_i.alpha == 1) == want_b) ? e : ba;
        v_prime = multiply(g, v_prime, multiply(g, delta, v_i));
    }

    M2tCiphertext ct;
    ct.w = column_fold(g, pk.W, subset);
    ct.c = bit == 0 ? v_prime : multiply(g, GroupElement{0, g.half}, v_prime);
    return ct;
}

int decrypt(const M2tSecretKey& sk, const M2tCiphertext& ct) {
    const GroupParams& g = sk.group;
    if (ct.w.size() != sk.x.size())
        throw DimensionMismatch("decrypt: ciphertext length " + std::to_string(ct.w.size()) +
                                " vs key length " + std::to_string(sk.x.size()));
    const GroupElement h = multiply(g, ct.c, inverse(g, rmpf_vec(g, ct.w, sk.x)));
    return decision(g, cycle_dlog(g, h, CycleBase::ba));
}

int decision(const GroupParams& p, std::uint64_t d) {
    return (4 * d <= p.rho || 4 * d >= 3 * p.rho) ? 0 : 1;
}

}  // namespace nclwe
