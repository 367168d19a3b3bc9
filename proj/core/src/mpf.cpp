#include "nclwe/mpf.hpp"

namespace nclwe {

GroupElement rmpf_vec(const GroupParams& p, std::span<const GroupElement> w,
                      std::span<const std::uint64_t> x) {
    if (w.size() != x.size())
        throw DimensionMismatch("rmpf_vec: vector lengths " + std::to_string(w.size()) + " vs " +
                                std::to_string(x.size()));
    GroupElement acc = identity(p);
    for (std::size_t i = 0; i < w.size(); ++i)
        acc = multiply(p, acc, power(p, w[i], static_cast<std::int64_t>(x[i])));
    return acc;
}

ElementMatrix rmpf(const GroupParams& p, const ElementMatrix& W, const ExponentMatrix& X) {
    if (W.cols != X.rows)
        throw DimensionMismatch("rmpf: inner dimensions " + std::to_string(W.cols) + " vs " +
                                std::to_string(X.rows));
    ElementMatrix V(W.rows, X.cols);
    for (std::size_t i = 0; i < W.rows; ++i) {
        for (std::size_t j = 0; j < X.cols; ++j) {
            GroupElement acc = identity(p);
            for (std::size_t k = 0; k < W.cols; ++k)
                acc = multiply(p, acc, power(p, W.at(i, k), static_cast<std::int64_t>(X.at(k, j))));
            V.at(i, j) = acc;
        }
    }
    return V;
}

ElementVector hadamard(const GroupParams& p, std::span<const GroupElement> u,
                       std::span<const GroupElement> v) {
    if (u.size() != v.size())
        throw DimensionMismatch("hadamard: vector lengths " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
    ElementVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = multiply(p, u[i], v[i]);
    return out;
}

ElementVector column_fold(const GroupParams& p, const ElementMatrix& W,
                          std::span<const std::size_t> subset) {
    if (subset.empty()) throw EmptySubset("column_fold: empty row subset");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= W.rows)
            throw IndexOutOfRange("column_fold: row index " + std::to_string(subset[i]));
        if (i > 0 && subset[i] <= subset[i - 1])
            throw IndexOutOfRange("column_fold: subset must be strictly ascending");
    }
    ElementVector out(W.cols, identity(p));
    for (std::size_t j = 0; j < W.cols; ++j)
        for (std::size_t idx : subset) out[j] = multiply(p, out[j], W.at(idx, j));
    return out;
}

}  // namespace nclwe
