#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nclwe/group.hpp"

namespace nclwe {

using ElementVector = std::vector<GroupElement>;
using ExponentVector = std::vector<std::uint64_t>;

struct ElementMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GroupElement> data;  // row-major

    ElementMatrix() = default;
    ElementMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    GroupElement& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const GroupElement& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    ElementVector row(std::size_t i) const {
        return ElementVector(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                             data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }
};

struct ExponentMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    ExponentMatrix() = default;
    ExponentMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Inner-product analog: prod_i w_i^(x_i), evaluated strictly left to right
// in ascending i. The group is non-commuting, so the order is contractual.
GroupElement rmpf_vec(const GroupParams& p, std::span<const GroupElement> w,
                      std::span<const std::uint64_t> x);

// Right-sided matrix power function: v_ij = prod_k w_ik^(x_kj), ascending k.
ElementMatrix rmpf(const GroupParams& p, const ElementMatrix& W, const ExponentMatrix& X);

// Componentwise product, u on the left.
ElementVector hadamard(const GroupParams& p, std::span<const GroupElement> u,
                       std::span<const GroupElement> v);

// w_j = prod_{i in subset} W[i][j], rows taken in ascending order. Subset
// indices are 0-based, must be ascending, nonempty and in range.
ElementVector column_fold(const GroupParams& p, const ElementMatrix& W,
                          std::span<const std::size_t> subset);

}  // namespace nclwe
