#include <doctest.h>

#include <algorithm>

#include "nclwe/mpf.hpp"

using namespace nclwe;

TEST_CASE("rmpf_vec examples at t=4") {
    const auto p = GroupParams::for_t(4);
    // (ba)^3 (a^2)^2 = ba^7 a^4 = ba^3
    const ElementVector w{{1, 1}, {0, 2}};
    const ExponentVector x{3, 2};
    CHECK(rmpf_vec(p, w, x) == GroupElement{1, 3});

    CHECK(rmpf_vec(p, w, ExponentVector{0, 0}) == identity(p));
    CHECK(rmpf_vec(p, ElementVector{{0, 3}}, ExponentVector{5}) == power(p, {0, 3}, 5));
    CHECK_THROWS_AS(rmpf_vec(p, w, ExponentVector{1}), DimensionMismatch);
}

TEST_CASE("rmpf matrix form") {
    const auto p = GroupParams::for_t(4);
    ElementMatrix W(1, 2);
    W.at(0, 0) = {1, 1};
    W.at(0, 1) = {0, 2};
    ExponentMatrix X(2, 1);
    X.at(0, 0) = 3;
    X.at(1, 0) = 2;
    const ElementMatrix V = rmpf(p, W, X);
    REQUIRE(V.rows == 1);
    REQUIRE(V.cols == 1);
    CHECK(V.at(0, 0) == GroupElement{1, 3});

    ExponentMatrix Z(2, 3);
    const ElementMatrix VZ = rmpf(p, W, Z);
    for (const auto& v : VZ.data) CHECK(v == identity(p));

    ExponentMatrix bad(3, 1);
    CHECK_THROWS_AS(rmpf(p, W, bad), DimensionMismatch);
}

TEST_CASE("rmpf consistency with rmpf_vec per row") {
    const auto p = GroupParams::for_t(5);
    ElementMatrix W(3, 4);
    ExponentMatrix X(4, 1);
    std::uint64_t s = 1;
    for (auto& w : W.data) {
        s = s * 2862933555777941757ULL + 3037000493ULL;
        w = GroupElement{static_cast<std::uint32_t>(s >> 63), (s >> 13) & (p.rho - 1)};
    }
    for (auto& x : X.data) {
        s = s * 2862933555777941757ULL + 3037000493ULL;
        x = s & (p.rho - 1);
    }
    const ElementMatrix V = rmpf(p, W, X);
    for (std::size_t i = 0; i < W.rows; ++i)
        CHECK(V.at(i, 0) == rmpf_vec(p, W.row(i), X.data));
}

TEST_CASE("order sensitivity and single-cycle permutation invariance") {
    const auto p = GroupParams::for_t(4);
    // mixed-cycle input where swapping the factors changes the value
    const ElementVector w{{1, 1}, {0, 1}};
    const ExponentVector x{1, 1};
    const ElementVector w_swapped{{0, 1}, {1, 1}};
    const ExponentVector x_swapped{1, 1};
    CHECK(rmpf_vec(p, w, x) != rmpf_vec(p, w_swapped, x_swapped));

    // all entries from <a>: any permutation gives the same value
    const ElementVector u{{0, 3}, {0, 5}, {0, 2}};
    const ExponentVector y{2, 7, 3};
    const GroupElement expect = rmpf_vec(p, u, y);
    std::vector<std::size_t> perm{0, 1, 2};
    do {
        ElementVector up;
        ExponentVector yp;
        for (std::size_t i : perm) {
            up.push_back(u[i]);
            yp.push_back(y[i]);
        }
        CHECK(rmpf_vec(p, up, yp) == expect);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("all-commuting closed form oracle") {
    // entries all in <a>: rmpf_vec = a^(sum k_i x_i mod rho)
    const auto p = GroupParams::for_t(6);
    std::uint64_t s = 42;
    for (int rep = 0; rep < 200; ++rep) {
        ElementVector w;
        ExponentVector x;
        std::uint64_t acc = 0;
        for (int i = 0; i < 5; ++i) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            const std::uint64_t k = (s >> 20) & (p.rho - 1);
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            const std::uint64_t xi = (s >> 20) & (p.rho - 1);
            w.push_back({0, k});
            x.push_back(xi);
            acc = (acc + k * xi) & (p.rho - 1);
        }
        CHECK(rmpf_vec(p, w, x) == GroupElement{0, acc});
    }
}

TEST_CASE("hadamard") {
    const auto p = GroupParams::for_t(4);
    const ElementVector u{{1, 1}, {0, 1}};
    const ElementVector v{{0, 1}, {0, 2}};
    const ElementVector uv = hadamard(p, u, v);
    REQUIRE(uv.size() == 2);
    CHECK(uv[0] == GroupElement{1, 2});
    CHECK(uv[1] == GroupElement{0, 3});

    const ElementVector id(2, identity(p));
    CHECK(hadamard(p, id, v) == v);
    CHECK(hadamard(p, ElementVector{{1, 1}}, ElementVector{{1, 1}}) ==
          ElementVector{{GroupElement{0, 6}}});
    CHECK_THROWS_AS(hadamard(p, u, ElementVector{{0, 1}}), DimensionMismatch);
}

TEST_CASE("column_fold") {
    const auto p = GroupParams::for_t(4);
    ElementMatrix W(2, 2);
    W.at(0, 0) = {0, 3};
    W.at(1, 0) = {0, 6};
    W.at(0, 1) = {1, 1};
    W.at(1, 1) = {1, 3};
    const std::vector<std::size_t> both{0, 1};
    const ElementVector folded = column_fold(p, W, both);
    CHECK(folded[0] == GroupElement{0, 1});  // a^3 a^6 = a^9 = a
    CHECK(folded[1] == GroupElement{0, 0});  // (ba)(ba^3) = a^(1+3+4) = e

    const std::vector<std::size_t> single{1};
    CHECK(column_fold(p, W, single) == W.row(1));

    CHECK_THROWS_AS(column_fold(p, W, std::vector<std::size_t>{}), EmptySubset);
    CHECK_THROWS_AS(column_fold(p, W, std::vector<std::size_t>{0, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(column_fold(p, W, std::vector<std::size_t>{1, 0}), IndexOutOfRange);
}
