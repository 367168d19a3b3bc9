#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nclwe/errors.hpp"

namespace nclwe {

// Parameters of the modular-maximal cyclic group of order 2^t, presented as
//   < a, b | a^(2^(t-1)) = e, b^2 = e, ab = b a^(2^(t-2)+1) >.
// rho = 2^(t-1) is the maximal element order; half = 2^(t-2) is the exponent
// of the central shift a^half.
struct GroupParams {
    unsigned t = 0;
    std::uint64_t rho = 0;
    std::uint64_t half = 0;

    static GroupParams for_t(unsigned t);
};

// Normal form b^alpha a^k, alpha in {0,1}, 0 <= k < rho.
struct GroupElement {
    std::uint32_t alpha = 0;
    std::uint64_t k = 0;

    bool operator==(const GroupElement&) const = default;
};

enum class CycleBase { a, ba };

struct CycleMembership {
    bool in_a = false;
    bool in_ba = false;
};

GroupElement identity(const GroupParams& p);

// Builds an element from arbitrary integers, reducing alpha mod 2 and k mod
// rho (negative k accepted).
GroupElement make_element(const GroupParams& p, std::int64_t alpha, std::int64_t k);

GroupElement multiply(const GroupParams& p, const GroupElement& w1, const GroupElement& w2);

// w^n with n taken mod rho.
GroupElement power(const GroupParams& p, const GroupElement& w, std::int64_t n);

GroupElement inverse(const GroupParams& p, const GroupElement& w);

// f(n) = 2^(t-2) * floor(n/2) mod 2^(t-1); period-4 pattern 0,0,half,half.
std::uint64_t f_shift(const GroupParams& p, std::uint64_t n);

GroupElement cycle_generator(const GroupParams& p, CycleBase base);

CycleMembership cycle_membership(const GroupParams& p, const GroupElement& w);

// The unique n with base^n = w. Throws NotInCycle if w is outside <base>.
std::uint64_t cycle_dlog(const GroupParams& p, const GroupElement& w, CycleBase base);

// Table-backed dlog over a full cycle enumeration; t <= 16. Kept as an
// independent path that must agree with the closed form of cycle_dlog.
class CycleDlogTable {
public:
    CycleDlogTable(const GroupParams& p, CycleBase base);

    std::uint64_t dlog(const GroupElement& w) const;

private:
    GroupParams params_;
    std::vector<std::int64_t> table_;  // indexed alpha*rho + k, -1 = not in cycle
};

// The alpha in {0,1} with (w1 w2)^n = a^(alpha * 2^(t-2)) * w1^n * w2^n.
std::uint32_t split_power_defect(const GroupParams& p, const GroupElement& w1,
                                 const GroupElement& w2, std::int64_t n);

// Full multiplication table over all 2^t elements, derived purely from the
// presentation by word rewriting (rules a^rho -> e, b^2 -> e,
// ab -> b a^(half+1)), never via the closed-form product formula. Test
// oracle; t <= 6.
class CayleyTable {
public:
    explicit CayleyTable(const GroupParams& p);

    std::size_t order() const { return table_.size(); }
    std::size_t index_of(const GroupElement& w) const;
    GroupElement element_at(std::size_t idx) const;
    GroupElement product(const GroupElement& w1, const GroupElement& w2) const;

private:
    GroupParams params_;
    std::vector<std::vector<GroupElement>> table_;
};

CayleyTable build_cayley_oracle(const GroupParams& p);

std::string to_string(const GroupElement& w);

}  // namespace nclwe
