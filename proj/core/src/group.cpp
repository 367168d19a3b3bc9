#include "nclwe/group.hpp"

#include <utility>

namespace nclwe {

namespace {

std::uint64_t mulmod_pow2(std::uint64_t a, std::uint64_t b, std::uint64_t mask) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b)) & mask;
}

}  // namespace

GroupParams GroupParams::for_t(unsigned t) {
    // t = 3 breaks the (ba)^half = a^half shift used by decryption, hence >= 4.
    if (t < 4 || t > 48)
        throw InvalidParams("group size parameter t must be in [4, 48], got " + std::to_string(t));
    GroupParams p;
    p.t = t;
    p.rho = std::uint64_t{1} << (t - 1);
    p.half = p.rho >> 1;
    return p;
}

GroupElement identity(const GroupParams&) { return GroupElement{0, 0}; }

GroupElement make_element(const GroupParams& p, std::int64_t alpha, std::int64_t k) {
    GroupElement w;
    w.alpha = static_cast<std::uint32_t>(((alpha % 2) + 2) % 2);
    const auto r = static_cast<std::int64_t>(p.rho);
    w.k = static_cast<std::uint64_t>(((k % r) + r) % r);
    return w;
}

GroupElement multiply(const GroupParams& p, const GroupElement& w1, const GroupElement& w2) {
    const std::uint64_t mask = p.rho - 1;
    GroupElement r;
    if ((w1.k & 1) == 0) {
        r.alpha = (w1.alpha + w2.alpha) & 1;
        r.k = (w1.k + w2.k) & mask;
    } else if (w2.alpha == 0) {
        r.alpha = w1.alpha;
        r.k = (w1.k + w2.k) & mask;
    } else {
        r.alpha = (w1.alpha + 1) & 1;
        r.k = (w1.k + w2.k + p.half) & mask;
    }
    return r;
}

GroupElement power(const GroupParams& p, const GroupElement& w, std::int64_t n) {
    const std::uint64_t mask = p.rho - 1;
    const auto r = static_cast<std::int64_t>(p.rho);
    const std::uint64_t nn = static_cast<std::uint64_t>(((n % r) + r) % r);
    GroupElement out;
    if (w.alpha == 0) {
        out.alpha = 0;
        out.k = mulmod_pow2(w.k, nn, mask);
    } else if ((w.k & 1) == 0) {
        out.alpha = static_cast<std::uint32_t>(nn & 1);
        out.k = mulmod_pow2(w.k, nn, mask);
    } else {
        out.alpha = static_cast<std::uint32_t>(nn & 1);
        out.k = (mulmod_pow2(w.k, nn, mask) + mulmod_pow2(p.half, nn >> 1, mask)) & mask;
    }
    return out;
}

GroupElement inverse(const GroupParams& p, const GroupElement& w) {
    const std::uint64_t mask = p.rho - 1;
    GroupElement out;
    if (w.alpha == 0) {
        out.alpha = 0;
        out.k = (p.rho - w.k) & mask;
    } else if ((w.k & 1) == 0) {
        out.alpha = 1;
        out.k = (p.rho - w.k) & mask;
    } else {
        out.alpha = 1;
        out.k = (p.half - w.k) & mask;
    }
    return out;
}

std::uint64_t f_shift(const GroupParams& p, std::uint64_t n) {
    return mulmod_pow2(p.half, n >> 1, p.rho - 1);
}

GroupElement cycle_generator(const GroupParams&, CycleBase base) {
    return base == CycleBase::a ? GroupElement{0, 1} : GroupElement{1, 1};
}

CycleMembership cycle_membership(const GroupParams&, const GroupElement& w) {
    CycleMembership m;
    m.in_a = (w.alpha == 0);
    // <ba> = even powers of a plus odd-k elements carrying b; closed form
    // backed by the enumeration of (ba)^n, see the table path below.
    m.in_ba = (w.alpha == 0 && (w.k & 1) == 0) || (w.alpha == 1 && (w.k & 1) == 1);
    return m;
}

std::uint64_t cycle_dlog(const GroupParams& p, const GroupElement& w, CycleBase base) {
    if (base == CycleBase::a) {
        if (w.alpha != 0)
            throw NotInCycle("element " + to_string(w) + " is not in <a>");
        return w.k;
    }
    const CycleMembership m = cycle_membership(p, w);
    if (!m.in_ba)
        throw NotInCycle("element " + to_string(w) + " is not in <ba>");
    // (ba)^n = b^(n mod 2) a^(n + f(n)) with f(n) in {0, half}, so n is one
    // of k or k - half.
    const GroupElement ba = cycle_generator(p, CycleBase::ba);
    const std::uint64_t mask = p.rho - 1;
    for (std::uint64_t cand : {w.k, (w.k + p.rho - p.half) & mask}) {
        if (power(p, ba, static_cast<std::int64_t>(cand)) == w) return cand;
    }
    throw NotInCycle("no exponent found for " + to_string(w));  // unreachable for valid params
}

CycleDlogTable::CycleDlogTable(const GroupParams& p, CycleBase base) : params_(p) {
    if (p.t > 16) throw ParamsTooLarge("dlog table supports t <= 16");
    table_.assign(std::size_t{2} * p.rho, -1);
    const GroupElement g = cycle_generator(p, base);
    for (std::uint64_t n = 0; n < p.rho; ++n) {
        const GroupElement w = power(p, g, static_cast<std::int64_t>(n));
        table_[std::size_t{w.alpha} * p.rho + w.k] = static_cast<std::int64_t>(n);
    }
}

std::uint64_t CycleDlogTable::dlog(const GroupElement& w) const {
    const std::int64_t n = table_.at(std::size_t{w.alpha} * params_.rho + w.k);
    if (n < 0) throw NotInCycle("element " + to_string(w) + " is not in the tabulated cycle");
    return static_cast<std::uint64_t>(n);
}

std::uint32_t split_power_defect(const GroupParams& p, const GroupElement& w1,
                                 const GroupElement& w2, std::int64_t n) {
    const GroupElement lhs = power(p, multiply(p, w1, w2), n);
    const GroupElement rhs = multiply(p, power(p, w1, n), power(p, w2, n));
    if (lhs == rhs) return 0;
    const GroupElement shift{0, p.half};
    if (lhs == multiply(p, shift, rhs)) return 1;
    throw Error("split-power identity violated for " + to_string(w1) + ", " + to_string(w2));
}

namespace {

// A word over the generators, as runs of a single generator with a positive
// exponent count.
struct Run {
    char gen;  // 'a' or 'b'
    std::uint64_t count;
};

// Rewrites a word to the normal form b^alpha a^k using only the presentation
// rules. Single applications of ab -> b a^(half+1); runs merged and reduced
// by a^rho -> e, b^2 -> e after each pass.
GroupElement rewrite_to_normal_form(const GroupParams& p, std::vector<Run> word) {
    auto normalize_runs = [&](std::vector<Run>& w) {
        for (;;) {
            std::vector<Run> out;
            for (const Run& r : w) {
                std::uint64_t c = r.count;
                c %= (r.gen == 'a') ? p.rho : 2;
                if (c == 0) continue;
                if (!out.empty() && out.back().gen == r.gen)
                    out.back().count += c;
                else
                    out.push_back({r.gen, c});
            }
            // merging may re-create reducible runs; repeat until stable
            const bool changed = out.size() != w.size();
            w = std::move(out);
            if (!changed) break;
        }
    };

    normalize_runs(word);
    while (true) {
        // find the leftmost a-run immediately followed by a b-run
        std::size_t i = 0;
        while (i + 1 < word.size() && !(word[i].gen == 'a' && word[i + 1].gen == 'b')) ++i;
        if (i + 1 >= word.size()) break;
        // peel one a and one b: ... a^(x-1) [ab] b^(y-1) ... -> a^(x-1) b a^(half+1) b^(y-1)
        std::vector<Run> next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        if (word[i].count > 1) next.push_back({'a', word[i].count - 1});
        next.push_back({'b', 1});
        next.push_back({'a', p.half + 1});
        if (word[i + 1].count > 1) next.push_back({'b', word[i + 1].count - 1});
        next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
        word = std::move(next);
        normalize_runs(word);
    }

    GroupElement w{0, 0};
    for (const Run& r : word) {
        if (r.gen == 'b')
            w.alpha = static_cast<std::uint32_t>(r.count & 1);
        else
            w.k = r.count & (p.rho - 1);
    }
    return w;
}

}  // namespace

CayleyTable::CayleyTable(const GroupParams& p) : params_(p) {
    if (p.t > 6) throw ParamsTooLarge("Cayley oracle supports t <= 6");
    const std::size_t order = std::size_t{2} * p.rho;
    table_.assign(order, std::vector<GroupElement>(order));
    for (std::size_t i = 0; i < order; ++i) {
        const GroupElement w1 = element_at(i);
        for (std::size_t j = 0; j < order; ++j) {
            const GroupElement w2 = element_at(j);
            std::vector<Run> word;
            if (w1.alpha) word.push_back({'b', 1});
            if (w1.k) word.push_back({'a', w1.k});
            if (w2.alpha) word.push_back({'b', 1});
            if (w2.k) word.push_back({'a', w2.k});
            table_[i][j] = rewrite_to_normal_form(p, std::move(word));
        }
    }
}

std::size_t CayleyTable::index_of(const GroupElement& w) const {
    return std::size_t{w.alpha} * params_.rho + w.k;
}

GroupElement CayleyTable::element_at(std::size_t idx) const {
    return GroupElement{static_cast<std::uint32_t>(idx / params_.rho),
                        static_cast<std::uint64_t>(idx % params_.rho)};
}

GroupElement CayleyTable::product(const GroupElement& w1, const GroupElement& w2) const {
    return table_[index_of(w1)][index_of(w2)];
}

CayleyTable build_cayley_oracle(const GroupParams& p) { return CayleyTable(p); }

std::string to_string(const GroupElement& w) {
    return "(" + std::to_string(w.alpha) + "," + std::to_string(w.k) + ")";
}

}  // namespace nclwe
