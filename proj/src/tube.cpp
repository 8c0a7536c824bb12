#include "friezes/tube.hpp"

#include <functional>

namespace friezes {

namespace {

void check_rank(const QuidditySequence& q, const TubeModuleIndex& m) {
    if (m.rank != static_cast<std::int64_t>(q.size())) {
        throw RankMismatch("module lives in a tube of rank " + std::to_string(m.rank) +
                           " but the quiddity sequence has length " + std::to_string(q.size()));
    }
}

}  // namespace

BigInt cc_value(const QuidditySequence& q, const TubeModuleIndex& m) {
    check_rank(q, m);
    if (m.level() < 1) {
        throw IndexOutOfRange("module level must be >= 1");
    }
    return entry(q, m.start, m.end);
}

BigInt quotient_value(const QuidditySequence& q, std::int64_t start, std::int64_t t,
                      const std::vector<std::int64_t>& pair_starts) {
    if (t < 1) {
        throw LevelTooSmall("window level must be >= 1");
    }
    // Window positions start..start+t-1; pair j removes {j, j+1} with j+1
    // taken cyclically inside the window.
    std::vector<bool> removed(static_cast<std::size_t>(t), false);
    for (std::int64_t j : pair_starts) {
        if (j < start || j >= start + t) {
            throw IndexOutOfRange("pair start " + std::to_string(j) + " outside the window");
        }
        const auto k = static_cast<std::size_t>(j - start);
        const auto k2 = static_cast<std::size_t>((j - start + 1) % t);
        if (k == k2 || removed[k] || removed[k2]) {
            throw OverlappingPairs("pairs at the mouth must be disjoint");
        }
        removed[k] = true;
        removed[k2] = true;
    }
    BigInt prod = 1;
    for (std::int64_t k = 0; k < t; ++k) {
        if (!removed[static_cast<std::size_t>(k)]) prod *= q.cyclic(start + k);
    }
    return prod;
}

BigInt repth_rhs(const QuidditySequence& q, std::int64_t i, std::int64_t t) {
    if (t < 3) {
        throw LevelTooSmall("the quotient alternating sum needs level t >= 3");
    }
    BigInt total = 0;
    // Collections of disjoint cyclic pairs inside the window i..i+t-1,
    // enumerated as such (not deduplicated to subsets): matchings avoiding
    // the wrap pair tile the path i..i+t-1, those using it tile i+1..i+t-2.
    auto path = [&](std::int64_t lo, std::int64_t hi, int base_pairs) {
        std::function<void(std::int64_t, const BigInt&, int)> rec =
            [&](std::int64_t pos, const BigInt& prod, int pairs) {
                if (pos > hi) {
                    if (pairs % 2) {
                        total -= prod;
                    } else {
                        total += prod;
                    }
                    return;
                }
                rec(pos + 1, prod * q.cyclic(pos), pairs);
                if (pos + 1 <= hi) rec(pos + 2, prod, pairs + 1);
            };
        rec(lo, 1, base_pairs);
    };
    path(i, i + t - 1, 0);
    path(i + 1, i + t - 2, 1);
    return total;
}

bool verify_ar_diamond(const QuidditySequence& q, const TubeModuleIndex& m) {
    check_rank(q, m);
    if (m.level() < 1) {
        throw IndexOutOfRange("module level must be >= 1");
    }
    FriezeGrid grid(q);
    const BigInt lhs = grid.entry(m.start - 1, m.end - 1) * grid.entry(m.start, m.end) -
                       grid.entry(m.start - 1, m.end) * grid.entry(m.start, m.end - 1);
    return lhs == 1;
}

}  // namespace friezes
