#include "friezes/growth.hpp"

#include <functional>
#include <stdexcept>

#include "friezes/frieze.hpp"

namespace friezes {

std::int64_t minimal_period(const QuidditySequence& q) {
    const auto n = static_cast<std::int64_t>(q.size());
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::int64_t k = 0; k < n && periodic; ++k) {
            periodic = q[static_cast<std::size_t>(k)] ==
                       q[static_cast<std::size_t>((k + d) % n)];
        }
        if (periodic) return d;
    }
    return n;
}

int growth_delta(std::int64_t n) {
    if (n % 2 != 0) return 0;
    return n % 4 == 0 ? 1 : -1;
}

BigInt growth_coefficient_rows(const QuidditySequence& q) {
    FriezeGrid grid(q);
    const auto n = static_cast<std::int64_t>(q.size());
    return grid.entry(1, n) - grid.entry(2, n - 1);
}

namespace {

// Signed products over matchings of the path lo..hi; `skip_full` drops the
// tiling that removes every position (only possible for even length).
void signed_matching_sum(const QuidditySequence& q, std::int64_t lo, std::int64_t hi,
                         bool skip_full, int extra_pairs, BigInt& total) {
    const std::int64_t len = hi - lo + 1;
    std::function<void(std::int64_t, const BigInt&, int)> rec =
        [&](std::int64_t pos, const BigInt& prod, int pairs) {
            if (pos > hi) {
                if (skip_full && 2 * pairs == len) return;
                if ((pairs + extra_pairs) % 2) {
                    total -= prod;
                } else {
                    total += prod;
                }
                return;
            }
            rec(pos + 1, prod * q.cyclic(pos), pairs);
            if (pos + 1 <= hi) rec(pos + 2, prod, pairs + 1);
        };
    rec(lo, 1, 0);
}

}  // namespace

BigInt growth_coefficient_formula(const QuidditySequence& q) {
    const auto n = static_cast<std::int64_t>(q.size());
    BigInt total = 0;
    // Distinct cyclic pair-excluding subsets: matchings of the path 1..n,
    // plus matchings using the wrap pair {n,1} over the path 2..n-1. The
    // full wrap tiling duplicates the empty set and is skipped.
    signed_matching_sum(q, 1, n, false, 0, total);
    if (n >= 2) {
        signed_matching_sum(q, 2, n - 1, true, 1, total);
    }
    return total + growth_delta(n);
}

std::vector<BigInt> growth_sequence(const QuidditySequence& q, std::int64_t r,
                                    bool treat_length_as_period) {
    if (r < 0) {
        throw std::out_of_range("growth_sequence: r must be >= 0");
    }
    std::int64_t d = treat_length_as_period ? static_cast<std::int64_t>(q.size())
                                            : minimal_period(q);
    std::vector<std::int64_t> prefix(q.entries().begin(), q.entries().begin() + d);
    const BigInt s1 = growth_coefficient_rows(QuidditySequence(std::move(prefix)));
    std::vector<BigInt> s;
    s.reserve(static_cast<std::size_t>(r) + 1);
    s.push_back(2);
    if (r >= 1) s.push_back(s1);
    for (std::int64_t k = 2; k <= r; ++k) {
        s.push_back(s1 * s[static_cast<std::size_t>(k - 1)] - s[static_cast<std::size_t>(k - 2)]);
    }
    return s;
}

BigInt growth_closed_form(const BigInt& s1, std::int64_t r) {
    if (r < 0) {
        throw std::out_of_range("growth_closed_form: r must be >= 0");
    }
    if (r == 0) return 2;
    // binom[k] = C(row, k), grown one Pascal row at a time up to row = r
    std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(r) + 1);
    for (std::size_t row = 0; row <= static_cast<std::size_t>(r); ++row) {
        binom[row].assign(row + 1, 1);
        for (std::size_t k = 1; k < row; ++k) {
            binom[row][k] = binom[row - 1][k - 1] + binom[row - 1][k];
        }
    }
    std::vector<BigInt> powers(static_cast<std::size_t>(r) + 1);
    powers[0] = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(r); ++k) {
        powers[k] = powers[k - 1] * s1;
    }
    BigInt total = powers[static_cast<std::size_t>(r)];
    for (std::int64_t l = 1; 2 * l <= r; ++l) {
        // r / (r - l) * C(r - l, l) = C(r - l, l) + C(r - l - 1, l - 1), an integer
        const BigInt coeff = binom[static_cast<std::size_t>(r - l)][static_cast<std::size_t>(l)] +
                             binom[static_cast<std::size_t>(r - l - 1)][static_cast<std::size_t>(l - 1)];
        const BigInt term = coeff * powers[static_cast<std::size_t>(r - 2 * l)];
        if (l % 2) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

GrowthReport growth_report(const QuidditySequence& q, std::int64_t r, GrowthMethod method) {
    GrowthReport report;
    report.minimal_period = minimal_period(q);
    report.delta_n = growth_delta(static_cast<std::int64_t>(q.size()));
    switch (method) {
        case GrowthMethod::Rows:
            report.s_q = growth_coefficient_rows(q);
            report.method = "rows";
            break;
        case GrowthMethod::Formula:
            report.s_q = growth_coefficient_formula(q);
            report.method = "formula";
            break;
        case GrowthMethod::Both: {
            const BigInt a = growth_coefficient_rows(q);
            const BigInt b = growth_coefficient_formula(q);
            if (a != b) {
                throw std::logic_error("growth coefficient mismatch: rows " + a.str() +
                                       " vs formula " + b.str() + " for (" + q.str() + ")");
            }
            report.s_q = a;
            report.method = "both";
            break;
        }
    }
    report.s_sequence = growth_sequence(q, r);
    return report;
}

}  // namespace friezes
