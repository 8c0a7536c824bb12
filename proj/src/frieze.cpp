#include "friezes/frieze.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace friezes {

FriezeGrid::FriezeGrid(QuidditySequence q) : q_(std::move(q)), diagonals_(q_.size()) {}

BigInt FriezeGrid::entry(std::int64_t i, std::int64_t j) {
    if (j < i - 2) {
        throw IndexOutOfRange("entry(" + std::to_string(i) + ", " + std::to_string(j) +
                              ") lies above the 0-row");
    }
    const auto n = static_cast<std::int64_t>(q_.size());
    std::int64_t i0 = (i - 1) % n;
    if (i0 < 0) i0 += n;  // 0-based diagonal index; entry is (i0+1, i0+1+d-2)
    auto& diag = diagonals_[static_cast<std::size_t>(i0)];
    const auto d = static_cast<std::size_t>(j - i + 2);
    if (diag.empty()) {
        diag.push_back(0);
        diag.push_back(1);
    }
    while (diag.size() <= d) {
        const auto k = static_cast<std::int64_t>(diag.size());
        diag.push_back(q_.cyclic(i0 + k - 1) * diag[static_cast<std::size_t>(k - 1)] -
                       diag[static_cast<std::size_t>(k - 2)]);
    }
    return diag[d];
}

std::vector<std::vector<BigInt>> FriezeGrid::rows(std::size_t depth) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(depth);
    for (std::size_t r = 1; r <= depth; ++r) {
        std::vector<BigInt> row;
        row.reserve(q_.size());
        for (std::size_t i = 1; i <= q_.size(); ++i) {
            row.push_back(entry(static_cast<std::int64_t>(i),
                                static_cast<std::int64_t>(i + r - 1)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

BigInt entry(const QuidditySequence& q, std::int64_t i, std::int64_t j) {
    return FriezeGrid(q).entry(i, j);
}

BigInt entry_determinant(const QuidditySequence& q, std::int64_t i, std::int64_t j) {
    if (j < i) {
        throw IndexOutOfRange("entry_determinant requires j >= i");
    }
    const auto L = static_cast<std::size_t>(j - i + 1);
    std::vector<std::vector<BigInt>> m(L, std::vector<BigInt>(L, 0));
    for (std::size_t k = 0; k < L; ++k) {
        m[k][k] = q.cyclic(i + static_cast<std::int64_t>(k));
        if (k + 1 < L) {
            m[k][k + 1] = 1;
            m[k + 1][k] = 1;
        }
    }
    // Bareiss fraction-free elimination with row pivoting; every division is
    // exact by the previous pivot.
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < L; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < L && m[r][k] == 0) ++r;
            if (r == L) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t a = k + 1; a < L; ++a) {
            for (std::size_t b = k + 1; b < L; ++b) {
                m[a][b] = (m[a][b] * m[k][k] - m[a][k] * m[k][b]) / prev;
            }
            m[a][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[L - 1][L - 1];
}

namespace {

// Enumerate every matching of the path lo..hi (sets of disjoint pairs of
// consecutive positions) and hand the kept-entry product and the pair count
// to `emit`. The running product makes each edge of the recursion tree one
// multiplication.
void for_each_path_matching(const QuidditySequence& q, std::int64_t lo, std::int64_t hi,
                            const BigInt& prod, int pairs,
                            const std::function<void(const BigInt&, int)>& emit) {
    if (lo > hi) {
        emit(prod, pairs);
        return;
    }
    for_each_path_matching(q, lo + 1, hi, prod * q.cyclic(lo), pairs, emit);
    if (lo + 1 <= hi) {
        for_each_path_matching(q, lo + 2, hi, prod, pairs + 1, emit);
    }
}

// Subset enumeration (index lists) for the materialized families.
void collect_path_subsets(int lo, int hi, std::vector<int>& kept,
                          std::vector<std::vector<int>>& out) {
    if (lo > hi) {
        out.push_back(kept);
        return;
    }
    kept.push_back(lo);
    collect_path_subsets(lo + 1, hi, kept, out);
    kept.pop_back();
    if (lo + 1 <= hi) {
        collect_path_subsets(lo + 2, hi, kept, out);
    }
}

}  // namespace

BigInt entry_pair_excluding(const QuidditySequence& q, std::int64_t i, std::int64_t j) {
    if (j < i) {
        throw IndexOutOfRange("entry_pair_excluding requires j >= i");
    }
    BigInt total = 0;
    for_each_path_matching(q, i, j, 1, 0, [&](const BigInt& prod, int pairs) {
        if (pairs % 2) {
            total -= prod;
        } else {
            total += prod;
        }
    });
    return total;
}

SubsetFamily pair_excluding_subsets(int n) {
    if (n < 0 || n > 24) {
        throw std::out_of_range("pair_excluding_subsets: n must lie in [0, 24]");
    }
    SubsetFamily f;
    f.n = n;
    f.cyclic = false;
    std::vector<int> kept;
    collect_path_subsets(1, n, kept, f.subsets);
    return f;
}

SubsetFamily cyclic_pair_excluding_subsets(int n) {
    if (n < 1 || n > 24) {
        throw std::out_of_range("cyclic_pair_excluding_subsets: n must lie in [1, 24]");
    }
    SubsetFamily f;
    f.n = n;
    f.cyclic = true;
    std::vector<int> kept;
    collect_path_subsets(1, n, kept, f.subsets);
    if (n >= 2) {
        // Matchings using the wrap pair {n, 1}: tile the remaining path
        // 2..n-1. Skip the tiling that removes it completely: that yields the
        // empty set, which for even n the path enumeration already produced.
        std::vector<std::vector<int>> wrapped;
        collect_path_subsets(2, n - 1, kept, wrapped);
        for (auto& s : wrapped) {
            if (s.empty()) continue;
            f.subsets.push_back(std::move(s));
        }
    }
    return f;
}

std::vector<std::vector<BigInt>> rows(const QuidditySequence& q, std::size_t depth) {
    return FriezeGrid(q).rows(depth);
}

std::string rows_text(const QuidditySequence& q, std::size_t depth) {
    FriezeGrid grid(q);
    const std::size_t n = q.size();
    // rows 0 and 1 are the bounding 0- and 1-rows
    std::vector<std::vector<std::string>> table;
    table.push_back(std::vector<std::string>(n, "0"));
    table.push_back(std::vector<std::string>(n, "1"));
    for (std::size_t r = 1; r <= depth; ++r) {
        std::vector<std::string> row;
        row.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) {
            row.push_back(grid.entry(static_cast<std::int64_t>(i),
                                     static_cast<std::int64_t>(i + r - 1)).str());
        }
        table.push_back(std::move(row));
    }
    std::size_t width = 1;
    for (const auto& row : table) {
        for (const auto& s : row) width = std::max(width, s.size());
    }
    width += 1;
    std::ostringstream out;
    for (std::size_t r = 0; r < table.size(); ++r) {
        if (r % 2) out << std::string((width + 1) / 2, ' ');
        for (const auto& s : table[r]) {
            out << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace friezes
