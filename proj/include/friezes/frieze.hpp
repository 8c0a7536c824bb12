#pragma once

#include <cstdint>
#include <vector>

#include "friezes/bigint.hpp"
#include "friezes/quiddity.hpp"

namespace friezes {

/// Memoized view of the frieze determined by a quiddity sequence.
///
/// Entries a(i,j) are defined for all integers with j >= i - 2:
///   a(i, i-2) = 0,  a(i, i-1) = 1,  a(i, i) = a_i,
///   a(i, j)   = a_j * a(i, j-1) - a(i, j-2)
/// and satisfy the periodicity a(i+n, j+n) = a(i, j) and the diamond rule
/// a(i, j-1) * a(i+1, j) - a(i, j) * a(i+1, j-1) = 1.
///
/// The cache is not synchronized; FriezeGrid is cheap to copy, use one
/// instance per worker when computing concurrently.
class FriezeGrid {
public:
    explicit FriezeGrid(QuidditySequence q);

    const QuidditySequence& quiddity() const noexcept { return q_; }

    /// a(i, j). Throws IndexOutOfRange when j < i - 2.
    BigInt entry(std::int64_t i, std::int64_t j);

    /// Rows 1..depth; row r lists a(i, i+r-1) for i = 1..n.
    std::vector<std::vector<BigInt>> rows(std::size_t depth);

private:
    QuidditySequence q_;
    // diagonals_[i-1][d] = a(i, i + d - 2); each diagonal grows on demand
    std::vector<std::vector<BigInt>> diagonals_;
};

/// Convenience one-shot a(i, j) via the recurrence above.
BigInt entry(const QuidditySequence& q, std::int64_t i, std::int64_t j);

/// Independent computation path: a(i, j) as the determinant of the
/// tridiagonal matrix with diagonal (a_i, ..., a_j) and 1s off the diagonal,
/// evaluated by fraction-free (Bareiss) elimination with row pivoting.
/// Requires j >= i.
BigInt entry_determinant(const QuidditySequence& q, std::int64_t i, std::int64_t j);

/// Second independent path: a(i, j) as the signed sum over pair-excluding
/// subsets I of the window {i, ..., j},
///   a(i, j) = sum_I (-1)^{l(I)} prod_{k in I} a_k,
/// where I is obtained by deleting disjoint pairs of consecutive positions
/// and l(I) = (j - i + 1 - |I|) / 2 is the number of deleted pairs.
/// Subsets are enumerated explicitly. Requires j >= i.
BigInt entry_pair_excluding(const QuidditySequence& q, std::int64_t i, std::int64_t j);

/// The family of pair-excluding subsets of {1, ..., n}.
struct SubsetFamily {
    int n = 0;
    bool cyclic = false;
    /// Each distinct subset exactly once, as sorted 1-based index lists.
    std::vector<std::vector<int>> subsets;
};

/// Pair-excluding subsets of the path 1..n (consecutive pairs do not wrap).
/// Count is the Fibonacci number F(n+1). n must lie in [0, 24].
SubsetFamily pair_excluding_subsets(int n);

/// Cyclic pair-excluding subsets (the pair (n,1) may also be deleted).
/// Each distinct subset appears exactly once; for even n the empty set is
/// reachable by two different pair tilings but is listed once.
/// n must lie in [1, 24].
SubsetFamily cyclic_pair_excluding_subsets(int n);

/// Rows 1..depth of the frieze, row r = (a(i, i+r-1))_{i=1..n}.
std::vector<std::vector<BigInt>> rows(const QuidditySequence& q, std::size_t depth);

/// Plain-text rendering of the 0-row, the 1-row and rows 1..depth in the
/// usual interleaved layout.
std::string rows_text(const QuidditySequence& q, std::size_t depth);

}  // namespace friezes
