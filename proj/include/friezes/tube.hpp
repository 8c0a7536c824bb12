#pragma once

#include <cstdint>
#include <vector>

#include "friezes/bigint.hpp"
#include "friezes/frieze.hpp"
#include "friezes/quiddity.hpp"

namespace friezes {

/// Index of an indecomposable module M_{start, end} in a tube of rank
/// `rank`: its composition factors are the mouth modules start, ..., end
/// (periodically), its level is end - start + 1 >= 1. The translate tau
/// shifts both coordinates down by one.
struct TubeModuleIndex {
    std::int64_t rank = 0;
    std::int64_t start = 0;
    std::int64_t end = 0;

    std::int64_t level() const noexcept { return end - start + 1; }
};

/// The cluster character value s(M_{i,j}) = a(i, j) of the frieze of q.
/// Throws RankMismatch when m.rank != q.size() and IndexOutOfRange when the
/// level is < 1.
BigInt cc_value(const QuidditySequence& q, const TubeModuleIndex& m);

/// Value of the quotient of M_{start, start+t-1} along the disjoint
/// consecutive pairs {j, j+1} (cyclic within the window) given by their
/// start positions: the product of the surviving mouth values a_j.
/// Throws OverlappingPairs when the pairs collide and IndexOutOfRange when a
/// pair start leaves the window.
BigInt quotient_value(const QuidditySequence& q, std::int64_t start, std::int64_t t,
                      const std::vector<std::int64_t>& pair_starts);

/// Right-hand side of the quotient alternating sum at level t >= 3:
///   sum_{k >= 0} (-1)^k sum_{P} quotient_value(P)
/// over all collections P of k disjoint cyclic pairs in the window
/// (for even t the two full tilings both contribute, giving the trailing
/// (-1)^{t/2} * 2). Equals a(i, i+t-1) - a(i+1, i+t-2); at t = n this is the
/// growth coefficient. Throws LevelTooSmall when t < 3.
BigInt repth_rhs(const QuidditySequence& q, std::int64_t i, std::int64_t t);

/// Mesh relation of the Auslander-Reiten quiver of the tube:
/// s(tau M) s(M) - s(B) = 1 where B is the direct sum of the middle terms
/// of the almost split sequence ending at M. Equivalent to the diamond rule
/// a(i-1,j-1) a(i,j) - a(i-1,j) a(i,j-1) = 1.
bool verify_ar_diamond(const QuidditySequence& q, const TubeModuleIndex& m);

}  // namespace friezes
