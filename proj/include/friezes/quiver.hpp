#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "friezes/errors.hpp"
#include "friezes/quiddity.hpp"

namespace friezes {

/// A non-oriented cyclic quiver on n >= 2 vertices, encoded as a word over
/// {'I', 'D'}. Vertices are labeled 1..n anti-clockwise; 0-based letter k
/// describes the arrow between vertices k+1 and k+2 (wrapping to 1):
/// 'I' (increasing) points k+1 -> k+2, 'D' (decreasing) points k+2 -> k+1.
/// "Non-oriented" means the word contains at least one of each letter.
class NonOrientedCycle {
public:
    /// Throws NotACycleWord unless the word has length >= 2, uses only
    /// 'I'/'D' and contains both letters.
    explicit NonOrientedCycle(std::string word);

    std::size_t size() const noexcept { return word_.size(); }
    const std::string& word() const noexcept { return word_; }
    char letter(std::size_t k) const { return word_[k]; }

    bool operator==(const NonOrientedCycle&) const = default;

private:
    std::string word_;
};

/// Quiddity sequence of the quiver: with the word rotated so that vertex 1
/// is a source, every tail j of a decreasing arrow contributes c_j + 2 where
/// c_j is the length of the maximal increasing path starting at j. Entries
/// are ordered by tail label; the first one exceeds 2.
QuidditySequence sigma(const NonOrientedCycle& q);

/// Companion quiddity sequence: every head m of an increasing arrow
/// contributes d_m + 2 where d_m is the length of the maximal decreasing
/// path ending at m. sum(sigma) + sum(sigma_tilde) = 3n.
QuidditySequence sigma_tilde(const NonOrientedCycle& q);

/// Inverse construction: from the block form of a skeletal sequence, emit
/// head - 2 increasing arrows then run + 1 decreasing arrows per block.
/// sigma(mu(q)) is a rotation of q. Throws NotSkeletal.
NonOrientedCycle mu(const QuidditySequence& q);

/// Lexicographically least rotation among those starting at a source
/// ('D' < 'I'). Two cycles are equal as unlabeled quivers iff their
/// canonical forms coincide.
NonOrientedCycle canonicalize(const NonOrientedCycle& q);

bool same_unlabeled(const NonOrientedCycle& a, const NonOrientedCycle& b);

/// Graphviz DOT rendering (digraph, vertices 1..n).
std::string to_dot(const NonOrientedCycle& q);

}  // namespace friezes
