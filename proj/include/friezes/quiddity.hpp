#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "friezes/errors.hpp"

namespace friezes {

/// A periodic quiddity sequence (a_1, ..., a_n), n >= 1, entries >= 1.
///
/// The sequence is one period of the quiddity row of a periodic frieze and is
/// considered up to cyclic rotation; two sequences are "the same" when
/// cyclically_equal. Indexing below is 0-based; cyclic(i) gives 1-based
/// access extended periodically to all integers (a_{i+n} = a_i).
class QuidditySequence {
public:
    explicit QuidditySequence(std::vector<std::int64_t> entries);
    QuidditySequence(std::initializer_list<std::int64_t> entries);

    /// Parse a comma separated list such as "4,1,2,5".
    static QuidditySequence parse(const std::string& text);

    std::size_t size() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t k) const { return entries_[k]; }

    /// 1-based periodic access: cyclic(i) = a_{((i-1) mod n) + 1}.
    std::int64_t cyclic(std::int64_t i) const noexcept;

    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    std::string str() const;  // "4,1,2,5"

    bool operator==(const QuidditySequence&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

enum class SequenceClass { InfiniteType, FiniteType, Invalid };

std::string to_string(SequenceClass c);

/// Lexicographically least rotation (Booth's algorithm).
QuidditySequence canonical_rotation(const QuidditySequence& q);

/// Equality up to rotation. Reflections are NOT identified.
bool cyclically_equal(const QuidditySequence& a, const QuidditySequence& b);

/// All entries equal to 2 (the quiddity row of the trivial frieze).
bool is_trivial(const QuidditySequence& q);

/// No entry equals 1 and the sequence is not trivial.
bool is_skeletal(const QuidditySequence& q);

/// Remove the 1 at `index` (0-based).
///
/// For length >= 3 both cyclic neighbours must be >= 2; they are decremented
/// and the 1 is deleted, preserving the positions of the other entries.
/// For length 2 the sequence (1,k) with k >= 3 becomes (k-2).
/// Throws NotAOne if q[index] != 1 and IllegalReduction if no rule applies.
QuidditySequence reduce_once(const QuidditySequence& q, std::size_t index);

/// Insert a 1 immediately before position `gap` (0-based, cyclic) and
/// increment both future neighbours. reduce_once at the inserted 1 undoes
/// this exactly. For n = 1 both increments hit the single entry.
QuidditySequence reverse_reduce(const QuidditySequence& q, std::size_t gap);

/// InfiniteType, FiniteType or Invalid.
///
/// Primary test: exhaustive reduction (always at the leftmost 1 admitting a
/// legal move). Reaching a 1-free sequence proves InfiniteType. Otherwise a
/// row oracle generates frieze rows to depth 3n: a row of 1s followed by a
/// row of 0s with n >= 3 is the closed-polygon pattern (FiniteType);
/// everything else is Invalid.
SequenceClass classify(const QuidditySequence& q);

/// Reduce an InfiniteType sequence until no 1 remains, always at the
/// leftmost legal 1. The result is skeletal or trivial.
/// Throws NotInfiniteType otherwise.
QuidditySequence reduce_to_skeletal(const QuidditySequence& q);

/// One maximal block of a skeletal sequence: an entry `head` > 2 followed by
/// `run` consecutive 2s.
struct Block {
    std::int64_t head = 0;
    std::int64_t run = 0;
    bool operator==(const Block&) const = default;
};

/// Block decomposition of a skeletal, non-trivial sequence, starting from
/// the first entry > 2 of the given rotation. Throws NotSkeletal.
std::vector<Block> block_form(const QuidditySequence& q);

/// The partner quiddity sequence: block (head, run) contributes
/// (head - 3) 2s followed by the entry run + 3. partner is an involution up
/// to rotation and preserves the growth coefficient. Throws NotSkeletal.
QuidditySequence partner(const QuidditySequence& q);

}  // namespace friezes
