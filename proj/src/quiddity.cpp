#include "friezes/quiddity.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "friezes/bigint.hpp"

namespace friezes {

QuidditySequence::QuidditySequence(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("quiddity sequence must be nonempty");
    }
    for (auto e : entries_) {
        if (e < 1) {
            throw std::invalid_argument("quiddity entries must be >= 1");
        }
    }
}

QuidditySequence::QuidditySequence(std::initializer_list<std::int64_t> entries)
    : QuidditySequence(std::vector<std::int64_t>(entries)) {}

QuidditySequence QuidditySequence::parse(const std::string& text) {
    std::vector<std::int64_t> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::size_t lo = pos, hi = comma;
        while (lo < hi && text[lo] == ' ') ++lo;
        while (hi > lo && text[hi - 1] == ' ') --hi;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
        if (ec != std::errc() || ptr != text.data() + hi) {
            throw std::invalid_argument("cannot parse quiddity entry in '" + text + "'");
        }
        entries.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return QuidditySequence(std::move(entries));
}

std::int64_t QuidditySequence::cyclic(std::int64_t i) const noexcept {
    const auto n = static_cast<std::int64_t>(entries_.size());
    std::int64_t k = (i - 1) % n;
    if (k < 0) k += n;
    return entries_[static_cast<std::size_t>(k)];
}

std::string QuidditySequence::str() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) out << ',';
        out << entries_[k];
    }
    return out.str();
}

std::string to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::InfiniteType: return "InfiniteType";
        case SequenceClass::FiniteType: return "FiniteType";
        case SequenceClass::Invalid: return "Invalid";
    }
    return "Invalid";
}

namespace {

// Booth's least-rotation algorithm.
std::size_t least_rotation_index(const std::vector<std::int64_t>& v) {
    const std::size_t n = v.size();
    auto at = [&](std::size_t k) { return v[k % n]; };
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        auto sj = at(j);
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (sj < at(k)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

std::vector<std::int64_t> rotated(const std::vector<std::int64_t>& v, std::size_t start) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(v[(start + k) % v.size()]);
    return out;
}

bool has_one(const std::vector<std::int64_t>& v) {
    return std::find(v.begin(), v.end(), 1) != v.end();
}

// Index of the leftmost 1 admitting a legal reduction, or npos.
std::size_t leftmost_legal_one(const std::vector<std::int64_t>& v) {
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] != 1) continue;
        if (n == 2 && v[1 - k] >= 3) return k;
        if (n >= 3 && v[(k + n - 1) % n] >= 2 && v[(k + 1) % n] >= 2) return k;
    }
    return std::string::npos;
}

std::vector<std::int64_t> reduce_at(const std::vector<std::int64_t>& v, std::size_t index) {
    const std::size_t n = v.size();
    if (n == 2) return {v[1 - index] - 2};
    std::vector<std::int64_t> out = v;
    out[(index + n - 1) % n] -= 1;
    out[(index + 1) % n] -= 1;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

// Row oracle: frieze rows to depth 3n + 2. A row of 1s followed by a row of
// 0s is the closed-polygon pattern, valid only for n >= 3 (a polygon has at
// least three vertices). Any other non-positive entry disproves both types.
SequenceClass row_oracle(const QuidditySequence& q) {
    // A closed pattern of order n has row a(i, i+n-3) all 1's, row
    // a(i, i+n-2) all 0's, and every row above positive. The closing pair
    // cannot appear at any other depth, so an early 1's/0's pair (e.g. for
    // (1,1,1,1), which no ear insertion can produce) is rejected rather
    // than accepted.
    const auto n = static_cast<std::int64_t>(q.size());
    if (n < 3) return SequenceClass::Invalid;
    std::vector<BigInt> prev(q.size()), cur(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        prev[k] = 1;                // a(i, i-1)
        cur[k] = q.entries()[k];    // a(i, i)
    }
    for (std::int64_t r = 2; r <= n - 1; ++r) {
        std::vector<BigInt> next(q.size());
        bool cur_all_ones = true, next_all_zero = true, next_positive = true;
        for (std::int64_t k = 0; k < n; ++k) {
            // a(i, i+r-1) = a_{i+r-1} * a(i, i+r-2) - a(i, i+r-3), i = k+1
            next[static_cast<std::size_t>(k)] =
                q.cyclic(k + r) * cur[static_cast<std::size_t>(k)] - prev[static_cast<std::size_t>(k)];
            if (cur[static_cast<std::size_t>(k)] != 1) cur_all_ones = false;
            if (next[static_cast<std::size_t>(k)] != 0) next_all_zero = false;
            if (next[static_cast<std::size_t>(k)] <= 0) next_positive = false;
        }
        if (r == n - 1) {
            return (cur_all_ones && next_all_zero) ? SequenceClass::FiniteType
                                                   : SequenceClass::Invalid;
        }
        if (!next_positive) return SequenceClass::Invalid;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return SequenceClass::Invalid;
}

}  // namespace

QuidditySequence canonical_rotation(const QuidditySequence& q) {
    return QuidditySequence(rotated(q.entries(), least_rotation_index(q.entries())));
}

bool cyclically_equal(const QuidditySequence& a, const QuidditySequence& b) {
    if (a.size() != b.size()) return false;
    return canonical_rotation(a) == canonical_rotation(b);
}

bool is_trivial(const QuidditySequence& q) {
    return std::all_of(q.entries().begin(), q.entries().end(),
                       [](std::int64_t e) { return e == 2; });
}

bool is_skeletal(const QuidditySequence& q) {
    return !has_one(q.entries()) && !is_trivial(q);
}

QuidditySequence reduce_once(const QuidditySequence& q, std::size_t index) {
    const std::size_t n = q.size();
    if (index >= n) {
        throw std::out_of_range("reduce_once: index out of range");
    }
    if (q[index] != 1) {
        throw NotAOne("entry at index " + std::to_string(index) + " of (" + q.str() +
                      ") is not 1");
    }
    if (n == 1) {
        throw IllegalReduction("(1) admits no reduction");
    }
    if (n == 2) {
        if (q[1 - index] < 3) {
            throw IllegalReduction("(" + q.str() + ") admits no reduction at index " +
                                   std::to_string(index));
        }
        return QuidditySequence(reduce_at(q.entries(), index));
    }
    if (q[(index + n - 1) % n] < 2 || q[(index + 1) % n] < 2) {
        throw IllegalReduction("a neighbour of the 1 at index " + std::to_string(index) +
                               " of (" + q.str() + ") is itself 1");
    }
    return QuidditySequence(reduce_at(q.entries(), index));
}

QuidditySequence reverse_reduce(const QuidditySequence& q, std::size_t gap) {
    const std::size_t n = q.size();
    if (gap >= n) {
        throw std::out_of_range("reverse_reduce: gap out of range");
    }
    std::vector<std::int64_t> out = q.entries();
    out[(gap + n - 1) % n] += 1;
    out[gap] += 1;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap), 1);
    return QuidditySequence(std::move(out));
}

SequenceClass classify(const QuidditySequence& q) {
    std::vector<std::int64_t> cur = q.entries();
    while (has_one(cur)) {
        std::size_t k = leftmost_legal_one(cur);
        if (k == std::string::npos) break;
        cur = reduce_at(cur, k);
    }
    if (!has_one(cur)) return SequenceClass::InfiniteType;
    return row_oracle(q);
}

QuidditySequence reduce_to_skeletal(const QuidditySequence& q) {
    if (classify(q) != SequenceClass::InfiniteType) {
        throw NotInfiniteType("(" + q.str() + ") is not the quiddity sequence of an infinite frieze");
    }
    std::vector<std::int64_t> cur = q.entries();
    while (has_one(cur)) {
        cur = reduce_at(cur, leftmost_legal_one(cur));
    }
    return QuidditySequence(std::move(cur));
}

std::vector<Block> block_form(const QuidditySequence& q) {
    if (!is_skeletal(q)) {
        throw NotSkeletal("(" + q.str() + ") has a 1 or is the trivial sequence");
    }
    const std::size_t n = q.size();
    std::size_t first = 0;
    while (q[first] <= 2) ++first;
    std::vector<Block> blocks;
    std::size_t k = 0;
    while (k < n) {
        Block b;
        b.head = q[(first + k) % n];
        ++k;
        while (k < n && q[(first + k) % n] == 2) {
            ++b.run;
            ++k;
        }
        blocks.push_back(b);
    }
    return blocks;
}

QuidditySequence partner(const QuidditySequence& q) {
    std::vector<std::int64_t> out;
    for (const Block& b : block_form(q)) {
        out.insert(out.end(), static_cast<std::size_t>(b.head - 3), 2);
        out.push_back(b.run + 3);
    }
    return QuidditySequence(std::move(out));
}

}  // namespace friezes
