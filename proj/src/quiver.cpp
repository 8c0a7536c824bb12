#include "friezes/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace friezes {

namespace {

constexpr char kInc = 'I';
constexpr char kDec = 'D';

// Vertex v (1-based) is a source iff its outgoing arrow towards v+1 exists
// and the arrow from v-1 points away too: word[v-1] == 'I' and
// word[v-2] == 'D' (0-based, cyclic).
bool is_source(const std::string& w, std::size_t v) {
    const std::size_t n = w.size();
    return w[(v - 1) % n] == kInc && w[(v - 2 + n) % n] == kDec;
}

std::string rotate_word(const std::string& w, std::size_t start) {
    std::string out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) out.push_back(w[(start + k) % w.size()]);
    return out;
}

// Word rotated so that vertex 1 is a source (the smallest source label of
// the input is moved to 1).
std::string source_rotation(const std::string& w) {
    for (std::size_t v = 1; v <= w.size(); ++v) {
        if (is_source(w, v)) return rotate_word(w, v - 1);
    }
    throw NotACycleWord("'" + w + "' has no source");  // unreachable for valid words
}

std::size_t run_length(const std::string& w, std::size_t start, char letter) {
    const std::size_t n = w.size();
    std::size_t len = 0;
    while (len < n && w[(start + len) % n] == letter) ++len;
    return len;
}

}  // namespace

NonOrientedCycle::NonOrientedCycle(std::string word) : word_(std::move(word)) {
    if (word_.size() < 2) {
        throw NotACycleWord("cycle word must have length >= 2");
    }
    bool inc = false, dec = false;
    for (char c : word_) {
        if (c == kInc) {
            inc = true;
        } else if (c == kDec) {
            dec = true;
        } else {
            throw NotACycleWord("cycle word may only contain 'I' and 'D'");
        }
    }
    if (!inc || !dec) {
        throw NotACycleWord("'" + word_ + "' is an oriented cycle: both arrow directions are required");
    }
}

QuidditySequence sigma(const NonOrientedCycle& q) {
    const std::string w = source_rotation(q.word());
    const std::size_t n = w.size();
    std::vector<std::int64_t> entries;
    // Tails of decreasing arrows in label order; letter k (0-based) is the
    // arrow between vertices k+1 and k+2, a 'D' at k has tail k+2.
    // Vertex 1 is a tail because w[n-1] == 'D' at a source rotation.
    entries.push_back(static_cast<std::int64_t>(run_length(w, 0, kInc)) + 2);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k] == kDec) {
            entries.push_back(static_cast<std::int64_t>(run_length(w, k + 1, kInc)) + 2);
        }
    }
    return QuidditySequence(std::move(entries));
}

QuidditySequence sigma_tilde(const NonOrientedCycle& q) {
    const std::string w = source_rotation(q.word());
    const std::size_t n = w.size();
    std::vector<std::int64_t> entries;
    // Heads of increasing arrows in label order; an 'I' at k has head k+2.
    // The maximal decreasing path ending there occupies letters k+1, k+2, ...
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k] == kInc) {
            entries.push_back(static_cast<std::int64_t>(run_length(w, k + 1, kDec)) + 2);
        }
    }
    return QuidditySequence(std::move(entries));
}

NonOrientedCycle mu(const QuidditySequence& q) {
    std::string word;
    for (const Block& b : block_form(q)) {
        word.append(static_cast<std::size_t>(b.head - 2), kInc);
        word.append(static_cast<std::size_t>(b.run + 1), kDec);
    }
    return NonOrientedCycle(std::move(word));
}

NonOrientedCycle canonicalize(const NonOrientedCycle& q) {
    const std::string& w = q.word();
    std::string best;
    for (std::size_t v = 1; v <= w.size(); ++v) {
        if (!is_source(w, v)) continue;
        std::string cand = rotate_word(w, v - 1);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return NonOrientedCycle(std::move(best));
}

bool same_unlabeled(const NonOrientedCycle& a, const NonOrientedCycle& b) {
    if (a.size() != b.size()) return false;
    return canonicalize(a) == canonicalize(b);
}

std::string to_dot(const NonOrientedCycle& q) {
    const std::size_t n = q.size();
    std::ostringstream out;
    out << "digraph quiver {\n";
    out << "  layout=circo;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t v = 1; v <= n; ++v) {
        out << "  " << v << ";\n";
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t a = k + 1;
        const std::size_t b = (k + 1) % n + 1;
        if (q.letter(k) == kInc) {
            out << "  " << a << " -> " << b << ";\n";
        } else {
            out << "  " << b << " -> " << a << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace friezes
