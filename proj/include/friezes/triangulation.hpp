#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "friezes/quiddity.hpp"
#include "friezes/quiver.hpp"

namespace friezes {

/// A bridging arc of an annulus triangulation, from outer marked point
/// `outer` to inner marked point `inner` (both 1-based).
struct Arc {
    std::int64_t outer = 0;
    std::int64_t inner = 0;
    bool operator==(const Arc&) const = default;
};

/// A skeletal triangulation of the annulus C_{m,n}: every arc bridges the
/// two boundaries and `arcs` lists all m + n of them in global cyclic order
/// (consecutive arcs share exactly one endpoint and bound one triangle,
/// including the wrap-around pair). Marked points are labeled so that both
/// boundaries advance by +1 along the cyclic order; `inner_offset` records
/// the rotation freedom of the inner boundary labels.
struct SkeletalTriangulation {
    std::int64_t outer_count = 0;
    std::int64_t inner_count = 0;
    std::vector<Arc> arcs;
    std::int64_t inner_offset = 0;
};

/// Build the unique (up to inner rotation) skeletal triangulation whose
/// outer quiddity sequence is q: outer vertex i carries a_i - 1 arc ends,
/// consecutive vertices share one inner fan point, and the final fan closes
/// onto the first inner point. inner_count = sum(a_i - 2).
/// Throws NotSkeletal unless q is skeletal.
SkeletalTriangulation triangulation_from_quiddity(const QuidditySequence& q);

struct QuiddityPair {
    QuidditySequence outer;
    QuidditySequence inner;
};

/// Quiddity sequences of both boundaries: the number of triangles incident
/// with a marked point, which for a skeletal triangulation is its arc degree
/// plus one. quiddity_pair(triangulation_from_quiddity(q)) gives
/// (q, partner(q)) up to rotation.
QuiddityPair quiddity_pair(const SkeletalTriangulation& t);

/// The quiver of the triangulation: one letter per consecutive arc pair,
/// 'I' when the shared endpoint is the outer one (the inner boundary
/// advances), 'D' when it is the inner one. Always a non-oriented cycle;
/// equals mu(outer quiddity) up to rotation.
NonOrientedCycle quiver_of(const SkeletalTriangulation& t);

/// Same triangulation with inner labels rotated by k.
SkeletalTriangulation with_inner_offset(const SkeletalTriangulation& t, std::int64_t k);

/// One ear insertion at the quiddity level: a new triangle glued along the
/// boundary `boundary` (1 = outer, 2 = inner) before position `gap` of the
/// corresponding quiddity sequence (reverse_reduce).
struct EarInsertion {
    int boundary = 1;
    std::int64_t gap = 0;
    bool operator==(const EarInsertion&) const = default;
};

using EarScript = std::vector<EarInsertion>;

/// reverse_reduce on the selected component of the pair.
QuiddityPair attach_ear(const QuiddityPair& p, int boundary, std::int64_t gap);

/// reduce_once on the selected component of the pair.
QuiddityPair detach_ear(const QuiddityPair& p, int boundary, std::size_t index);

QuiddityPair apply_script(const QuiddityPair& p, const EarScript& script);

/// Deterministic SVG rendering: two boundary circles, one path per arc and
/// one labeled dot per marked point. Geometry is schematic; the combinatorics
/// (incidences and cyclic order) are exact.
std::string render_svg(const SkeletalTriangulation& t);

/// Write render_svg(t) to `path`. Throws IOFailure when the file cannot be
/// written.
void render_svg_file(const SkeletalTriangulation& t, const std::string& path);

/// Plain-text net: one "(outer i -- inner j)" line per arc in cyclic order,
/// inner labels carrying a combining overline.
std::string render_net(const SkeletalTriangulation& t);

}  // namespace friezes
