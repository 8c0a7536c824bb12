#include "doctest.h"

#include <string>
#include <vector>

#include "friezes/triangulation.hpp"

using namespace friezes;

TEST_CASE("skeletal triangulation of (3,4,2,4)") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{3, 4, 2, 4});
    CHECK(t.outer_count == 4);
    CHECK(t.inner_count == 5);
    CHECK(t.inner_offset == 0);
    CHECK(t.arcs == std::vector<Arc>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 4},
                                     {4, 4}, {4, 5}, {4, 1}});

    const QuiddityPair p = quiddity_pair(t);
    CHECK(p.outer.entries() == std::vector<std::int64_t>{3, 4, 2, 4});
    CHECK(p.inner.entries() == std::vector<std::int64_t>{3, 3, 2, 4, 2});
    CHECK(cyclically_equal(p.inner, partner(p.outer)));

    CHECK(quiver_of(t).word() == "IDIIDDIID");
    CHECK(quiver_of(t).word() == mu(QuidditySequence{3, 4, 2, 4}).word());
}

TEST_CASE("one outer marked point") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{5});
    CHECK(t.outer_count == 1);
    CHECK(t.inner_count == 3);
    CHECK(t.arcs == std::vector<Arc>{{1, 1}, {1, 2}, {1, 3}, {1, 1}});

    const QuiddityPair p = quiddity_pair(t);
    CHECK(p.outer.entries() == std::vector<std::int64_t>{5});
    CHECK(cyclically_equal(p.inner, QuidditySequence{2, 2, 3}));
    CHECK(quiver_of(t).word() == "IIID");
    CHECK(same_unlabeled(quiver_of(t), mu(QuidditySequence{5})));
}

TEST_CASE("trailing 2s close onto the first inner point") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{3, 2});
    CHECK(t.inner_count == 1);
    CHECK(t.arcs == std::vector<Arc>{{1, 1}, {1, 1}, {2, 1}});
    const QuiddityPair p = quiddity_pair(t);
    CHECK(p.inner.entries() == std::vector<std::int64_t>{4});
    CHECK(quiver_of(t).word() == "IDD");
}

TEST_CASE("rejects non-skeletal input") {
    CHECK_THROWS_AS(triangulation_from_quiddity(QuidditySequence{2, 2, 2}), NotSkeletal);
    CHECK_THROWS_AS(triangulation_from_quiddity(QuidditySequence{4, 1, 2, 5}), NotSkeletal);
}

TEST_CASE("inner rotation changes labels but no invariants") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{3, 4, 2, 4});
    const SkeletalTriangulation r = with_inner_offset(t, 2);
    CHECK(r.inner_offset == 2);
    CHECK(r.arcs.front() == Arc{1, 3});
    CHECK(with_inner_offset(r, -2).arcs == t.arcs);
    CHECK(with_inner_offset(t, 5).arcs == t.arcs);

    const QuiddityPair a = quiddity_pair(t);
    const QuiddityPair b = quiddity_pair(r);
    CHECK(cyclically_equal(a.outer, b.outer));
    CHECK(cyclically_equal(a.inner, b.inner));
    CHECK(same_unlabeled(quiver_of(t), quiver_of(r)));
}

TEST_CASE("ear scripts on quiddity pairs") {
    const QuidditySequence q{2, 4};
    const QuiddityPair base{q, partner(q)};
    CHECK(base.inner.entries() == std::vector<std::int64_t>{2, 4});

    const QuiddityPair once = attach_ear(base, 1, 0);
    CHECK(once.outer.entries() == std::vector<std::int64_t>{1, 3, 5});
    CHECK(once.inner.entries() == std::vector<std::int64_t>{2, 4});

    const QuiddityPair back = detach_ear(once, 1, 0);
    CHECK(back.outer == base.outer);

    const EarScript script = {{1, 0}, {2, 1}, {1, 2}};
    const QuiddityPair decorated = apply_script(base, script);
    CHECK(cyclically_equal(reduce_to_skeletal(decorated.outer), q));
    CHECK(cyclically_equal(reduce_to_skeletal(decorated.inner), partner(q)));

    CHECK_THROWS_AS(attach_ear(base, 3, 0), std::out_of_range);
    CHECK_THROWS_AS(detach_ear(base, 0, 0), std::out_of_range);
}

TEST_CASE("svg rendering is deterministic and complete") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{3, 4, 2, 4});
    const std::string svg = render_svg(t);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t paths = 0;
    for (std::size_t pos = svg.find("<path"); pos != std::string::npos;
         pos = svg.find("<path", pos + 1)) {
        ++paths;
    }
    CHECK(paths == t.arcs.size());
    CHECK(svg == render_svg(t));

    CHECK_THROWS_AS(render_svg_file(t, "/nonexistent-dir/frieze.svg"), IOFailure);
}

TEST_CASE("net rendering lists arcs in cyclic order") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{3, 2});
    const std::string net = render_net(t);
    std::size_t lines = 0;
    for (char c : net) lines += c == '\n';
    CHECK(lines == t.arcs.size());
    CHECK(net.find("outer 1") != std::string::npos);
    CHECK(net.find("inner 1") != std::string::npos);
}
