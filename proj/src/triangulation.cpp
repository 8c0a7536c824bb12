#include "friezes/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace friezes {

SkeletalTriangulation triangulation_from_quiddity(const QuidditySequence& q) {
    if (!is_skeletal(q)) {
        throw NotSkeletal("(" + q.str() + ") has a 1 or is the trivial sequence");
    }
    const auto m = static_cast<std::int64_t>(q.size());
    SkeletalTriangulation t;
    t.outer_count = m;
    t.inner_count = 0;
    for (auto e : q.entries()) t.inner_count += e - 2;

    // Outer vertex i carries a_i - 1 arc ends, connected left to right.
    // s = last vertex with a_s > 2; from there the fan closes onto the first
    // inner point, and any trailing vertices (all with a = 2) also reach it.
    std::int64_t s = m;
    while (q[static_cast<std::size_t>(s - 1)] <= 2) --s;

    std::int64_t created = 0;
    auto arc = [&t](std::int64_t outer, std::int64_t inner) {
        t.arcs.push_back({outer, inner});
    };
    for (std::int64_t i = 1; i <= m; ++i) {
        const std::int64_t a = q[static_cast<std::size_t>(i - 1)];
        if (i == 1) {
            if (s == 1) {
                for (std::int64_t k = 0; k < a - 2; ++k) arc(1, ++created);
                arc(1, 1);
            } else {
                for (std::int64_t k = 0; k < a - 1; ++k) arc(1, ++created);
            }
        } else if (i > s) {
            arc(i, 1);
        } else {
            arc(i, created);
            if (i < s) {
                for (std::int64_t k = 0; k < a - 2; ++k) arc(i, ++created);
            } else {
                for (std::int64_t k = 0; k < a - 3; ++k) arc(i, ++created);
                arc(i, 1);
            }
        }
    }
    return t;
}

namespace {

void validate(const SkeletalTriangulation& t) {
    if (t.outer_count < 1 || t.inner_count < 1 ||
        t.arcs.size() != static_cast<std::size_t>(t.outer_count + t.inner_count)) {
        throw std::invalid_argument("triangulation must have outer + inner bridging arcs");
    }
    for (const Arc& a : t.arcs) {
        if (a.outer < 1 || a.outer > t.outer_count || a.inner < 1 || a.inner > t.inner_count) {
            throw std::invalid_argument("arc endpoint out of range");
        }
    }
}

}  // namespace

QuiddityPair quiddity_pair(const SkeletalTriangulation& t) {
    validate(t);
    std::vector<std::int64_t> outer(static_cast<std::size_t>(t.outer_count), 1);
    std::vector<std::int64_t> inner(static_cast<std::size_t>(t.inner_count), 1);
    for (const Arc& a : t.arcs) {
        outer[static_cast<std::size_t>(a.outer - 1)] += 1;
        inner[static_cast<std::size_t>(a.inner - 1)] += 1;
    }
    return {QuidditySequence(std::move(outer)), QuidditySequence(std::move(inner))};
}

NonOrientedCycle quiver_of(const SkeletalTriangulation& t) {
    validate(t);
    const auto total = static_cast<std::size_t>(t.arcs.size());
    std::string word;
    word.reserve(total);
    if (t.outer_count == 1) {
        // Every arc shares the single outer vertex; the one decreasing letter
        // sits between the closing arc and the first one.
        word.assign(total - 1, 'I');
        word.push_back('D');
        return NonOrientedCycle(std::move(word));
    }
    for (std::size_t k = 0; k < total; ++k) {
        const Arc& cur = t.arcs[k];
        const Arc& next = t.arcs[(k + 1) % total];
        const bool outer_same = next.outer == cur.outer;
        const bool outer_step = next.outer == cur.outer % t.outer_count + 1;
        const bool inner_same = next.inner == cur.inner;
        const bool inner_step = next.inner == cur.inner % t.inner_count + 1;
        if (outer_same && inner_step) {
            word.push_back('I');
        } else if (outer_step && inner_same) {
            word.push_back('D');
        } else {
            throw std::invalid_argument("arcs are not in cyclic order");
        }
    }
    return NonOrientedCycle(std::move(word));
}

SkeletalTriangulation with_inner_offset(const SkeletalTriangulation& t, std::int64_t k) {
    validate(t);
    SkeletalTriangulation out = t;
    const std::int64_t n = t.inner_count;
    std::int64_t shift = k % n;
    if (shift < 0) shift += n;
    for (Arc& a : out.arcs) {
        a.inner = (a.inner - 1 + shift) % n + 1;
    }
    out.inner_offset = (t.inner_offset + shift) % n;
    return out;
}

QuiddityPair attach_ear(const QuiddityPair& p, int boundary, std::int64_t gap) {
    if (boundary != 1 && boundary != 2) {
        throw std::out_of_range("boundary must be 1 (outer) or 2 (inner)");
    }
    QuiddityPair out = p;
    auto& side = boundary == 1 ? out.outer : out.inner;
    side = reverse_reduce(side, static_cast<std::size_t>(gap));
    return out;
}

QuiddityPair detach_ear(const QuiddityPair& p, int boundary, std::size_t index) {
    if (boundary != 1 && boundary != 2) {
        throw std::out_of_range("boundary must be 1 (outer) or 2 (inner)");
    }
    QuiddityPair out = p;
    auto& side = boundary == 1 ? out.outer : out.inner;
    side = reduce_once(side, index);
    return out;
}

QuiddityPair apply_script(const QuiddityPair& p, const EarScript& script) {
    QuiddityPair out = p;
    for (const EarInsertion& e : script) {
        out = attach_ear(out, e.boundary, e.gap);
    }
    return out;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x, y;
};

Point polar(double radius, double angle) {
    return {250.0 + radius * std::cos(angle), 250.0 + radius * std::sin(angle)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Mean cyclic position of the arcs incident with one marked point. The arcs
// at a marked point occupy one consecutive cyclic run of positions.
double fan_angle(const std::vector<std::size_t>& positions, std::size_t total) {
    const std::size_t len = positions.size();
    std::size_t start = positions.front();
    if (len < total) {
        for (std::size_t p : positions) {
            const std::size_t prev = (p + total - 1) % total;
            if (std::find(positions.begin(), positions.end(), prev) == positions.end()) {
                start = p;
                break;
            }
        }
    }
    const double mid = static_cast<double>(start) + (static_cast<double>(len) - 1.0) / 2.0;
    return 2.0 * kPi * mid / static_cast<double>(total) - kPi / 2.0;
}

}  // namespace

std::string render_svg(const SkeletalTriangulation& t) {
    validate(t);
    const std::size_t total = t.arcs.size();
    const double r_outer = 230.0, r_inner = 70.0;

    std::vector<std::vector<std::size_t>> outer_pos(static_cast<std::size_t>(t.outer_count));
    std::vector<std::vector<std::size_t>> inner_pos(static_cast<std::size_t>(t.inner_count));
    for (std::size_t k = 0; k < total; ++k) {
        outer_pos[static_cast<std::size_t>(t.arcs[k].outer - 1)].push_back(k);
        inner_pos[static_cast<std::size_t>(t.arcs[k].inner - 1)].push_back(k);
    }
    std::vector<double> outer_angle(outer_pos.size()), inner_angle(inner_pos.size());
    for (std::size_t v = 0; v < outer_pos.size(); ++v) {
        outer_angle[v] = fan_angle(outer_pos[v], total);
    }
    for (std::size_t v = 0; v < inner_pos.size(); ++v) {
        inner_angle[v] = fan_angle(inner_pos[v], total);
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
           "viewBox=\"0 0 500 500\">\n";
    svg << "  <circle cx=\"250\" cy=\"250\" r=\"" << fmt(r_outer)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "  <circle cx=\"250\" cy=\"250\" r=\"" << fmt(r_inner)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t k = 0; k < total; ++k) {
        const Arc& a = t.arcs[k];
        const Point p0 = polar(r_outer, outer_angle[static_cast<std::size_t>(a.outer - 1)]);
        const Point p1 = polar(r_inner, inner_angle[static_cast<std::size_t>(a.inner - 1)]);
        const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(total) -
                             kPi / 2.0;
        const Point c0 = polar(r_outer * 2.0 / 3.0 + r_inner / 3.0, theta);
        const Point c1 = polar(r_outer / 3.0 + r_inner * 2.0 / 3.0, theta);
        svg << "  <path d=\"M " << fmt(p0.x) << ' ' << fmt(p0.y) << " C " << fmt(c0.x) << ' '
            << fmt(c0.y) << ", " << fmt(c1.x) << ' ' << fmt(c1.y) << ", " << fmt(p1.x) << ' '
            << fmt(p1.y) << "\" fill=\"none\" stroke=\"steelblue\"/>\n";
    }
    for (std::size_t v = 0; v < outer_pos.size(); ++v) {
        const Point p = polar(r_outer, outer_angle[v]);
        svg << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"4\" fill=\"black\"/>\n";
        const Point lp = polar(r_outer + 12.0, outer_angle[v]);
        svg << "  <text x=\"" << fmt(lp.x) << "\" y=\"" << fmt(lp.y)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << v + 1 << "</text>\n";
    }
    for (std::size_t v = 0; v < inner_pos.size(); ++v) {
        const Point p = polar(r_inner, inner_angle[v]);
        svg << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"4\" fill=\"black\"/>\n";
        const Point lp = polar(r_inner - 14.0, inner_angle[v]);
        svg << "  <text x=\"" << fmt(lp.x) << "\" y=\"" << fmt(lp.y)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << v + 1 << "&#773;</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void render_svg_file(const SkeletalTriangulation& t, const std::string& path) {
    const std::string svg = render_svg(t);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IOFailure("cannot open '" + path + "' for writing");
    }
    out << svg;
    out.flush();
    if (!out) {
        throw IOFailure("cannot write '" + path + "'");
    }
}

std::string render_net(const SkeletalTriangulation& t) {
    validate(t);
    std::ostringstream out;
    for (const Arc& a : t.arcs) {
        out << "(outer " << a.outer << " -- inner " << a.inner << "\xCC\x84)\n";
    }
    return out.str();
}

}  // namespace friezes
