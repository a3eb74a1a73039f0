#include "arcnum/render.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "arcnum/arcs.hpp"
#include "arcnum/stars.hpp"

namespace arcnum {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x, y;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    return os.str();
}

}  // namespace

std::string render_svg(const ChordDiagram& d, const RenderOptions& options) {
    const int two_n = d.positions();
    const double size = options.size;
    const double cx = size / 2, cy = size / 2;
    const double radius = size * 0.42;
    const double denom = two_n > 0 ? two_n : 1;

    auto at = [&](double index, double r) {
        const double theta = kPi / 2 + 2 * kPi * index / denom;
        return Point{cx + r * std::cos(theta), cy - r * std::sin(theta)};
    };

    std::set<int> witness_chords;
    if (options.show_witness) {
        const StarWitness w = extract_star(d);
        for (int p = 0; p < two_n; ++p) {
            for (const std::string& name : w.crossings)
                if (d.label(p) == name) witness_chords.insert(d.chord_index(p));
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size
        << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size
        << " " << options.size << "\">\n";
    svg << "<circle class=\"rim\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
        << "\" r=\"" << fmt(radius) << "\" fill=\"none\" stroke=\"#444444\" "
           "stroke-width=\"2\"/>\n";

    for (int p = 0; p < two_n; ++p) {
        const int q = d.partner(p);
        if (q < p) continue;
        const Point a = at(p, radius), b = at(q, radius);
        const bool hot = witness_chords.count(d.chord_index(p)) > 0;
        svg << "<line class=\"chord" << (hot ? " witness" : "") << "\" x1=\""
            << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
            << "\" y2=\"" << fmt(b.y) << "\" stroke=\""
            << (hot ? "#d62728" : "#1f77b4") << "\" stroke-width=\""
            << (hot ? "3" : "1.5") << "\"/>\n";
    }

    if (options.show_cuts) {
        for (int g : sorted_cuts(minimal_partition(d))) {
            const Point a = at(g + 0.5, radius - 9), b = at(g + 0.5, radius + 9);
            svg << "<line class=\"cut\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
                << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
                << "\" stroke=\"#2ca02c\" stroke-width=\"2.5\"/>\n";
        }
    }

    for (int p = 0; p < two_n; ++p) {
        const Point c = at(p, radius);
        svg << "<circle class=\"dot\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
            << "\" r=\"4\" fill=\"#222222\"/>\n";
        if (options.show_labels) {
            const Point t = at(p, radius + 18);
            svg << "<text class=\"label\" x=\"" << fmt(t.x) << "\" y=\"" << fmt(t.y)
                << "\" font-size=\"13\" text-anchor=\"middle\" "
                   "dominant-baseline=\"middle\">"
                << d.label(p) << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace arcnum
