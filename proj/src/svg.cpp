#include "sphavg/svg.hpp"

#include <algorithm>
#include <sstream>

#include "sphavg/json_io.hpp"

namespace sphavg::io {

namespace {

constexpr double kPanel = 360.0;
constexpr double kMargin = 46.0;

struct Pt2 {
    Rational u, v;
    std::string name;
};

double px(const Rational& u) { return kMargin + to_double(u) * kPanel; }
double py(const Rational& v) { return kMargin + (1.0 - to_double(v)) * kPanel; }  // flip: 1/r upward

/// Monotone-chain hull with exact rational predicates; returns ccw boundary.
std::vector<Pt2> hull(std::vector<Pt2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt2& a, const Pt2& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Pt2& a, const Pt2& b) { return a.u == b.u && a.v == b.v; }),
              pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const Pt2& o, const Pt2& a, const Pt2& b) {
        return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
    };
    std::vector<Pt2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

void open_svg(std::ostringstream& os, double width, double height) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<style>text{font:11px sans-serif}.axis{stroke:#444;stroke-width:1}.poly{fill:#cfe2f3;"
          "stroke:#1c4587;stroke-width:1.5}.vtx{fill:#cc0000}</style>\n";
}

void draw_panel(std::ostringstream& os, double ox, const std::string& xlabel,
                const std::string& ylabel, const std::vector<Pt2>& pts, bool draw_hull) {
    os << "<g transform=\"translate(" << ox << ",0)\">\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPanel
       << "\" height=\"" << kPanel << "\" fill=\"none\" stroke=\"#999\"/>\n";
    if (draw_hull) {
        const auto h = hull(pts);
        os << "<polygon class=\"poly\" points=\"";
        for (const auto& p : h) os << fmt12(px(p.u)) << "," << fmt12(py(p.v)) << " ";
        os << "\"/>\n";
    }
    for (const auto& p : pts) {
        os << "<circle class=\"vtx\" cx=\"" << fmt12(px(p.u)) << "\" cy=\"" << fmt12(py(p.v))
           << "\" r=\"3\"/>\n";
        if (!p.name.empty())
            os << "<text x=\"" << fmt12(px(p.u) + 5) << "\" y=\"" << fmt12(py(p.v) - 5) << "\">"
               << p.name << "</text>\n";
    }
    os << "<text x=\"" << kMargin + kPanel / 2 - 10 << "\" y=\"" << kMargin + kPanel + 30 << "\">"
       << xlabel << "</text>\n";
    os << "<text x=\"8\" y=\"" << kMargin - 14 << "\">" << ylabel << "</text>\n";
    // unit ticks
    os << "<text x=\"" << kMargin - 10 << "\" y=\"" << kMargin + kPanel + 14 << "\">0</text>\n";
    os << "<text x=\"" << kMargin + kPanel - 3 << "\" y=\"" << kMargin + kPanel + 14
       << "\">1</text>\n";
    os << "<text x=\"" << kMargin - 14 << "\" y=\"" << kMargin + 4 << "\">1</text>\n";
    os << "</g>\n";
}

}  // namespace

std::string slice_svg(const region::DiagonalSlice& slice) {
    std::ostringstream os;
    const double width = kPanel + 2 * kMargin, height = kPanel + 2 * kMargin + 20;
    open_svg(os, width, height);
    os << "<polygon class=\"poly\" points=\"";
    for (const auto& [u, v] : slice.vertices) os << fmt12(px(u)) << "," << fmt12(py(v)) << " ";
    os << "\"/>\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPanel
       << "\" height=\"" << kPanel << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (std::size_t i = 0; i < slice.vertices.size(); ++i) {
        const auto& [u, v] = slice.vertices[i];
        os << "<circle class=\"vtx\" cx=\"" << fmt12(px(u)) << "\" cy=\"" << fmt12(py(v))
           << "\" r=\"3.5\"/>\n";
        std::string label = slice.names[i];
        if (!label.empty())
            label += " (" + rational_string(u) + ", " + rational_string(v) + ")";
        os << "<text x=\"" << fmt12(px(u) + 6) << "\" y=\"" << fmt12(py(v) - 6) << "\">" << label
           << "</text>\n";
    }
    os << "<text x=\"" << kMargin + kPanel / 2 - 10 << "\" y=\"" << kMargin + kPanel + 30
       << "\">1/p</text>\n";
    os << "<text x=\"8\" y=\"" << kMargin - 14 << "\">1/r</text>\n";
    os << "<text x=\"" << kMargin << "\" y=\"16\">diagonal slice, n = " << slice.n << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string region_n2_svg(const std::vector<region::EndpointRecord>& vertices) {
    std::ostringstream os;
    const double panel_w = kPanel + 2 * kMargin;
    open_svg(os, 3 * panel_w, kPanel + 2 * kMargin + 20);
    auto collect = [&](auto proj_u, auto proj_v) {
        std::vector<Pt2> pts;
        for (const auto& rec : vertices)
            pts.push_back({proj_u(rec.point), proj_v(rec.point), rec.name});
        return pts;
    };
    using P = const region::ExponentPoint&;
    draw_panel(os, 0, "1/p1", "1/p2",
               collect([](P p) { return p.x[0]; }, [](P p) { return p.x[1]; }), true);
    draw_panel(os, panel_w, "1/p1", "1/r",
               collect([](P p) { return p.x[0]; }, [](P p) { return p.xr; }), true);
    draw_panel(os, 2 * panel_w, "1/p2", "1/r",
               collect([](P p) { return p.x[1]; }, [](P p) { return p.xr; }), true);
    os << "</svg>\n";
    return os.str();
}

}  // namespace sphavg::io
