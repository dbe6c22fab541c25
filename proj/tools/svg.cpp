#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "esga_cli.hpp"

namespace esga::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

constexpr std::array<const char*, 10> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f",
};

/// Maps instance coordinates into the canvas, y axis pointing up.
class Viewport {
  public:
    explicit Viewport(const Instance& inst) {
        double min_x = std::numeric_limits<double>::max();
        double min_y = min_x;
        double max_x = std::numeric_limits<double>::lowest();
        double max_y = max_x;
        for (const auto& p : inst.coords()) {
            min_x = std::min(min_x, p.x);
            min_y = std::min(min_y, p.y);
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
        const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
        scale_ = (kCanvas - 2 * kMargin) / span;
        min_x_ = min_x;
        max_y_ = max_y;
    }

    Point map(Point p) const { return {kMargin + (p.x - min_x_) * scale_, kMargin + (max_y_ - p.y) * scale_}; }

  private:
    double scale_ = 1.0;
    double min_x_ = 0.0;
    double max_y_ = 0.0;
};

void header(std::ostringstream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void line(std::ostringstream& out, const Viewport& vp, const Instance& inst, int u, int v, const char* cls,
          const char* colour, bool dashed, double offset = 0.0) {
    auto a = vp.map(inst.coord(u));
    auto b = vp.map(inst.coord(v));
    if (offset != 0.0) {
        // Shift perpendicular to the segment so doubled edges stay visible.
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double len = std::max(std::hypot(dx, dy), 1e-9);
        const double ox = -dy / len * offset;
        const double oy = dx / len * offset;
        a = {a.x + ox, a.y + oy};
        b = {b.x + ox, b.y + oy};
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<line class=\"%s\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"1.5\"%s/>\n",
                  cls, a.x, a.y, b.x, b.y, colour, dashed ? " stroke-dasharray=\"6,4\"" : "");
    out << buf;
}

void cities(std::ostringstream& out, const Viewport& vp, const Instance& inst) {
    out << "<g class=\"cities\">\n";
    char buf[160];
    for (int c = 0; c < inst.size(); ++c) {
        const auto p = vp.map(inst.coord(c));
        std::snprintf(buf, sizeof(buf), "<circle class=\"city\" cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"black\"/>\n",
                      p.x, p.y);
        out << buf;
    }
    out << "</g>\n";
}

} // namespace

std::string render_tour_svg(const Instance& inst, const Tour& tour) {
    if (tour.size() != inst.size()) {
        throw std::invalid_argument("tour has " + std::to_string(tour.size()) + " cities but the instance has " +
                                    std::to_string(inst.size()));
    }
    const Viewport vp(inst);
    std::ostringstream out;
    header(out);
    out << "<g class=\"tour\">\n";
    for (int c : tour.order()) {
        line(out, vp, inst, c, tour.next(c), "edge", "#1f77b4", false);
    }
    out << "</g>\n";
    cities(out, vp, inst);
    out << "</svg>\n";
    return std::move(out).str();
}

std::string render_rings_svg(const Instance& inst, std::span<const MRing> rings) {
    const Viewport vp(inst);
    std::ostringstream out;
    header(out);
    int coloured = 0;
    for (std::size_t r = 0; r < rings.size(); ++r) {
        const auto& ring = rings[r];
        const bool doubled = ring.ineffective();
        const char* colour = doubled ? "#b0b0b0" : kPalette[coloured++ % kPalette.size()];
        out << "<g class=\"ring " << (doubled ? "doubled" : "highlighted") << "\" data-ring=\"" << r
            << "\" data-edges=\"" << ring.edges.size() << "\">\n";
        for (const auto& e : ring.edges) {
            const bool b_edge = e.parent == Parent::B;
            const double offset = doubled ? (b_edge ? 1.5 : -1.5) : 0.0;
            line(out, vp, inst, e.from, e.to, b_edge ? "edge parent-b" : "edge parent-a", colour, b_edge, offset);
        }
        out << "</g>\n";
    }
    cities(out, vp, inst);
    out << "</svg>\n";
    return std::move(out).str();
}

} // namespace esga::cli
