#include "torus/render.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <iomanip>

namespace torus {

namespace {

const std::array<const char*, 25> kPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8",
    "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080", "#b0d060",
    "#604090", "#d4a017", "#2f6f4f", "#6699cc"};

constexpr double kScale = 1000.0;

void emit_polygon(std::ostream& os, const std::vector<Vec2>& poly, const char* fill) {
    // all integer translates of the lift that touch the unit square
    double x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
    for (const Vec2& p : poly) {
        x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
    }
    for (int dx = static_cast<int>(std::floor(-x1)); dx <= static_cast<int>(std::ceil(1.0 - x0)); ++dx) {
        for (int dy = static_cast<int>(std::floor(-y1)); dy <= static_cast<int>(std::ceil(1.0 - y0)); ++dy) {
            if (x1 + dx < 0 || x0 + dx > 1 || y1 + dy < 0 || y0 + dy > 1) continue;
            os << "  <polygon fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1\" points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i) {
                if (i) os << ' ';
                os << std::fixed << std::setprecision(2) << (poly[i].x + dx) * kScale << ','
                   << (1.0 - (poly[i].y + dy)) * kScale;
            }
            os << "\"/>\n";
        }
    }
}

void emit_rect(std::ostream& os, double x0, double y0, double x1, double y1, const char* fill) {
    os << "  <rect fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1\" x=\""
       << std::fixed << std::setprecision(2) << x0 * kScale << "\" y=\"" << (1.0 - y1) * kScale
       << "\" width=\"" << (x1 - x0) * kScale << "\" height=\"" << (y1 - y0) * kScale << "\"/>\n";
}

} // namespace

std::string render_partition_svg(const Partition& p) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n";
    os << "<defs><clipPath id=\"unit\"><rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\"/>"
          "</clipPath></defs>\n";
    os << "<g clip-path=\"url(#unit)\">\n";
    for (std::size_t i = 0; i < p.regions.size(); ++i) {
        const char* fill = kPalette[i % kPalette.size()];
        const Region& r = p.regions[i];
        if (const auto* poly = std::get_if<LiftedPolygon>(&r.shape)) {
            emit_polygon(os, poly->vertices, fill);
        } else if (const auto* vs = std::get_if<VerticalStrip>(&r.shape)) {
            emit_rect(os, vs->x0, 0.0, vs->x1, 1.0, fill);
        } else if (const auto* hs = std::get_if<HorizontalStrip>(&r.shape)) {
            emit_rect(os, 0.0, hs->y0, 1.0, hs->y1, fill);
        } else {
            const auto& ps = std::get<PixelSet>(r.shape);
            const double s = ps.s;
            for (auto [a, b] : ps.cells) emit_rect(os, a / s, b / s, (a + 1) / s, (b + 1) / s, fill);
        }
    }
    os << "</g>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"none\" stroke=\"black\" "
          "stroke-width=\"2\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace torus
