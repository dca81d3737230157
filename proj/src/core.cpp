#include "torus/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "torus/errors.hpp"

namespace torus {

double torus_dist(const TorusPoint& u, const TorusPoint& v) {
    double dx = std::fabs(u.x - v.x);
    dx = std::min(dx, 1.0 - dx);
    double dy = std::fabs(u.y - v.y);
    dy = std::min(dy, 1.0 - dy);
    return std::hypot(dx, dy);
}

void LiftedPolygon::validate() const {
    const std::size_t n = vertices.size();
    if (n < 3) throw InvalidPolygon("fewer than 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        if (std::fabs(b.x - a.x) >= 1.0 || std::fabs(b.y - a.y) >= 1.0)
            throw InvalidPolygon("edge displacement >= 1, lift ambiguous");
    }
    if (!polygon_is_simple(vertices)) throw InvalidPolygon("boundary self-intersects");
    if (signed_area(vertices) <= 0.0) throw InvalidPolygon("not counterclockwise");
}

namespace {

struct BBox {
    double x0, x1, y0, y1;
};

BBox bbox_of(const std::vector<Vec2>& v) {
    BBox b{v[0].x, v[0].x, v[0].y, v[0].y};
    for (const Vec2& p : v) {
        b.x0 = std::min(b.x0, p.x);
        b.x1 = std::max(b.x1, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

// Circular distance from t to the interval [lo,hi] (all mod 1).
double circ_interval_dist(double t, double lo, double hi) {
    double best = 1.0;
    for (int s = -1; s <= 1; ++s) {
        double x = t + s;
        double d = 0.0;
        if (x < lo) d = lo - x;
        else if (x > hi) d = x - hi;
        best = std::min(best, d);
    }
    return best;
}

} // namespace

double polygon_diameter(const LiftedPolygon& p) {
    p.validate();
    const std::vector<Vec2>& v = p.vertices;
    BBox bb = bbox_of(v);
    if (bb.x1 - bb.x0 > 1.0 + 1e-12 || bb.y1 - bb.y0 > 1.0 + 1e-12)
        throw InvalidPolygon("lift does not fit in a 1x1 window");

    const std::size_t n = v.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::max(best, torus_dist({v[i].x, v[i].y}, {v[j].x, v[j].y}));

    // Vertex-to-boundary candidates: points Q on the boundary whose lifted x-
    // or y-coordinate differs from the vertex by exactly 1/2.
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 pi = v[i];
        TorusPoint tp{pi.x, pi.y};
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2& a = v[j];
            const Vec2& b = v[(j + 1) % n];
            for (double c : {pi.x - 0.5, pi.x + 0.5}) {
                if ((a.x - c) * (b.x - c) <= 0.0 && a.x != b.x) {
                    double t = (c - a.x) / (b.x - a.x);
                    Vec2 q = a + (b - a) * t;
                    best = std::max(best, torus_dist(tp, {q.x, q.y}));
                }
            }
            for (double c : {pi.y - 0.5, pi.y + 0.5}) {
                if ((a.y - c) * (b.y - c) <= 0.0 && a.y != b.y) {
                    double t = (c - a.y) / (b.y - a.y);
                    Vec2 q = a + (b - a) * t;
                    best = std::max(best, torus_dist(tp, {q.x, q.y}));
                }
            }
        }
    }
    return best;
}

namespace {

double strip_diameter(double lo, double hi) {
    if (!(0.0 <= lo && lo < hi && hi <= 1.0 + 1e-12))
        throw InvalidRegion("strip bounds out of order");
    double w = hi - lo;
    w = std::min(w, 1.0 - w);
    return std::hypot(w, 0.5);
}

// Axis-aligned boundary segment of a pixel set, in units of 1/s.
struct PixEdge {
    bool vertical;   // x const if true
    int fixed;       // the constant coordinate, in [0,s)
    int lo;          // varying coordinate range [lo, lo+1]
};

std::vector<PixEdge> pixel_boundary(const PixelSet& ps) {
    std::set<std::pair<int, int>> occ(ps.cells.begin(), ps.cells.end());
    std::vector<PixEdge> out;
    auto has = [&](int i, int j) {
        return occ.count({((i % ps.s) + ps.s) % ps.s, ((j % ps.s) + ps.s) % ps.s}) > 0;
    };
    for (auto [i, j] : ps.cells) {
        if (!has(i - 1, j)) out.push_back({true, i, j});
        if (!has(i + 1, j)) out.push_back({true, (i + 1) % ps.s, j});
        if (!has(i, j - 1)) out.push_back({false, j, i});
        if (!has(i, j + 1)) out.push_back({false, (j + 1) % ps.s, i});
    }
    return out;
}

void validate_pixels(const PixelSet& ps) {
    if (ps.s < 1) throw InvalidRegion("pixel grid size < 1");
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : ps.cells) {
        if (i < 0 || i >= ps.s || j < 0 || j >= ps.s) throw InvalidRegion("cell out of range");
        if (!seen.insert({i, j}).second) throw InvalidRegion("duplicate cell");
    }
    if (ps.cells.empty()) throw InvalidRegion("empty pixel set");
}

double pixel_diameter(const PixelSet& ps) {
    validate_pixels(ps);
    const double s = ps.s;

    // If the set contains an antipodal pair the diameter is the full sqrt(2)/2;
    // such pairs can sit in the interior, so corner/boundary candidates miss
    // them. Cells (i,j) and (k,l) hold antipodes iff the closed cells overlap
    // after shifting by (s/2, s/2) circularly in each axis.
    auto half_shift_overlap = [&](int a, int b) {
        double d = std::fabs(a - b - s / 2.0);
        d = std::fmod(d, s);
        return std::min(d, s - d) <= 1.0 + 1e-12;
    };
    for (auto [i, j] : ps.cells)
        for (auto [k, l] : ps.cells)
            if (half_shift_overlap(i, k) && half_shift_overlap(j, l))
                return std::numbers::sqrt2 / 2.0;
    std::set<std::pair<int, int>> corners;
    for (auto [i, j] : ps.cells)
        for (int di = 0; di <= 1; ++di)
            for (int dj = 0; dj <= 1; ++dj)
                corners.insert({(i + di) % ps.s, (j + dj) % ps.s});

    std::vector<TorusPoint> pts;
    pts.reserve(corners.size());
    for (auto [a, b] : corners) pts.push_back({a / s, b / s});

    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, torus_dist(pts[i], pts[j]));

    // Corner-to-boundary candidates at coordinate offset exactly 1/2, the
    // polygon rule adapted to rectilinear boundaries. Matters only for odd s;
    // for even s the half-offset lines are grid lines and corners cover them.
    const auto edges = pixel_boundary(ps);
    for (const TorusPoint& p : pts) {
        double cx = wrap01(p.x + 0.5);
        double cy = wrap01(p.y + 0.5);
        for (const PixEdge& e : edges) {
            double f = e.fixed / s, lo = e.lo / s, hi = (e.lo + 1) / s;
            if (e.vertical) {
                for (double y : {cy, cy + 1.0})
                    if (lo <= y && y <= hi) best = std::max(best, torus_dist(p, {f, y}));
            } else {
                for (double x : {cx, cx + 1.0})
                    if (lo <= x && x <= hi) best = std::max(best, torus_dist(p, {x, f}));
            }
        }
    }
    return best;
}

} // namespace

double Region::area() const {
    if (const auto* poly = std::get_if<LiftedPolygon>(&shape)) return poly->area();
    if (const auto* vs = std::get_if<VerticalStrip>(&shape)) return vs->x1 - vs->x0;
    if (const auto* hs = std::get_if<HorizontalStrip>(&shape)) return hs->y1 - hs->y0;
    const auto& ps = std::get<PixelSet>(shape);
    return static_cast<double>(ps.cells.size()) / (static_cast<double>(ps.s) * ps.s);
}

void Region::validate() const {
    if (const auto* poly = std::get_if<LiftedPolygon>(&shape)) {
        poly->validate();
    } else if (const auto* vs = std::get_if<VerticalStrip>(&shape)) {
        if (!(0.0 <= vs->x0 && vs->x0 < vs->x1 && vs->x1 <= 1.0 + 1e-12))
            throw InvalidRegion("vertical strip bounds");
    } else if (const auto* hs = std::get_if<HorizontalStrip>(&shape)) {
        if (!(0.0 <= hs->y0 && hs->y0 < hs->y1 && hs->y1 <= 1.0 + 1e-12))
            throw InvalidRegion("horizontal strip bounds");
    } else {
        validate_pixels(std::get<PixelSet>(shape));
    }
}

double region_diameter(const Region& r) {
    if (const auto* poly = std::get_if<LiftedPolygon>(&r.shape)) return polygon_diameter(*poly);
    if (const auto* vs = std::get_if<VerticalStrip>(&r.shape)) return strip_diameter(vs->x0, vs->x1);
    if (const auto* hs = std::get_if<HorizontalStrip>(&r.shape)) return strip_diameter(hs->y0, hs->y1);
    return pixel_diameter(std::get<PixelSet>(r.shape));
}

namespace {

// Containment of a canonical point in a lifted polygon: try every integer
// translate of the point that can land in the lift's bounding box.
bool polygon_covers(const LiftedPolygon& poly, const TorusPoint& p, double tol, bool interior) {
    BBox bb = bbox_of(poly.vertices);
    int nx0 = static_cast<int>(std::floor(bb.x0 - tol - p.x));
    int nx1 = static_cast<int>(std::ceil(bb.x1 + tol - p.x));
    int ny0 = static_cast<int>(std::floor(bb.y0 - tol - p.y));
    int ny1 = static_cast<int>(std::ceil(bb.y1 + tol - p.y));
    for (int nx = nx0; nx <= nx1; ++nx) {
        for (int ny = ny0; ny <= ny1; ++ny) {
            Vec2 q{p.x + nx, p.y + ny};
            if (q.x < bb.x0 - tol || q.x > bb.x1 + tol || q.y < bb.y0 - tol || q.y > bb.y1 + tol)
                continue;
            bool inside = point_in_polygon(poly.vertices, q);
            if (interior) {
                if (inside && dist_point_polygon_boundary(poly.vertices, q) > tol) return true;
            } else {
                if (inside) return true;
                if (dist_point_polygon_boundary(poly.vertices, q) <= tol) return true;
            }
        }
    }
    return false;
}

bool pixels_cover(const PixelSet& ps, const TorusPoint& p, double tol, bool interior) {
    const double s = ps.s;
    bool covered = false;
    for (auto [i, j] : ps.cells) {
        double dx = circ_interval_dist(p.x, i / s, (i + 1) / s);
        double dy = circ_interval_dist(p.y, j / s, (j + 1) / s);
        if (std::hypot(dx, dy) <= tol) { covered = true; break; }
    }
    if (!covered) return false;
    if (!interior) return true;
    for (const PixEdge& e : pixel_boundary(ps)) {
        double f = e.fixed / s, lo = e.lo / s, hi = (e.lo + 1) / s;
        double d;
        if (e.vertical) {
            double dx = std::fabs(p.x - f);
            dx = std::min(dx, 1.0 - dx);
            d = std::hypot(dx, circ_interval_dist(p.y, lo, hi));
        } else {
            double dy = std::fabs(p.y - f);
            dy = std::min(dy, 1.0 - dy);
            d = std::hypot(circ_interval_dist(p.x, lo, hi), dy);
        }
        if (d <= tol) return false;
    }
    return true;
}

bool circ_in_interval(double t, double lo, double hi, double tol) {
    for (int s = -1; s <= 1; ++s)
        if (lo - tol <= t + s && t + s <= hi + tol) return true;
    return false;
}

} // namespace

bool region_covers(const Region& r, const TorusPoint& p, double tol) {
    if (const auto* poly = std::get_if<LiftedPolygon>(&r.shape))
        return polygon_covers(*poly, p, tol, false);
    if (const auto* vs = std::get_if<VerticalStrip>(&r.shape))
        return circ_in_interval(p.x, vs->x0, vs->x1, tol);
    if (const auto* hs = std::get_if<HorizontalStrip>(&r.shape))
        return circ_in_interval(p.y, hs->y0, hs->y1, tol);
    return pixels_cover(std::get<PixelSet>(r.shape), p, tol, false);
}

bool region_interior(const Region& r, const TorusPoint& p, double tol) {
    if (const auto* poly = std::get_if<LiftedPolygon>(&r.shape))
        return polygon_covers(*poly, p, tol, true);
    if (const auto* vs = std::get_if<VerticalStrip>(&r.shape))
        return circ_in_interval(p.x, vs->x0 + tol, vs->x1 - tol, 0.0) && vs->x1 - vs->x0 > 2 * tol;
    if (const auto* hs = std::get_if<HorizontalStrip>(&r.shape))
        return circ_in_interval(p.y, hs->y0 + tol, hs->y1 - tol, 0.0) && hs->y1 - hs->y0 > 2 * tol;
    return pixels_cover(std::get<PixelSet>(r.shape), p, tol, true);
}

VerificationReport verify_partition(const Partition& p, int probe_grid) {
    VerificationReport rep;
    rep.probe_grid = probe_grid;
    if (static_cast<int>(p.regions.size()) != p.m) {
        rep.detail = "region count does not match m";
        return rep;
    }

    double area = 0.0;
    for (const Region& r : p.regions) {
        r.validate();
        area += r.area();
    }
    rep.area_sum = area;
    rep.area_ok = std::fabs(area - 1.0) <= 1e-9;

    rep.max_diameter = 0.0;
    rep.diameters_ok = true;
    for (const Region& r : p.regions) {
        double d = region_diameter(r);
        rep.region_diameters.push_back(d);
        rep.max_diameter = std::max(rep.max_diameter, d);
        if (d > p.tau + 1e-12) rep.diameters_ok = false;
    }

    const double tol = 1e-9;
    rep.uncovered_probes = 0;
    rep.overlapping_probes = 0;
    const int n = probe_grid;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            TorusPoint q{(i + 0.5) / n, (j + 0.5) / n};
            int covered = 0, interior = 0;
            for (const Region& r : p.regions) {
                if (region_covers(r, q, tol)) {
                    ++covered;
                    if (region_interior(r, q, tol)) ++interior;
                }
            }
            if (covered == 0) ++rep.uncovered_probes;
            if (interior >= 2) ++rep.overlapping_probes;
        }
    }
    rep.coverage_ok = rep.uncovered_probes == 0;
    rep.disjoint_ok = rep.overlapping_probes == 0;
    rep.pass = rep.area_ok && rep.coverage_ok && rep.disjoint_ok && rep.diameters_ok;
    return rep;
}

} // namespace torus
