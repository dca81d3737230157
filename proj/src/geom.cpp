#include "torus/geom.hpp"

#include <algorithm>

namespace torus {

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    double v = cross(b - a, c - a);
    const double eps = 1e-15;
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return std::min(a.x, b.x) - 1e-15 <= p.x && p.x <= std::max(a.x, b.x) + 1e-15 &&
           std::min(a.y, b.y) - 1e-15 <= p.y && p.y <= std::max(a.y, b.y) + 1e-15;
}

} // namespace

bool segments_intersect_interior(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap beyond a shared endpoint counts
        double lo1 = std::min(a.x, b.x), hi1 = std::max(a.x, b.x);
        double lo2 = std::min(c.x, d.x), hi2 = std::max(c.x, d.x);
        double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (hi - lo > 1e-14) return true;
        lo1 = std::min(a.y, b.y); hi1 = std::max(a.y, b.y);
        lo2 = std::min(c.y, d.y); hi2 = std::max(c.y, d.y);
        lo = std::max(lo1, lo2); hi = std::min(hi1, hi2);
        return hi - lo > 1e-14;
    }
    return false;
}

bool polygon_is_simple(const std::vector<Vec2>& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        if (norm(b - a) < 1e-14) return false; // degenerate edge
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip edges sharing an endpoint with edge i
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            const Vec2& c = poly[j];
            const Vec2& d = poly[(j + 1) % n];
            if (segments_intersect_interior(a, b, c, d)) return false;
        }
    }
    return true;
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& nrm, double c) {
    std::vector<Vec2> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        double dp = dot(nrm, p) - c;
        double dq = dot(nrm, q) - c;
        if (dp <= 0) out.push_back(p);
        if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0)) {
            double t = dp / (dp - dq);
            out.push_back(p + (q - p) * t);
        }
    }
    return out;
}

} // namespace torus
