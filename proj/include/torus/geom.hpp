#ifndef TORUS_GEOM_HPP
#define TORUS_GEOM_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace torus {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

/// Fractional part in [0,1); maps -0.0 and 1.0-eps rounding artifacts to 0.
inline double wrap01(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) f = 0.0;
    return f;
}

/// Signed area of a polygon (positive for counterclockwise order).
inline double signed_area(const std::vector<Vec2>& v) {
    double a = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % n];
        a += cross(p, q);
    }
    return 0.5 * a;
}

/// Even-odd point-in-polygon test in the plane (boundary points unreliable).
inline bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

inline double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return norm(p - a);
    double t = dot(p - a, ab) / len2;
    t = std::fmax(0.0, std::fmin(1.0, t));
    return norm(p - (a + ab * t));
}

inline double dist_point_polygon_boundary(const std::vector<Vec2>& poly, const Vec2& p) {
    double d = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        d = std::fmin(d, dist_point_segment(p, poly[i], poly[(i + 1) % n]));
    return d;
}

/// Proper or touching intersection of open segments ab and cd, endpoints excluded.
bool segments_intersect_interior(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// True if the closed polyline has no self-intersection (shared endpoints of
/// consecutive edges allowed).
bool polygon_is_simple(const std::vector<Vec2>& poly);

/// Clip a convex polygon by the half-plane dot(n, p) <= c (Sutherland-Hodgman).
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& n, double c);

} // namespace torus

#endif
