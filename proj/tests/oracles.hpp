#ifndef TORUS_TESTS_ORACLES_HPP
#define TORUS_TESTS_ORACLES_HPP

// Test-only brute-force oracles, independent of the library's diameter path.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "torus/core.hpp"

namespace oracle {

// Dense boundary sampling: the diameter of a polygonal torus region is
// attained with both ends on the boundary unless the region contains an
// antipodal pair, which none of the test regions do. Max over sample pairs
// underestimates by at most 2 * pitch.
inline double sampled_polygon_diameter(const torus::LiftedPolygon& poly, double pitch) {
    std::vector<torus::TorusPoint> samples;
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const torus::Vec2 a = v[i];
        const torus::Vec2 b = v[(i + 1) % n];
        const double len = torus::norm(b - a);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / pitch)));
        for (int s = 0; s < steps; ++s) {
            double t = static_cast<double>(s) / steps;
            samples.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    double best = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            best = std::max(best, torus::torus_dist(samples[i], samples[j]));
    return best;
}

// Star-shaped random polygon around a random center; anisotropic radii so a
// good fraction of polygons span more than 1/2 in x and exercise wraparound.
inline torus::LiftedPolygon random_polygon(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const int n = 3 + static_cast<int>(uni(rng) * 6);
    const double cx = uni(rng), cy = uni(rng);
    const double rx = 0.08 + 0.37 * uni(rng);
    const double ry = 0.05 + 0.15 * uni(rng);
    std::vector<double> angles(n);
    for (double& a : angles) a = 2.0 * M_PI * uni(rng);
    std::sort(angles.begin(), angles.end());
    // reject near-duplicate angles to keep the polygon simple
    for (int i = 1; i < n; ++i)
        if (angles[i] - angles[i - 1] < 0.05) angles[i] = angles[i - 1] + 0.05;
    torus::LiftedPolygon poly;
    for (double a : angles) {
        double r = 0.5 + 0.5 * uni(rng);
        poly.vertices.push_back({cx + rx * r * std::cos(a), cy + ry * r * std::sin(a)});
    }
    if (torus::signed_area(poly.vertices) < 0)
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

} // namespace oracle

#endif
