#ifndef TORUS_CORE_HPP
#define TORUS_CORE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torus/geom.hpp"

namespace torus {

/// A point of the flat torus T^2 = R^2 / Z^2, stored with canonical
/// coordinates in [0,1)^2.
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    TorusPoint() = default;
    TorusPoint(double x_, double y_) : x(wrap01(x_)), y(wrap01(y_)) {}
};

/// Quotient metric on the torus. Always <= sqrt(2)/2.
double torus_dist(const TorusPoint& u, const TorusPoint& v);

/// Polygonal torus region given by one lift to the plane: the region is the
/// image of the polygon modulo 1. Vertices are counterclockwise, the boundary
/// is simple, and consecutive displacements stay below 1 in each coordinate.
struct LiftedPolygon {
    std::vector<Vec2> vertices;

    double area() const { return signed_area(vertices); }
    void validate() const; // throws InvalidPolygon
};

struct VerticalStrip {
    double x0 = 0.0, x1 = 0.0; // 0 <= x0 < x1 <= 1, full y-circle
};

struct HorizontalStrip {
    double y0 = 0.0, y1 = 0.0;
};

/// Union of grid cells [i/s,(i+1)/s] x [j/s,(j+1)/s] on an s x s grid.
struct PixelSet {
    int s = 1;
    std::vector<std::pair<int, int>> cells;
};

struct Region {
    std::variant<LiftedPolygon, VerticalStrip, HorizontalStrip, PixelSet> shape;

    double area() const;
    void validate() const; // throws InvalidRegion / InvalidPolygon
};

struct Partition {
    int m = 0;
    std::vector<Region> regions;
    double tau = 0.0;
    std::string provenance;
};

/// Exact diameter of a lifted polygon under the torus metric: max over vertex
/// pairs and over vertex-to-boundary candidates where one coordinate differs
/// by exactly 1/2. Requires the lift to fit in a 1x1 window.
double polygon_diameter(const LiftedPolygon& p);

double region_diameter(const Region& r);

struct VerificationReport {
    bool pass = false;
    bool coverage_ok = false;
    bool disjoint_ok = false;
    bool area_ok = false;
    bool diameters_ok = false;
    double area_sum = 0.0;
    double max_diameter = 0.0;
    std::vector<double> region_diameters;
    int uncovered_probes = 0;
    int overlapping_probes = 0;
    int probe_grid = 0;
    std::string detail;
};

/// Certifies a partition: area sum, probe-grid coverage and interior
/// disjointness, and per-region diameters against the claimed tau.
VerificationReport verify_partition(const Partition& p, int probe_grid = 512);

/// Signed containment helpers used by the verifier and tests.
/// covered: point within tol of the closed region (torus sense).
/// interior: point inside with distance to the boundary greater than tol.
bool region_covers(const Region& r, const TorusPoint& p, double tol);
bool region_interior(const Region& r, const TorusPoint& p, double tol);

} // namespace torus

#endif
