#ifndef TORUS_GLOBALOPT_HPP
#define TORUS_GLOBALOPT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "torus/core.hpp"

namespace torus::opt {

/// Polygonal partition of the torus as a shared-vertex mesh. Vertex positions
/// live in the plane; each face references vertices together with an integer
/// lift shift, so moving a vertex moves every incident face consistently.
struct MeshPartition {
    struct FaceVertex {
        int v = 0;
        double sx = 0.0, sy = 0.0; // integer-valued lift shift
    };

    std::vector<Vec2> vertices;
    std::vector<std::vector<FaceVertex>> faces;

    Vec2 lift(const FaceVertex& fv) const { return {vertices[fv.v].x + fv.sx, vertices[fv.v].y + fv.sy}; }
    std::vector<Vec2> face_polygon(std::size_t i) const;

    /// Checks face simplicity, the every-edge-shared-by-two-faces property and
    /// the toroidal Euler relation r - e + m = 0.
    void validate() const;
};

/// Builds a shared-vertex mesh from per-face lifted polygons, merging vertices
/// that coincide modulo 1 within merge_tol.
MeshPartition mesh_from_polygons(const std::vector<LiftedPolygon>& polys, double merge_tol = 1e-6);

/// m centers spread by max-min-distance ascent from a seeded random start.
std::vector<TorusPoint> seed_circle_packing(int m, std::uint64_t seed);

/// Torus Voronoi diagram via 3x3 replication and convex half-plane clipping.
/// With require_small, throws CellTooLarge when a cell diameter reaches 1/2
/// (the regime where the vertex-pair diameter formula breaks down).
MeshPartition torus_voronoi(const std::vector<TorusPoint>& centers, bool require_small = true);

/// phi(X) = max over faces of the max pairwise lifted vertex distance.
/// Throws LiftViolation when a face diameter reaches 1/2.
double objective(const MeshPartition& mp);

struct OptimizerConfig {
    int restarts = 20;
    int iterations = 5000;
    double step_size = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 0;
    double softmax_temperature = 0.0; // 0 = hard max with tie averaging
};

struct DescentState {
    std::vector<double> m1, m2; // Adam moment accumulators, 2 per vertex
    long step = 0;
    double trust = 1.0; // step-size scale, halved on rejection
};

/// Subgradient of phi with respect to vertex coordinates (2r entries). Hard
/// max averages all attaining pairs; temperature > 0 softmax-smooths.
std::vector<double> subgradient(const MeshPartition& mp, double softmax_temperature = 0.0);

/// One adaptive-moment update with step rejection: a step is accepted only if
/// every face stays simple, diameters stay below 1/2 and phi does not
/// increase. Returns phi after the step. Throws StuckStep when the effective
/// step underflows 1e-15.
double descent_step(MeshPartition& mp, const OptimizerConfig& cfg, DescentState& st);

struct RestartLogEntry {
    int restart = 0;
    int iteration = 0;
    double phi = 0.0;
};

/// Multi-restart pipeline: circle packing -> Voronoi -> descent; best result
/// by final phi (restart index breaks ties). Requires m >= 5.
Partition optimize(int m, const OptimizerConfig& cfg, std::vector<RestartLogEntry>* log = nullptr);

Partition mesh_to_partition(const MeshPartition& mp, const std::string& provenance);

} // namespace torus::opt

#endif
