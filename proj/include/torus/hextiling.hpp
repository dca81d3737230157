#ifndef TORUS_HEXTILING_HPP
#define TORUS_HEXTILING_HPP

#include <array>
#include <optional>
#include <vector>

#include "torus/core.hpp"
#include "torus/rational.hpp"

namespace torus::hex {

/// Periodic tiling of the torus by m translates of one centrally symmetric
/// hexagon with consecutive edge vectors p1, p2, p3. The integer triples
/// (a, b) express the torus periods through p1, p2, p3 and must satisfy
/// a1*b2 - a2*b1 = a2*b3 - a3*b2 = a1*b3 - a3*b1 = +-m.
struct HexTilingSpec {
    std::array<long long, 3> a{};
    std::array<long long, 3> b{};
    int m = 0;
    Rat alpha2, alpha3, beta2, beta3;
    Rat C; // alpha2^2 + alpha3^2 + beta2^2 + beta3^2
};

struct HexOptimum {
    Rat x_star, y_star;
    Rat f_min;
    double tau() const;
    std::array<RatVec2, 3> edge_vectors() const; // p1, p2, p3

    Rat alpha2, alpha3, beta2, beta3;
};

HexTilingSpec solve_hex_system(const std::array<long long, 3>& a,
                               const std::array<long long, 3>& b, int m);

/// Squared longest diagonal of the hexagon with p1 = (x, y), exact.
Rat hex_objective(const HexTilingSpec& spec, const Rat& x, const Rat& y);

/// Exact global minimum of the convex piecewise quadratic objective by
/// candidate enumeration over the smooth pieces, their boundary lines, and
/// line intersections; lexicographic (x, y) tie-break.
HexOptimum minimize_hex(const HexTilingSpec& spec);

/// The m-hexagon partition generated by the optimum; tau = sqrt(f_min).
Partition hex_partition(const HexOptimum& opt, int m);

/// Exact rational area of the hexagon (should equal 1/m).
Rat hexagon_area(const HexOptimum& opt);

/// Best known parameter sets for m in {7,...,12,14,15,16}.
struct KnownRow {
    int m;
    std::array<long long, 3> a, b;
};
const std::vector<KnownRow>& known_rows();
std::optional<KnownRow> known_row(int m);

/// Search integer triples with |a_i|, |b_i| <= box for the best tiling of a
/// given m; returns nullopt when no admissible triple exists.
std::optional<HexTilingSpec> search_spec(int m, long long box = 5);

} // namespace torus::hex

#endif
