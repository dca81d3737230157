#ifndef TORUS_BOUNDS_HPP
#define TORUS_BOUNDS_HPP

#include <string>
#include <vector>

#include "torus/core.hpp"

namespace torus::bounds {

enum class Method { exact, stripes, area, pigeonhole, sat, sat_geometry, hex, globopt };

std::string method_name(Method m);

struct BoundRecord {
    int m = 0;
    double lower = 0.0;
    double upper = 0.0;
    Method lower_method = Method::pigeonhole;
    Method upper_method = Method::stripes;

    double gap() const { return (upper - lower) / lower; }
};

/// Lower bound certified for partitions into `m` parts (valid for all m' <= m
/// by monotonicity of d_m).
struct LowerEstimate {
    int m = 0;
    double tau = 0.0;
    Method method = Method::sat;
};

/// Upper bound achieved by a concrete partition into `m` parts (valid for all
/// m' >= m).
struct UpperEstimate {
    int m = 0;
    double tau = 0.0;
    Method method = Method::hex;
};

/// Stripe covering bound sqrt(1/4 + 1/m^2), capped at diam T^2 = sqrt(2)/2.
double stripe_upper(int m);

/// Isodiametric area bound 2/sqrt(pi*m); requires m >= 6 (tau < 1/2).
double area_lower(int m);

/// 1/k with k the least integer satisfying k^2 + k - 1 >= m.
double pigeonhole_lower(int m);

/// Known exact values: sqrt(2)/2 for m in {1,2}, sqrt(13)/6 for m = 3.
double exact_value(int m);

Partition stripe_partition(int m);

BoundRecord best_bounds(int m,
                        const std::vector<LowerEstimate>& lowers = {},
                        const std::vector<UpperEstimate>& uppers = {});

/// Certified lower bounds from the UNSAT grid-graph runs (m, s, k):
/// (4,200,12401), (5,170,7850), (6,18,73), (7,9,16).
std::vector<LowerEstimate> builtin_sat_lowers();

/// Upper bounds from coverings certified by partition analysis:
/// sqrt(10)/6, sqrt(17)/8, (5-sqrt(7))/3 for m = 5, 6, 7.
std::vector<UpperEstimate> builtin_geometry_uppers();

/// Bound table for m = 1..m_max from the built-in records plus any extra
/// estimates (hexagonal tilings, optimizer output).
std::vector<BoundRecord> bound_table(int m_max,
                                     const std::vector<LowerEstimate>& extra_lowers = {},
                                     const std::vector<UpperEstimate>& extra_uppers = {});

std::string format_table(const std::vector<BoundRecord>& rows);
std::string format_table_csv(const std::vector<BoundRecord>& rows);

} // namespace torus::bounds

#endif
