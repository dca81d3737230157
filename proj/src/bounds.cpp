#include "torus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <iomanip>

#include "torus/errors.hpp"

namespace torus::bounds {

namespace {
const double kDiamTorus = std::numbers::sqrt2 / 2.0;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::stripes: return "stripes";
        case Method::area: return "area";
        case Method::pigeonhole: return "pigeonhole";
        case Method::sat: return "sat";
        case Method::sat_geometry: return "sat+geometry";
        case Method::hex: return "hex";
        case Method::globopt: return "globopt";
    }
    return "?";
}

double stripe_upper(int m) {
    if (m < 1) throw DomainError("stripe_upper: m must be positive");
    double v = std::sqrt(0.25 + 1.0 / (static_cast<double>(m) * m));
    return std::min(v, kDiamTorus);
}

double area_lower(int m) {
    if (m < 6) throw DomainError("area_lower: requires m >= 6");
    return 2.0 / std::sqrt(std::numbers::pi * m);
}

double pigeonhole_lower(int m) {
    if (m < 1) throw DomainError("pigeonhole_lower: m must be positive");
    int k = 1;
    while (static_cast<long long>(k) * k + k - 1 < m) ++k;
    return 1.0 / k;
}

double exact_value(int m) {
    if (m == 1 || m == 2) return kDiamTorus;
    if (m == 3) return std::sqrt(13.0) / 6.0;
    throw DomainError("exact_value: known only for m in {1,2,3}");
}

Partition stripe_partition(int m) {
    if (m < 1) throw DomainError("stripe_partition: m must be positive");
    Partition p;
    p.m = m;
    p.tau = stripe_upper(m);
    p.provenance = "stripes";
    for (int i = 0; i < m; ++i) {
        Region r;
        r.shape = VerticalStrip{static_cast<double>(i) / m, static_cast<double>(i + 1) / m};
        p.regions.push_back(std::move(r));
    }
    return p;
}

BoundRecord best_bounds(int m,
                        const std::vector<LowerEstimate>& lowers,
                        const std::vector<UpperEstimate>& uppers) {
    if (m < 1) throw DomainError("best_bounds: m must be positive");
    BoundRecord rec;
    rec.m = m;

    // the k=1 pigeonhole value exceeds diam T^2; no lower bound can
    rec.lower = std::min(pigeonhole_lower(m), kDiamTorus);
    rec.lower_method = Method::pigeonhole;
    auto take_lower = [&](double v, Method mm) {
        if (v > rec.lower) { rec.lower = v; rec.lower_method = mm; }
    };
    if (m <= 3 && exact_value(m) >= rec.lower) {
        rec.lower = exact_value(m);
        rec.lower_method = Method::exact;
    }
    if (m >= 6) take_lower(area_lower(m), Method::area);
    for (const LowerEstimate& le : lowers)
        if (le.m >= m) take_lower(le.tau, le.method);

    rec.upper = stripe_upper(m);
    rec.upper_method = m <= 3 ? (m == 1 ? Method::exact : Method::stripes) : Method::stripes;
    for (const UpperEstimate& ue : uppers)
        if (ue.m <= m && ue.tau < rec.upper) { rec.upper = ue.tau; rec.upper_method = ue.method; }
    return rec;
}

std::vector<LowerEstimate> builtin_sat_lowers() {
    return {
        {4, std::sqrt(12401.0) / 200.0, Method::sat},
        {5, std::sqrt(7850.0) / 170.0, Method::sat},
        {6, std::sqrt(73.0) / 18.0, Method::sat},
        {7, 4.0 / 9.0, Method::sat},
    };
}

std::vector<UpperEstimate> builtin_geometry_uppers() {
    return {
        {5, std::sqrt(10.0) / 6.0, Method::sat_geometry},
        {6, std::sqrt(17.0) / 8.0, Method::sat_geometry},
        {7, std::sqrt(5.0 - std::sqrt(7.0)) / 3.0, Method::sat_geometry},
    };
}

std::vector<BoundRecord> bound_table(int m_max,
                                     const std::vector<LowerEstimate>& extra_lowers,
                                     const std::vector<UpperEstimate>& extra_uppers) {
    std::vector<LowerEstimate> lowers = builtin_sat_lowers();
    lowers.insert(lowers.end(), extra_lowers.begin(), extra_lowers.end());
    std::vector<UpperEstimate> uppers = builtin_geometry_uppers();
    uppers.insert(uppers.end(), extra_uppers.begin(), extra_uppers.end());
    std::vector<BoundRecord> rows;
    for (int m = 1; m <= m_max; ++m) rows.push_back(best_bounds(m, lowers, uppers));
    return rows;
}

std::string format_table(const std::vector<BoundRecord>& rows) {
    std::ostringstream os;
    os << std::setw(4) << "m" << std::setw(12) << "lower" << std::setw(12) << "upper"
       << std::setw(14) << "lower_method" << std::setw(14) << "upper_method"
       << std::setw(10) << "gap" << "\n";
    for (const BoundRecord& r : rows) {
        os << std::setw(4) << r.m << std::fixed << std::setprecision(6)
           << std::setw(12) << r.lower << std::setw(12) << r.upper
           << std::setw(14) << method_name(r.lower_method)
           << std::setw(14) << method_name(r.upper_method);
        if (r.upper - r.lower < 1e-9)
            os << std::setw(10) << "exact";
        else
            os << std::setw(10) << std::setprecision(4) << r.gap();
        os << "\n";
        os.unsetf(std::ios::fixed);
    }
    return os.str();
}

std::string format_table_csv(const std::vector<BoundRecord>& rows) {
    std::ostringstream os;
    os << "m,lower,upper,lower_method,upper_method,gap\n";
    for (const BoundRecord& r : rows) {
        os << r.m << ',' << std::setprecision(15) << r.lower << ',' << r.upper << ','
           << method_name(r.lower_method) << ',' << method_name(r.upper_method) << ','
           << r.gap() << "\n";
    }
    return os.str();
}

} // namespace torus::bounds
