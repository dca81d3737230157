#include "torus/hextiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "torus/errors.hpp"

namespace torus::hex {

namespace {

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

} // namespace

HexTilingSpec solve_hex_system(const std::array<long long, 3>& a,
                               const std::array<long long, 3>& b, int m) {
    const long long m12 = a[0] * b[1] - a[1] * b[0];
    const long long m23 = a[1] * b[2] - a[2] * b[1];
    const long long m13 = a[0] * b[2] - a[2] * b[0];
    if (m23 == 0) throw DegenerateSpec("a2*b3 - a3*b2 = 0");
    if (!((m12 == m && m23 == m && m13 == m) || (m12 == -m && m23 == -m && m13 == -m)))
        throw InconsistentSpec("2x2 minors are not all equal to +m or all to -m");

    HexTilingSpec spec;
    spec.a = a;
    spec.b = b;
    spec.m = m;
    const Rat D(m23);
    spec.alpha2 = Rat(b[2]) / D;
    spec.alpha3 = Rat(-b[1]) / D;
    spec.beta2 = Rat(-a[2]) / D;
    spec.beta3 = Rat(a[1]) / D;
    spec.C = spec.alpha2 * spec.alpha2 + spec.alpha3 * spec.alpha3 +
             spec.beta2 * spec.beta2 + spec.beta3 * spec.beta3;
    return spec;
}

Rat hex_objective(const HexTilingSpec& spec, const Rat& x, const Rat& y) {
    const Rat L1 = x * (spec.alpha2 + spec.alpha3) + y * (spec.beta2 + spec.beta3);
    const Rat L2 = x * (spec.alpha3 - spec.alpha2) + y * (spec.beta3 - spec.beta2);
    const Rat E = spec.alpha2 * spec.alpha3 + spec.beta2 * spec.beta3;
    const Rat g = std::max(Rat(rat_abs(L1) + E), Rat(L2 - E));
    return x * x + y * y + spec.C + 2 * g;
}

HexOptimum minimize_hex(const HexTilingSpec& spec) {
    const RatVec2 u1{spec.alpha2 + spec.alpha3, spec.beta2 + spec.beta3};
    const RatVec2 u2{spec.alpha3 - spec.alpha2, spec.beta3 - spec.beta2};
    const Rat E = spec.alpha2 * spec.alpha3 + spec.beta2 * spec.beta3;

    std::vector<RatVec2> candidates;
    // unconstrained minimizers of the three smooth quadratic pieces
    candidates.push_back(-u1);
    candidates.push_back(u1);
    candidates.push_back(-u2);

    // piece-boundary lines c.p = d
    struct Line {
        RatVec2 c;
        Rat d;
    };
    const std::vector<Line> lines = {
        {u1, Rat(0)},            // |L1| kink
        {u1 - u2, -2 * E},       // L1 + E = L2 - E
        {u1 + u2, 2 * E},        // -L1 + E = L2 - E
    };
    const std::vector<RatVec2> grads = {u1, -u1, u2};
    for (const Line& ln : lines) {
        const Rat cc = norm2(ln.c);
        if (cc == 0) continue;
        for (const RatVec2& g : grads) {
            // min of |p + g|^2 subject to c.p = d
            const Rat lambda = (ln.d + dot(ln.c, g)) / cc;
            candidates.push_back({-g.x + lambda * ln.c.x, -g.y + lambda * ln.c.y});
        }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Rat det = cross(lines[i].c, lines[j].c);
            if (det == 0) continue;
            const Rat x = (lines[i].d * lines[j].c.y - lines[j].d * lines[i].c.y) / det;
            const Rat y = (lines[i].c.x * lines[j].d - lines[j].c.x * lines[i].d) / det;
            candidates.push_back({x, y});
        }
    }

    bool have = false;
    HexOptimum best;
    for (const RatVec2& p : candidates) {
        const Rat f = hex_objective(spec, p.x, p.y);
        if (!have || f < best.f_min ||
            (f == best.f_min && (p.x < best.x_star ||
                                 (p.x == best.x_star && p.y < best.y_star)))) {
            have = true;
            best.x_star = p.x;
            best.y_star = p.y;
            best.f_min = f;
        }
    }
    best.alpha2 = spec.alpha2;
    best.alpha3 = spec.alpha3;
    best.beta2 = spec.beta2;
    best.beta3 = spec.beta3;
    return best;
}

double HexOptimum::tau() const { return std::sqrt(to_double(f_min)); }

std::array<RatVec2, 3> HexOptimum::edge_vectors() const {
    return {RatVec2{x_star, y_star},
            RatVec2{-x_star + alpha2, -y_star + beta2},
            RatVec2{x_star + alpha3, y_star + beta3}};
}

Rat hexagon_area(const HexOptimum& opt) {
    const auto [p1, p2, p3] = opt.edge_vectors();
    const std::array<RatVec2, 6> v = {RatVec2{Rat(0), Rat(0)}, p1, p1 + p2,
                                      p1 + p2 + p3, p2 + p3, p3};
    Rat a(0);
    for (std::size_t i = 0; i < 6; ++i) a += cross(v[i], v[(i + 1) % 6]);
    return rat_abs(a) / 2;
}

Partition hex_partition(const HexOptimum& opt, int m) {
    const auto [p1, p2, p3] = opt.edge_vectors();
    for (const RatVec2& p : {p1, p2, p3})
        if (p.x == 0 && p.y == 0) throw DegenerateHexagon("zero edge vector");

    if (hexagon_area(opt) != Rat(1, m))
        throw DegenerateHexagon("hexagon area is not 1/m");

    std::array<RatVec2, 6> hexagon = {RatVec2{Rat(0), Rat(0)}, p1, p1 + p2,
                                      p1 + p2 + p3, p2 + p3, p3};
    {
        Rat a(0);
        for (std::size_t i = 0; i < 6; ++i) a += cross(hexagon[i], hexagon[(i + 1) % 6]);
        if (a < 0) std::reverse(hexagon.begin(), hexagon.end());
    }

    // translation group generated by p1+p2 and p2+p3 modulo 1
    const RatVec2 t1 = p1 + p2, t2 = p2 + p3;
    std::set<std::pair<Rat, Rat>> seen;
    std::vector<RatVec2> translates;
    std::vector<RatVec2> frontier = {{Rat(0), Rat(0)}};
    seen.insert({Rat(0), Rat(0)});
    translates.push_back({Rat(0), Rat(0)});
    while (!frontier.empty() && static_cast<int>(translates.size()) <= 4 * m) {
        RatVec2 cur = frontier.back();
        frontier.pop_back();
        for (const RatVec2& step : {t1, t2, -t1, -t2}) {
            RatVec2 nxt{rat_frac(cur.x + step.x), rat_frac(cur.y + step.y)};
            if (seen.insert({nxt.x, nxt.y}).second) {
                translates.push_back(nxt);
                frontier.push_back(nxt);
            }
        }
    }
    if (static_cast<int>(translates.size()) != m)
        throw DegenerateHexagon("tiling lattice yields " + std::to_string(translates.size()) +
                                " translates, expected " + std::to_string(m));
    std::sort(translates.begin(), translates.end(), [](const RatVec2& a, const RatVec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });

    Partition part;
    part.m = m;
    part.tau = opt.tau();
    part.provenance = "hex m=" + std::to_string(m);
    for (const RatVec2& t : translates) {
        LiftedPolygon poly;
        for (const RatVec2& v : hexagon)
            poly.vertices.push_back({to_double(t.x + v.x), to_double(t.y + v.y)});
        try {
            poly.validate();
        } catch (const InvalidPolygon& e) {
            throw DegenerateHexagon(e.what());
        }
        Region r;
        r.shape = std::move(poly);
        part.regions.push_back(std::move(r));
    }
    return part;
}

const std::vector<KnownRow>& known_rows() {
    static const std::vector<KnownRow> rows = {
        {7, {3, 1, -2}, {-1, 2, 3}},
        {8, {3, 2, -1}, {-1, 2, 3}},
        {9, {1, 3, 2}, {3, 0, -3}},
        {10, {3, 2, -1}, {-2, 2, 4}},
        {11, {-1, 2, 3}, {4, 3, -1}},
        {12, {2, 4, 2}, {3, 0, -3}},
        {14, {4, 2, -2}, {1, 4, 3}},
        {15, {4, 3, -1}, {-1, 3, 4}},
        {16, {4, 2, -2}, {0, 4, 4}},
    };
    return rows;
}

std::optional<KnownRow> known_row(int m) {
    for (const KnownRow& r : known_rows())
        if (r.m == m) return r;
    return std::nullopt;
}

std::optional<HexTilingSpec> search_spec(int m, long long box) {
    std::optional<HexTilingSpec> best;
    Rat best_f;
    std::set<std::array<Rat, 4>> seen;
    std::array<long long, 3> a{}, b{};
    for (a[0] = -box; a[0] <= box; ++a[0])
    for (a[1] = -box; a[1] <= box; ++a[1])
    for (a[2] = -box; a[2] <= box; ++a[2])
    for (b[0] = -box; b[0] <= box; ++b[0])
    for (b[1] = -box; b[1] <= box; ++b[1])
    for (b[2] = -box; b[2] <= box; ++b[2]) {
        const long long m12 = a[0] * b[1] - a[1] * b[0];
        if (m12 != m && m12 != -m) continue;
        const long long m23 = a[1] * b[2] - a[2] * b[1];
        if (m23 != m12 || m23 == 0) continue;
        const long long m13 = a[0] * b[2] - a[2] * b[0];
        if (m13 != m12) continue;
        HexTilingSpec spec = solve_hex_system(a, b, m);
        if (!seen.insert({spec.alpha2, spec.alpha3, spec.beta2, spec.beta3}).second) continue;
        HexOptimum opt = minimize_hex(spec);
        // only keep specs that actually tile
        try {
            hex_partition(opt, m);
        } catch (const DegenerateHexagon&) {
            continue;
        }
        if (!best || opt.f_min < best_f) {
            best = spec;
            best_f = opt.f_min;
        }
    }
    return best;
}

} // namespace torus::hex
