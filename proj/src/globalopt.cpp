#include "torus/globalopt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "torus/errors.hpp"

namespace torus::opt {

std::vector<Vec2> MeshPartition::face_polygon(std::size_t i) const {
    std::vector<Vec2> out;
    out.reserve(faces[i].size());
    for (const FaceVertex& fv : faces[i]) out.push_back(lift(fv));
    return out;
}

void MeshPartition::validate() const {
    const int r = static_cast<int>(vertices.size());
    const int m = static_cast<int>(faces.size());
    // edge key: (v_lo, v_hi, relative shift), orientation-normalized
    std::map<std::tuple<int, int, long, long>, int> edge_count;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& face = faces[i];
        if (face.size() < 3) throw InvalidRegion("mesh face with fewer than 3 vertices");
        std::vector<Vec2> poly = face_polygon(i);
        if (!polygon_is_simple(poly)) throw InvalidRegion("mesh face is not simple");
        if (signed_area(poly) <= 0) throw InvalidRegion("mesh face is not counterclockwise");
        for (std::size_t j = 0; j < face.size(); ++j) {
            const FaceVertex& a = face[j];
            const FaceVertex& b = face[(j + 1) % face.size()];
            if (a.v == b.v && a.sx == b.sx && a.sy == b.sy)
                throw InvalidRegion("degenerate mesh edge");
            long dsx = std::lround(b.sx - a.sx), dsy = std::lround(b.sy - a.sy);
            std::tuple<int, int, long, long> key;
            if (a.v < b.v || (a.v == b.v && std::make_pair(dsx, dsy) > std::make_pair(-dsx, -dsy)))
                key = {a.v, b.v, dsx, dsy};
            else
                key = {b.v, a.v, -dsx, -dsy};
            ++edge_count[key];
        }
    }
    for (const auto& [key, count] : edge_count)
        if (count != 2) throw InvalidRegion("mesh edge not shared by exactly 2 faces");
    const int e = static_cast<int>(edge_count.size());
    if (r - e + m != 0) throw InvalidRegion("toroidal Euler relation r - e + m = 0 violated");
}

MeshPartition mesh_from_polygons(const std::vector<LiftedPolygon>& polys, double merge_tol) {
    MeshPartition mp;
    for (const LiftedPolygon& poly : polys) {
        std::vector<MeshPartition::FaceVertex> face;
        for (const Vec2& p : poly.vertices) {
            TorusPoint canon{p.x, p.y};
            int found = -1;
            for (int i = 0; i < static_cast<int>(mp.vertices.size()); ++i) {
                if (torus_dist({mp.vertices[i].x, mp.vertices[i].y}, canon) < merge_tol) {
                    found = i;
                    break;
                }
            }
            if (found < 0) {
                found = static_cast<int>(mp.vertices.size());
                mp.vertices.push_back({canon.x, canon.y});
            }
            double sx = std::round(p.x - mp.vertices[found].x);
            double sy = std::round(p.y - mp.vertices[found].y);
            face.push_back({found, sx, sy});
        }
        // drop consecutive duplicates introduced by merging
        std::vector<MeshPartition::FaceVertex> clean;
        for (const auto& fv : face) {
            if (!clean.empty() && clean.back().v == fv.v && clean.back().sx == fv.sx &&
                clean.back().sy == fv.sy)
                continue;
            clean.push_back(fv);
        }
        while (clean.size() > 1 && clean.front().v == clean.back().v &&
               clean.front().sx == clean.back().sx && clean.front().sy == clean.back().sy)
            clean.pop_back();
        mp.faces.push_back(std::move(clean));
    }
    mp.validate();
    return mp;
}

std::vector<TorusPoint> seed_circle_packing(int m, std::uint64_t seed) {
    if (m < 1) throw DomainError("seed_circle_packing: m must be positive");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<Vec2> c(m);
    for (Vec2& p : c) p = {uni(rng), uni(rng)};
    if (m == 1) return {TorusPoint{c[0].x, c[0].y}};

    auto min_image = [](const Vec2& a, const Vec2& b) {
        double dx = a.x - b.x, dy = a.y - b.y;
        dx -= std::round(dx);
        dy -= std::round(dy);
        return Vec2{dx, dy};
    };
    const int iters = 200;
    for (int t = 0; t < iters; ++t) {
        double dmin = 2.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                dmin = std::min(dmin, norm(min_image(c[i], c[j])));
        // push apart every pair near the current minimum
        std::vector<Vec2> grad(m, {0.0, 0.0});
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                Vec2 d = min_image(c[i], c[j]);
                double len = norm(d);
                if (len <= dmin + 1e-9 && len > 1e-12) {
                    Vec2 u = d * (1.0 / len);
                    grad[i] = grad[i] + u;
                    grad[j] = grad[j] - u;
                }
            }
        }
        double step = 0.08 * std::pow(0.975, t);
        for (int i = 0; i < m; ++i) {
            c[i].x = wrap01(c[i].x + step * grad[i].x);
            c[i].y = wrap01(c[i].y + step * grad[i].y);
        }
    }
    std::vector<TorusPoint> out;
    out.reserve(m);
    for (const Vec2& p : c) out.push_back({p.x, p.y});
    return out;
}

MeshPartition torus_voronoi(const std::vector<TorusPoint>& centers, bool require_small) {
    const int m = static_cast<int>(centers.size());
    if (m < 1) throw DomainError("torus_voronoi: no centers");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (torus_dist(centers[i], centers[j]) < 1e-9)
                throw DomainError("torus_voronoi: coincident centers");

    std::vector<LiftedPolygon> cells;
    cells.reserve(m);
    for (int i = 0; i < m; ++i) {
        const Vec2 ci{centers[i].x, centers[i].y};
        // start from the fundamental window around the center (bisectors
        // against the center's own translates), then cut with every replica
        std::vector<Vec2> poly = {{ci.x - 0.5, ci.y - 0.5},
                                  {ci.x + 0.5, ci.y - 0.5},
                                  {ci.x + 0.5, ci.y + 0.5},
                                  {ci.x - 0.5, ci.y + 0.5}};
        for (int j = 0; j < m && poly.size() >= 3; ++j) {
            if (j == i) continue;
            for (int dx = -1; dx <= 1; ++dx) {
                for (int dy = -1; dy <= 1; ++dy) {
                    Vec2 q{centers[j].x + dx, centers[j].y + dy};
                    Vec2 n = (q - ci) * 2.0;
                    double c = dot(q, q) - dot(ci, ci);
                    poly = clip_halfplane(poly, n, c);
                    if (poly.size() < 3) break;
                }
                if (poly.size() < 3) break;
            }
        }
        if (poly.size() < 3) throw DomainError("torus_voronoi: empty cell");
        LiftedPolygon cell;
        cell.vertices = std::move(poly);
        cells.push_back(std::move(cell));
    }

    MeshPartition mp = mesh_from_polygons(cells);
    if (require_small) {
        for (std::size_t i = 0; i < mp.faces.size(); ++i) {
            std::vector<Vec2> poly = mp.face_polygon(i);
            for (std::size_t a = 0; a < poly.size(); ++a)
                for (std::size_t b = a + 1; b < poly.size(); ++b)
                    if (norm(poly[a] - poly[b]) >= 0.5)
                        throw CellTooLarge("cell diameter >= 1/2; reseed");
        }
    }
    return mp;
}

double objective(const MeshPartition& mp) {
    double best = 0.0;
    for (std::size_t i = 0; i < mp.faces.size(); ++i) {
        std::vector<Vec2> poly = mp.face_polygon(i);
        for (std::size_t a = 0; a < poly.size(); ++a) {
            for (std::size_t b = a + 1; b < poly.size(); ++b) {
                double d = norm(poly[a] - poly[b]);
                if (d >= 0.5)
                    throw LiftViolation("face diameter >= 1/2; vertex-pair formula invalid");
                best = std::max(best, d);
            }
        }
    }
    return best;
}

std::vector<double> subgradient(const MeshPartition& mp, double softmax_temperature) {
    const double phi = objective(mp);
    std::vector<double> grad(2 * mp.vertices.size(), 0.0);
    double weight_sum = 0.0;
    const bool soft = softmax_temperature > 0.0;
    const double tol = 1e-12;
    for (const auto& face : mp.faces) {
        for (std::size_t a = 0; a < face.size(); ++a) {
            for (std::size_t b = a + 1; b < face.size(); ++b) {
                Vec2 la = mp.lift(face[a]);
                Vec2 lb = mp.lift(face[b]);
                double d = norm(la - lb);
                double w;
                if (soft) {
                    w = std::exp((d - phi) / softmax_temperature);
                    if (w < 1e-12) continue;
                } else {
                    if (d < phi - tol) continue;
                    w = 1.0;
                }
                if (d < 1e-14) continue;
                Vec2 u = (la - lb) * (1.0 / d);
                grad[2 * face[a].v] += w * u.x;
                grad[2 * face[a].v + 1] += w * u.y;
                grad[2 * face[b].v] -= w * u.x;
                grad[2 * face[b].v + 1] -= w * u.y;
                weight_sum += w;
            }
        }
    }
    if (weight_sum > 0.0)
        for (double& g : grad) g /= weight_sum;
    return grad;
}

namespace {

bool mesh_geometry_ok(const MeshPartition& mp) {
    for (std::size_t i = 0; i < mp.faces.size(); ++i) {
        std::vector<Vec2> poly = mp.face_polygon(i);
        if (signed_area(poly) <= 0) return false;
        if (!polygon_is_simple(poly)) return false;
        for (std::size_t a = 0; a < poly.size(); ++a)
            for (std::size_t b = a + 1; b < poly.size(); ++b)
                if (norm(poly[a] - poly[b]) >= 0.5) return false;
    }
    return true;
}

} // namespace

double descent_step(MeshPartition& mp, const OptimizerConfig& cfg, DescentState& st) {
    const std::size_t n = 2 * mp.vertices.size();
    if (st.m1.size() != n) {
        st.m1.assign(n, 0.0);
        st.m2.assign(n, 0.0);
        st.step = 0;
        st.trust = 1.0;
    }
    const double phi0 = objective(mp);
    const std::vector<double> g = subgradient(mp, cfg.softmax_temperature);

    while (true) {
        const double lr = cfg.step_size * st.trust;
        if (lr < 1e-15) throw StuckStep("effective step below 1e-15");

        DescentState trial = st;
        ++trial.step;
        std::vector<Vec2> pos = mp.vertices;
        const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(trial.step));
        const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(trial.step));
        for (std::size_t i = 0; i < n; ++i) {
            trial.m1[i] = cfg.beta1 * trial.m1[i] + (1.0 - cfg.beta1) * g[i];
            trial.m2[i] = cfg.beta2 * trial.m2[i] + (1.0 - cfg.beta2) * g[i] * g[i];
            const double mhat = trial.m1[i] / bc1;
            const double vhat = trial.m2[i] / bc2;
            const double delta = lr * mhat / (std::sqrt(vhat) + cfg.epsilon);
            if (i % 2 == 0)
                pos[i / 2].x -= delta;
            else
                pos[i / 2].y -= delta;
        }

        std::vector<Vec2> saved = std::move(mp.vertices);
        mp.vertices = std::move(pos);
        bool ok = mesh_geometry_ok(mp);
        double phi1 = phi0;
        if (ok) {
            phi1 = objective(mp);
            ok = phi1 <= phi0;
        }
        if (ok) {
            st = std::move(trial);
            st.trust = std::min(1.0, st.trust * 1.1);
            return phi1;
        }
        mp.vertices = std::move(saved);
        st.trust *= 0.5;
    }
}

Partition mesh_to_partition(const MeshPartition& mp, const std::string& provenance) {
    Partition p;
    p.m = static_cast<int>(mp.faces.size());
    p.provenance = provenance;
    p.tau = objective(mp);
    for (std::size_t i = 0; i < mp.faces.size(); ++i) {
        LiftedPolygon poly;
        poly.vertices = mp.face_polygon(i);
        Region r;
        r.shape = std::move(poly);
        p.regions.push_back(std::move(r));
    }
    return p;
}

Partition optimize(int m, const OptimizerConfig& cfg, std::vector<RestartLogEntry>* log) {
    if (m < 5) throw DomainError("optimize: requires m >= 5 (cell diameter < 1/2 regime)");
    bool have_best = false;
    double best_phi = 0.0;
    MeshPartition best_mesh;

    for (int r = 0; r < cfg.restarts; ++r) {
        MeshPartition mesh;
        bool seeded = false;
        for (int attempt = 0; attempt < 10 && !seeded; ++attempt) {
            try {
                auto centers =
                    seed_circle_packing(m, cfg.seed + 1000003ULL * r + 7919ULL * attempt);
                mesh = torus_voronoi(centers);
                seeded = true;
            } catch (const CellTooLarge&) {
            } catch (const DomainError&) {
            }
        }
        if (!seeded) continue;

        DescentState state;
        double phi = objective(mesh);
        for (int it = 0; it < cfg.iterations; ++it) {
            try {
                phi = descent_step(mesh, cfg, state);
            } catch (const StuckStep&) {
                break;
            }
            if (log && (it % 100 == 0 || it + 1 == cfg.iterations))
                log->push_back({r, it, phi});
        }
        if (!have_best || phi < best_phi) {
            have_best = true;
            best_phi = phi;
            best_mesh = mesh;
        }
    }
    if (!have_best) throw AllRestartsFailed("every restart failed to seed");
    return mesh_to_partition(best_mesh, "globopt m=" + std::to_string(m));
}

} // namespace torus::opt
