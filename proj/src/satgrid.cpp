#include "torus/satgrid.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "torus/errors.hpp"

namespace torus::sat {

double GridGraphSpec::tau() const { return std::sqrt(static_cast<double>(k)) / s; }

void GridGraphSpec::validate() const {
    if (s < 2) throw DomainError("grid size s must be >= 2");
    if (k < 1) throw DomainError("threshold k must be >= 1");
    if (m < 1) throw DomainError("color count m must be >= 1");
    // above s^2/2 the edge set is empty (tau > diam T^2); still well-formed
    if (k > 2 * s * s) throw DomainError("k > 2 s^2 is outside the grid-distance range");
}

int grid_dist2(int s, int x1, int y1, int x2, int y2) {
    int dx = std::abs(x1 - x2);
    dx = std::min(dx, s - dx);
    int dy = std::abs(y1 - y2);
    dy = std::min(dy, s - dy);
    return dx * dx + dy * dy;
}

std::vector<std::pair<int, int>> build_grid_graph(const GridGraphSpec& spec) {
    spec.validate();
    const int s = spec.s;
    std::vector<std::pair<int, int>> edges;
    const int n = s * s;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (grid_dist2(s, u / s, u % s, v / s, v % s) >= spec.k) edges.emplace_back(u, v);
        }
    }
    return edges;
}

std::vector<int> greedy_clique(const GridGraphSpec& spec, int max_size) {
    spec.validate();
    const int s = spec.s;
    std::vector<int> clique;
    for (int u = 0; u < s * s && static_cast<int>(clique.size()) < max_size; ++u) {
        bool ok = true;
        for (int v : clique)
            if (grid_dist2(s, u / s, u % s, v / s, v % s) < spec.k) { ok = false; break; }
        if (ok) clique.push_back(u);
    }
    return clique;
}

std::string emit_cnf(const GridGraphSpec& spec, bool break_symmetry) {
    const auto edges = build_grid_graph(spec);
    const int s = spec.s, m = spec.m;
    const int nvars = m * s * s;
    const std::vector<int> clique =
        break_symmetry ? greedy_clique(spec, m) : std::vector<int>{};
    const std::size_t nclauses =
        edges.size() * m + static_cast<std::size_t>(s) * s + clique.size();
    std::ostringstream os;
    os << "c grid graph coloring: s=" << s << " k=" << spec.k << " m=" << m << "\n";
    os << "p cnf " << nvars << ' ' << nclauses << "\n";
    for (std::size_t i = 0; i < clique.size(); ++i)
        os << clique[i] * m + static_cast<int>(i) + 1 << " 0\n";
    for (auto [u, v] : edges)
        for (int c = 0; c < m; ++c)
            os << -(u * m + c + 1) << ' ' << -(v * m + c + 1) << " 0\n";
    for (int u = 0; u < s * s; ++u) {
        for (int c = 0; c < m; ++c) os << u * m + c + 1 << ' ';
        os << "0\n";
    }
    return os.str();
}

GridColoring decode_coloring(const std::vector<int>& model, const GridGraphSpec& spec) {
    spec.validate();
    const int s = spec.s, m = spec.m;
    std::vector<char> value(static_cast<std::size_t>(m) * s * s + 1, -1);
    for (int lit : model) {
        int var = std::abs(lit);
        if (var >= 1 && var <= m * s * s) value[var] = lit > 0 ? 1 : 0;
    }
    GridColoring col;
    col.s = s;
    col.m = m;
    col.colors.assign(static_cast<std::size_t>(s) * s, -1);
    for (int u = 0; u < s * s; ++u) {
        for (int c = 0; c < m; ++c) {
            char v = value[u * m + c + 1];
            if (v < 0) throw IncompleteModel("variable " + std::to_string(u * m + c + 1) + " unassigned");
            if (v == 1) { col.colors[u] = c; break; }
        }
        if (col.colors[u] < 0)
            throw IncompleteModel("vertex " + std::to_string(u) + " has no true color");
    }
    for (auto [u, v] : build_grid_graph(spec)) {
        if (col.colors[u] == col.colors[v])
            throw ImproperColoring("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") joins equal colors");
    }
    return col;
}

std::string coloring_to_text(const GridColoring& c) {
    std::ostringstream os;
    for (int x = 0; x < c.s; ++x) {
        for (int y = 0; y < c.s; ++y) {
            if (y) os << ' ';
            os << c.color(x, y);
        }
        os << "\n";
    }
    return os.str();
}

GridColoring coloring_from_text(const std::string& text, int m) {
    std::istringstream is(text);
    std::vector<int> vals;
    int v;
    while (is >> v) vals.push_back(v);
    int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(vals.size()))));
    if (s * s != static_cast<int>(vals.size()) || s < 1)
        throw DomainError("coloring text is not an s x s grid");
    GridColoring c;
    c.s = s;
    c.m = m;
    c.colors = std::move(vals);
    return c;
}

Partition coloring_to_partition(const GridColoring& c) {
    // The coloring colors squares centered on grid vertices; translating by
    // half a cell aligns them with standard grid cells without changing
    // diameters.
    Partition p;
    p.m = c.m;
    p.provenance = "sat-coloring s=" + std::to_string(c.s);
    std::vector<PixelSet> groups(c.m);
    for (auto& g : groups) g.s = c.s;
    for (int x = 0; x < c.s; ++x)
        for (int y = 0; y < c.s; ++y) {
            int col = c.color(x, y);
            if (col < 0 || col >= c.m) throw ImproperColoring("color out of range");
            groups[col].cells.push_back({x, y});
        }
    double tau = 0.0;
    for (auto& g : groups) {
        if (g.cells.empty())
            throw ImproperColoring("color class empty; cannot form m regions");
        Region r;
        r.shape = std::move(g);
        tau = std::max(tau, region_diameter(r));
        p.regions.push_back(std::move(r));
    }
    p.tau = tau;
    return p;
}

double SatBoundRecord::tau() const { return std::sqrt(static_cast<double>(k)) / s; }

std::string records_csv(const std::vector<SatBoundRecord>& records) {
    std::ostringstream os;
    os << "m,s,k,status,wall_time_seconds\n";
    for (const SatBoundRecord& r : records)
        os << r.m << ',' << r.s << ',' << r.k << ','
           << (r.status == SatStatus::unsat_certified ? "UNSAT" : "SAT") << ','
           << r.wall_time_seconds << "\n";
    return os.str();
}

double unsat_lower_bound(const SatBoundRecord& record) {
    if (record.status != SatStatus::unsat_certified)
        throw StateError("unsat_lower_bound: record is not UNSAT");
    return record.tau();
}

double unsat_lower_bound_conservative(const SatBoundRecord& record) {
    if (record.status != SatStatus::unsat_certified)
        throw StateError("unsat_lower_bound: record is not UNSAT");
    return record.tau() - std::sqrt(2.0) / record.s;
}

bool brute_force_colorable(const GridGraphSpec& spec) {
    spec.validate();
    if (spec.s > 4 || spec.m > 6)
        throw ResourceLimit("brute force bounded to s <= 4, m <= 6");
    const int n = spec.s * spec.s;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : build_grid_graph(spec)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(n, -1);
    // symmetry pruning: a new color may only be introduced as max_used + 1
    auto rec = [&](auto&& self, int u, int used) -> bool {
        if (u == n) return true;
        int limit = std::min(spec.m, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int v : adj[u])
                if (color[v] == c) { ok = false; break; }
            if (!ok) continue;
            color[u] = c;
            if (self(self, u + 1, std::max(used, c + 1))) return true;
            color[u] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

std::optional<std::string> default_solver_command() {
    if (const char* env = std::getenv("TORUS_SAT_SOLVER"); env && *env) return std::string(env);
    for (const char* probe : {"splr --version >/dev/null 2>&1", "kissat --version >/dev/null 2>&1",
                              "cadical --version >/dev/null 2>&1"}) {
        if (std::system(probe) == 0) {
            std::string cmd(probe);
            std::string name = cmd.substr(0, cmd.find(' '));
            if (name == "splr") return std::string("splr -r - -q");
            return name;
        }
    }
    return std::nullopt;
}

SolverResult run_solver(const std::string& solver_command, const std::string& cnf_path) {
    const std::string cmd = solver_command + " \"" + cnf_path + "\" 2>/dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw SolverError("cannot launch: " + cmd);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    pclose(pipe);
    const auto t1 = std::chrono::steady_clock::now();

    SolverResult res;
    res.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    bool got_status = false;
    std::istringstream is(output);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != std::string::npos) {
                res.satisfiable = false;
                got_status = true;
            } else if (line.find("SATISFIABLE") != std::string::npos) {
                res.satisfiable = true;
                got_status = true;
            }
        } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
            std::istringstream ls(line.substr(1));
            int lit;
            while (ls >> lit)
                if (lit != 0) res.model.push_back(lit);
        }
    }
    if (!got_status) throw SolverError("no status line in solver output for " + cnf_path);
    return res;
}

SatBoundRecord solve_grid_spec(const std::string& solver_command, const GridGraphSpec& spec,
                               bool break_symmetry) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path cnf = dir / ("grid_s" + std::to_string(spec.s) + "_k" + std::to_string(spec.k) +
                          "_m" + std::to_string(spec.m) + "_" +
                          std::to_string(::getpid()) + ".cnf");
    {
        std::ofstream out(cnf);
        out << emit_cnf(spec, break_symmetry);
    }
    SolverResult res = run_solver(solver_command, cnf.string());
    fs::remove(cnf);

    SatBoundRecord rec;
    rec.m = spec.m;
    rec.s = spec.s;
    rec.k = spec.k;
    rec.wall_time_seconds = res.wall_time_seconds;
    if (res.satisfiable) {
        rec.status = SatStatus::sat_with_coloring;
        rec.coloring = decode_coloring(res.model, spec);
    } else {
        rec.status = SatStatus::unsat_certified;
    }
    return rec;
}

} // namespace torus::sat
