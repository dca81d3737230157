#ifndef TORUS_SATGRID_HPP
#define TORUS_SATGRID_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torus/core.hpp"

namespace torus::sat {

/// Grid graph G_{s,tau} on the s x s torus grid with tau = sqrt(k)/s: cells
/// are adjacent iff their squared toroidal grid distance is >= k. All
/// thresholds are integers so edge construction is exact.
struct GridGraphSpec {
    int s = 2; // grid size, >= 2
    int k = 1; // squared distance threshold in grid units, >= 1
    int m = 1; // color count, >= 1

    double tau() const;
    void validate() const;
};

/// Squared toroidal distance between grid cells, in grid units.
int grid_dist2(int s, int x1, int y1, int x2, int y2);

/// All edges of G_{s,k} as unordered cell-index pairs (u = x*s + y), in
/// lexicographic order.
std::vector<std::pair<int, int>> build_grid_graph(const GridGraphSpec& spec);

/// Greedy clique in G_{s,k} (lexicographic vertex order), at most max_size
/// vertices. Fixing the clique's colors to 0,1,2,... is equisatisfiable
/// symmetry breaking: any proper coloring gives the clique pairwise distinct
/// colors, and colors can be permuted to make them 0,1,2,... in order.
std::vector<int> greedy_clique(const GridGraphSpec& spec, int max_size);

/// DIMACS CNF for the m-coloring of G_{s,k}. Variable of w_{u,c} is
/// u*m + c + 1; one at-least-one clause per vertex and one binary clause per
/// edge and color. With break_symmetry, unit clauses pin a greedy clique to
/// distinct colors (sound for both SAT and UNSAT results).
std::string emit_cnf(const GridGraphSpec& spec, bool break_symmetry = false);

struct GridColoring {
    int s = 0;
    int m = 0;
    std::vector<int> colors; // s*s entries, row-major by cell index x*s + y

    int color(int x, int y) const { return colors[x * s + y]; }
};

/// Coloring from a SAT model (signed DIMACS literals). Lowest true color wins.
GridColoring decode_coloring(const std::vector<int>& model, const GridGraphSpec& spec);

/// Text form: s lines of s integers.
std::string coloring_to_text(const GridColoring& c);
GridColoring coloring_from_text(const std::string& text, int m);

/// Pixel partition induced by a proper coloring; tau is the verified maximal
/// region diameter (which may exceed sqrt(k)/s by up to a cell diagonal).
Partition coloring_to_partition(const GridColoring& c);

enum class SatStatus { unsat_certified, sat_with_coloring };

struct SatBoundRecord {
    int m = 0;
    int s = 0;
    int k = 0;
    SatStatus status = SatStatus::unsat_certified;
    std::optional<GridColoring> coloring;
    double wall_time_seconds = 0.0;

    double tau() const;
};

/// Append-only results store as CSV: m,s,k,status,wall_time_seconds.
std::string records_csv(const std::vector<SatBoundRecord>& records);

/// Lower bound tau = sqrt(k)/s implied by an UNSAT record.
double unsat_lower_bound(const SatBoundRecord& record);

/// Conservative variant tau - sqrt(2)/s from the weaker statement.
double unsat_lower_bound_conservative(const SatBoundRecord& record);

/// Backtracking oracle for tiny instances (s <= 4, m <= 6).
bool brute_force_colorable(const GridGraphSpec& spec);

/// External SAT solver over DIMACS files. The command is a shell prefix the
/// CNF path is appended to (e.g. "splr -r - -q"); output must follow SAT
/// competition conventions ("s SATISFIABLE" / "s UNSATISFIABLE", "v" lines).
struct SolverResult {
    bool satisfiable = false;
    std::vector<int> model; // signed literals, empty when UNSAT
    double wall_time_seconds = 0.0;
};

/// Solver command from the environment (TORUS_SAT_SOLVER), or a built-in
/// default if a known solver is on PATH; nullopt when none is available.
std::optional<std::string> default_solver_command();

SolverResult run_solver(const std::string& solver_command, const std::string& cnf_path);

/// Emit the CNF to a temp file, run the solver, decode on SAT.
SatBoundRecord solve_grid_spec(const std::string& solver_command, const GridGraphSpec& spec,
                               bool break_symmetry = false);

} // namespace torus::sat

#endif
