#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "torus/bounds.hpp"
#include "torus/core.hpp"
#include "torus/errors.hpp"
#include "torus/globalopt.hpp"
#include "torus/hextiling.hpp"
#include "torus/partition_io.hpp"
#include "torus/render.hpp"
#include "torus/satgrid.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string resolve_solver(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (auto cmd = torus::sat::default_solver_command()) return *cmd;
    return {};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds and certified partitions for diameter-minimal partitions of the flat torus"};
    app.require_subcommand(1);

    // bounds
    int m = 8;
    auto* cmd_bounds = app.add_subcommand("bounds", "Best known lower/upper bounds for one m");
    cmd_bounds->add_option("--m", m, "number of parts")->required()->check(CLI::PositiveNumber);

    // stripes
    std::string out_path;
    auto* cmd_stripes = app.add_subcommand("stripes", "Write the vertical-stripe partition as JSON");
    cmd_stripes->add_option("--m", m, "number of parts")->required()->check(CLI::PositiveNumber);
    cmd_stripes->add_option("-o,--out", out_path, "output JSON path (default stdout)");

    // sat-cnf / sat-run
    int grid_s = 4, grid_k = 8;
    bool break_sym = false;
    std::string solver_flag;
    auto* cmd_satcnf = app.add_subcommand("sat-cnf", "Emit DIMACS CNF for the grid coloring");
    cmd_satcnf->add_option("--s", grid_s, "grid size")->required();
    cmd_satcnf->add_option("--k", grid_k, "squared distance threshold")->required();
    cmd_satcnf->add_option("--m", m, "color count")->required();
    cmd_satcnf->add_flag("--break-symmetry", break_sym, "pin a clique to distinct colors");
    cmd_satcnf->add_option("-o,--out", out_path, "output CNF path (default stdout)");

    auto* cmd_satrun = app.add_subcommand("sat-run", "Run the external SAT solver on a grid instance");
    cmd_satrun->add_option("--s", grid_s, "grid size")->required();
    cmd_satrun->add_option("--k", grid_k, "squared distance threshold")->required();
    cmd_satrun->add_option("--m", m, "color count")->required();
    cmd_satrun->add_flag("--break-symmetry", break_sym, "pin a clique to distinct colors");
    cmd_satrun->add_option("--solver", solver_flag, "solver command (default $TORUS_SAT_SOLVER)");
    cmd_satrun->add_option("-o,--out", out_path, "partition JSON path when satisfiable");

    // sat-decode
    std::string model_path;
    auto* cmd_satdecode = app.add_subcommand("sat-decode", "Decode a solver model into a pixel partition");
    cmd_satdecode->add_option("--s", grid_s, "grid size")->required();
    cmd_satdecode->add_option("--k", grid_k, "squared distance threshold")->required();
    cmd_satdecode->add_option("--m", m, "color count")->required();
    cmd_satdecode->add_option("model", model_path, "file with signed literals ('v' lines or raw)")
        ->required();
    cmd_satdecode->add_option("-o,--out", out_path, "partition JSON path (default stdout)");

    // hex
    std::vector<long long> a_flags, b_flags;
    auto* cmd_hex = app.add_subcommand("hex", "Optimize a periodic hexagonal tiling");
    cmd_hex->add_option("--m", m, "number of parts")->required();
    cmd_hex->add_option("--a", a_flags, "three integers a1 a2 a3")->expected(3);
    cmd_hex->add_option("--b", b_flags, "three integers b1 b2 b3")->expected(3);
    cmd_hex->add_option("-o,--out", out_path, "partition JSON path (default stdout)");

    // optimize
    torus::opt::OptimizerConfig cfg;
    std::string log_path;
    auto* cmd_opt = app.add_subcommand("optimize", "Voronoi-seeded minimax descent");
    cmd_opt->add_option("--m", m, "number of parts")->required();
    cmd_opt->add_option("--restarts", cfg.restarts, "independent restarts");
    cmd_opt->add_option("--iters", cfg.iterations, "iterations per restart");
    cmd_opt->add_option("--seed", cfg.seed, "RNG seed");
    cmd_opt->add_option("--step", cfg.step_size, "initial step size");
    cmd_opt->add_option("--temperature", cfg.softmax_temperature, "softmax smoothing (0 = hard max)");
    cmd_opt->add_option("--log", log_path, "per-restart convergence CSV");
    cmd_opt->add_option("-o,--out", out_path, "partition JSON path (default stdout)");

    // verify
    std::string part_path;
    double tau_flag = -1.0;
    int probe_grid = 512;
    auto* cmd_verify = app.add_subcommand("verify", "Verify a partition JSON file");
    cmd_verify->add_option("file", part_path, "partition JSON")->required();
    cmd_verify->add_option("--tau", tau_flag, "override the claimed diameter bound");
    cmd_verify->add_option("--probes", probe_grid, "probe grid resolution");

    // render
    auto* cmd_render = app.add_subcommand("render", "Render a partition JSON file as SVG");
    cmd_render->add_option("file", part_path, "partition JSON")->required();
    cmd_render->add_option("-o,--out", out_path, "SVG path (default <file>.svg)");

    // table
    int m_max = 25;
    bool csv = false;
    auto* cmd_table = app.add_subcommand("table", "Bound table for m = 1..m-max");
    cmd_table->add_option("--m-max", m_max, "largest m");
    cmd_table->add_flag("--csv", csv, "emit CSV instead of aligned text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_bounds) {
            auto uppers = torus::bounds::builtin_geometry_uppers();
            for (const auto& row : torus::hex::known_rows()) {
                auto opt = torus::hex::minimize_hex(torus::hex::solve_hex_system(row.a, row.b, row.m));
                uppers.push_back({row.m, opt.tau(), torus::bounds::Method::hex});
            }
            auto rec = torus::bounds::best_bounds(m, torus::bounds::builtin_sat_lowers(), uppers);
            std::cout << "m=" << rec.m << " lower=" << rec.lower << " ("
                      << torus::bounds::method_name(rec.lower_method) << ") upper=" << rec.upper
                      << " (" << torus::bounds::method_name(rec.upper_method) << ")\n";
        } else if (*cmd_stripes) {
            auto p = torus::bounds::stripe_partition(m);
            if (out_path.empty())
                std::cout << torus::partition_to_json(p);
            else
                torus::save_partition(p, out_path);
        } else if (*cmd_satcnf) {
            torus::sat::GridGraphSpec spec{grid_s, grid_k, m};
            std::string cnf = torus::sat::emit_cnf(spec, break_sym);
            if (out_path.empty())
                std::cout << cnf;
            else
                write_file(out_path, cnf);
        } else if (*cmd_satrun) {
            torus::sat::GridGraphSpec spec{grid_s, grid_k, m};
            std::string solver = resolve_solver(solver_flag);
            if (solver.empty()) {
                std::cerr << "warning: no SAT solver configured (set TORUS_SAT_SOLVER); "
                             "emitting CNF only\n";
                std::cout << torus::sat::emit_cnf(spec, break_sym);
                return 0;
            }
            auto rec = torus::sat::solve_grid_spec(solver, spec, break_sym);
            if (rec.status == torus::sat::SatStatus::unsat_certified) {
                std::cout << "UNSAT: d_" << m << "(T^2) >= sqrt(" << grid_k << ")/" << grid_s
                          << " = " << torus::sat::unsat_lower_bound(rec) << "\n";
            } else {
                std::cout << "SAT: proper " << m << "-coloring found, tau = " << rec.tau() << "\n";
                std::cout << torus::sat::coloring_to_text(*rec.coloring);
                if (!out_path.empty())
                    torus::save_partition(torus::sat::coloring_to_partition(*rec.coloring), out_path);
            }
        } else if (*cmd_satdecode) {
            torus::sat::GridGraphSpec spec{grid_s, grid_k, m};
            std::istringstream is(read_file(model_path));
            std::vector<int> lits;
            std::string line;
            while (std::getline(is, line)) {
                if (line.rfind("c", 0) == 0 || line.rfind("s ", 0) == 0) continue;
                std::istringstream ls(line.rfind("v", 0) == 0 ? line.substr(1) : line);
                int lit;
                while (ls >> lit)
                    if (lit != 0) lits.push_back(lit);
            }
            auto coloring = torus::sat::decode_coloring(lits, spec);
            auto p = torus::sat::coloring_to_partition(coloring);
            if (out_path.empty())
                std::cout << torus::partition_to_json(p);
            else
                torus::save_partition(p, out_path);
        } else if (*cmd_hex) {
            std::optional<torus::hex::HexTilingSpec> spec;
            if (!a_flags.empty() && !b_flags.empty()) {
                spec = torus::hex::solve_hex_system({a_flags[0], a_flags[1], a_flags[2]},
                                                    {b_flags[0], b_flags[1], b_flags[2]}, m);
            } else if (auto row = torus::hex::known_row(m)) {
                spec = torus::hex::solve_hex_system(row->a, row->b, m);
            } else {
                std::cerr << "searching integer coefficients for m=" << m << " ...\n";
                spec = torus::hex::search_spec(m);
                if (!spec) {
                    std::cerr << "no admissible hexagonal tiling found for m=" << m << "\n";
                    return 1;
                }
            }
            auto opt = torus::hex::minimize_hex(*spec);
            std::cerr << "m=" << m << " f_min=" << torus::rat_str(opt.f_min)
                      << " x*=" << torus::rat_str(opt.x_star) << " y*=" << torus::rat_str(opt.y_star)
                      << " tau=" << opt.tau() << "\n";
            auto p = torus::hex::hex_partition(opt, m);
            if (out_path.empty())
                std::cout << torus::partition_to_json(p);
            else
                torus::save_partition(p, out_path);
        } else if (*cmd_opt) {
            std::vector<torus::opt::RestartLogEntry> log;
            auto p = torus::opt::optimize(m, cfg, log_path.empty() ? nullptr : &log);
            std::cerr << "m=" << m << " tau=" << p.tau << "\n";
            if (!log_path.empty()) {
                std::ostringstream os;
                os << "restart,iteration,phi\n";
                for (const auto& e : log) os << e.restart << ',' << e.iteration << ',' << e.phi << "\n";
                write_file(log_path, os.str());
            }
            if (out_path.empty())
                std::cout << torus::partition_to_json(p);
            else
                torus::save_partition(p, out_path);
        } else if (*cmd_verify) {
            auto p = torus::load_partition(part_path);
            if (tau_flag >= 0.0) p.tau = tau_flag;
            auto rep = torus::verify_partition(p, probe_grid);
            std::cout << (rep.pass ? "PASS" : "FAIL") << ": m=" << p.m << " tau=" << p.tau
                      << " max_diameter=" << rep.max_diameter << " area_sum=" << rep.area_sum
                      << " uncovered=" << rep.uncovered_probes
                      << " overlapping=" << rep.overlapping_probes << "\n";
            return rep.pass ? 0 : 1;
        } else if (*cmd_render) {
            auto p = torus::load_partition(part_path);
            std::string svg = torus::render_partition_svg(p);
            write_file(out_path.empty() ? part_path + ".svg" : out_path, svg);
        } else if (*cmd_table) {
            std::vector<torus::bounds::UpperEstimate> uppers;
            for (const auto& row : torus::hex::known_rows()) {
                auto opt = torus::hex::minimize_hex(torus::hex::solve_hex_system(row.a, row.b, row.m));
                uppers.push_back({row.m, opt.tau(), torus::bounds::Method::hex});
            }
            auto rows = torus::bounds::bound_table(m_max, {}, uppers);
            std::cout << (csv ? torus::bounds::format_table_csv(rows)
                             : torus::bounds::format_table(rows));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
