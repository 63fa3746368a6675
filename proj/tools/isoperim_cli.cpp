#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "isoperim/bounds.hpp"
#include "isoperim/cell_set.hpp"
#include "isoperim/checks.hpp"
#include "isoperim/exact_solver.hpp"
#include "isoperim/reduction.hpp"
#include "isoperim/render.hpp"
#include "isoperim/staircase.hpp"

namespace {

int default_threads() {
    if (const char* env = std::getenv("ISOPERIM_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

using isoperim::CellSet;

int main(int argc, char** argv) {
    CLI::App app{"isoperim — exact edge-isoperimetry toolkit for lp lattice graphs"};
    app.require_subcommand(1);

    int threads = default_threads();
    std::string out_path;
    std::string setfile;
    std::string format = "csv";
    std::string render_mode = "ascii";
    std::int64_t n = 0, from = 1, to = 1, min_len = 2;
    std::int64_t budget_cells = 11;
    std::int64_t precision_bits = 1 << 15;
    bool dump_edges = false;
    std::string suite;

    auto* cmd_boundary = app.add_subcommand("boundary", "edge/vertex boundary of a cell set");
    cmd_boundary->add_option("setfile", setfile)->required();
    cmd_boundary->add_flag("--edges", dump_edges, "also list the boundary edges");
    cmd_boundary->add_option("--out", out_path);

    auto* cmd_normalize =
        app.add_subcommand("normalize", "normalize a quadrant set to staircase parameters");
    cmd_normalize->add_option("setfile", setfile)->required();
    cmd_normalize->add_option("--out", out_path, "write the step trace (JSON lines) here");

    auto* cmd_staircase =
        app.add_subcommand("staircase", "optimal staircase parameters per volume (CSV)");
    cmd_staircase->add_option("--from", from)->required();
    cmd_staircase->add_option("--to", to)->required();
    cmd_staircase->add_option("--out", out_path);

    auto* cmd_exact = app.add_subcommand("exact", "exhaustive minima per volume (CSV)");
    cmd_exact->add_option("--n", n)->required();
    cmd_exact->add_option("--threads", threads);
    cmd_exact->add_option("--budget-cells", budget_cells, "largest volume the budget allows");
    cmd_exact->add_option("--out", out_path);

    auto* cmd_table = app.add_subcommand("table", "per-volume bounds report");
    cmd_table->add_option("--from", from)->required();
    cmd_table->add_option("--to", to)->required();
    cmd_table->add_option("--threads", threads);
    cmd_table->add_option("--budget-cells", budget_cells, "exact column budget");
    cmd_table->add_option("--precision-bits", precision_bits);
    cmd_table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd_table->add_option("--out", out_path);

    auto* cmd_plateaus = app.add_subcommand("plateaus", "equal-minimum runs of volumes (CSV)");
    std::int64_t n_max = 0;
    cmd_plateaus->add_option("--n-max", n_max)->required();
    cmd_plateaus->add_option("--min-len", min_len);
    cmd_plateaus->add_option("--out", out_path);

    auto* cmd_check = app.add_subcommand("check", "run a named invariant suite");
    cmd_check->add_option("suite", suite)->required();
    cmd_check->add_option("--threads", threads);

    auto* cmd_render = app.add_subcommand("render", "draw a cell set");
    cmd_render->add_option("setfile", setfile)->required();
    cmd_render->add_option("--render", render_mode)->check(CLI::IsMember({"ascii", "svg"}));
    cmd_render->add_option("--out", out_path);

    try {
        app.parse(argc, argv);

        if (cmd_boundary->parsed()) {
            CellSet A = isoperim::load_cell_set(setfile);
            std::ostringstream os;
            os << "edge=" << isoperim::edge_boundary(A)
               << " vertex=" << isoperim::vertex_boundary(A) << "\n";
            if (dump_edges) {
                for (const auto& [a, v] : isoperim::edge_boundary_edges(A)) {
                    os << "  [";
                    for (std::size_t i = 0; i < a.dim(); ++i) os << (i ? "," : "") << a[i];
                    os << "]-[";
                    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
                    os << "]\n";
                }
            }
            emit(os.str(), out_path);
        } else if (cmd_normalize->parsed()) {
            CellSet A = isoperim::load_cell_set(setfile);
            auto res = isoperim::reduction::normalize(A);
            std::cout << "params a1=" << res.params.a1 << " c=" << res.params.c
                      << " k=" << res.params.k << " ak=" << res.params.ak
                      << " perimeter=" << isoperim::staircase::perimeter(res.params) << "\n";
            if (out_path.empty())
                std::cout << res.trace.to_jsonl();
            else
                emit(res.trace.to_jsonl(), out_path);
        } else if (cmd_staircase->parsed()) {
            emit(isoperim::staircase::optimize_csv(from, to), out_path);
        } else if (cmd_exact->parsed()) {
            isoperim::exact::EnumerationBudget budget;
            budget.max_volume = budget_cells;
            auto levels = isoperim::exact::solve_levels(n, budget, threads);
            emit(isoperim::exact::exact_csv(levels), out_path);
        } else if (cmd_table->parsed()) {
            isoperim::bounds::PrecisionPolicy policy;
            policy.max_bits = static_cast<mpfr_prec_t>(precision_bits);
            auto rows = isoperim::bounds::make_table(from, to, budget_cells, threads, policy);
            emit(format == "csv" ? isoperim::bounds::table_csv(rows)
                                 : isoperim::bounds::table_json(rows),
                 out_path);
        } else if (cmd_plateaus->parsed()) {
            std::ostringstream os;
            os << "start,length,value\n";
            for (const auto& r : isoperim::bounds::find_plateaus(n_max, min_len))
                os << r.start << ',' << r.length << ',' << r.value << '\n';
            emit(os.str(), out_path);
        } else if (cmd_check->parsed()) {
            auto res = isoperim::checks::run_suite(suite, threads);
            std::cout << "suite " << suite << ":\n" << res.log;
            std::cout << (res.pass ? "PASS" : "FAIL") << "\n";
            return res.pass ? 0 : 3;
        } else if (cmd_render->parsed()) {
            CellSet A = isoperim::load_cell_set(setfile);
            emit(render_mode == "ascii" ? isoperim::render::ascii(A)
                                        : isoperim::render::svg(A),
                 out_path);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const isoperim::exact::BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    }
}
