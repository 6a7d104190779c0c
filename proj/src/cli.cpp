#include "adjdyn/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adjdyn/analysis.hpp"
#include "adjdyn/bench.hpp"
#include "adjdyn/config.hpp"
#include "adjdyn/error.hpp"
#include "adjdyn/io.hpp"
#include "adjdyn/matrix_market.hpp"
#include "adjdyn/systems.hpp"
#include "adjdyn/topology.hpp"

namespace adjdyn::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit_matrix(const SparseMatrix& m, const std::string& output, std::ostream& out, std::ostream& err) {
    // With no output file the matrix goes to stdout and the summary to stderr.
    std::ostream& summary = output.empty() ? err : out;
    if (output.empty()) {
        write_matrix_market(out, m);
    } else {
        write_matrix_market(std::filesystem::path(output), m);
    }
    summary << "n_rows = " << m.rows() << '\n' << "n_cols = " << m.cols() << '\n' << "nnz = " << m.nnz() << '\n';
    if (m.is_square()) summary << "symmetric = " << (is_symmetric(m) ? "true" : "false") << '\n';
}

struct GenArgs {
    std::size_t width = 0;
    std::size_t height = 1;
    std::vector<double> stencil;
    std::size_t center = 0;
    std::string stencil_file;
    std::string neighborhood;
    double center_weight = 0.0;
    bool wrapped = false;
    std::size_t nodes = 0;
    std::size_t k = 0;
    std::size_t n_states = 2;
    bool allow_self = false;
    double density = 0.0;
    double rho = 0.0;
    std::uint64_t seed = 0;
    std::string output;
};

struct RunArgs {
    std::string config;
    std::optional<std::size_t> steps;
    std::string output;
    std::string format;
};

struct RenderArgs {
    std::string states;
    std::size_t width = 0;
    std::size_t height = 0;  // 0: state dimension / width
    std::string format = "txt";
    std::size_t n_states = 0;
    std::string output;
};

struct PcaArgs {
    std::string states;
    std::size_t components = 2;
    std::string output;
    std::string svg;
};

struct CycleArgs {
    std::string states;
    double tol = 0.0;
};

struct BenchArgs {
    std::size_t n = 0;
    double density = 0.0;
    std::size_t repeats = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
    RunConfig cfg = load_run_config(a.config);
    if (a.steps) cfg.steps = *a.steps;
    if (!a.output.empty()) cfg.output = a.output;
    if (!a.format.empty()) cfg.format = a.format == "lfst" ? StateFormat::Lfst : StateFormat::Csv;
    if (needs_seed(cfg) && !cfg.has_seed) {
        throw UsageError("this configuration is randomized; set 'seed' explicitly");
    }
    auto system = build_system(cfg.system, initial_state(cfg));
    const auto history = system.run(cfg.steps, true);
    if (cfg.output.empty() || cfg.output == "-") {
        if (cfg.format == StateFormat::Csv) {
            write_states_csv(out, *history);
        } else {
            write_states_lfst(out, *history);
        }
    } else {
        write_states(cfg.output, *history, cfg.format);
    }
    return kExitOk;
}

int cmd_render(RenderArgs a, std::ostream& out) {
    const auto history = read_states(a.states);
    if (a.height == 0) {
        if (a.width == 0 || history.dim() % a.width != 0) {
            throw Error(ErrorKind::DimensionMismatch, "width " + std::to_string(a.width) +
                                                          " does not divide state dimension " +
                                                          std::to_string(history.dim()));
        }
        a.height = history.dim() / a.width;
    }
    if (a.format == "txt") {
        const auto rendered = render_text(history, a.width, a.height, a.n_states);
        if (a.output.empty()) {
            out << rendered;
        } else {
            std::ofstream os(a.output, std::ios::binary);
            if (!os) throw Error(ErrorKind::IoError, "cannot open " + a.output);
            os << rendered;
        }
        return kExitOk;
    }
    if (a.output.empty()) throw UsageError("pgm rendering needs --output PREFIX");
    const auto paths = write_pgm_frames(history, a.width, a.height, a.n_states, a.output);
    out << "frames = " << paths.size() << '\n';
    return kExitOk;
}

int cmd_pca(const PcaArgs& a, std::ostream& out) {
    const auto history = read_states(a.states);
    const auto projection = pca_project(history, {a.components});
    if (a.output.empty()) {
        write_trajectory_csv(out, projection);
    } else {
        std::ofstream os(a.output, std::ios::binary);
        if (!os) throw Error(ErrorKind::IoError, "cannot open " + a.output);
        write_trajectory_csv(os, projection);
    }
    if (!a.svg.empty()) {
        std::ofstream os(a.svg, std::ios::binary);
        if (!os) throw Error(ErrorKind::IoError, "cannot open " + a.svg);
        os << trajectory_svg(projection);
    }
    return kExitOk;
}

int cmd_cycle(const CycleArgs& a, std::ostream& out) {
    const auto history = read_states(a.states);
    const auto report = detect_cycle(history, a.tol);
    out << "transient = " << report.transient << '\n' << "period = " << report.period << '\n';
    if (report.approximate) out << "approximate = true\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse adjacency-matrix simulator for cellular automata and related dynamical systems",
                 "adjdyn"};
    app.require_subcommand(1);

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "Generate an adjacency matrix (Matrix Market)");
    gen->require_subcommand(1);
    auto* ca1d = gen->add_subcommand("ca1d", "1D automaton from a stencil");
    ca1d->add_option("--width", g.width, "Number of cells")->required();
    ca1d->add_option("--stencil", g.stencil, "Comma-separated stencil weights")->required()->delimiter(',');
    ca1d->add_option("--center", g.center, "Index of the cell itself in the stencil")->required();
    ca1d->add_flag("--wrapped", g.wrapped, "Connect the first and last cells");
    ca1d->add_option("-o,--output", g.output, "Output file (default: stdout)");

    auto* ca2d = gen->add_subcommand("ca2d", "2D automaton from a stencil");
    ca2d->add_option("--width", g.width, "Grid width")->required();
    ca2d->add_option("--height", g.height, "Grid height")->required();
    auto* sf = ca2d->add_option("--stencil-file", g.stencil_file, "Stencil text file");
    auto* nb = ca2d->add_option("--neighborhood", g.neighborhood, "Built-in stencil")
                   ->check(CLI::IsMember({"moore", "von_neumann"}));
    sf->excludes(nb);
    ca2d->add_option("--center-weight", g.center_weight, "Self weight for --neighborhood");
    ca2d->add_flag("--wrapped", g.wrapped, "Toroidal boundary");
    ca2d->add_option("-o,--output", g.output, "Output file (default: stdout)");

    auto* rbn = gen->add_subcommand("rbn", "Random digraph with positional weights");
    rbn->add_option("--nodes", g.nodes, "Number of nodes")->required();
    rbn->add_option("--k", g.k, "Inputs per node")->required();
    rbn->add_option("--states", g.n_states, "States per node (positional base)");
    rbn->add_flag("--allow-self", g.allow_self, "Allow self inputs");
    rbn->add_option("--seed", g.seed, "PRNG seed")->required();
    rbn->add_option("-o,--output", g.output, "Output file (default: stdout)");

    auto* esn = gen->add_subcommand("esn", "Echo state reservoir scaled to a spectral radius");
    esn->add_option("--nodes", g.nodes, "Number of nodes")->required();
    esn->add_option("--density", g.density, "Connection density in (0, 1]")->required();
    esn->add_option("--rho", g.rho, "Target spectral radius")->required();
    esn->add_option("--seed", g.seed, "PRNG seed")->required();
    esn->add_option("-o,--output", g.output, "Output file (default: stdout)");

    RunArgs ra;
    auto* run_cmd = app.add_subcommand("run", "Simulate a configured system and record its states");
    run_cmd->add_option("-c,--config", ra.config, "key = value config file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--steps", ra.steps, "Override the number of steps");
    run_cmd->add_option("-o,--output", ra.output, "Override the output path ('-' for stdout)");
    run_cmd->add_option("--format", ra.format, "Override the output format")
        ->check(CLI::IsMember({"csv", "lfst"}));

    RenderArgs rd;
    auto* render = app.add_subcommand("render", "Render recorded states as text or PGM frames");
    render->add_option("--states", rd.states, "CSV or LFST state file")->required()->check(CLI::ExistingFile);
    render->add_option("--width", rd.width, "Grid width")->required();
    render->add_option("--height", rd.height, "Grid height (default: dimension / width)");
    render->add_option("--format", rd.format, "txt or pgm")->check(CLI::IsMember({"txt", "pgm"}));
    render->add_option("--n-states", rd.n_states, "Number of cell states (default: inferred)");
    render->add_option("-o,--output", rd.output, "Text file, or frame prefix for pgm");

    PcaArgs pa;
    auto* pca = app.add_subcommand("pca", "Project recorded states onto principal components");
    pca->add_option("--states", pa.states, "CSV or LFST state file")->required()->check(CLI::ExistingFile);
    pca->add_option("--components", pa.components, "Number of components");
    pca->add_option("-o,--output", pa.output, "Trajectory CSV (default: stdout)");
    pca->add_option("--svg", pa.svg, "Also write an SVG polyline plot");

    CycleArgs ca;
    auto* cycle = app.add_subcommand("cycle", "Report transient length and period of recorded states");
    cycle->add_option("--states", ca.states, "CSV or LFST state file")->required()->check(CLI::ExistingFile);
    cycle->add_option("--tol", ca.tol, "Match tolerance; > 0 marks the result approximate");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time dense against sparse matvec");
    bench->add_option("--n", ba.n, "Matrix dimension")->required();
    bench->add_option("--density", ba.density, "Nonzero density in (0, 1]")->required();
    bench->add_option("--repeats", ba.repeats, "Timed products per path")->required();
    bench->add_option("--seed", ba.seed, "PRNG seed")->required();
    bench->add_option("--threads", ba.threads, "Worker threads for the sparse path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ca1d->parsed()) {
            emit_matrix(generate_ca_1d({g.width, 1, g.wrapped}, Stencil1D{g.stencil, g.center}), g.output, out, err);
        } else if (ca2d->parsed()) {
            Stencil2D stencil;
            if (!g.stencil_file.empty()) {
                stencil = read_stencil(std::filesystem::path(g.stencil_file));
            } else if (g.neighborhood == "moore") {
                stencil = moore_stencil(g.center_weight);
            } else if (g.neighborhood == "von_neumann") {
                stencil = von_neumann_stencil(g.center_weight);
            } else {
                throw UsageError("gen ca2d needs --stencil-file or --neighborhood");
            }
            emit_matrix(generate_ca_2d({g.width, g.height, g.wrapped}, stencil), g.output, out, err);
        } else if (rbn->parsed()) {
            const auto graph = generate_random_digraph(g.nodes, g.k, PositionalBase{g.n_states}, g.allow_self, g.seed);
            emit_matrix(graph.matrix, g.output, out, err);
        } else if (esn->parsed()) {
            emit_matrix(esn_matrix(g.nodes, g.density, g.rho, g.seed), g.output, out, err);
        } else if (run_cmd->parsed()) {
            return cmd_run(ra, out);
        } else if (render->parsed()) {
            return cmd_render(rd, out);
        } else if (pca->parsed()) {
            return cmd_pca(pa, out);
        } else if (cycle->parsed()) {
            return cmd_cycle(ca, out);
        } else if (bench->parsed()) {
            out << format_bench_report(run_matvec_bench(ba.n, ba.density, ba.repeats, ba.seed, ba.threads));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace adjdyn::cli
