// stellar: classify symmetric multi-qubit states by their Majorana
// constellations, compute the decomposition-based entanglement value, emit
// constellation plots, and sweep star trajectories.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli_support.hpp"
#include "commands.hpp"

namespace {

using namespace stellar::cli;

// "-" means stdin
bool read_input(const std::string& path, std::string& out_text, std::ostream& err) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out_text = ss.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "cannot read input file: " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out_text = ss.str();
    return true;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    bool open(const std::string& path, std::ostream& err) {
        if (path.empty() || path == "-") return true;
        file.open(path, std::ios::binary);
        if (!file) {
            err << "cannot write output file: " << path << "\n";
            return false;
        }
        stream = &file;
        return true;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorana constellation toolkit for symmetric multi-qubit states"};
    app.require_subcommand(1);

    std::optional<double> tol_flag;
    bool parallel = false;
    app.add_option("--tol", tol_flag,
                   "clustering/classification tolerance (default 1e-6, env STELLAR_TOL)");
    app.add_flag("--parallel", parallel, "process records concurrently (order preserved)");

    std::string input_path, out_path, format = "json";

    auto* classify = app.add_subcommand("classify", "entanglement class reports (JSON lines)");
    classify->add_option("input", input_path, "state file (JSON lines or array), - for stdin")
        ->required();

    auto* measure = app.add_subcommand("measure", "decomposition entanglement value (JSON lines)");
    measure->add_option("input", input_path, "state file, - for stdin")->required();

    auto* constellation =
        app.add_subcommand("constellation", "Majorana stars as JSON lines or an SVG plot");
    constellation->add_option("input", input_path, "state file, - for stdin")->required();
    constellation->add_option("--format", format, "json (default) or svg")
        ->check(CLI::IsMember({"json", "svg"}));
    constellation->add_option("--out", out_path, "output path (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "move one star along a line, report class and value");
    sweep->add_option("spec", input_path, "sweep spec JSON, - for stdin")->required();
    sweep->add_option("--out", out_path, "output path (default stdout)");

    auto* selfcheck = app.add_subcommand("selfcheck", "run built-in cross-validations");

    CLI11_PARSE(app, argc, argv);

    Options opts;
    opts.tol = resolve_tolerance(tol_flag);
    opts.parallel = parallel;

    if (selfcheck->parsed()) return run_selfcheck(std::cout, opts);

    std::string text;
    if (!read_input(input_path, text, std::cerr)) return kExitIo;

    OutputTarget target;
    if (!target.open(out_path, std::cerr)) return kExitIo;

    int rc = kExitOk;
    if (classify->parsed()) {
        rc = run_classify(text, *target.stream, std::cerr, opts);
    } else if (measure->parsed()) {
        rc = run_measure(text, *target.stream, std::cerr, opts);
    } else if (constellation->parsed()) {
        rc = run_constellation(text, format, *target.stream, std::cerr, opts);
    } else if (sweep->parsed()) {
        rc = run_sweep(text, *target.stream, std::cerr, opts);
    }
    target.stream->flush();
    if (target.file.is_open() && !target.file) {
        std::cerr << "error writing output\n";
        return kExitIo;
    }
    return rc;
}
