// Batch front end: load a constraint-system description, run the requested
// pipeline stage, emit a machine- or human-readable certification report.
//
// Exit codes: 0 all verdicts pass, 1 configuration error, 2 a certified
// property failed on a valid input, 3 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "brst/errors.hpp"
#include "brst/pipeline.hpp"
#include "brst/system.hpp"

namespace {

int run(const std::string& command, const std::string& system_path, double tol,
        bool text, const std::string& out_path) {
    std::ifstream in(system_path, std::ios::binary);
    if (!in) throw brst::config_error("cannot open system file: " + system_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();

    brst::ConstraintSystem system = brst::parse_system(bytes);
    if (tol > 0.0) system.tolerances.rank_rel = tol;

    const brst::PipelineResult result = brst::run_command(
        system, brst::parse_command(command), brst::digest_bytes(bytes));

    const std::string report =
        text ? brst::report_text(result) : brst::report_json(result);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw brst::config_error("cannot write report to " + out_path);
        out << report;
    }
    return result.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "brst-lab: builds the ghost-extended charge of a finite first-class "
        "constraint system and certifies nilpotency, self-adjointness, and the "
        "cohomological state count"};
    app.require_subcommand(1);

    std::string system_path;
    std::string out_path;
    double tol = -1.0;
    bool as_json = false;
    bool as_text = false;

    for (const char* name : {"check", "brst", "quantize", "cohomology", "extended", "all"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--system", system_path, "system description (JSON)")
            ->required();
        sub->add_option("--tol", tol, "numerical rank tolerance override");
        sub->add_flag("--json", as_json, "emit the JSON report (default)");
        sub->add_flag("--text", as_text, "emit the human-readable report");
        sub->add_option("--out", out_path, "write the report to a file");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), system_path, tol,
                   as_text && !as_json, out_path);
    } catch (const brst::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        for (const std::string& v : e.violations()) std::cerr << "  - " << v << "\n";
        return 1;
    } catch (const brst::theorem_violation& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
