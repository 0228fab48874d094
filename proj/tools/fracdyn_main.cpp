// fracdyn command-line front end.
//
//   fracdyn run <scenario-file> --out <dir>   propagate and emit CSV data
//   fracdyn audit <scenario-file>             invariant report on stdout
//   fracdyn presets list                      available models and defaults
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fracdyn/scenario.hpp"
#include "fracdyn/version.hpp"

namespace {

int do_run(const std::string& scenario_path, const std::string& out_dir) {
    const auto scenario = fracdyn::parse_scenario_file(scenario_path);
    const auto written = fracdyn::run_scenario(scenario, out_dir);
    for (const auto& name : written)
        std::cout << out_dir << "/" << name << "\n";
    return 0;
}

int do_audit(const std::string& scenario_path) {
    const auto scenario = fracdyn::parse_scenario_file(scenario_path);
    const auto rows = fracdyn::audit_scenario(scenario);
    fracdyn::write_audit_report(rows, std::cout);
    bool all_pass = true;
    for (const auto& row : rows) all_pass = all_pass && row.pass;
    if (!all_pass) {
        std::cerr << "error: numerical: invariant audit reported failures\n";
        return 3;
    }
    return 0;
}

void do_presets_list() {
    std::cout
        << "zeeman              omega_L=2            initial: spin_up    "
           "omega=(0,0,-omega_L/2), Delta=omega_L/2\n"
        << "yang_lee_one_site   xi=0.5               initial: spin_down  "
           "omega=(-i*xi/2,0,-1/2), Delta=sqrt(1-xi^2)/2\n"
        << "pt_waveguide        varsigma=1 epsilon=0.5 initial: sym       "
           "omega=(varsigma,0,-i*epsilon), Delta=sqrt(varsigma^2-epsilon^2)\n"
        << "common defaults     kappa0=0 lambda0_abs=1.5 lambda0_phase=0 "
           "Lambda0=2\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("fracdyn ") + fracdyn::kVersion +
                 " - fractional-time two-level dynamics"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = ".";

    auto* run = app.add_subcommand("run", "propagate a scenario and write CSV files");
    run->add_option("scenario", scenario_path, "scenario file")->required();
    run->add_option("--out", out_dir, "output directory (default: .)");

    auto* audit = app.add_subcommand("audit", "run the invariant audit");
    audit->add_option("scenario", scenario_path, "scenario file")->required();

    auto* presets = app.add_subcommand("presets", "preset information");
    presets->require_subcommand(1);
    presets->add_subcommand("list", "list presets and their defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return do_run(scenario_path, out_dir);
        if (audit->parsed()) return do_audit(scenario_path);
        do_presets_list();
        return 0;
    } catch (const fracdyn::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const fracdyn::DomainError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const fracdyn::Error& e) {
        std::cerr << "error: numerical: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
}
