// duffing-qsim: data behind the landscape, spectrum, fixed-point and effective-damping plots.

#include "commands.hpp"

#include "duffing/errors.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace duffing::cli;

    CLI::App app{"Damped, driven quantum Duffing oscillator in the rotating frame"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides o;
    std::string out_dir;
    app.add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", o.jobs, "parallel sweep cells")->check(CLI::PositiveNumber);
    app.add_option("--method", o.method, "steady-state method")->check(CLI::IsMember({"null-space", "long-time"}));
    app.add_option("--truncation", o.truncation, "Fock basis size N")->check(CLI::Range(2, 100000));

    auto* landscape = app.add_subcommand("landscape", "g(Q, P) on a grid plus extrema and fixed points");
    auto* spectrum = app.add_subcommand("spectrum", "levels, classification and position densities");
    bool scan = false;
    spectrum->add_flag("--degeneracy-scan", scan, "scan beta for inner/outer anticrossings");
    auto* fixed = app.add_subcommand("fixed-points", "branches of the damped flow over an eta grid");
    auto* eta_eff = app.add_subcommand("eta-eff", "effective damping of the metastable states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigError;
    }

    RunConfig cfg;
    try {
        cfg = load_config(config_path);
        if (!out_dir.empty()) {
            o.out_dir = out_dir;
        }
        apply_overrides(cfg, o);
    } catch (const duffing::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    if (*landscape) {
        return cmd_landscape(cfg);
    }
    if (*spectrum) {
        return cmd_spectrum(cfg, scan);
    }
    if (*fixed) {
        return cmd_fixed_points(cfg);
    }
    if (*eta_eff) {
        return cmd_eta_eff(cfg);
    }
    return kConfigError;
}
