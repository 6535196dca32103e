// Config parsing and the subcommands of duffing-qsim.

#pragma once

#include "duffing/lindblad.hpp"
#include "duffing/model.hpp"

#include "json.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace duffing::cli {

struct PhaseGrid {
    std::vector<double> Q;
    std::vector<double> P;
};

struct ScanWindow {
    double beta_lo{0.029};
    double beta_hi{0.039};
    std::size_t points{41};
};

struct RunConfig {
    // exactly one block was given; lab values are mapped through derive_rwa/scale
    bool from_lab{false};
    double lambda{0.0};
    double beta{0.0};
    double eta{0.0};
    double nbar{0.0};
    double T{0.0};  // in units of Omega, consistent with nbar

    std::optional<std::size_t> truncation;
    std::vector<double> beta_grid;
    std::vector<double> eta_grid;
    std::vector<double> T_grid;
    std::optional<PhaseGrid> phase_space;
    std::optional<ScanWindow> scan;

    std::filesystem::path out_dir{"."};
    std::string format{"csv"};
    lindblad::SteadyStateMethod method{lindblad::SteadyStateMethod::NullSpace};
    double steady_state_tol{1e-9};
    unsigned jobs{1};

    nlohmann::json canonical;  // everything that shapes the numbers, keys sorted
    std::string hash;

    model::ScaledParams scaled() const;  // throws ConfigError if lambda or beta are unusable
    std::size_t N() const;
};

// Throws Error(ConfigError) with "line L: ..." messages.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

struct Overrides {
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::string> format;
    std::optional<unsigned> jobs;
    std::optional<std::string> method;
    std::optional<std::size_t> truncation;
};

// Applies command-line flags and recomputes the config hash.
void apply_overrides(RunConfig& cfg, const Overrides& o);

enum ExitCode : int { kOk = 0, kConfigError = 2, kSolverFailure = 3, kPartialSweep = 4 };

// Each returns an exit code; files go to cfg.out_dir.
int cmd_landscape(const RunConfig& cfg);
int cmd_spectrum(const RunConfig& cfg, bool degeneracy_scan);
int cmd_fixed_points(const RunConfig& cfg);
int cmd_eta_eff(const RunConfig& cfg);

} // namespace duffing::cli
