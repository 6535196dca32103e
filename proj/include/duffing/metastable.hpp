// Metastable states: dominant eigenvectors of the stationary density matrix, their
// phase-space centroids, and the effective damping that places them on a classical branch.

#pragma once

#include "duffing/classical.hpp"
#include "duffing/lindblad.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace duffing::metastable {

struct Eigenpair {
    double weight{0.0};
    Eigen::VectorXcd state;
};

struct MetastableState {
    double weight{0.0};
    double q_mean{0.0};
    double p_mean{0.0};
    double amplitude{0.0};
    classical::Branch branch{classical::Branch::LowAmplitude};
    std::optional<double> eta_eff;
    double distance_to_branch{0.0};
    Eigen::VectorXcd state;
};

struct Identification {
    std::optional<MetastableState> low;
    std::optional<MetastableState> high;
};

constexpr double kWeightFloor = 0.01;
constexpr double kBranchGate = 0.1;

// Descending weights.
std::vector<Eigenpair> diagonalize_density(const lindblad::DensityMatrix& rho);

// <Q> and <P> of a normalized Fock-basis vector.
classical::PhasePoint phase_space_mean(const Eigen::VectorXcd& psi, double lambda);

// Candidates above kWeightFloor are sorted onto the low/high branch by nearest classical
// amplitude at the nominal eta; the heaviest candidate per branch within kBranchGate of its
// classical point is kept. Throws NoMetastableStates when nothing passes the floor.
Identification identify_states(const std::vector<Eigenpair>& eigenpairs, double beta, double lambda,
                               double eta);

struct EffectiveDamping {
    double eta_eff{0.0};
    double distance{0.0};
};

// argmin over eta of |(q, p) - branch_point(beta, eta, branch)|.
// Throws BranchVanishes if the branch has no stable point for any eta.
EffectiveDamping effective_damping(double q_mean, double p_mean, double beta, classical::Branch branch);

struct TableRow {
    double eta{0.0};
    double T{0.0};
    classical::Branch branch{classical::Branch::LowAmplitude};
    std::optional<MetastableState> state;
    std::string status;  // "ok", "absent" or "error: ..."
    // provenance
    std::size_t N{0};
    double nbar{0.0};
    double residual{0.0};
    lindblad::SteadyStateMethod method{lindblad::SteadyStateMethod::NullSpace};
};

struct TableOptions {
    std::size_t N{0};  // 0: fock default truncation
    lindblad::SteadyStateMethod method{lindblad::SteadyStateMethod::NullSpace};
    lindblad::SteadyStateOptions solver{};
    unsigned jobs{1};
};

// Rows ordered eta, then T, then branch (low before high). Per-cell failures land in the
// status column.
std::vector<TableRow> eta_eff_table(double lambda, double beta, const std::vector<double>& eta_list,
                                    const std::vector<double>& T_list, const TableOptions& opts = {});

} // namespace duffing::metastable
