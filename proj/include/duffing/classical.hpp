// Classical quasienergy landscape g(Q, P), its stationary points, the damped
// flow  Qdot = dg/dP - eta Q,  Pdot = -dg/dQ - eta P,  and the bistability window.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace duffing::classical {

struct PhasePoint {
    double Q{0.0};
    double P{0.0};

    double amplitude() const noexcept;
};

enum class Stability { Stable, Unstable };
// Type of the stationary point of g itself (from the Hessian of g).
enum class Extremum { Maximum, Minimum, Saddle, Degenerate };
// Branches are labelled by amplitude only, never by whether g has a max or min there.
enum class Branch { LowAmplitude, Unstable, HighAmplitude };

const char* to_string(Stability s) noexcept;
const char* to_string(Extremum e) noexcept;
const char* to_string(Branch b) noexcept;

struct FixedPoint {
    PhasePoint point;
    Stability kind{Stability::Unstable};
    Extremum extremum{Extremum::Degenerate};
    Branch branch{Branch::Unstable};
    double amplitude{0.0};
    std::array<std::complex<double>, 2> jacobian_eigenvalues{};
};

struct BifurcationWindow {
    double beta1{0.0};
    double beta2{0.0};

    bool contains(double beta) const noexcept { return beta1 < beta && beta < beta2; }
};

double quasienergy(const PhasePoint& p, double beta);
// (dg/dQ, dg/dP)
std::array<double, 2> gradient(const PhasePoint& p, double beta);
// Hessian of g: {d2g/dQ2, d2g/dQdP, d2g/dP2}
std::array<double, 3> hessian(const PhasePoint& p, double beta);
// Right-hand side of the damped flow.
PhasePoint flow(const PhasePoint& p, double beta, double eta);
// Jacobian of the damped flow, row-major {dQdot/dQ, dQdot/dP, dPdot/dQ, dPdot/dP}.
std::array<double, 4> flow_jacobian(const PhasePoint& p, double beta, double eta);

// Real roots of x^3 + b x^2 + c x + d, ascending; double roots are reported twice.
std::vector<double> real_cubic_roots(double b, double c, double d);

struct ExtremaResult {
    std::vector<FixedPoint> points;   // ascending in Q
    bool outside_window{false};       // beta not in (0, 4/27): fewer than three extrema
};

// Stationary points of g at zero damping: P = 0, Q(Q^2 - 1) = -sqrt(beta).
ExtremaResult extrema(double beta);

// All fixed points of the damped flow, ordered low-amplitude, unstable, high-amplitude.
// Obtained from r^2((r^2 - 1)^2 + eta^2) = beta and polished by 2-D Newton steps.
std::vector<FixedPoint> damped_fixed_points(double beta, double eta);

// Stable fixed point on the given branch at (beta, eta), if that branch exists there.
std::optional<PhasePoint> branch_point(double beta, double eta, Branch branch);

// beta^(1,2) = 2(1 + 9 eta^2 -/+ (1 - 3 eta^2)^(3/2)) / 27; nullopt for eta > 1/sqrt(3).
std::optional<BifurcationWindow> bifurcation_window(double eta);

// Fixed-step RK4 trajectory including the start point; throws TrajectoryEscaped if r > 10.
std::vector<PhasePoint> integrate_flow(const PhasePoint& start, double beta, double eta,
                                       double dt, std::size_t n_steps);

struct BranchRow {
    double eta{0.0};
    Branch branch{Branch::Unstable};
    std::optional<FixedPoint> point;  // empty when the branch does not exist at this eta
};

// For each eta: the existing fixed points, plus an absent marker for every branch that
// exists somewhere on the grid but not at this eta.
std::vector<BranchRow> branch_curves(double beta, const std::vector<double>& eta_grid);

} // namespace duffing::classical
