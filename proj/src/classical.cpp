#include "duffing/classical.hpp"

#include "duffing/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace duffing::classical {

namespace {

constexpr double kFourOver27 = 4.0 / 27.0;

double cubic_value(double x, double b, double c, double d) { return ((x + b) * x + c) * x + d; }

double polish_root(double x, double b, double c, double d) {
    for (int it = 0; it < 4; ++it) {
        const double fx = cubic_value(x, b, c, d);
        const double dfx = (3.0 * x + 2.0 * b) * x + c;
        if (std::abs(dfx) < 1e-10) {
            break;  // near a double root Newton loses accuracy; keep the closed form
        }
        const double next = x - fx / dfx;
        if (std::abs(cubic_value(next, b, c, d)) >= std::abs(fx)) {
            break;
        }
        x = next;
    }
    return x;
}

std::array<std::complex<double>, 2> jacobian_eigenvalues(const std::array<double, 4>& J) {
    const double tr = J[0] + J[3];
    const double det = J[0] * J[3] - J[1] * J[2];
    const std::complex<double> disc = std::sqrt(std::complex<double>(0.25 * tr * tr - det, 0.0));
    return {0.5 * tr + disc, 0.5 * tr - disc};
}

Extremum classify_extremum(const PhasePoint& p, double beta) {
    const auto h = hessian(p, beta);
    const double det = h[0] * h[2] - h[1] * h[1];
    const double scale = std::max({std::abs(h[0]), std::abs(h[2]), 1.0});
    if (std::abs(det) <= 1e-12 * scale * scale) {
        return Extremum::Degenerate;
    }
    if (det < 0.0) {
        return Extremum::Saddle;
    }
    return h[0] > 0.0 ? Extremum::Minimum : Extremum::Maximum;
}

FixedPoint make_fixed_point(const PhasePoint& p, double beta, double eta, Branch branch) {
    FixedPoint fp;
    fp.point = p;
    fp.amplitude = p.amplitude();
    fp.branch = branch;
    fp.extremum = classify_extremum(p, beta);
    fp.jacobian_eigenvalues = jacobian_eigenvalues(flow_jacobian(p, beta, eta));
    const double max_re = std::max(fp.jacobian_eigenvalues[0].real(), fp.jacobian_eigenvalues[1].real());
    if (eta == 0.0) {
        // Undamped: extrema of g are centers of the Hamiltonian flow.
        fp.kind = (fp.extremum == Extremum::Maximum || fp.extremum == Extremum::Minimum)
                      ? Stability::Stable
                      : Stability::Unstable;
    } else {
        fp.kind = max_re < 0.0 ? Stability::Stable : Stability::Unstable;
    }
    return fp;
}

PhasePoint newton_polish(PhasePoint p, double beta, double eta) {
    for (int it = 0; it < 6; ++it) {
        const PhasePoint F = flow(p, beta, eta);
        const double res = std::max(std::abs(F.Q), std::abs(F.P));
        if (res < 1e-15) {
            break;
        }
        const auto J = flow_jacobian(p, beta, eta);
        const double det = J[0] * J[3] - J[1] * J[2];
        if (std::abs(det) < 1e-14) {
            break;
        }
        const PhasePoint next{p.Q - (J[3] * F.Q - J[1] * F.P) / det,
                              p.P - (-J[2] * F.Q + J[0] * F.P) / det};
        const PhasePoint Fn = flow(next, beta, eta);
        if (std::max(std::abs(Fn.Q), std::abs(Fn.P)) >= res) {
            break;
        }
        p = next;
    }
    return p;
}

Branch lone_branch(double beta, double eta, double x) {
    if (const auto window = bifurcation_window(eta)) {
        if (beta <= window->beta1) {
            return Branch::LowAmplitude;
        }
        if (beta >= window->beta2) {
            return Branch::HighAmplitude;
        }
    }
    // Overdamped (or a root count inconsistent with the window at rounding level):
    // split at the inflection point of x((x-1)^2 + eta^2).
    return x < 2.0 / 3.0 ? Branch::LowAmplitude : Branch::HighAmplitude;
}

} // namespace

double PhasePoint::amplitude() const noexcept { return std::hypot(Q, P); }

const char* to_string(Stability s) noexcept {
    return s == Stability::Stable ? "stable" : "unstable";
}

const char* to_string(Extremum e) noexcept {
    switch (e) {
    case Extremum::Maximum:    return "max";
    case Extremum::Minimum:    return "min";
    case Extremum::Saddle:     return "saddle";
    case Extremum::Degenerate: return "degenerate";
    }
    return "degenerate";
}

const char* to_string(Branch b) noexcept {
    switch (b) {
    case Branch::LowAmplitude:  return "low";
    case Branch::Unstable:      return "unstable";
    case Branch::HighAmplitude: return "high";
    }
    return "unstable";
}

double quasienergy(const PhasePoint& p, double beta) {
    const double u = p.Q * p.Q + p.P * p.P - 1.0;
    return 0.25 * u * u + std::sqrt(beta) * p.Q;
}

std::array<double, 2> gradient(const PhasePoint& p, double beta) {
    const double u = p.Q * p.Q + p.P * p.P - 1.0;
    return {p.Q * u + std::sqrt(beta), p.P * u};
}

std::array<double, 3> hessian(const PhasePoint& p, double beta) {
    (void)beta;  // the drive term is linear in Q
    const double Q2 = p.Q * p.Q;
    const double P2 = p.P * p.P;
    return {3.0 * Q2 + P2 - 1.0, 2.0 * p.Q * p.P, Q2 + 3.0 * P2 - 1.0};
}

PhasePoint flow(const PhasePoint& p, double beta, double eta) {
    const auto g = gradient(p, beta);
    return {g[1] - eta * p.Q, -g[0] - eta * p.P};
}

std::array<double, 4> flow_jacobian(const PhasePoint& p, double beta, double eta) {
    const auto h = hessian(p, beta);
    // Qdot = dg/dP - eta Q, Pdot = -dg/dQ - eta P
    return {h[1] - eta, h[2], -h[0], -h[1] - eta};
}

std::vector<double> real_cubic_roots(double b, double c, double d) {
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double shift = -b / 3.0;
    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;
    const double scale = std::max(half_q * half_q, std::abs(third_p * third_p * third_p));
    const double tiny = 1e-14 * scale;

    std::vector<double> roots;
    if (scale == 0.0) {
        roots = {shift, shift, shift};
    } else if (disc > tiny) {
        const double s = std::sqrt(disc);
        roots = {std::cbrt(-half_q + s) + std::cbrt(-half_q - s) + shift};
    } else if (disc < -tiny) {
        const double r = std::sqrt(-third_p);
        const double arg = std::clamp(-half_q / (r * r * r), -1.0, 1.0);
        const double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            roots.push_back(2.0 * r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0) + shift);
        }
    } else {
        // Double root: t = 3q/p (simple) and -3q/(2p) (double).
        const double simple = 3.0 * q / p + shift;
        const double dbl = -1.5 * q / p + shift;
        roots = {simple, dbl, dbl};
    }
    for (double& x : roots) {
        x = polish_root(x, b, c, d);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

ExtremaResult extrema(double beta) {
    if (!(beta >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "extrema requires beta >= 0");
    }
    ExtremaResult result;
    result.outside_window = !(beta > 0.0 && beta < kFourOver27);
    const auto roots = real_cubic_roots(0.0, -1.0, std::sqrt(beta));
    if (roots.size() == 3) {
        // Ascending Q: the negative root is the deep minimum (large amplitude), the middle
        // one the local maximum near the origin, the largest the saddle.
        const Branch labels[3] = {Branch::HighAmplitude, Branch::LowAmplitude, Branch::Unstable};
        for (int k = 0; k < 3; ++k) {
            result.points.push_back(make_fixed_point({roots[k], 0.0}, beta, 0.0, labels[k]));
        }
    } else {
        result.points.push_back(make_fixed_point({roots[0], 0.0}, beta, 0.0, Branch::HighAmplitude));
    }
    return result;
}

std::vector<FixedPoint> damped_fixed_points(double beta, double eta) {
    if (!(beta > 0.0) || !(eta >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "damped fixed points need beta > 0 and eta >= 0");
    }
    // x^3 - 2x^2 + (1 + eta^2) x - beta = 0 with x = r^2
    const auto xs = real_cubic_roots(-2.0, 1.0 + eta * eta, -beta);
    const double sb = std::sqrt(beta);
    std::vector<FixedPoint> out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double u = xs[k] - 1.0;
        const double den = u * u + eta * eta;
        PhasePoint p{-u * sb / den, -eta * sb / den};
        p = newton_polish(p, beta, eta);
        const PhasePoint F = flow(p, beta, eta);
        if (std::max(std::abs(F.Q), std::abs(F.P)) > 1e-10) {
            throw Error(ErrorKind::SolverStagnation,
                        "fixed point residual too large at beta=" + std::to_string(beta) +
                            " eta=" + std::to_string(eta));
        }
        Branch branch;
        if (xs.size() == 3) {
            branch = k == 0 ? Branch::LowAmplitude : (k == 1 ? Branch::Unstable : Branch::HighAmplitude);
        } else {
            branch = lone_branch(beta, eta, xs[k]);
        }
        out.push_back(make_fixed_point(p, beta, eta, branch));
    }
    return out;
}

std::optional<PhasePoint> branch_point(double beta, double eta, Branch branch) {
    for (const auto& fp : damped_fixed_points(beta, eta)) {
        if (fp.branch == branch && fp.kind == Stability::Stable) {
            return fp.point;
        }
    }
    return std::nullopt;
}

std::optional<BifurcationWindow> bifurcation_window(double eta) {
    if (!(eta >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "eta must be >= 0");
    }
    const double s = eta * eta;
    double core = 1.0 - 3.0 * s;
    if (core < 0.0) {
        if (core < -1e-14) {
            return std::nullopt;  // overdamped: no bistability
        }
        core = 0.0;
    }
    const double root = std::pow(core, 1.5);
    return BifurcationWindow{2.0 * (1.0 + 9.0 * s - root) / 27.0, 2.0 * (1.0 + 9.0 * s + root) / 27.0};
}

std::vector<PhasePoint> integrate_flow(const PhasePoint& start, double beta, double eta, double dt,
                                       std::size_t n_steps) {
    if (!(dt > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "dt must be > 0");
    }
    std::vector<PhasePoint> traj;
    traj.reserve(n_steps + 1);
    traj.push_back(start);
    PhasePoint p = start;
    const auto axpy = [](const PhasePoint& a, double s, const PhasePoint& b) {
        return PhasePoint{a.Q + s * b.Q, a.P + s * b.P};
    };
    for (std::size_t i = 0; i < n_steps; ++i) {
        const PhasePoint k1 = flow(p, beta, eta);
        const PhasePoint k2 = flow(axpy(p, 0.5 * dt, k1), beta, eta);
        const PhasePoint k3 = flow(axpy(p, 0.5 * dt, k2), beta, eta);
        const PhasePoint k4 = flow(axpy(p, dt, k3), beta, eta);
        p.Q += dt / 6.0 * (k1.Q + 2.0 * k2.Q + 2.0 * k3.Q + k4.Q);
        p.P += dt / 6.0 * (k1.P + 2.0 * k2.P + 2.0 * k3.P + k4.P);
        if (!(p.amplitude() <= 10.0)) {
            throw Error(ErrorKind::TrajectoryEscaped, "trajectory left r <= 10 at step " + std::to_string(i + 1));
        }
        traj.push_back(p);
    }
    return traj;
}

std::vector<BranchRow> branch_curves(double beta, const std::vector<double>& eta_grid) {
    std::vector<std::vector<FixedPoint>> per_eta;
    std::set<Branch> seen;
    per_eta.reserve(eta_grid.size());
    for (double eta : eta_grid) {
        per_eta.push_back(damped_fixed_points(beta, eta));
        for (const auto& fp : per_eta.back()) {
            seen.insert(fp.branch);
        }
    }
    std::vector<BranchRow> rows;
    for (std::size_t i = 0; i < eta_grid.size(); ++i) {
        for (Branch b : {Branch::LowAmplitude, Branch::Unstable, Branch::HighAmplitude}) {
            if (!seen.count(b)) {
                continue;
            }
            BranchRow row{eta_grid[i], b, std::nullopt};
            for (const auto& fp : per_eta[i]) {
                if (fp.branch == b) {
                    row.point = fp;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace duffing::classical
