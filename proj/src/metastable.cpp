#include "duffing/metastable.hpp"

#include "duffing/errors.hpp"
#include "duffing/fock.hpp"
#include "duffing/model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace duffing::metastable {

using classical::Branch;
using classical::PhasePoint;

std::vector<Eigenpair> diagonalize_density(const lindblad::DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<lindblad::Matrix> solver(rho.matrix());
    const auto& w = solver.eigenvalues();
    std::vector<Eigenpair> out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (Eigen::Index k = w.size() - 1; k >= 0; --k) {
        out.push_back({w(k), solver.eigenvectors().col(k)});
    }
    return out;
}

PhasePoint phase_space_mean(const Eigen::VectorXcd& psi, double lambda) {
    // alpha = <a> = sum conj(c_n) sqrt(n+1) c_{n+1}
    std::complex<double> alpha{0.0, 0.0};
    const double norm2 = psi.squaredNorm();
    for (Eigen::Index n = 0; n + 1 < psi.size(); ++n) {
        alpha += std::conj(psi(n)) * std::sqrt(static_cast<double>(n + 1)) * psi(n + 1);
    }
    alpha /= norm2;
    const double s = std::sqrt(2.0 * lambda);
    return {s * alpha.real(), s * alpha.imag()};
}

namespace {

double dist(const PhasePoint& a, const PhasePoint& b) { return std::hypot(a.Q - b.Q, a.P - b.P); }

} // namespace

Identification identify_states(const std::vector<Eigenpair>& eigenpairs, double beta, double lambda,
                               double eta) {
    const auto low_ref = classical::branch_point(beta, eta, Branch::LowAmplitude);
    const auto high_ref = classical::branch_point(beta, eta, Branch::HighAmplitude);
    Identification out;
    bool any = false;
    for (const auto& ep : eigenpairs) {
        if (ep.weight < kWeightFloor) {
            continue;
        }
        any = true;
        const PhasePoint c = phase_space_mean(ep.state, lambda);
        const double r = c.amplitude();
        // nearest classical amplitude decides the branch
        Branch b;
        if (low_ref && high_ref) {
            b = std::abs(r - low_ref->amplitude()) <= std::abs(r - high_ref->amplitude()) ? Branch::LowAmplitude
                                                                                          : Branch::HighAmplitude;
        } else if (low_ref) {
            b = Branch::LowAmplitude;
        } else if (high_ref) {
            b = Branch::HighAmplitude;
        } else {
            continue;
        }
        const PhasePoint& ref = b == Branch::LowAmplitude ? *low_ref : *high_ref;
        auto& slot = b == Branch::LowAmplitude ? out.low : out.high;
        const double d = dist(c, ref);
        if (d > kBranchGate || (slot && slot->weight >= ep.weight)) {
            continue;
        }
        MetastableState s;
        s.weight = ep.weight;
        s.q_mean = c.Q;
        s.p_mean = c.P;
        s.amplitude = r;
        s.branch = b;
        s.distance_to_branch = d;
        s.state = ep.state;
        slot = std::move(s);
    }
    if (!any) {
        throw Error(ErrorKind::NoMetastableStates, "no density-matrix eigenvalue above the weight floor");
    }
    return out;
}

EffectiveDamping effective_damping(double q_mean, double p_mean, double beta, Branch branch) {
    if (branch == Branch::Unstable) {
        throw Error(ErrorKind::InvalidParameter, "effective damping needs a stable branch");
    }
    const PhasePoint target{q_mean, p_mean};
    const double inf = std::numeric_limits<double>::infinity();
    auto cost = [&](double eta) {
        const auto p = classical::branch_point(beta, eta, branch);
        return p ? dist(*p, target) : inf;
    };
    const double lo = 1e-6;
    const double hi = 1.0 / std::sqrt(3.0) - 1e-6;
    constexpr int n_coarse = 400;
    const double h = (hi - lo) / n_coarse;
    int best = -1;
    double best_cost = inf;
    for (int i = 0; i <= n_coarse; ++i) {
        const double c = cost(lo + i * h);
        if (c < best_cost) {
            best_cost = c;
            best = i;
        }
    }
    if (best < 0) {
        throw Error(ErrorKind::BranchVanishes,
                    std::string(classical::to_string(branch)) + " branch absent for every eta at this beta");
    }
    double a = lo + std::max(best - 1, 0) * h;
    double b = lo + std::min(best + 1, n_coarse) * h;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = cost(x1);
    double f2 = cost(x2);
    while (b - a > 1e-11) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = cost(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = cost(x2);
        }
    }
    double eta = 0.5 * (a + b);
    double c = cost(eta);
    const double c_best = best_cost;
    if (!(c <= c_best)) {
        eta = lo + best * h;
        c = c_best;
    }
    return {eta, c};
}

namespace {

std::vector<TableRow> run_cell(double lambda, double beta, double eta, double T, const TableOptions& opts) {
    TableRow base;
    base.eta = eta;
    base.T = T;
    base.method = opts.method;
    base.N = opts.N > 0 ? opts.N : model::default_truncation(lambda);
    TableRow low = base;
    low.branch = Branch::LowAmplitude;
    TableRow high = base;
    high.branch = Branch::HighAmplitude;
    try {
        base.nbar = model::thermal_occupation(T);
        low.nbar = high.nbar = base.nbar;
        const model::ScaledParams params(lambda, beta, eta, base.nbar);
        const auto gen = lindblad::scaled_generator(params, base.N);
        const auto ss = lindblad::steady_state(gen, opts.method, opts.solver);
        low.residual = high.residual = ss.residual;
        const auto ids = identify_states(diagonalize_density(ss.rho), beta, lambda, eta);
        for (auto* row : {&low, &high}) {
            const auto& st = row->branch == Branch::LowAmplitude ? ids.low : ids.high;
            if (!st) {
                row->status = "absent";
                continue;
            }
            MetastableState s = *st;
            const auto fit = effective_damping(s.q_mean, s.p_mean, beta, row->branch);
            s.eta_eff = fit.eta_eff;
            s.distance_to_branch = fit.distance;
            row->state = std::move(s);
            row->status = "ok";
        }
    } catch (const std::exception& e) {
        for (auto* row : {&low, &high}) {
            if (row->status.empty()) {
                row->state.reset();
                row->status = std::string("error: ") + e.what();
            }
        }
    }
    return {low, high};
}

} // namespace

std::vector<TableRow> eta_eff_table(double lambda, double beta, const std::vector<double>& eta_list,
                                    const std::vector<double>& T_list, const TableOptions& opts) {
    struct Cell {
        double eta;
        double T;
    };
    std::vector<Cell> cells;
    for (double eta : eta_list) {
        for (double T : T_list) {
            cells.push_back({eta, T});
        }
    }
    std::vector<std::vector<TableRow>> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            results[i] = run_cell(lambda, beta, cells[i].eta, cells[i].T, opts);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(cells.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    std::vector<TableRow> rows;
    for (auto& r : results) {
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

} // namespace duffing::metastable
