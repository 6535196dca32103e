#include "doctest.h"

#include "duffing/classical.hpp"
#include "duffing/errors.hpp"
#include "duffing/fock.hpp"
#include "duffing/metastable.hpp"

#include <cmath>
#include <random>

using namespace duffing;
using namespace duffing::metastable;
using classical::Branch;
using Complex = std::complex<double>;

TEST_CASE("diagonalize_density") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(6);
    psi(1) = 0.6;
    psi(4) = Complex(0.0, 0.8);
    const auto pure = diagonalize_density(lindblad::DensityMatrix::pure(psi));
    CHECK(pure[0].weight == doctest::Approx(1.0));
    CHECK(std::abs(pure[1].weight) < 1e-12);
    CHECK(std::abs(pure[0].state.dot(psi)) == doctest::Approx(1.0));

    lindblad::Matrix d = lindblad::Matrix::Zero(4, 4);
    d(0, 0) = 0.1;
    d(1, 1) = 0.4;
    d(2, 2) = 0.3;
    d(3, 3) = 0.2;
    const auto th = diagonalize_density(lindblad::DensityMatrix(d));
    const double w[] = {0.4, 0.3, 0.2, 0.1};
    const Eigen::Index n[] = {1, 2, 3, 0};
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        CHECK(th[static_cast<std::size_t>(k)].weight == doctest::Approx(w[k]));
        CHECK(std::abs(th[static_cast<std::size_t>(k)].state(n[k])) == doctest::Approx(1.0));
        sum += th[static_cast<std::size_t>(k)].weight;
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
}

TEST_CASE("phase-space mean of a coherent state") {
    // |alpha> with alpha = 3 - 2i, lambda = 0.02: <Q> = sqrt(2 lambda) Re alpha, <P> = sqrt(2 lambda) Im alpha
    const std::complex<double> alpha(3.0, -2.0);
    Eigen::VectorXcd psi(80);
    std::complex<double> c = std::exp(-0.5 * std::norm(alpha));
    for (Eigen::Index n = 0; n < 80; ++n) {
        psi(n) = c;
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    const auto m = phase_space_mean(psi, 0.02);
    CHECK(m.Q == doctest::Approx(0.2 * 3.0).epsilon(1e-10));
    CHECK(m.P == doctest::Approx(0.2 * -2.0).epsilon(1e-10));
}

TEST_CASE("effective damping inverts the forward map") {
    const auto p = *classical::branch_point(0.12, 0.05, Branch::HighAmplitude);
    const auto fit = effective_damping(p.Q, p.P, 0.12, Branch::HighAmplitude);
    CHECK(fit.eta_eff == doctest::Approx(0.05).epsilon(1e-6));
    CHECK(fit.distance < 1e-7);

    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double eta = 0.01 + 0.3 * u(rng);
        const auto w = *classical::bifurcation_window(eta);
        const double beta = w.beta1 + (w.beta2 - w.beta1) * (0.05 + 0.9 * u(rng));
        for (auto b : {Branch::LowAmplitude, Branch::HighAmplitude}) {
            const auto q = *classical::branch_point(beta, eta, b);
            const auto f = effective_damping(q.Q, q.P, beta, b);
            CHECK(std::abs(f.eta_eff - eta) < 1e-5);
        }
    }
}

TEST_CASE("effective damping off the curve") {
    const double beta = 0.12, eta = 0.05, h = 1e-6;
    const auto p = *classical::branch_point(beta, eta, Branch::LowAmplitude);
    // tangent of the branch curve by central differences of the forward map
    const auto pp = *classical::branch_point(beta, eta + h, Branch::LowAmplitude);
    const auto pm = *classical::branch_point(beta, eta - h, Branch::LowAmplitude);
    double tq = pp.Q - pm.Q, tp = pp.P - pm.P;
    const double tn = std::hypot(tq, tp);
    tq /= tn;
    tp /= tn;
    const auto f = effective_damping(p.Q - 1e-3 * tp, p.P + 1e-3 * tq, beta, Branch::LowAmplitude);
    CHECK(std::abs(f.eta_eff - eta) < 1e-2);
    CHECK(f.distance == doctest::Approx(1e-3).epsilon(0.05));
}

TEST_CASE("effective damping errors") {
    // beta above every upper window edge: no low-amplitude stable point for any eta
    try {
        effective_damping(0.1, 0.1, 0.5, Branch::LowAmplitude);
        FAIL("expected BranchVanishes");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BranchVanishes);
    }
    CHECK_THROWS_AS(effective_damping(0.1, 0.1, 0.12, Branch::Unstable), Error);
}

TEST_CASE("identify_states on synthetic eigenpairs") {
    const double lambda = 0.027, beta = 0.12, eta = 0.3;
    auto coherent = [&](classical::PhasePoint c) {
        const std::complex<double> alpha(c.Q / std::sqrt(2 * lambda), c.P / std::sqrt(2 * lambda));
        Eigen::VectorXcd psi(120);
        std::complex<double> v = std::exp(-0.5 * std::norm(alpha));
        for (Eigen::Index n = 0; n < 120; ++n) {
            psi(n) = v;
            v *= alpha / std::sqrt(static_cast<double>(n + 1));
        }
        return Eigen::VectorXcd(psi / psi.norm());
    };
    const auto lo = *classical::branch_point(beta, eta, Branch::LowAmplitude);
    const auto hi = *classical::branch_point(beta, eta, Branch::HighAmplitude);
    std::vector<Eigenpair> eps{{0.6, coherent(lo)}, {0.3, coherent(hi)}, {0.095, coherent({hi.Q + 0.02, hi.P})},
                               {0.005, coherent({0.0, 0.0})}};
    const auto ids = identify_states(eps, beta, lambda, eta);
    REQUIRE(ids.low);
    REQUIRE(ids.high);
    CHECK(ids.low->weight == 0.6);
    CHECK(ids.high->weight == 0.3);
    CHECK(ids.low->amplitude < ids.high->amplitude);

    // only the floor-passing candidate far from both branches: reported absent
    std::vector<Eigenpair> far{{1.0, coherent({1.5, 1.5})}};
    const auto none = identify_states(far, beta, lambda, eta);
    CHECK_FALSE(none.low);
    CHECK_FALSE(none.high);

    std::vector<Eigenpair> dust{{0.005, coherent(lo)}};
    try {
        identify_states(dust, beta, lambda, eta);
        FAIL("expected NoMetastableStates");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoMetastableStates);
    }
}

TEST_CASE("pipeline: two states deep in the window") {
    // eta = 0.30 keeps both wells populated at lambda = 0.027, beta = 0.12
    const double lambda = 0.027, beta = 0.12, eta = 0.30;
    const auto gen = lindblad::scaled_generator(model::ScaledParams(lambda, beta, eta, 0.0), 112);
    const auto ss = lindblad::steady_state(gen, lindblad::SteadyStateMethod::NullSpace);
    const auto ids = identify_states(diagonalize_density(ss.rho), beta, lambda, eta);
    REQUIRE(ids.low);
    REQUIRE(ids.high);
    const auto fps = classical::damped_fixed_points(beta, eta);
    REQUIRE(fps.size() == 3);
    CHECK(ids.low->amplitude < fps[1].amplitude);
    CHECK(ids.high->amplitude > fps[1].amplitude);
}

TEST_CASE("pipeline: monostable beta gives one state") {
    const double lambda = 0.027, beta = 0.16, eta = 0.03;
    const auto gen = lindblad::scaled_generator(model::ScaledParams(lambda, beta, eta, 0.0), 112);
    const auto ss = lindblad::steady_state(gen, lindblad::SteadyStateMethod::NullSpace);
    const auto ids = identify_states(diagonalize_density(ss.rho), beta, lambda, eta);
    CHECK_FALSE(ids.low);
    CHECK(ids.high);
}

TEST_CASE("eta_eff_table ordering and status") {
    TableOptions opts;
    opts.N = 80;
    const auto rows = eta_eff_table(0.027, 0.12, {0.03, 0.7}, {0.0, 0.1}, opts);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].eta == 0.03);
    CHECK(rows[0].T == 0.0);
    CHECK(rows[0].branch == Branch::LowAmplitude);
    CHECK(rows[1].branch == Branch::HighAmplitude);
    CHECK(rows[2].T == 0.1);
    CHECK(rows[4].eta == 0.7);
    CHECK(rows[1].status == "ok");
    REQUIRE(rows[1].state);
    CHECK(rows[1].state->eta_eff);
    CHECK(std::abs(*rows[1].state->eta_eff - 0.03) < 0.01);
    CHECK(rows[1].state->distance_to_branch < 0.05);
    // above 1/sqrt(3) there is no high-amplitude branch
    CHECK(rows[5].status == "absent");

    opts.jobs = 3;
    const auto again = eta_eff_table(0.027, 0.12, {0.03, 0.7}, {0.0, 0.1}, opts);
    REQUIRE(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(again[i].status == rows[i].status);
        CHECK(again[i].eta == rows[i].eta);
        if (rows[i].state) {
            CHECK(again[i].state->q_mean == rows[i].state->q_mean);
        }
    }
}

TEST_CASE("dominant eigenstates survive moderate temperature") {
    const double lambda = 0.027, beta = 0.12, eta = 0.03;
    const auto cold = diagonalize_density(lindblad::steady_state(
        lindblad::scaled_generator(model::ScaledParams(lambda, beta, eta, 0.0), 112), lindblad::SteadyStateMethod::NullSpace).rho);
    const auto warm = diagonalize_density(lindblad::steady_state(
        lindblad::scaled_generator(model::ScaledParams(lambda, beta, eta, model::thermal_occupation(0.5)), 112),
        lindblad::SteadyStateMethod::NullSpace).rho);
    CHECK(std::abs(cold[0].state.dot(warm[0].state)) > 0.9);
}
