#include "doctest.h"

#include "duffing/errors.hpp"
#include "duffing/fock.hpp"

#include <cmath>
#include <random>

using namespace duffing;
using namespace duffing::fock;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}

TEST_CASE("ladder operators") {
    const auto a2 = annihilation(2);
    CHECK(a2(0, 1) == Complex(1.0, 0.0));
    CHECK(a2(0, 0) == Complex(0.0, 0.0));
    CHECK(a2(1, 0) == Complex(0.0, 0.0));
    CHECK(a2(1, 1) == Complex(0.0, 0.0));

    const auto a3 = annihilation(3);
    CHECK(a3(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(max_abs(creation(7).matrix() - annihilation(7).matrix().adjoint()) == 0.0);
    CHECK(max_abs((creation(9) * annihilation(9)).matrix() - number(9).matrix()) < 1e-14);
    for (std::size_t n = 0; n < 9; ++n) {
        CHECK(number(9)(n, n).real() == static_cast<double>(n));
    }
}

TEST_CASE("FockOperator validation") {
    CHECK_THROWS_AS(FockOperator(Matrix::Zero(1, 1)), Error);
    CHECK_THROWS_AS(FockOperator(Matrix::Zero(2, 3)), Error);
    Matrix bad = Matrix::Zero(3, 3);
    bad(1, 1) = std::nan("");
    CHECK_THROWS_AS(FockOperator{bad}, Error);
    CHECK_THROWS_AS(annihilation(1), Error);
}

TEST_CASE("position and momentum") {
    const double lambda = 0.027;
    const auto Q = position_op(10, lambda);
    const auto P = momentum_op(10, lambda);
    CHECK(Q(0, 1).real() == doctest::Approx(0.11619).epsilon(1e-4));
    CHECK(Q(0, 1).real() == doctest::Approx(std::sqrt(0.0135)).epsilon(1e-14));
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(Q(n, n) == Complex(0.0, 0.0));
        CHECK(P(n, n) == Complex(0.0, 0.0));
    }
    CHECK(Q.is_hermitian());
    CHECK(P.is_hermitian());
}

TEST_CASE("canonical commutator below the truncation edge") {
    for (auto [N, lambda] : {std::pair<std::size_t, double>{50, 0.027}, {120, 0.0135}}) {
        const auto c = commutator(position_op(N, lambda), momentum_op(N, lambda)).matrix();
        Matrix expected = Complex(0.0, lambda) * Matrix::Identity(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
        const auto n1 = static_cast<Eigen::Index>(N - 1);
        CHECK(max_abs((c - expected).topLeftCorner(n1, n1)) <= 1e-12);
        // the last diagonal entry carries the truncation defect -i lambda (N - 1)
        CHECK(std::abs(c(n1, n1) - Complex(0.0, -lambda * static_cast<double>(N - 1))) < 1e-10);
    }
}

TEST_CASE("quasienergy operator closed form") {
    const auto g0 = quasienergy_operator(40, 0.027, 0.0);
    CHECK(g0(0, 0).real() == doctest::Approx(0.236672).epsilon(1e-5));
    CHECK(max_abs(g0.matrix() - Matrix(g0.matrix().diagonal().asDiagonal())) == 0.0);

    // lambda(2n+1) = 1 exactly at n = 18 for lambda = 1/37
    const auto ring = quasienergy_operator(40, 1.0 / 37.0, 0.0);
    CHECK(std::abs(ring(18, 18).real()) < 1e-14);

    const auto g = quasienergy_operator(2, 1.0, 1.0);
    CHECK(g(0, 0).real() == doctest::Approx(0.0));
    CHECK(g(1, 1).real() == doctest::Approx(1.0));
    CHECK(g(0, 1).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(g(1, 0).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(g.is_hermitian());
}

TEST_CASE("two constructions of g agree") {
    for (double beta : {0.0, 0.0341, 0.12}) {
        const auto direct = quasienergy_operator(60, 0.027, beta);
        const auto from_qp = quasienergy_operator_from_qp(60, 0.027, beta);
        CHECK(max_abs(direct.matrix() - from_qp.matrix()) < 1e-12);
    }
}

TEST_CASE("RWA Hamiltonian") {
    const auto h0 = rwa_hamiltonian(5, 0.3, 0.0, 0.0);
    for (std::size_t n = 0; n < 5; ++n) {
        CHECK(h0(n, n).real() == doctest::Approx(0.3 * static_cast<double>(n)));
    }
    const auto h = rwa_hamiltonian(6, 2.5e-3, -6.75e-5, 3.7e-3);
    for (std::size_t n = 0; n < 6; ++n) {
        const double nn = static_cast<double>(n);
        CHECK(h(n, n).real() == doctest::Approx(2.5e-3 * nn - 6.75e-5 * nn * (nn + 1.0)).epsilon(1e-14));
    }
    CHECK(h(2, 3).real() == doctest::Approx(3.7e-3 * std::sqrt(3.0)));
    CHECK(h.is_hermitian());
}

TEST_CASE("dual construction: scaled RWA Hamiltonian equals g") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double Delta = 1e-3 + 4e-3 * u(rng);
        const double lambda = 0.01 + 0.04 * u(rng);
        const double chi = -lambda * Delta;
        const double beta = 0.01 + 0.13 * u(rng);
        double f = std::sqrt(beta * Delta * Delta * Delta / (-2.0 * chi));
        if (trial % 2) {
            f = -f;
        }
        const auto lhs = scaled_rwa_hamiltonian(80, Delta, chi, f);
        const auto rhs = quasienergy_operator(80, lambda, beta);
        CHECK(max_abs(lhs.matrix() - rhs.matrix()) < 1e-10);
    }
}

TEST_CASE("parity flips Q and P") {
    const auto Pi = parity(12);
    const auto Q = position_op(12, 0.05);
    const auto P = momentum_op(12, 0.05);
    CHECK(max_abs((Pi * Q * Pi).matrix() + Q.matrix()) < 1e-15);
    CHECK(max_abs((Pi * P * Pi).matrix() + P.matrix()) < 1e-15);
}

TEST_CASE("json round trip") {
    const auto g = quasienergy_operator(7, 0.1, 0.05) + Complex(0.0, 0.25) * commutator(position_op(7, 0.1), momentum_op(7, 0.1));
    const auto back = from_json(to_json(g));
    CHECK(back.dim() == 7);
    CHECK(max_abs(back.matrix() - g.matrix()) == 0.0);
    CHECK_THROWS_AS(from_json("{\"dim\": 2, \"data\": [1, 0]}"), Error);
    CHECK_THROWS_AS(from_json("not json"), Error);
}

TEST_CASE("sparse view drops zeros") {
    const auto g = quasienergy_operator(30, 0.027, 0.12);
    const auto s = g.sparse();
    CHECK(s.nonZeros() == 30 + 2 * 29);
    CHECK(max_abs(Matrix(s) - g.matrix()) == 0.0);
}
