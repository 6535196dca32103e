// Operators on the truncated number basis |0>, ..., |N-1>

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <cstddef>
#include <string>

namespace duffing::fock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Dense N x N operator with entry (m, n) = <m|A|n>. Immutable after construction.
class FockOperator {
public:
    // Throws InvalidParameter for non-square, N < 2, or non-finite data.
    explicit FockOperator(Matrix data);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.rows()); }
    const Matrix& matrix() const noexcept { return data_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return data_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    bool is_hermitian(double tol = 1e-12) const;
    // Entries with |x| <= drop_tol are omitted.
    SparseMatrix sparse(double drop_tol = 0.0) const;

    FockOperator adjoint() const { return FockOperator(data_.adjoint()); }

    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(Complex s, const FockOperator& a);

private:
    Matrix data_;
};

FockOperator commutator(const FockOperator& a, const FockOperator& b);

FockOperator annihilation(std::size_t N);
FockOperator creation(std::size_t N);
FockOperator number(std::size_t N);
FockOperator identity(std::size_t N);
// (-1)^n on the diagonal; conjugation by it maps Q -> -Q, P -> -P.
FockOperator parity(std::size_t N);

// Q = sqrt(lambda/2)(a^+ + a), P = i sqrt(lambda/2)(a^+ - a), so [Q, P] = i lambda.
FockOperator position_op(std::size_t N, double lambda);
FockOperator momentum_op(std::size_t N, double lambda);

// g = (Q^2 + P^2 - 1)^2 / 4 + sqrt(beta) Q, built directly from its tridiagonal form:
// diagonal [lambda(2n+1) - 1]^2 / 4, off-diagonal sqrt(beta) sqrt(lambda/2) sqrt(n+1).
FockOperator quasienergy_operator(std::size_t N, double lambda, double beta);
// Same operator assembled from products of position_op/momentum_op.
FockOperator quasienergy_operator_from_qp(std::size_t N, double lambda, double beta);

// Delta n + chi n(n+1) + f(a^+ + a)
FockOperator rwa_hamiltonian(std::size_t N, double Delta, double chi, double f);

// (chi/Delta^2) H mapped onto the quasienergy frame: conjugated by the parity when
// chi * f < 0 so the drive term carries +sqrt(beta) Q, then shifted by (1 - lambda)^2/4.
// Equal to quasienergy_operator(N, -chi/Delta, -2 f^2 chi/Delta^3) up to rounding.
FockOperator scaled_rwa_hamiltonian(std::size_t N, double Delta, double chi, double f);

// Matrix dump: {"dim": N, "data": [re, im, re, im, ...]} in row-major order.
std::string to_json(const FockOperator& op);
FockOperator from_json(const std::string& text);

} // namespace duffing::fock
