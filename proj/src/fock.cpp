#include "duffing/fock.hpp"

#include "duffing/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <vector>

namespace duffing::fock {

namespace {

void require_dim(std::size_t N) {
    if (N < 2) {
        throw Error(ErrorKind::InvalidParameter, "truncation N must be >= 2");
    }
}

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

} // namespace

FockOperator::FockOperator(Matrix data) : data_(std::move(data)) {
    if (data_.rows() != data_.cols()) {
        throw Error(ErrorKind::InvalidParameter, "operator matrix must be square");
    }
    if (data_.rows() < 2) {
        throw Error(ErrorKind::InvalidParameter, "operator dimension must be >= 2");
    }
    if (!data_.allFinite()) {
        throw Error(ErrorKind::InvalidParameter, "operator matrix has non-finite entries");
    }
}

bool FockOperator::is_hermitian(double tol) const {
    return (data_ - data_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SparseMatrix FockOperator::sparse(double drop_tol) const {
    std::vector<Eigen::Triplet<Complex>> triplets;
    for (Eigen::Index c = 0; c < data_.cols(); ++c) {
        for (Eigen::Index r = 0; r < data_.rows(); ++r) {
            if (std::abs(data_(r, c)) > drop_tol) {
                triplets.emplace_back(r, c, data_(r, c));
            }
        }
    }
    SparseMatrix out(data_.rows(), data_.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator sum");
    }
    return FockOperator(a.data_ + b.data_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator difference");
    }
    return FockOperator(a.data_ - b.data_);
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator product");
    }
    return FockOperator(a.data_ * b.data_);
}

FockOperator operator*(Complex s, const FockOperator& a) { return FockOperator(s * a.data_); }

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator annihilation(std::size_t N) {
    require_dim(N);
    Matrix a = Matrix::Zero(idx(N), idx(N));
    for (std::size_t n = 1; n < N; ++n) {
        a(idx(n - 1), idx(n)) = std::sqrt(static_cast<double>(n));
    }
    return FockOperator(std::move(a));
}

FockOperator creation(std::size_t N) { return annihilation(N).adjoint(); }

FockOperator number(std::size_t N) {
    require_dim(N);
    Matrix n = Matrix::Zero(idx(N), idx(N));
    for (std::size_t k = 0; k < N; ++k) {
        n(idx(k), idx(k)) = static_cast<double>(k);
    }
    return FockOperator(std::move(n));
}

FockOperator identity(std::size_t N) {
    require_dim(N);
    return FockOperator(Matrix::Identity(idx(N), idx(N)));
}

FockOperator parity(std::size_t N) {
    require_dim(N);
    Matrix p = Matrix::Zero(idx(N), idx(N));
    for (std::size_t k = 0; k < N; ++k) {
        p(idx(k), idx(k)) = (k % 2 == 0) ? 1.0 : -1.0;
    }
    return FockOperator(std::move(p));
}

FockOperator position_op(std::size_t N, double lambda) {
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be > 0");
    }
    const Matrix a = annihilation(N).matrix();
    return FockOperator(std::sqrt(lambda / 2.0) * (a.adjoint() + a));
}

FockOperator momentum_op(std::size_t N, double lambda) {
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be > 0");
    }
    const Matrix a = annihilation(N).matrix();
    return FockOperator(Complex(0.0, std::sqrt(lambda / 2.0)) * (a.adjoint() - a));
}

FockOperator quasienergy_operator(std::size_t N, double lambda, double beta) {
    require_dim(N);
    if (!(lambda > 0.0) || !(beta >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "quasienergy operator needs lambda > 0, beta >= 0");
    }
    Matrix g = Matrix::Zero(idx(N), idx(N));
    const double drive = std::sqrt(beta) * std::sqrt(lambda / 2.0);
    for (std::size_t n = 0; n < N; ++n) {
        const double x = lambda * (2.0 * static_cast<double>(n) + 1.0) - 1.0;
        g(idx(n), idx(n)) = 0.25 * x * x;
        if (n + 1 < N) {
            const double off = drive * std::sqrt(static_cast<double>(n + 1));
            g(idx(n), idx(n + 1)) = off;
            g(idx(n + 1), idx(n)) = off;
        }
    }
    return FockOperator(std::move(g));
}

FockOperator quasienergy_operator_from_qp(std::size_t N, double lambda, double beta) {
    if (!(beta >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "beta must be >= 0");
    }
    // Q^2 + P^2 = lambda(2n+1) only away from the basis edge; build it in an enlarged
    // basis and cut back so the last row matches the N-level definition.
    const std::size_t M = N + 2;
    const Matrix Q = position_op(M, lambda).matrix();
    const Matrix P = momentum_op(M, lambda).matrix();
    const Matrix I = Matrix::Identity(idx(M), idx(M));
    const Matrix R = Q * Q + P * P - I;
    const Matrix quartic = 0.25 * (R * R);
    const Matrix g = quartic.topLeftCorner(idx(N), idx(N)) +
                     std::sqrt(beta) * position_op(N, lambda).matrix();
    return FockOperator(g);
}

FockOperator rwa_hamiltonian(std::size_t N, double Delta, double chi, double f) {
    require_dim(N);
    Matrix h = Matrix::Zero(idx(N), idx(N));
    for (std::size_t n = 0; n < N; ++n) {
        const double nn = static_cast<double>(n);
        h(idx(n), idx(n)) = Delta * nn + chi * nn * (nn + 1.0);
        if (n + 1 < N) {
            const double off = f * std::sqrt(nn + 1.0);
            h(idx(n), idx(n + 1)) = off;
            h(idx(n + 1), idx(n)) = off;
        }
    }
    return FockOperator(std::move(h));
}

FockOperator scaled_rwa_hamiltonian(std::size_t N, double Delta, double chi, double f) {
    if (Delta == 0.0) {
        throw Error(ErrorKind::DegenerateScaling, "Delta must be nonzero");
    }
    const double lambda = -chi / Delta;
    Matrix h = (chi / (Delta * Delta)) * rwa_hamiltonian(N, Delta, chi, f).matrix();
    if (chi * f < 0.0) {
        const Matrix p = parity(N).matrix();
        h = p * h * p;
    }
    h.diagonal().array() += 0.25 * (1.0 - lambda) * (1.0 - lambda);
    return FockOperator(std::move(h));
}

std::string to_json(const FockOperator& op) {
    nlohmann::json j;
    j["dim"] = op.dim();
    std::vector<double> data;
    data.reserve(2 * op.dim() * op.dim());
    for (std::size_t r = 0; r < op.dim(); ++r) {
        for (std::size_t c = 0; c < op.dim(); ++c) {
            data.push_back(op(r, c).real());
            data.push_back(op(r, c).imag());
        }
    }
    j["data"] = std::move(data);
    return j.dump();
}

FockOperator from_json(const std::string& text) {
    std::size_t N = 0;
    std::vector<double> data;
    try {
        const auto j = nlohmann::json::parse(text);
        N = j.at("dim").get<std::size_t>();
        data = j.at("data").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidParameter, std::string("bad matrix dump: ") + e.what());
    }
    if (data.size() != 2 * N * N) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dump length does not match dim");
    }
    Matrix m(idx(N), idx(N));
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            const std::size_t k = 2 * (r * N + c);
            m(idx(r), idx(c)) = Complex(data[k], data[k + 1]);
        }
    }
    return FockOperator(std::move(m));
}

} // namespace duffing::fock
