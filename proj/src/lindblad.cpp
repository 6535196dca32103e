#include "duffing/lindblad.hpp"

#include "duffing/errors.hpp"

#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace duffing::lindblad {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// kron(A, B) for sparse operands, appended as triplets scaled by s.
void add_kron(std::vector<Eigen::Triplet<Complex>>& out, const SparseMatrix& A, const SparseMatrix& B,
              Complex s) {
    const Eigen::Index nb = B.rows();
    for (int ka = 0; ka < A.outerSize(); ++ka) {
        for (SparseMatrix::InnerIterator ia(A, ka); ia; ++ia) {
            for (int kb = 0; kb < B.outerSize(); ++kb) {
                for (SparseMatrix::InnerIterator ib(B, kb); ib; ++ib) {
                    out.emplace_back(ia.row() * nb + ib.row(), ia.col() * nb + ib.col(),
                                     s * ia.value() * ib.value());
                }
            }
        }
    }
}

SparseMatrix sparse_identity(std::size_t N) {
    SparseMatrix I(idx(N), idx(N));
    I.setIdentity();
    return I;
}

using Vector = Eigen::VectorXcd;
using RowSparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

struct StepResult {
    Vector y;
    double error_ratio;
};

// One Dormand-Prince 5(4) trial step of y' = L y from y with k1 = L y.
StepResult dopri_step(const RowSparse& L, const Vector& y, const Vector& k1, double h, double tol) {
    constexpr double a21 = 1.0 / 5.0;
    constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                     a54 = -212.0 / 729.0;
    constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                     a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                     b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                     e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    const Vector k2 = L * (y + h * a21 * k1);
    const Vector k3 = L * (y + h * (a31 * k1 + a32 * k2));
    const Vector k4 = L * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vector k5 = L * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vector k6 = L * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Vector y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vector k7 = L * y_new;
    const Vector err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    return {std::move(y_new), err.cwiseAbs().maxCoeff() / tol};
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, std::size_t N) { return Eigen::Map<const Matrix>(v.data(), idx(N), idx(N)); }

// Hermitize and renormalize in vectorized form.
Vector clean(const Vector& v, std::size_t N) { return vec(hermitize_and_normalize(unvec(v, N))); }

double next_step(double h, double error_ratio) {
    const double factor = error_ratio > 0.0 ? 0.9 * std::pow(error_ratio, -0.2) : 5.0;
    return h * std::clamp(factor, 0.2, 5.0);
}

} // namespace

DensityMatrix::DensityMatrix(Matrix data) : data_(std::move(data)) {
    if (data_.rows() != data_.cols() || data_.rows() < 1) {
        throw Error(ErrorKind::DimensionMismatch, "density matrix must be square");
    }
    const double herm = max_abs(data_ - data_.adjoint());
    if (!(herm <= 1e-10)) {
        throw Error(ErrorKind::InvalidParameter, "density matrix not Hermitian (" + std::to_string(herm) + ")");
    }
    const Complex tr = data_.trace();
    if (!(std::abs(tr - 1.0) <= 1e-10)) {
        throw Error(ErrorKind::InvalidParameter, "density matrix trace " + std::to_string(tr.real()));
    }
    const double lo = min_eigenvalue();
    if (!(lo >= -1e-8)) {
        throw Error(ErrorKind::InvalidParameter, "density matrix eigenvalue " + std::to_string(lo));
    }
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const Eigen::VectorXcd v = psi / psi.norm();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::number_state(std::size_t N, std::size_t n) {
    Matrix m = Matrix::Zero(idx(N), idx(N));
    m(idx(n), idx(n)) = 1.0;
    return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(data_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

Matrix hermitize_and_normalize(const Matrix& rho) {
    Matrix h = 0.5 * (rho + rho.adjoint());
    const double tr = h.trace().real();
    return h / tr;
}

double trace_distance(const Matrix& a, const Matrix& b) {
    const Matrix d = 0.5 * ((a - b) + (a - b).adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(d, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

LindbladGenerator::LindbladGenerator(const fock::FockOperator& H, double hbar_eff, double kappa, double nbar)
    : N_(H.dim()), hbar_eff_(hbar_eff), kappa_(kappa), nbar_(nbar) {
    if (!H.is_hermitian(1e-12)) {
        throw Error(ErrorKind::InvalidParameter, "generator Hamiltonian must be Hermitian");
    }
    if (!(hbar_eff > 0.0) || !(kappa >= 0.0) || !(nbar >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "generator needs hbar_eff > 0, kappa >= 0, nbar >= 0");
    }
    const auto a = fock::annihilation(N_);
    const auto ad = fock::creation(N_);
    H_ = H.sparse();
    a_ = a.sparse();
    ad_ = ad.sparse();
    ada_ = (ad * a).sparse();
    aad_ = (a * ad).sparse();  // truncated: its last diagonal entry is 0, not N
}

Matrix LindbladGenerator::apply(const Matrix& rho) const {
    if (rho.rows() != idx(N_) || rho.cols() != idx(N_)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "rho is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                        ", generator is " + std::to_string(N_));
    }
    Matrix out = Complex(0.0, -1.0 / hbar_eff_) * (H_ * rho - rho * H_);
    if (kappa_ > 0.0) {
        const double down = kappa_ * (1.0 + nbar_);
        const Matrix a_rho = a_ * rho;
        out += down * (a_rho * ad_ - 0.5 * (ada_ * rho + rho * ada_));
        if (nbar_ > 0.0) {
            const double up = kappa_ * nbar_;
            const Matrix ad_rho = ad_ * rho;
            out += up * (ad_rho * a_ - 0.5 * (aad_ * rho + rho * aad_));
        }
    }
    return out;
}

SparseMatrix LindbladGenerator::superoperator() const {
    // vec(A X B) = (B^T kron A) vec(X)
    const SparseMatrix I = sparse_identity(N_);
    std::vector<Eigen::Triplet<Complex>> t;
    const Complex minus_i(0.0, -1.0 / hbar_eff_);
    add_kron(t, I, H_, minus_i);
    add_kron(t, SparseMatrix(H_.transpose()), I, -minus_i);
    if (kappa_ > 0.0) {
        const double down = kappa_ * (1.0 + nbar_);
        add_kron(t, SparseMatrix(ad_.transpose()), a_, down);
        add_kron(t, I, ada_, -0.5 * down);
        add_kron(t, SparseMatrix(ada_.transpose()), I, -0.5 * down);
        if (nbar_ > 0.0) {
            const double up = kappa_ * nbar_;
            add_kron(t, SparseMatrix(a_.transpose()), ad_, up);
            add_kron(t, I, aad_, -0.5 * up);
            add_kron(t, SparseMatrix(aad_.transpose()), I, -0.5 * up);
        }
    }
    const Eigen::Index n2 = idx(N_ * N_);
    SparseMatrix L(n2, n2);
    L.setFromTriplets(t.begin(), t.end());
    return L;
}

LindbladGenerator scaled_generator(const model::ScaledParams& params, std::size_t N) {
    const auto g = fock::quasienergy_operator(N, params.lambda(), params.beta());
    return LindbladGenerator(g, params.lambda(), 2.0 * params.eta(), params.nbar());
}

DensityMatrix evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_end,
                     const EvolveOptions& opts) {
    if (rho0.dim() != gen.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "initial state does not match generator");
    }
    if (!(t_end >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "t_end must be >= 0");
    }
    const std::size_t N = gen.dim();
    const RowSparse L = gen.superoperator();
    Vector y = vec(rho0.matrix());
    double t = 0.0;
    double h = opts.initial_step;
    Vector k1 = L * y;
    while (t < t_end) {
        const bool last = t + h >= t_end;
        const double step = last ? t_end - t : h;
        auto trial = dopri_step(L, y, k1, step, opts.tol);
        if (trial.error_ratio <= 1.0) {
            y = clean(trial.y, N);
            k1 = L * y;
            t = last ? t_end : t + step;
        }
        h = next_step(step, trial.error_ratio);
        if (h < opts.min_step && t < t_end) {
            throw Error(ErrorKind::StepUnderflow, "required step " + std::to_string(h) + " at t=" + std::to_string(t));
        }
    }
    return DensityMatrix(hermitize_and_normalize(unvec(y, N)));
}

std::string_view to_string(SteadyStateMethod m) noexcept {
    return m == SteadyStateMethod::NullSpace ? "null-space" : "long-time";
}

SteadyStateMethod parse_method(std::string_view name) {
    if (name == "null-space") {
        return SteadyStateMethod::NullSpace;
    }
    if (name == "long-time") {
        return SteadyStateMethod::LongTime;
    }
    throw Error(ErrorKind::InvalidParameter, "unknown steady-state method '" + std::string(name) + "'");
}

namespace {

Matrix null_space_solve(const LindbladGenerator& gen, const SteadyStateOptions& opts) {
    const std::size_t N = gen.dim();
    if (N > opts.max_null_space_dim) {
        throw Error(ErrorKind::InvalidParameter,
                    "null-space method limited to N <= " + std::to_string(opts.max_null_space_dim));
    }
    SparseMatrix L = gen.superoperator();
    // Replace the (0,0) population equation by the trace condition; the diagonal equations
    // sum to zero, so one of them is redundant.
    L.prune([](Eigen::Index row, Eigen::Index, const Complex&) { return row != 0; });
    std::vector<Eigen::Triplet<Complex>> border;
    for (std::size_t j = 0; j < N; ++j) {
        border.emplace_back(0, idx(j + N * j), Complex(1.0, 0.0));
    }
    SparseMatrix T(L.rows(), L.cols());
    T.setFromTriplets(border.begin(), border.end());
    L += T;
    L.makeCompressed();

    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(L);
    lu.factorize(L);
    if (lu.info() != Eigen::Success) {
        throw Error(ErrorKind::SolverStagnation, "sparse LU failed: " + lu.lastErrorMessage());
    }
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(L.rows());
    rhs(0) = 1.0;
    Eigen::VectorXcd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) {
        throw Error(ErrorKind::SolverStagnation, "sparse LU solve failed");
    }
    // One step of iterative refinement against the bordered system.
    const Eigen::VectorXcd r = rhs - L * x;
    x += lu.solve(r);
    return Eigen::Map<Matrix>(x.data(), idx(N), idx(N));
}

Matrix long_time_solve(const LindbladGenerator& gen, const SteadyStateOptions& opts, double& t_out) {
    const std::size_t N = gen.dim();
    const RowSparse L = gen.superoperator();
    Vector y = vec(DensityMatrix::number_state(N, 0).matrix());
    // The stationary state is a fixed point of every explicit Runge-Kutta step, but an
    // error controller parks the step on the stability boundary, where the stiffest mode
    // neither grows nor decays and pins the residual. Capping h by the row-sum bound on
    // |L| keeps every mode contracting (the boundary sits near h |L|_inf ~ 2.4).
    const double step_tol = 1e-3 * opts.tol;
    double row_bound = 0.0;
    for (Eigen::Index r = 0; r < L.outerSize(); ++r) {
        double s = 0.0;
        for (RowSparse::InnerIterator it(L, r); it; ++it) {
            s += std::abs(it.value());
        }
        row_bound = std::max(row_bound, s);
    }
    const double h_max = 1.5 / row_bound;
    double t = 0.0;
    double h = 1e-3;
    Vector k1 = L * y;
    std::size_t accepted = 0;
    const std::size_t every = std::max<std::size_t>(opts.check_every, 1);
    while (true) {
        if (accepted % every == 0 && gen.apply(unvec(y, N)).cwiseAbs().maxCoeff() < opts.tol) {
            break;
        }
        if (t > opts.max_time) {
            throw Error(ErrorKind::SolverStagnation,
                        "long-time residual " + std::to_string(k1.cwiseAbs().maxCoeff()) + " after t=" +
                            std::to_string(t));
        }
        auto trial = dopri_step(L, y, k1, h, step_tol);
        if (trial.error_ratio <= 1.0) {
            y = clean(trial.y, N);
            k1 = L * y;
            t += h;
            ++accepted;
        }
        h = std::min(next_step(h, trial.error_ratio), h_max);
        if (h < 1e-12) {
            throw Error(ErrorKind::StepUnderflow, "long-time integration step underflow");
        }
    }
    t_out = t;
    return unvec(y, N);
}

} // namespace

SteadyStateResult steady_state(const LindbladGenerator& gen, SteadyStateMethod method,
                               const SteadyStateOptions& opts) {
    if (!(gen.kappa() > 0.0)) {
        throw Error(ErrorKind::NoDissipation, "kappa = 0 has no unique stationary state");
    }
    double t = 0.0;
    Matrix rho = method == SteadyStateMethod::NullSpace ? null_space_solve(gen, opts)
                                                        : long_time_solve(gen, opts, t);
    rho = hermitize_and_normalize(rho);
    const double residual = max_abs(gen.apply(rho));
    if (!(residual <= opts.tol)) {
        throw Error(ErrorKind::SolverStagnation,
                    std::string(to_string(method)) + " residual " + std::to_string(residual) +
                        " above tolerance " + std::to_string(opts.tol));
    }
    return SteadyStateResult{DensityMatrix(std::move(rho)), residual, method, t};
}

} // namespace duffing::lindblad
