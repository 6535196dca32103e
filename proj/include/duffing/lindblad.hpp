// Master equation
//   rho' = -(i/hbar_eff)[H, rho] + kappa{(1 + nbar) D[a] rho + nbar D[a^+] rho},
//   D[A] rho = A rho A^+ - {A^+ A, rho}/2,
// with time evolution and two independent stationary-state solvers.

#pragma once

#include "duffing/fock.hpp"
#include "duffing/model.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstddef>
#include <string_view>

namespace duffing::lindblad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Hermitian, unit-trace, numerically positive semidefinite state.
class DensityMatrix {
public:
    // Validates: Hermitian to 1e-10, trace 1 +/- 1e-10, smallest eigenvalue >= -1e-8.
    explicit DensityMatrix(Matrix data);

    static DensityMatrix pure(const Eigen::VectorXcd& psi);
    static DensityMatrix number_state(std::size_t N, std::size_t n);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.rows()); }
    const Matrix& matrix() const noexcept { return data_; }

    double purity() const;
    double min_eigenvalue() const;
    Complex expectation(const Matrix& op) const { return (data_ * op).trace(); }

private:
    Matrix data_;
};

// (A + A^+)/2 followed by division by the trace.
Matrix hermitize_and_normalize(const Matrix& rho);

double trace_distance(const Matrix& a, const Matrix& b);

class LindbladGenerator {
public:
    // Throws InvalidParameter for non-Hermitian H, hbar_eff <= 0, kappa < 0 or nbar < 0.
    LindbladGenerator(const fock::FockOperator& H, double hbar_eff, double kappa, double nbar);

    std::size_t dim() const noexcept { return N_; }
    double hbar_eff() const noexcept { return hbar_eff_; }
    double kappa() const noexcept { return kappa_; }
    double nbar() const noexcept { return nbar_; }

    // Throws DimensionMismatch for a wrongly sized rho.
    Matrix apply(const Matrix& rho) const;

    // N^2 x N^2 sparse superoperator acting on column-stacked vec(rho).
    SparseMatrix superoperator() const;

private:
    std::size_t N_;
    double hbar_eff_;
    double kappa_;
    double nbar_;
    SparseMatrix H_, a_, ad_, ada_, aad_;
};

// Generator for the rotating-frame oscillator: H = g(lambda, beta), hbar_eff = lambda and
// kappa = 2 eta, so that <a> relaxes at rate eta like the classical damped flow.
LindbladGenerator scaled_generator(const model::ScaledParams& params, std::size_t N);

struct EvolveOptions {
    double tol{1e-9};        // absolute local error per step, max-norm
    double initial_step{1e-3};
    double min_step{1e-12};
};

// Dormand-Prince 5(4) with per-step Hermitization and trace renormalization.
// Throws StepUnderflow when the controller asks for a step below min_step.
DensityMatrix evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_end,
                     const EvolveOptions& opts = {});

enum class SteadyStateMethod { NullSpace, LongTime };
std::string_view to_string(SteadyStateMethod m) noexcept;
SteadyStateMethod parse_method(std::string_view name);

struct SteadyStateOptions {
    double tol{1e-9};               // required max-norm of L(rho)
    std::size_t max_null_space_dim{400};
    double max_time{1e6};           // long-time horizon before giving up
    std::size_t check_every{20};    // accepted steps between residual checks
};

struct SteadyStateResult {
    DensityMatrix rho;
    double residual{0.0};  // max |L(rho)|
    SteadyStateMethod method{SteadyStateMethod::NullSpace};
    double evolved_time{0.0};
};

// Null space: sparse LU of L with the (0,0) equation replaced by tr(rho) = 1.
// Long time: evolve from the vacuum until max |L(rho)| < tol.
// Throws NoDissipation if kappa == 0, SolverStagnation if the residual target is missed.
SteadyStateResult steady_state(const LindbladGenerator& gen, SteadyStateMethod method,
                               const SteadyStateOptions& opts = {});

} // namespace duffing::lindblad
