// Physical parameters of the driven Duffing oscillator and the maps
// from the lab frame to the dimensionless rotating-frame control set.

#pragma once

#include <cstddef>

namespace duffing::model {

// H = p^2/2m + m Omega^2 x^2/2 - gamma x^4 + 2 F0 cos(nu t) x
struct LabFrameParams {
    double m{1.0};
    double Omega{1.0};
    double gamma{0.0};  // gamma > 0 is a softening nonlinearity
    double F0{0.0};
    double nu{1.0};
    double hbar{1.0};

    void validate() const;
};

// H = Delta a^+a + chi a^+a(a^+a + 1) + f(a^+ + a)
struct DerivedRWAParams {
    double Delta{0.0};
    double chi{0.0};
    double f{0.0};
};

// Dimensionless controls. Everything downstream depends on these four numbers.
class ScaledParams {
public:
    // Throws InvalidParameter unless lambda > 0, beta > 0, eta >= 0, nbar >= 0.
    ScaledParams(double lambda, double beta, double eta = 0.0, double nbar = 0.0);

    double lambda() const noexcept { return lambda_; }
    double beta() const noexcept { return beta_; }
    double eta() const noexcept { return eta_; }
    double nbar() const noexcept { return nbar_; }

    ScaledParams with_eta(double eta) const { return {lambda_, beta_, eta, nbar_}; }
    ScaledParams with_nbar(double nbar) const { return {lambda_, beta_, eta_, nbar}; }

private:
    double lambda_;
    double beta_;
    double eta_;
    double nbar_;
};

DerivedRWAParams derive_rwa(const LabFrameParams& lab);

// lambda = -chi/Delta, beta = -2 f^2 chi / Delta^3.
// DegenerateScaling when Delta or chi vanish, WrongSignRegime when lambda or beta <= 0.
ScaledParams scale(const DerivedRWAParams& rwa, double eta, double nbar);

// Bose-Einstein occupation at temperature T (in units of Omega); 0 at T = 0.
double thermal_occupation(double T_over_Omega);

// Smallest Fock truncation that keeps amplitudes r <~ 1.3 far below the basis edge.
std::size_t default_truncation(double lambda);

} // namespace duffing::model
