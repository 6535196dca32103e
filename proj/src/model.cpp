#include "duffing/model.hpp"

#include "duffing/errors.hpp"

#include <cmath>
#include <string>

namespace duffing::model {

void LabFrameParams::validate() const {
    if (!(m > 0.0) || !(Omega > 0.0) || !(nu > 0.0) || !(hbar > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "lab frame requires m, Omega, nu, hbar > 0");
    }
    if (!(gamma >= 0.0) || !std::isfinite(F0)) {
        throw Error(ErrorKind::InvalidParameter, "lab frame requires gamma >= 0 and finite F0");
    }
}

ScaledParams::ScaledParams(double lambda, double beta, double eta, double nbar)
    : lambda_(lambda), beta_(beta), eta_(eta), nbar_(nbar) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be > 0, got " + std::to_string(lambda));
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw Error(ErrorKind::InvalidParameter, "beta must be > 0, got " + std::to_string(beta));
    }
    if (!(eta >= 0.0) || !std::isfinite(eta)) {
        throw Error(ErrorKind::InvalidParameter, "eta must be >= 0, got " + std::to_string(eta));
    }
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw Error(ErrorKind::InvalidParameter, "nbar must be >= 0, got " + std::to_string(nbar));
    }
}

DerivedRWAParams derive_rwa(const LabFrameParams& lab) {
    lab.validate();
    DerivedRWAParams rwa;
    rwa.Delta = lab.Omega - lab.nu;
    rwa.chi = -3.0 * lab.gamma * lab.hbar / (2.0 * lab.m * lab.m * std::pow(lab.Omega, 3));
    rwa.f = lab.F0 / (lab.hbar * lab.Omega) * std::sqrt(lab.hbar / (2.0 * lab.m * lab.Omega));
    return rwa;
}

ScaledParams scale(const DerivedRWAParams& rwa, double eta, double nbar) {
    if (rwa.Delta == 0.0 || rwa.chi == 0.0) {
        throw Error(ErrorKind::DegenerateScaling, "Delta and chi must both be nonzero");
    }
    const double lambda = -rwa.chi / rwa.Delta;
    const double beta = -2.0 * rwa.f * rwa.f * rwa.chi / std::pow(rwa.Delta, 3);
    if (!(lambda > 0.0) || !(beta > 0.0)) {
        throw Error(ErrorKind::WrongSignRegime,
                    "need lambda > 0 and beta > 0, got lambda=" + std::to_string(lambda) +
                        " beta=" + std::to_string(beta));
    }
    return ScaledParams(lambda, beta, eta, nbar);
}

double thermal_occupation(double T_over_Omega) {
    if (!(T_over_Omega >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "temperature must be >= 0");
    }
    if (T_over_Omega == 0.0) {
        return 0.0;
    }
    return 1.0 / std::expm1(1.0 / T_over_Omega);
}

std::size_t default_truncation(double lambda) {
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be > 0");
    }
    return static_cast<std::size_t>(std::ceil(3.0 / lambda));
}

} // namespace duffing::model
