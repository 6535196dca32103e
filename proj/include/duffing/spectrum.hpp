// Quasienergy levels g|n> = g_n|n>, position-space densities, classification
// of levels against the classical landscape, and the inner/outer-torus degeneracy scan.

#pragma once

#include "duffing/fock.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace duffing::spectrum {

struct QuasienergySpectrum {
    double lambda{0.0};
    double beta{0.0};
    std::size_t N{0};
    Eigen::VectorXd energies;  // ascending
    Eigen::MatrixXcd states;   // column k is the eigenvector of energies(k)
};

// Throws NonHermitianInput when gop is not Hermitian to 1e-12.
QuasienergySpectrum diagonalize(const fock::FockOperator& gop, double lambda, double beta);

// Builds the quasienergy operator and diagonalizes it.
QuasienergySpectrum quasienergy_spectrum(std::size_t N, double lambda, double beta);

// Normalized Hermite functions h_0..h_{N-1} at x; the recurrence carries a running log
// scale so large |x| does not underflow the seed exp(-x^2/2).
std::vector<double> hermite_functions(std::size_t N, double x);

// |phi(Q)|^2 with phi(Q) = sum_n c_n h_n(Q/sqrt(lambda)) / lambda^(1/4).
std::vector<double> position_density(const Eigen::VectorXcd& state, double lambda,
                                     std::span<const double> q_grid);

std::vector<double> linspace(double lo, double hi, std::size_t n);
// Default plotting grid: 800 points over [-2, 2].
std::vector<double> default_position_grid();

// Strict local maxima above rel_threshold * max.
std::size_t count_peaks(std::span<const double> density, double rel_threshold = 0.1);

// Region names follow the Hessian of g: NearMaximum is the small-amplitude well around the
// local maximum of g, NearMinimum the large-amplitude well, OuterTorus the orbits outside
// the separatrix.
enum class LevelRegion { NearMaximum, NearMinimum, OuterTorus, Unclassified };
const char* to_string(LevelRegion r) noexcept;

struct LevelInfo {
    LevelRegion region{LevelRegion::Unclassified};
    double g{0.0};
    double mean_r2{0.0};       // lambda(2<n> + 1)
    double inner_weight{0.0};  // probability on number states with lambda(2n+1) < r_saddle^2
    double tail_weight{0.0};   // probability on the top tenth of the basis
};

struct LevelClassification {
    double g_max{0.0};
    double g_min{0.0};
    double g_saddle{0.0};
    double saddle_r2{0.0};
    std::vector<LevelInfo> levels;  // same order as the spectrum
};

// Decision table, per level with quasienergy g_n:
//   tail weight > 1e-8                          -> Unclassified (truncation edge)
//   g_n <  g(s)                                 -> NearMinimum
//   g(s) <= g_n <= g(M), inner weight > 1/2     -> NearMaximum
//   g(s) <= g_n,         inner weight < 1/2     -> OuterTorus
//   g_n > g(M), inner weight > 1/2              -> Unclassified
// Requires beta in (0, 4/27).
LevelClassification classify_levels(const QuasienergySpectrum& spec);

struct Landmarks {
    std::optional<std::size_t> near_max;    // highest level of the small-amplitude well
    std::optional<std::size_t> near_min;    // lowest level of the large-amplitude well
    std::optional<std::size_t> near_saddle; // level closest to g(s)
    std::optional<std::size_t> outer;       // outer-torus level closest in g to near_max
};

Landmarks landmark_levels(const LevelClassification& cls);

struct Anticrossing {
    double beta{0.0};
    double gap{0.0};
    std::size_t inner_level{0};  // index of the small-amplitude-well level
    std::size_t outer_level{0};  // index of the outer-torus level
    double inner_g{0.0};
    double outer_g{0.0};
    double inner_weight_of_inner{0.0};
    double inner_weight_of_outer{0.0};
};

struct GapSample {
    double gap;  // +inf if no inner/outer pair exists
    std::size_t inner_level{0};
    std::size_t outer_level{0};
};

// Smallest |g_i - g_o| over small-amplitude-well levels i and outer-torus levels o.
GapSample inner_outer_gap(std::size_t N, double lambda, double beta);

// Coarse scan of the inner/outer gap over [beta_lo, beta_hi] followed by golden-section
// refinement of every interior local minimum.
std::vector<Anticrossing> degeneracy_scan(double lambda, double beta_lo, double beta_hi,
                                          std::size_t n_points, std::size_t N);

} // namespace duffing::spectrum
