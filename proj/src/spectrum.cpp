#include "duffing/spectrum.hpp"

#include "duffing/classical.hpp"
#include "duffing/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace duffing::spectrum {

QuasienergySpectrum diagonalize(const fock::FockOperator& gop, double lambda, double beta) {
    if (!gop.is_hermitian(1e-12)) {
        throw Error(ErrorKind::NonHermitianInput, "quasienergy operator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gop.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::SolverStagnation, "Hermitian eigensolver did not converge");
    }
    QuasienergySpectrum spec;
    spec.lambda = lambda;
    spec.beta = beta;
    spec.N = gop.dim();
    spec.energies = solver.eigenvalues();
    spec.states = solver.eigenvectors();
    return spec;
}

QuasienergySpectrum quasienergy_spectrum(std::size_t N, double lambda, double beta) {
    return diagonalize(fock::quasienergy_operator(N, lambda, beta), lambda, beta);
}

std::vector<double> hermite_functions(std::size_t N, double x) {
    std::vector<double> h(N, 0.0);
    std::vector<double> log_scale(N, 0.0);
    constexpr double kRescale = 1e150;
    const double log_rescale = std::log(kRescale);
    double scale = -0.5 * x * x;  // h_n = value * exp(scale)
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    h[0] = cur;
    log_scale[0] = scale;
    for (std::size_t n = 1; n < N; ++n) {
        const double k = static_cast<double>(n);
        const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            scale += log_rescale;
        }
        h[n] = cur;
        log_scale[n] = scale;
    }
    for (std::size_t n = 0; n < N; ++n) {
        const double v = h[n] * std::exp(log_scale[n]);
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::RecurrenceOverflow,
                        "Hermite function h_" + std::to_string(n) + " at x=" + std::to_string(x));
        }
        h[n] = v;
    }
    return h;
}

std::vector<double> position_density(const Eigen::VectorXcd& state, double lambda,
                                     std::span<const double> q_grid) {
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be > 0");
    }
    const std::size_t N = static_cast<std::size_t>(state.size());
    const double norm = std::pow(lambda, -0.25);
    const double inv_sqrt_lambda = 1.0 / std::sqrt(lambda);
    std::vector<double> out;
    out.reserve(q_grid.size());
    for (double q : q_grid) {
        const auto h = hermite_functions(N, q * inv_sqrt_lambda);
        std::complex<double> phi = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            phi += state(static_cast<Eigen::Index>(n)) * h[n];
        }
        out.push_back(std::norm(phi) * norm * norm);
    }
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> default_position_grid() { return linspace(-2.0, 2.0, 800); }

std::size_t count_peaks(std::span<const double> density, double rel_threshold) {
    if (density.size() < 3) {
        return 0;
    }
    const double top = *std::max_element(density.begin(), density.end());
    std::size_t peaks = 0;
    for (std::size_t i = 1; i + 1 < density.size(); ++i) {
        if (density[i] >= density[i - 1] && density[i] > density[i + 1] && density[i] > rel_threshold * top) {
            ++peaks;
        }
    }
    return peaks;
}

const char* to_string(LevelRegion r) noexcept {
    switch (r) {
    case LevelRegion::NearMaximum:  return "near-max";
    case LevelRegion::NearMinimum:  return "near-min";
    case LevelRegion::OuterTorus:   return "outer-torus";
    case LevelRegion::Unclassified: return "unclassified";
    }
    return "unclassified";
}

LevelClassification classify_levels(const QuasienergySpectrum& spec) {
    if (!(spec.beta > 0.0 && spec.beta < 4.0 / 27.0)) {
        throw Error(ErrorKind::InvalidParameter, "level classification needs beta in (0, 4/27)");
    }
    const auto ext = classical::extrema(spec.beta);
    LevelClassification cls;
    for (const auto& fp : ext.points) {
        const double g = classical::quasienergy(fp.point, spec.beta);
        switch (fp.extremum) {
        case classical::Extremum::Maximum: cls.g_max = g; break;
        case classical::Extremum::Minimum: cls.g_min = g; break;
        case classical::Extremum::Saddle:
            cls.g_saddle = g;
            cls.saddle_r2 = fp.point.Q * fp.point.Q;
            break;
        case classical::Extremum::Degenerate: break;
        }
    }

    const std::size_t N = spec.N;
    const std::size_t tail_start = N - std::max<std::size_t>(2, N / 10);
    cls.levels.reserve(N);
    for (std::size_t k = 0; k < N; ++k) {
        LevelInfo info;
        info.g = spec.energies(static_cast<Eigen::Index>(k));
        double mean_n = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            const double w = std::norm(spec.states(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)));
            mean_n += w * static_cast<double>(n);
            if (spec.lambda * (2.0 * static_cast<double>(n) + 1.0) < cls.saddle_r2) {
                info.inner_weight += w;
            }
            if (n >= tail_start) {
                info.tail_weight += w;
            }
        }
        info.mean_r2 = spec.lambda * (2.0 * mean_n + 1.0);

        if (info.tail_weight > 1e-8) {
            info.region = LevelRegion::Unclassified;
        } else if (info.g < cls.g_saddle) {
            info.region = LevelRegion::NearMinimum;
        } else if (info.inner_weight < 0.5) {
            info.region = LevelRegion::OuterTorus;
        } else if (info.g <= cls.g_max) {
            info.region = LevelRegion::NearMaximum;
        } else {
            info.region = LevelRegion::Unclassified;
        }
        cls.levels.push_back(info);
    }
    return cls;
}

Landmarks landmark_levels(const LevelClassification& cls) {
    Landmarks lm;
    double best_saddle = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cls.levels.size(); ++k) {
        const auto& L = cls.levels[k];
        if (L.region == LevelRegion::NearMaximum && (!lm.near_max || L.g > cls.levels[*lm.near_max].g)) {
            lm.near_max = k;
        }
        if (L.region == LevelRegion::NearMinimum && (!lm.near_min || L.g < cls.levels[*lm.near_min].g)) {
            lm.near_min = k;
        }
        if (L.region != LevelRegion::Unclassified && std::abs(L.g - cls.g_saddle) < best_saddle) {
            best_saddle = std::abs(L.g - cls.g_saddle);
            lm.near_saddle = k;
        }
    }
    if (lm.near_max) {
        double best = std::numeric_limits<double>::infinity();
        const double target = cls.levels[*lm.near_max].g;
        for (std::size_t k = 0; k < cls.levels.size(); ++k) {
            const auto& L = cls.levels[k];
            if (L.region == LevelRegion::OuterTorus && std::abs(L.g - target) < best) {
                best = std::abs(L.g - target);
                lm.outer = k;
            }
        }
    }
    return lm;
}

GapSample inner_outer_gap(std::size_t N, double lambda, double beta) {
    const auto spec = quasienergy_spectrum(N, lambda, beta);
    const auto cls = classify_levels(spec);
    GapSample best{std::numeric_limits<double>::infinity(), 0, 0};
    for (std::size_t i = 0; i < cls.levels.size(); ++i) {
        if (cls.levels[i].region != LevelRegion::NearMaximum) {
            continue;
        }
        for (std::size_t o = 0; o < cls.levels.size(); ++o) {
            if (cls.levels[o].region != LevelRegion::OuterTorus) {
                continue;
            }
            const double gap = std::abs(cls.levels[i].g - cls.levels[o].g);
            if (gap < best.gap) {
                best = {gap, i, o};
            }
        }
    }
    return best;
}

std::vector<Anticrossing> degeneracy_scan(double lambda, double beta_lo, double beta_hi,
                                          std::size_t n_points, std::size_t N) {
    if (!(beta_lo > 0.0 && beta_hi < 4.0 / 27.0 && beta_lo < beta_hi) || n_points < 3) {
        throw Error(ErrorKind::InvalidParameter, "degeneracy scan needs 0 < beta_lo < beta_hi < 4/27 and >= 3 points");
    }
    const auto betas = linspace(beta_lo, beta_hi, n_points);
    std::vector<double> gaps;
    gaps.reserve(n_points);
    for (double b : betas) {
        gaps.push_back(inner_outer_gap(N, lambda, b).gap);
    }

    std::vector<Anticrossing> found;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t k = 1; k + 1 < n_points; ++k) {
        if (!std::isfinite(gaps[k]) || !(gaps[k] <= gaps[k - 1] && gaps[k] < gaps[k + 1])) {
            continue;
        }
        double a = betas[k - 1];
        double b = betas[k + 1];
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double gc = inner_outer_gap(N, lambda, c).gap;
        double gd = inner_outer_gap(N, lambda, d).gap;
        while (b - a > 1e-9) {
            if (gc < gd) {
                b = d;
                d = c;
                gd = gc;
                c = b - inv_phi * (b - a);
                gc = inner_outer_gap(N, lambda, c).gap;
            } else {
                a = c;
                c = d;
                gc = gd;
                d = a + inv_phi * (b - a);
                gd = inner_outer_gap(N, lambda, d).gap;
            }
        }
        const double beta_star = 0.5 * (a + b);
        const auto spec = quasienergy_spectrum(N, lambda, beta_star);
        const auto cls = classify_levels(spec);
        const auto sample = inner_outer_gap(N, lambda, beta_star);
        if (!std::isfinite(sample.gap)) {
            continue;
        }
        Anticrossing ac;
        ac.beta = beta_star;
        ac.gap = sample.gap;
        ac.inner_level = sample.inner_level;
        ac.outer_level = sample.outer_level;
        ac.inner_g = cls.levels[sample.inner_level].g;
        ac.outer_g = cls.levels[sample.outer_level].g;
        ac.inner_weight_of_inner = cls.levels[sample.inner_level].inner_weight;
        ac.inner_weight_of_outer = cls.levels[sample.outer_level].inner_weight;
        found.push_back(ac);
    }
    return found;
}

} // namespace duffing::spectrum
