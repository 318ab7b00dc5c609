// SPDX-License-Identifier: Apache-2.0
//
// maplace: movable-antenna placement for robust angle-of-departure estimation
// Copyright (C) 2026 The maplace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "maplace/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "maplace/errors.hpp"
#include "maplace/parallel.hpp"
#include "maplace/scc.hpp"

namespace maplace {

SignalScenario SignalScenario::for_snr(double snr_linear, std::uint64_t seed, std::size_t num_pilots, double phi)
{
    if (!(snr_linear > 0.0))
        throw ConfigError("snr must be positive");
    if (num_pilots == 0)
        throw ConfigError("pilot sequence must be nonempty");
    SignalScenario sc;
    sc.rho = 1.0;
    sc.phi = phi;
    sc.seed = seed;
    sc.pilot.reserve(num_pilots);
    for (std::size_t k = 0; k < num_pilots; ++k)
        sc.pilot.push_back(std::polar(1.0, kPi / 4.0 * static_cast<double>(2 * (k % 4) + 1)));
    sc.noise_var = static_cast<double>(num_pilots) * sc.pilot_power() * sc.rho * sc.rho / snr_linear;
    return sc;
}

double SignalScenario::pilot_power() const
{
    double sum = 0.0;
    for (cdouble s : pilot)
        sum += std::norm(s);
    return pilot.empty() ? 0.0 : sum / static_cast<double>(pilot.size());
}

double SignalScenario::snr_linear() const
{
    return static_cast<double>(pilot.size()) * pilot_power() * rho * rho / noise_var;
}

void SignalScenario::check_snr(double expected_snr) const
{
    if (!(std::abs(snr_linear() - expected_snr) <= 1e-9 * expected_snr))
        throw ConfigError(fmt::format("scenario SNR {} does not match configured SNR {}", snr_linear(), expected_snr));
}

double ComplexGaussian::uniform()
{
    // 53 random bits mapped into (0, 1]
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

cdouble ComplexGaussian::operator()(double variance)
{
    const double radius = std::sqrt(-variance * std::log(uniform()));
    const double angle = 2.0 * kPi * uniform();
    return std::polar(radius, angle);
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial)
{
    // splitmix64 finalizer over base + trial
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

CMatrix noiseless_observations(Angle theta_true, std::span<const double> positions, const PrecodingMatrix& f,
                               const SignalScenario& sc, const ScenarioConfig& cfg)
{
    const CVector a = steering_vector(theta_true, positions, cfg);
    const Eigen::RowVectorXcd beam = a.transpose() * f.matrix(); // a^T f_g
    const cdouble gain = std::polar(sc.rho, sc.phi);
    CMatrix y(static_cast<Eigen::Index>(sc.pilot.size()), f.num_beams());
    for (Eigen::Index k = 0; k < y.rows(); ++k)
        y.row(k) = gain * sc.pilot[static_cast<std::size_t>(k)] * beam;
    return y;
}

ObservationSet generate_observations(Angle theta_true, std::span<const double> positions, const PrecodingMatrix& f,
                                     const SignalScenario& sc, const ScenarioConfig& cfg)
{
    ObservationSet obs{noiseless_observations(theta_true, positions, f, sc, cfg)};
    if (sc.noise_var > 0.0) {
        ComplexGaussian noise(sc.seed);
        for (Eigen::Index g = 0; g < obs.samples.cols(); ++g) {
            for (Eigen::Index k = 0; k < obs.samples.rows(); ++k)
                obs.samples(k, g) += noise(sc.noise_var);
        }
    }
    return obs;
}

SearchGrid estimation_grid(const UncertaintyRegion& region, std::span<const double> positions,
                           const ScenarioConfig& cfg, double step_deg)
{
    const Beamwidth bw =
        half_power_beamwidth(positions, region.center, region.beamwidth_step_deg, cfg, region.half_power);
    const double margin = bw.full_domain ? 180.0 : bw.width_deg;
    SearchGrid grid;
    grid.min_deg = std::max(-kMaxAbsAngleDeg, region.min_deg() - margin);
    grid.max_deg = std::min(kMaxAbsAngleDeg, region.max_deg() + margin);
    grid.step_deg = step_deg;
    return grid;
}

namespace {

// z_g = sum_k conj(s_k) y_kg, so that h^H y = sum_g conj(b_g) z_g with b = F^T a.
struct Likelihood {
    CVector z;
    double pilot_energy = 0.0;
    std::span<const double> positions;
    const PrecodingMatrix* f = nullptr;
    const ScenarioConfig* cfg = nullptr;

    Likelihood(const ObservationSet& obs, std::span<const double> r, const PrecodingMatrix& fm,
               const SignalScenario& sc, const ScenarioConfig& c)
        : positions(r), f(&fm), cfg(&c)
    {
        if (obs.samples.rows() != static_cast<Eigen::Index>(sc.pilot.size()) ||
            obs.samples.cols() != fm.num_beams())
            throw EvaluationError("observation dimensions do not match the scenario");
        const Eigen::Map<const CVector> s(sc.pilot.data(), static_cast<Eigen::Index>(sc.pilot.size()));
        z = obs.samples.transpose() * s.conjugate();
        pilot_energy = s.squaredNorm();
    }

    double operator()(double theta_deg) const
    {
        const double clamped = std::clamp(theta_deg, -kMaxAbsAngleDeg, kMaxAbsAngleDeg);
        const CVector a = phase_vector(std::sin(clamped / kDegPerRad), positions, *cfg);
        const CVector b = f->matrix().transpose() * a;
        const double hh = pilot_energy * b.squaredNorm();
        if (!(hh > 0.0))
            return 0.0;
        return std::norm(b.dot(z)) / hh;
    }
};

} // namespace

double concentrated_likelihood(const ObservationSet& obs, Angle theta, std::span<const double> positions,
                               const PrecodingMatrix& f, const SignalScenario& sc, const ScenarioConfig& cfg)
{
    return Likelihood(obs, positions, f, sc, cfg)(theta.deg());
}

MlEstimate ml_estimate_aod(const ObservationSet& obs, std::span<const double> positions, const PrecodingMatrix& f,
                           const SignalScenario& sc, const SearchGrid& search, const ScenarioConfig& cfg)
{
    if (!(search.step_deg > 0.0) || !(search.max_deg >= search.min_deg))
        throw ConfigError("invalid estimation grid");
    const Likelihood cost(obs, positions, f, sc, cfg);

    const auto n = static_cast<long>(std::floor((search.max_deg - search.min_deg) / search.step_deg + 1e-9));
    long best_i = 0;
    double best = -1.0;
    for (long i = 0; i <= n; ++i) {
        const double v = cost(search.min_deg + static_cast<double>(i) * search.step_deg);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }

    MlEstimate est;
    est.boundary = (best_i == 0 || best_i == n);
    double x = search.min_deg + static_cast<double>(best_i) * search.step_deg;
    double fx = best;
    double h = search.step_deg;
    for (int iter = 0; iter < 200 && h > search.tol_deg; ++iter) {
        const double fm = cost(x - h);
        const double fp = cost(x + h);
        if (fp > fx && fp >= fm) {
            x += h;
            fx = fp;
            continue;
        }
        if (fm > fx) {
            x -= h;
            fx = fm;
            continue;
        }
        const double denom = fm - 2.0 * fx + fp;
        if (denom < 0.0) {
            const double xv = x + 0.5 * h * (fm - fp) / denom;
            const double fv = cost(xv);
            if (fv >= fx) {
                x = xv;
                fx = fv;
            }
        }
        h /= 4.0;
    }
    est.theta = Angle::degrees(std::clamp(x, -kMaxAbsAngleDeg, kMaxAbsAngleDeg));
    return est;
}

MonteCarloResult run_monte_carlo(std::span<const double> positions, const PrecodingMatrix& f,
                                 const MonteCarloSpec& spec, const ScenarioConfig& cfg)
{
    if (spec.trials == 0)
        throw ConfigError("Monte-Carlo run needs at least one trial");
    MonteCarloResult result;
    result.theta_true_deg = spec.theta_true.deg();
    result.sqrt_crb_deg = crb_general(positions, f, spec.theta_true, cfg).sqrt_deg();
    result.trials.resize(spec.trials);

    parallel_for(spec.trials, spec.threads, [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(spec.base_seed, i);
        auto sc = SignalScenario::for_snr(cfg.snr_linear, seed, spec.num_pilots);
        sc.check_snr(cfg.snr_linear);
        const auto obs = generate_observations(spec.theta_true, positions, f, sc, cfg);
        const auto est = ml_estimate_aod(obs, positions, f, sc, spec.search, cfg);
        result.trials[i] = {i, seed, est.theta.deg(), est.theta.deg() - spec.theta_true.deg(), est.boundary};
    });

    double sum2 = 0.0;
    double sum4 = 0.0;
    for (const auto& t : result.trials) {
        const double e2 = t.error_deg * t.error_deg;
        sum2 += e2;
        sum4 += e2 * e2;
    }
    const auto n = static_cast<double>(spec.trials);
    const double mse = sum2 / n;
    result.rmse_deg = std::sqrt(mse);
    const double var_e2 = std::max(0.0, sum4 / n - mse * mse);
    result.rmse_std_error_deg = result.rmse_deg > 0.0 ? std::sqrt(var_e2 / n) / (2.0 * result.rmse_deg) : 0.0;
    return result;
}

} // namespace maplace
