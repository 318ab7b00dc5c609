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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "maplace/crb.hpp"
#include "maplace/precoding.hpp"
#include "maplace/region.hpp"

namespace maplace {

/*!
 * Parameters of the pilot transmission y_g^k = rho e^{j phi} a^T(theta, r) f_g s^k + noise.
 *
 * The noise is circularly-symmetric complex Gaussian with E|noise|^2 = noise_var, and
 * SNR = K P rho^2 / noise_var with P the average pilot power.
 */
struct SignalScenario {
    double rho = 1.0;
    double phi = 0.0;
    double noise_var = 1.0;
    std::vector<cdouble> pilot;
    std::uint64_t seed = 1;

    /// K constant-modulus QPSK symbols with P = 1, rho = 1 and noise_var set to reach snr_linear.
    static SignalScenario for_snr(double snr_linear, std::uint64_t seed, std::size_t num_pilots = 16,
                                  double phi = 0.6);

    double pilot_power() const;
    double snr_linear() const;

    /// Throws ConfigError when the scenario does not reproduce the expected SNR within 1e-9 (relative).
    void check_snr(double expected_snr) const;
};

/// y as a K x G matrix (row k, column g).
struct ObservationSet {
    CMatrix samples;
};

/// Seedable circular complex Gaussian source on mt19937_64 with Box-Muller; bit-reproducible for a seed.
class ComplexGaussian {
public:
    explicit ComplexGaussian(std::uint64_t seed) : engine_(seed) {}
    /// Draw with E|z|^2 = variance.
    cdouble operator()(double variance);

private:
    double uniform();
    std::mt19937_64 engine_;
};

/// Counter-derived seed for trial i of a run seeded with base.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

ObservationSet generate_observations(Angle theta_true, std::span<const double> positions, const PrecodingMatrix& f,
                                     const SignalScenario& sc, const ScenarioConfig& cfg);

/// Noise-free mean rho e^{j phi} a^T f_g s^k.
CMatrix noiseless_observations(Angle theta_true, std::span<const double> positions, const PrecodingMatrix& f,
                               const SignalScenario& sc, const ScenarioConfig& cfg);

struct SearchGrid {
    double min_deg = -30.0;
    double max_deg = 50.0;
    double step_deg = 0.1;
    double tol_deg = 1e-6; // parabolic refinement stops once the bracket is below this
};

/// Uncertainty region widened by one half-power beamwidth on each side, clamped to the AoD domain.
SearchGrid estimation_grid(const UncertaintyRegion& region, std::span<const double> positions,
                           const ScenarioConfig& cfg, double step_deg = 0.05);

struct MlEstimate {
    Angle theta;
    bool boundary = false; // coarse maximum fell on the first or last grid angle
};

/// |h(theta)^H y|^2 / ||h(theta)||^2 with h stacking a^T(theta) f_g s^k; the likelihood with the gain concentrated out.
double concentrated_likelihood(const ObservationSet& obs, Angle theta, std::span<const double> positions,
                               const PrecodingMatrix& f, const SignalScenario& sc, const ScenarioConfig& cfg);

/// Coarse grid arg-max of the concentrated likelihood followed by iterated three-point parabolic refinement.
MlEstimate ml_estimate_aod(const ObservationSet& obs, std::span<const double> positions, const PrecodingMatrix& f,
                           const SignalScenario& sc, const SearchGrid& search, const ScenarioConfig& cfg);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double theta_hat_deg = 0.0;
    double error_deg = 0.0;
    bool boundary = false;
};

struct MonteCarloResult {
    double theta_true_deg = 0.0;
    std::vector<TrialRecord> trials;
    double rmse_deg = 0.0;
    double rmse_std_error_deg = 0.0; // delta-method standard error of the RMSE estimate
    double sqrt_crb_deg = 0.0;

    double ratio() const { return rmse_deg / sqrt_crb_deg; }
};

struct MonteCarloSpec {
    Angle theta_true;
    std::size_t trials = 1000;
    std::uint64_t base_seed = 1;
    std::size_t num_pilots = 16;
    SearchGrid search;
    unsigned threads = 1;
};

/// Independent trials at cfg.snr_linear; results do not depend on the thread count.
MonteCarloResult run_monte_carlo(std::span<const double> positions, const PrecodingMatrix& f,
                                 const MonteCarloSpec& spec, const ScenarioConfig& cfg);

} // namespace maplace
