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

// Independent reference formulas written with plain loops over std::complex.
// Nothing here calls into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline double rad(double deg) { return deg * pi / 180.0; }

inline std::vector<cd> steer(double theta_rad, const std::vector<double>& r, double lambda = 1.0)
{
    std::vector<cd> out;
    for (double x : r)
        out.push_back(std::polar(1.0, 2.0 * pi / lambda * std::sin(theta_rad) * x));
    return out;
}

inline std::vector<cd> steer_fd(double theta_rad, const std::vector<double>& r, double h = 1e-6)
{
    const auto p = steer(theta_rad + h, r);
    const auto m = steer(theta_rad - h, r);
    std::vector<cd> out;
    for (std::size_t i = 0; i < r.size(); ++i)
        out.push_back((p[i] - m[i]) / (2.0 * h));
    return out;
}

inline double moment(const std::vector<double>& r)
{
    double s = 0.0;
    for (double x : r)
        s += x * x;
    return s;
}

inline double closed_form_crb(const std::vector<double>& r, double theta_rad, double snr, double gamma,
                              double lambda = 1.0)
{
    const double k = 2.0 * pi / lambda * std::cos(theta_rad);
    return 1.0 / (2.0 * snr * (1.0 - gamma) * k * k * moment(r));
}

inline double scc(double ti, double tj, const std::vector<double>& r)
{
    cd s = 0.0;
    for (double x : r)
        s += std::polar(1.0, 2.0 * pi * (std::sin(tj) - std::sin(ti)) * x);
    return std::abs(s) / static_cast<double>(r.size());
}

// Fisher term from the covariance X = sum_g c_g c_g^H, evaluated as explicit double sums.
// cols holds the precoder columns (each of length L).
inline double crb_from_columns(const std::vector<std::vector<cd>>& cols, const std::vector<double>& r,
                               double theta_rad, double snr)
{
    const std::size_t n = r.size();
    const auto a = steer(theta_rad, r);
    std::vector<cd> da;
    for (std::size_t l = 0; l < n; ++l)
        da.push_back(cd(0, 2.0 * pi * std::cos(theta_rad) * r[l]) * a[l]);
    // X[i][j] = sum_g c_g[i] conj(c_g[j])
    auto X = [&](std::size_t i, std::size_t j) {
        cd s = 0.0;
        for (const auto& c : cols)
            s += c[i] * std::conj(c[j]);
        return s;
    };
    cd q_dd = 0.0, q_ad = 0.0, q_aa = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cd x = X(i, j);
            q_dd += da[i] * x * std::conj(da[j]); // ||F^H da*||^2 = da^T X da*
            q_ad += a[i] * x * std::conj(da[j]);  // a^T X da*
            q_aa += a[i] * x * std::conj(a[j]);   // ||F^H a*||^2
        }
    const double fisher = q_dd.real() - std::norm(q_ad) / q_aa.real();
    return 1.0 / (2.0 * snr * fisher);
}

// Precoder columns of the two-beam structure built from the oracle steering vectors.
inline std::vector<std::vector<cd>> two_beam_columns(double theta_rad, const std::vector<double>& r, double gamma)
{
    const auto a = steer(theta_rad, r);
    std::vector<cd> c1, c2;
    double na = 0.0, nd = 0.0;
    std::vector<cd> da;
    for (std::size_t l = 0; l < r.size(); ++l) {
        da.push_back(cd(0, 2.0 * pi * std::cos(theta_rad) * r[l]) * a[l]);
        na += std::norm(a[l]);
        nd += std::norm(da[l]);
    }
    for (std::size_t l = 0; l < r.size(); ++l) {
        c1.push_back(std::sqrt(gamma) * std::conj(a[l]) / std::sqrt(na));
        c2.push_back(std::sqrt(1.0 - gamma) * std::conj(da[l]) / std::sqrt(nd));
    }
    return {c1, c2};
}

// Largest r^T r over all sorted APVs on a step grid inside [-D/2, D/2] with spacing >= d,
// after removing the mean. Depth-first enumeration with integer grid indices.
inline double brute_force_max_moment(int num_elements, double aperture, double min_spacing, double step)
{
    const int n = static_cast<int>(std::lround(aperture / step));
    const int gap = static_cast<int>(std::lround(min_spacing / step));
    std::vector<int> idx(num_elements);
    double best = 0.0;
    auto rec = [&](auto&& self, int depth, int lo) -> void {
        if (depth == num_elements) {
            double mean = 0.0;
            for (int i : idx)
                mean += i * step;
            mean /= num_elements;
            double s = 0.0;
            for (int i : idx)
                s += (i * step - mean) * (i * step - mean);
            best = std::max(best, s);
            return;
        }
        const int remaining = num_elements - depth - 1;
        for (int i = lo; i + remaining * gap <= n; ++i) {
            idx[depth] = i;
            self(self, depth + 1, i + gap);
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace oracle
