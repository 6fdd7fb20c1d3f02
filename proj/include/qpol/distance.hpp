// Copyright 2026 The qpol Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Distance-type degrees of polarization: Hilbert-Schmidt, Bures and relative
 * entropy, each the distance from the block-diagonal sector of a state to the
 * set of SU(2)-invariant states.
 *
 * The block sector rho_b commutes with every unpolarized sigma_b, so all
 * three infima reduce to sums over the manifold spectrum.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpol/errors.hpp"
#include "qpol/numerics.hpp"
#include "qpol/state.hpp"

namespace qpol {

/// The five degrees for one state plus the truncation used to get them.
struct PolarizationReport {
    std::optional<double> p1;
    std::optional<double> p2;
    double p_hs = 0.0;
    double p_bures = 0.0;
    double p_re = 0.0;
    std::size_t n_max_used = 0;
    double tail_bound = 0.0;
};

struct DistanceDegrees {
    double p_hs = 0.0;
    double p_bures = 0.0;
    double p_re = 0.0;
};

enum class Measure { HS, RE, Bures };

/// Tolerated negative round-off on 1 - sqrt(F) before it is clamped to 0.
inline constexpr double kBuresGuard = 1e-12;
/// Below this S_min is an error rather than round-off.
inline constexpr double kEntropyGuard = 1e-9;

/// sum_N sum_n mu_{N,n}^2 - sum_N p_N^2 / (N+1).
inline double p_hs_series(const ManifoldSpectrum& ms) {
    double acc = 0.0;
    for (std::size_t N = 0; N < ms.manifolds(); ++N) {
        double sq = 0.0;
        for (double x : ms.row(N)) {
            sq += x * x;
        }
        const double p = ms.p(N);
        acc += sq - p * p / static_cast<double>(N + 1);
    }
    return acc;
}

/// a_N = (sum_n sqrt(mu_{N,n})) / sqrt(N+1); the maximal fidelity is sum a_N^2.
inline std::vector<double> bures_amplitudes(const ManifoldSpectrum& ms) {
    std::vector<double> a(ms.manifolds(), 0.0);
    for (std::size_t N = 0; N < ms.manifolds(); ++N) {
        double s = 0.0;
        for (double x : ms.row(N)) {
            s += std::sqrt(x);
        }
        a[N] = s / std::sqrt(static_cast<double>(N + 1));
    }
    return a;
}

/// 1 - sqrt( sum_N (sum_n sqrt(mu_{N,n}))^2 / (N+1) ).
inline double p_bures_series(const ManifoldSpectrum& ms) {
    double fidelity = 0.0;
    for (double a : bures_amplitudes(ms)) {
        fidelity += a * a;
    }
    const double d = 1.0 - std::sqrt(fidelity);
    if (d < 0.0 && d >= -kBuresGuard) {
        return 0.0;
    }
    return d;
}

/**
 * Minimal relative entropy S(rho_b | sigma~_b) = -S(rho_b) - sum_N p_N ln(p_N/(N+1)),
 * given the von Neumann entropy `entropy` of rho_b.
 */
inline double minimal_relative_entropy(const ManifoldSpectrum& ms, double entropy) {
    double cross = 0.0;
    for (std::size_t N = 0; N < ms.manifolds(); ++N) {
        const double p = ms.p(N);
        if (p > 0.0) {
            cross += p * std::log(p / static_cast<double>(N + 1));
        }
    }
    double s = -entropy - cross;
    if (s < -kEntropyGuard) {
        throw NegativeEntropy("minimal relative entropy " + std::to_string(s) +
                              " is negative; entropy and spectrum are inconsistent");
    }
    return s <= 0.0 ? 0.0 : s; // also maps -0.0 to +0.0
}

/// S_min / (1 + S_min).
inline double p_re(const ManifoldSpectrum& ms, double entropy) {
    const double s = minimal_relative_entropy(ms, entropy);
    return s / (1.0 + s);
}

/// Relative-entropy degree with S(rho_b) taken from the spectrum itself.
inline double p_re(const ManifoldSpectrum& ms) { return p_re(ms, spectrum_entropy(ms)); }

/**
 * Weights of the closest unpolarized state.
 *
 * HS and RE are both minimized by pi_N = p_N. For Bures the fidelity
 * (sum_N sqrt(pi_N) a_N)^2 is maximized by pi_N proportional to a_N^2.
 * Weights are renormalized so that a truncated spectrum still yields a point
 * of the simplex.
 */
inline UnpolarizedWeights closest_unpolarized(const ManifoldSpectrum& ms, Measure measure) {
    std::vector<double> pi(ms.manifolds());
    if (measure == Measure::Bures) {
        const auto a = bures_amplitudes(ms);
        for (std::size_t N = 0; N < pi.size(); ++N) {
            pi[N] = a[N] * a[N];
        }
    } else {
        for (std::size_t N = 0; N < pi.size(); ++N) {
            pi[N] = ms.p(N);
        }
    }
    double sum = 0.0;
    for (double x : pi) {
        sum += x;
    }
    for (double& x : pi) {
        x /= sum;
    }
    return UnpolarizedWeights{std::move(pi)};
}

/// Degrees of a pure state sum_N c_N |Psi_N>, from the weights |c_N|^2.
inline DistanceDegrees pure_degrees(std::span<const double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InvalidState("pure_degrees: negative weight");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kNormTolerance) {
        throw InvalidState("pure_degrees: weights sum to " + std::to_string(sum));
    }
    double hs = 0.0;
    double fid = 0.0;
    double s = 0.0;
    for (std::size_t N = 0; N < weights.size(); ++N) {
        const double w = weights[N];
        const auto n1 = static_cast<double>(N + 1);
        hs += w * w * static_cast<double>(N) / n1;
        fid += w / n1;
        s += w * std::log(n1);
    }
    return DistanceDegrees{hs, 1.0 - std::sqrt(fid), s / (1.0 + s)};
}

} // namespace qpol
