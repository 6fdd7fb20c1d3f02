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
 * Closed-form polarization of two-mode thermal states
 * rho_th(n1) (x) rho_th(n2).
 *
 * The Hilbert-Schmidt and Bures closed forms are 0/0 at equilibrium. Both are
 * evaluated through exact rewrites in terms of log1p, and switch to a
 * truncated Taylor expansion when |n1 - n2| is below kClosedFormSwitch.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qpol/distance.hpp"
#include "qpol/errors.hpp"
#include "qpol/numerics.hpp"
#include "qpol/state.hpp"

namespace qpol {

/// |q1 - q2| below which p_N uses the equal-ratio expansion.
inline constexpr double kManifoldSwitch = 1e-7;
/// |n1 - n2| below which the HS and Bures closed forms use Taylor expansions.
inline constexpr double kClosedFormSwitch = 1e-5;

struct ThermalPair {
    double n1 = 0.0;
    double n2 = 0.0;

    [[nodiscard]] double q1() const { return n1 / (n1 + 1.0); }
    [[nodiscard]] double q2() const { return n2 / (n2 + 1.0); }
    /// q1 - q2 without cancellation.
    [[nodiscard]] double q_diff() const { return (n1 - n2) / ((n1 + 1.0) * (n2 + 1.0)); }

    void validate() const {
        if (!(n1 >= 0.0) || !(n2 >= 0.0) || !std::isfinite(n1) || !std::isfinite(n2)) {
            throw DomainError("ThermalPair: mean occupancies must be finite and >= 0");
        }
    }
};

/**
 * Geometric photon-number distribution of mean `nbar`, tabulated until the
 * remaining mass q^L drops below the policy tolerance.
 */
inline ModeDistribution thermal_mode(double nbar, const TruncationPolicy& policy = {}) {
    policy.validate();
    PatsSpec{nbar, 0}.validate();
    const double q = nbar / (nbar + 1.0);
    if (q == 0.0) {
        return ModeDistribution::from_family({1.0}, 0.0, PatsSpec{0.0, 0});
    }
    const double log_q = std::log(q);
    auto len = static_cast<std::size_t>(std::max(1.0, std::ceil(std::log(policy.tail_tol) / log_q)));
    while (std::exp(static_cast<double>(len) * log_q) >= policy.tail_tol) {
        ++len;
    }
    if (len > policy.n_max_cap) {
        throw TruncationOverflow("thermal_mode: nbar=" + std::to_string(nbar) + " needs " + std::to_string(len) +
                                 " photon numbers, cap is " + std::to_string(policy.n_max_cap));
    }
    std::vector<double> probs(len);
    const double norm = 1.0 / (nbar + 1.0);
    for (std::size_t m = 0; m < len; ++m) {
        probs[m] = norm * std::exp(static_cast<double>(m) * log_q);
    }
    return ModeDistribution::from_family(std::move(probs), std::exp(static_cast<double>(len) * log_q),
                                         PatsSpec{nbar, 0});
}

namespace detail {

/// (1-q1)(1-q2)(q1^{N+1} - q2^{N+1})/(q1 - q2), written with expm1 so that
/// nearby ratios do not cancel.
inline double thermal_pn_exact(const ThermalPair& tp, std::size_t N) {
    const double q1 = tp.q1();
    const double q2 = tp.q2();
    const double pre = 1.0 / ((tp.n1 + 1.0) * (tp.n2 + 1.0));
    const double hi = std::max(q1, q2);
    const double lo = std::min(q1, q2);
    const double diff = std::abs(tp.q_diff());
    const auto k = static_cast<double>(N + 1);
    if (lo == 0.0) {
        return pre * std::pow(hi, static_cast<double>(N));
    }
    const double top = std::pow(hi, k) * -std::expm1(k * std::log1p(-diff / hi));
    return pre * top / diff;
}

/// Equal-ratio limit (N+1)(1-q)^2 q^N at the midpoint q; the first-order
/// correction in q1 - q2 vanishes by symmetry.
inline double thermal_pn_near_equal(const ThermalPair& tp, std::size_t N) {
    const double q = 0.5 * (tp.q1() + tp.q2());
    const double one_minus = 0.5 * (1.0 / (tp.n1 + 1.0) + 1.0 / (tp.n2 + 1.0));
    return static_cast<double>(N + 1) * one_minus * one_minus * std::pow(q, static_cast<double>(N));
}

/// 1/A - ln(1 + d^2/A)/d^2 with A = (2n1+1)(2n2+1), d = n1 - n2. Uses the
/// identity (n1+n2+1)^2 = A + d^2.
inline double p_hs_thermal_closed(const ThermalPair& tp) {
    const double d = tp.n1 - tp.n2;
    const double a = (2.0 * tp.n1 + 1.0) * (2.0 * tp.n2 + 1.0);
    const double x = d * d / a;
    return (1.0 - std::log1p(x) / x) / a;
}

/// Second order in d: d^2 / (2 A^2).
inline double p_hs_thermal_taylor(const ThermalPair& tp) {
    const double d = tp.n1 - tp.n2;
    const double a = (2.0 * tp.n1 + 1.0) * (2.0 * tp.n2 + 1.0);
    return d * d / (2.0 * a * a);
}

/// D = sqrt(n1(n2+1)) - sqrt(n2(n1+1)) in rationalized form.
inline double bures_gap(const ThermalPair& tp) {
    const double s = std::sqrt(tp.n1 * (tp.n2 + 1.0)) + std::sqrt(tp.n2 * (tp.n1 + 1.0));
    return (tp.n1 - tp.n2) / s;
}

/// 1 - sqrt(2 ln u)/|D| where u = sqrt((n1+1)(n2+1)) - sqrt(n1 n2) = sqrt(1 + D^2),
/// so 2 ln u = log1p(D^2).
inline double p_bures_thermal_closed(const ThermalPair& tp) {
    const double dd = bures_gap(tp);
    const double y = dd * dd;
    return 1.0 - std::sqrt(std::log1p(y) / y);
}

/// 1 - sqrt(1 - y/2 + y^2/3) expanded to second order in y = D^2.
inline double p_bures_thermal_taylor(const ThermalPair& tp) {
    const double dd = bures_gap(tp);
    const double y = dd * dd;
    return y / 4.0 - 13.0 * y * y / 96.0;
}

} // namespace detail

/// Probability of the N-th excitation manifold.
inline double thermal_pn(const ThermalPair& tp, std::size_t N) {
    tp.validate();
    if (std::abs(tp.q_diff()) < kManifoldSwitch) {
        return detail::thermal_pn_near_equal(tp, N);
    }
    return detail::thermal_pn_exact(tp, N);
}

inline double p_hs_thermal(const ThermalPair& tp) {
    tp.validate();
    const double d = std::abs(tp.n1 - tp.n2);
    if (d == 0.0) {
        return 0.0;
    }
    return d < kClosedFormSwitch ? detail::p_hs_thermal_taylor(tp) : detail::p_hs_thermal_closed(tp);
}

inline double p_bures_thermal(const ThermalPair& tp) {
    tp.validate();
    const double d = std::abs(tp.n1 - tp.n2);
    if (d == 0.0) {
        return 0.0;
    }
    return d < kClosedFormSwitch ? detail::p_bures_thermal_taylor(tp) : detail::p_bures_thermal_closed(tp);
}

inline double p1_thermal(const ThermalPair& tp) {
    tp.validate();
    if (tp.n1 + tp.n2 == 0.0) {
        throw VacuumUndefined("p1 is undefined for the two-mode vacuum");
    }
    return std::abs(tp.n1 - tp.n2) / (tp.n1 + tp.n2);
}

inline double p2_thermal(const ThermalPair& tp) {
    tp.validate();
    if (tp.n1 + tp.n2 == 0.0) {
        throw VacuumUndefined("p2 is undefined for the two-mode vacuum");
    }
    const double a = tp.n1;
    const double b = tp.n2;
    return std::abs(a - b) / std::sqrt(2.0 * a * a + 2.0 * b * b + 2.0 * a * b + 3.0 * a + 3.0 * b);
}

/// (n+1) ln(n+1) - n ln n.
inline double thermal_entropy(double nbar) {
    if (!(nbar >= 0.0)) {
        throw DomainError("thermal_entropy: mean occupancy must be >= 0");
    }
    return xlnx(nbar + 1.0) - xlnx(nbar);
}

/**
 * Relative-entropy degree from the closed-form entropies and manifold
 * probabilities. The manifold sum is carried to the point where the
 * remaining mass is below the policy tolerance.
 */
inline double p_re_thermal(const ThermalPair& tp, const TruncationPolicy& policy = {}) {
    tp.validate();
    policy.validate();
    const double entropy = thermal_entropy(tp.n1) + thermal_entropy(tp.n2);
    double cross = 0.0;
    double mass = 0.0;
    const std::size_t cap = 2 * policy.n_max_cap;
    std::size_t N = 0;
    for (; N < cap && mass < 1.0 - policy.tail_tol; ++N) {
        const double p = thermal_pn(tp, N);
        mass += p;
        if (p > 0.0) {
            cross += p * std::log(p / static_cast<double>(N + 1));
        }
    }
    if (mass < 1.0 - policy.tail_tol) {
        throw TruncationOverflow("p_re_thermal: manifold sum did not converge within the cap");
    }
    double s = -entropy - cross;
    if (s < -kEntropyGuard) {
        throw NegativeEntropy("p_re_thermal: negative minimal relative entropy");
    }
    s = s <= 0.0 ? 0.0 : s;
    return s / (1.0 + s);
}

} // namespace qpol
