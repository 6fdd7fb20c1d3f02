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
 * Photon-added thermal states (PATS).
 *
 * Adding M photons to rho_th(nbar) gives the Fock-diagonal state with weights
 *
 *   w_l = C(l, M) nbar^{l-M} / (nbar+1)^{l+1},   l >= M.
 *
 * Weights are assembled in the log domain. The two-mode state is the tensor
 * product of a PATS (nbar1, M) in mode H and a PATS (nbar2, S) in mode V.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qpol/distance.hpp"
#include "qpol/errors.hpp"
#include "qpol/numerics.hpp"
#include "qpol/state.hpp"
#include "qpol/thermal.hpp"

namespace qpol {

struct TwoModePats {
    PatsSpec h;
    PatsSpec v;

    void validate() const {
        h.validate();
        v.validate();
    }
};

/// Single-mode weight w_l; zero below the added-photon floor.
inline double pats_weight(const PatsSpec& spec, std::size_t l) {
    const std::size_t m = spec.added;
    if (l < m) {
        return 0.0;
    }
    if (spec.nbar == 0.0) {
        return l == m ? 1.0 : 0.0;
    }
    const double lw = log_binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(m)) +
                      static_cast<double>(l - m) * std::log(spec.nbar) -
                      static_cast<double>(l + 1) * std::log1p(spec.nbar);
    return std::exp(lw);
}

/**
 * Photon-number distribution of a PATS.
 *
 * Support is extended until the ratio-test bound on the remaining mass,
 * w_L / (1 - r_L) with r_L = q (L+1)/(L+1-M), is below the tolerance. The
 * ratio decreases towards q, so the bound is certified once r_L < 1.
 */
inline ModeDistribution pats_mode(const PatsSpec& spec, const TruncationPolicy& policy = {}) {
    spec.validate();
    policy.validate();
    const std::size_t m = spec.added;
    if (spec.nbar == 0.0) {
        if (m + 1 > policy.n_max_cap) {
            throw TruncationOverflow("pats_mode: Fock support exceeds n_max_cap");
        }
        return ModeDistribution::fock(spec.added);
    }
    const double q = spec.ratio();
    std::vector<double> probs(m, 0.0);
    for (std::size_t l = m;; ++l) {
        if (l >= policy.n_max_cap) {
            throw TruncationOverflow("pats_mode: nbar=" + std::to_string(spec.nbar) + ", M=" + std::to_string(m) +
                                     " does not reach tail " + std::to_string(policy.tail_tol) + " within " +
                                     std::to_string(policy.n_max_cap) + " photon numbers");
        }
        probs.push_back(pats_weight(spec, l));
        const std::size_t len = l + 1;
        const double r = q * static_cast<double>(len + 1) / static_cast<double>(len + 1 - m);
        if (r < 1.0) {
            const double bound = pats_weight(spec, len) / (1.0 - r);
            if (bound < policy.tail_tol) {
                return ModeDistribution::from_family(std::move(probs), bound, spec);
            }
        }
    }
}

/// Tr rho^2 = ((1-q)/(1+q))^{M+1} P_M((1+q^2)/(1-q^2)).
inline double pats_purity(const PatsSpec& spec) {
    spec.validate();
    const double q = spec.ratio();
    // (1+q^2)/(1-q^2) = 1 + 2 nbar^2/(2 nbar + 1), free of 1 - q^2 cancellation.
    const double arg = 1.0 + 2.0 * spec.nbar * spec.nbar / (2.0 * spec.nbar + 1.0);
    return std::pow((1.0 - q) / (1.0 + q), static_cast<double>(spec.added) + 1.0) * legendre(spec.added, arg);
}

struct PatsMoments {
    double mean = 0.0;
    double second = 0.0;
};

/// <N> = M(nbar+1) + nbar,  <N^2> = nbar(M+1)[(M+2)nbar + 2M + 1] + M^2.
inline PatsMoments pats_moments(const PatsSpec& spec) {
    spec.validate();
    const double n = spec.nbar;
    const auto m = static_cast<double>(spec.added);
    return PatsMoments{m * (n + 1.0) + n, n * (m + 1.0) * ((m + 2.0) * n + 2.0 * m + 1.0) + m * m};
}

/// (M+1) S_th(nbar) - sum_{l>=M} w_l ln C(l, M).
inline double pats_entropy(const PatsSpec& spec, const TruncationPolicy& policy = {}) {
    const auto dist = pats_mode(spec, policy);
    const auto probs = dist.probs();
    double correction = 0.0;
    for (std::size_t l = spec.added; l < probs.size(); ++l) {
        correction += probs[l] * log_binomial(static_cast<std::int64_t>(l), spec.added);
    }
    const double s = (static_cast<double>(spec.added) + 1.0) * thermal_entropy(spec.nbar) - correction;
    return std::max(s, 0.0);
}

/**
 * Probability of the N-th excitation manifold of PATS(n1, M) (x) PATS(n2, S).
 * With n2 = 0 the V mode is the Fock state |S> and the sum collapses to a
 * single term.
 */
inline double two_mode_pats_pn(const TwoModePats& tp, std::size_t N) {
    tp.validate();
    const std::size_t m = tp.h.added;
    const std::size_t s = tp.v.added;
    if (N < m + s) {
        return 0.0;
    }
    if (tp.v.nbar == 0.0) {
        return pats_weight(tp.h, N - s);
    }
    double acc = 0.0;
    for (std::size_t l = m; l + s <= N; ++l) {
        acc += pats_weight(tp.h, l) * pats_weight(tp.v, N - l);
    }
    return acc;
}

/**
 * Hilbert-Schmidt degree of a two-mode PATS: the product of the two purities
 * minus sum_N p_N^2/(N+1).
 *
 * The manifold sum runs to the combined support of the two truncated modes,
 * which leaves at most the sum of the two tails unaccounted for.
 */
inline double p_hs_pats(const TwoModePats& tp, const TruncationPolicy& policy = {}) {
    tp.validate();
    const std::size_t last = pats_mode(tp.h, policy).size() + pats_mode(tp.v, policy).size() - 2;
    double sum = 0.0;
    for (std::size_t N = tp.h.added + tp.v.added; N <= last; ++N) {
        const double p = two_mode_pats_pn(tp, N);
        sum += p * p / static_cast<double>(N + 1);
    }
    return pats_purity(tp.h) * pats_purity(tp.v) - sum;
}

/**
 * All five degrees of the two-mode Fock state |M, S>, N = M + S.
 * The Stokes entries are absent for the vacuum.
 */
inline PolarizationReport fock_degrees(unsigned m, unsigned s) {
    const unsigned total = m + s;
    const auto n = static_cast<double>(total);
    PolarizationReport r;
    r.p_hs = n / (n + 1.0);
    r.p_bures = 1.0 - std::sqrt(1.0 / (n + 1.0));
    r.p_re = 1.0 - 1.0 / (1.0 + std::log(n + 1.0));
    if (total > 0) {
        const double diff = std::abs(static_cast<double>(m) - static_cast<double>(s));
        r.p1 = diff / n;
        r.p2 = diff / std::sqrt(n * (n + 2.0));
    }
    r.n_max_used = total;
    r.tail_bound = 0.0;
    return r;
}

} // namespace qpol
