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
 * Full PolarizationReport assembly for generic states and for the thermal
 * and photon-added families.
 */

#pragma once

#include <algorithm>
#include <limits>
#include <string>

#include "qpol/distance.hpp"
#include "qpol/pats.hpp"
#include "qpol/state.hpp"
#include "qpol/stokes.hpp"
#include "qpol/thermal.hpp"

namespace qpol {

namespace detail {

/// Stokes entries of a report; left empty at the vacuum. Since
/// <S^2> >= <S0>^2 + 2<S0> for Fock-diagonal products, p2 <= p1 must hold.
inline void fill_stokes(PolarizationReport& r, const StokesSummary& s) {
    if (s.s0 <= 0.0) {
        return;
    }
    r.p1 = p1(s);
    r.p2 = p2(s);
    if (*r.p2 > *r.p1 + 1e-12) {
        throw Error("Stokes ordering p2 <= p1 violated: p1=" + std::to_string(*r.p1) +
                    ", p2=" + std::to_string(*r.p2));
    }
}

} // namespace detail

/**
 * Degrees of an arbitrary state through the general manifold series.
 *
 * Product states get Stokes degrees from their moments and the relative
 * entropy from the two mode entropies. Pure expansions carry no Stokes
 * information (phases are not stored) and use S(rho_b) of the spectrum.
 */
inline PolarizationReport evaluate(const TwoModeState& state, const TruncationPolicy& policy = {}) {
    const auto ms = manifold_spectrum(state, policy);
    PolarizationReport r;
    r.p_hs = p_hs_series(ms);
    r.p_bures = p_bures_series(ms);
    if (state.is_product()) {
        r.p_re = p_re(ms, von_neumann_entropy(state));
        detail::fill_stokes(r, stokes_summary(state));
    } else {
        r.p_re = p_re(ms);
    }
    r.n_max_used = ms.n_max();
    r.tail_bound = ms.tail();
    return r;
}

/// Two-mode thermal state: closed forms for everything but the entropic sum.
inline PolarizationReport evaluate_thermal(const ThermalPair& tp, const TruncationPolicy& policy = {}) {
    tp.validate();
    PolarizationReport r;
    if (tp.n1 + tp.n2 > 0.0) {
        r.p1 = p1_thermal(tp);
        r.p2 = p2_thermal(tp);
    }
    r.p_hs = p_hs_thermal(tp);
    r.p_bures = p_bures_thermal(tp);
    r.p_re = p_re_thermal(tp, policy);
    const auto lh = thermal_mode(tp.n1, policy);
    const auto lv = thermal_mode(tp.n2, policy);
    r.n_max_used = lh.size() + lv.size() - 2;
    r.tail_bound = lh.tail_mass() + lv.tail_mass();
    return r;
}

/**
 * Two-mode PATS: closed-form moments, purity-based Hilbert-Schmidt degree,
 * and the Bures and entropic degrees from the manifold series with the
 * closed-form PATS entropies.
 */
inline PolarizationReport evaluate_pats(const TwoModePats& tp, const TruncationPolicy& policy = {}) {
    tp.validate();
    policy.validate();
    // Fidelity error grows like the square root of the discarded mass, so the
    // spectrum is tabulated to tail_tol^2 when the cap allows it.
    TruncationPolicy fine = policy;
    fine.tail_tol = std::max(policy.tail_tol * policy.tail_tol, std::numeric_limits<double>::min());
    auto build = [&tp](const TruncationPolicy& pol) {
        return manifold_spectrum(TwoModeState::product(pats_mode(tp.h, pol), pats_mode(tp.v, pol)), pol);
    };
    ManifoldSpectrum ms;
    try {
        ms = build(fine);
    } catch (const TruncationOverflow&) {
        ms = build(policy);
    }
    PolarizationReport r;
    detail::fill_stokes(r, stokes_summary(pats_moments(tp.h), pats_moments(tp.v)));
    r.p_hs = p_hs_pats(tp, policy);
    r.p_bures = p_bures_series(ms);
    r.p_re = p_re(ms, pats_entropy(tp.h, policy) + pats_entropy(tp.v, policy));
    r.n_max_used = ms.n_max();
    r.tail_bound = ms.tail();
    return r;
}

} // namespace qpol
