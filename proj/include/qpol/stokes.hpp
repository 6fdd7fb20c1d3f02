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
 * First- and second-order Stokes degrees of polarization of Fock-diagonal
 * product states. For such states <S1> = <S2> = 0, so both degrees depend
 * only on the first two photon-number moments of each mode.
 */

#pragma once

#include <cmath>

#include "qpol/errors.hpp"
#include "qpol/pats.hpp"
#include "qpol/state.hpp"

namespace qpol {

struct StokesSummary {
    double s0 = 0.0;   // <S0>
    double s3 = 0.0;   // <S3>
    double s_sq = 0.0; // <S^2>
};

/// Closed-form moments when the distribution came from a known family,
/// direct sums over the stored support otherwise.
inline PatsMoments moments(const ModeDistribution& dist) {
    if (dist.origin()) {
        return pats_moments(*dist.origin());
    }
    return PatsMoments{mode_moment(dist, 1), mode_moment(dist, 2)};
}

inline StokesSummary stokes_summary(const PatsMoments& h, const PatsMoments& v) {
    return StokesSummary{h.mean + v.mean, h.mean - v.mean,
                         2.0 * (h.mean * v.mean + h.mean + v.mean) + h.second + v.second};
}

inline StokesSummary stokes_summary(const TwoModeState& state) {
    const auto& pd = state.as_product();
    return stokes_summary(moments(pd.h), moments(pd.v));
}

inline double p1(const StokesSummary& s) {
    if (s.s0 <= 0.0) {
        throw VacuumUndefined("p1 is undefined for the two-mode vacuum");
    }
    return std::abs(s.s3) / s.s0;
}

inline double p2(const StokesSummary& s) {
    if (s.s_sq <= 0.0) {
        throw VacuumUndefined("p2 is undefined for the two-mode vacuum");
    }
    return std::abs(s.s3) / std::sqrt(s.s_sq);
}

inline double p1(const TwoModeState& state) { return p1(stokes_summary(state)); }
inline double p2(const TwoModeState& state) { return p2(stokes_summary(state)); }

} // namespace qpol
