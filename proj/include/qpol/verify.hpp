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
 * Self-verification suite behind `qpol verify`: oracle cross-checks of the
 * analytic formulas, with the worst residual of every check.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qpol/degrees.hpp"
#include "qpol/distance.hpp"
#include "qpol/io.hpp"
#include "qpol/oracle.hpp"
#include "qpol/pats.hpp"
#include "qpol/thermal.hpp"

namespace qpol {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
    std::string name;
    double worst = 0.0;     ///< largest residual seen
    double tolerance = 0.0; ///< after scaling
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

/// Truncation for series evaluations that serve as a reference. The Bures
/// series converges like the square root of the discarded mass.
inline constexpr TruncationPolicy kReferencePolicy{1e-20, 4096};

namespace detail {

/// Strict comparison so that a zero tolerance always fails.
inline CheckResult residual_check(std::string name, double worst, double tol, std::string detail = {}) {
    return CheckResult{std::move(name), worst, tol, worst < tol, std::move(detail)};
}

struct OracleWorst {
    double degree = 0.0;
    double weights = 0.0;
};

inline void oracle_compare(const ManifoldSpectrum& ms, OracleWorst& worst) {
    struct Case {
        Objective objective;
        Measure measure;
        double analytic;
    };
    const Case cases[] = {
        {Objective::HS, Measure::HS, p_hs_series(ms)},
        {Objective::BuresFidelity, Measure::Bures, p_bures_series(ms)},
        {Objective::RelEntropy, Measure::RE, p_re(ms)},
    };
    for (const auto& c : cases) {
        const auto r = minimize_over_unpolarized(SimplexProblem{c.objective, ms, ms.n_max()});
        worst.degree = std::max(worst.degree, std::abs(r.degree - c.analytic));
        worst.weights =
            std::max(worst.weights, total_variation(r.weights.pi, closest_unpolarized(ms, c.measure).pi));
    }
}

} // namespace detail

/**
 * Runs every check. `fast` keeps oracle problems at n_max <= 12, `full` goes
 * to n_max = 32 and adds the Hilbert-Schmidt non-monotonicity witness.
 * Every tolerance is multiplied by `tol_scale`.
 */
inline VerifyReport run_verification(VerifyLevel level, std::uint64_t seed = 20260101, double tol_scale = 1.0) {
    if (!(tol_scale >= 0.0)) {
        throw DomainError("run_verification: tol_scale must be >= 0");
    }
    const bool full = level == VerifyLevel::Full;
    VerifyReport out;

    // Oracle on seeded random spectra.
    {
        detail::OracleWorst worst;
        const int count = full ? 20 : 5;
        for (int i = 0; i < count; ++i) {
            detail::oracle_compare(random_spectrum(12, seed + static_cast<std::uint64_t>(i)), worst);
        }
        if (full) {
            for (int i = 0; i < 3; ++i) {
                detail::oracle_compare(random_spectrum(kOracleMaxManifold, seed + 1000 + static_cast<std::uint64_t>(i)),
                                       worst);
            }
        }
        const auto note = std::to_string(count) + " spectra" + (full ? " + 3 at n_max 32" : "");
        out.checks.push_back(detail::residual_check("oracle.random.degree", worst.degree, 1e-7 * tol_scale, note));
        out.checks.push_back(detail::residual_check("oracle.random.weights", worst.weights, 1e-6 * tol_scale, note));
    }

    // Oracle on the two named states, truncated to the oracle range.
    {
        detail::OracleWorst worst;
        const std::size_t n_max = full ? kOracleMaxManifold : 12;
        const auto thermal = TwoModeState::product(thermal_mode(2.0), thermal_mode(1.0));
        const auto pats = TwoModeState::product(pats_mode(PatsSpec{1.0, 2}), pats_mode(PatsSpec{1.0, 1}));
        detail::oracle_compare(manifold_spectrum(thermal).truncated(n_max), worst);
        detail::oracle_compare(manifold_spectrum(pats).truncated(n_max), worst);
        const auto note = "n_max " + std::to_string(n_max);
        out.checks.push_back(detail::residual_check("oracle.named.degree", worst.degree, 1e-7 * tol_scale, note));
        out.checks.push_back(detail::residual_check("oracle.named.weights", worst.weights, 1e-6 * tol_scale, note));
    }

    // Manifold probabilities against direct convolution.
    {
        const double grid[] = {0.0, 0.5, 1.0, 2.0, 5.0};
        double worst = 0.0;
        for (double a : grid) {
            for (double b : grid) {
                const auto conv = convolve_distributions(thermal_mode(a), thermal_mode(b));
                const std::size_t upto = std::min<std::size_t>(conv.size(), full ? 200 : 40);
                for (std::size_t N = 0; N < upto; ++N) {
                    worst = std::max(worst, std::abs(thermal_pn(ThermalPair{a, b}, N) - conv[N]));
                }
            }
        }
        out.checks.push_back(detail::residual_check("thermal.pn_vs_convolution", worst, 1e-12 * tol_scale));
    }

    // Closed forms against the general series.
    {
        const double grid[] = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
        double worst_hs = 0.0;
        double worst_b = 0.0;
        for (double a : grid) {
            for (double b : grid) {
                const ThermalPair tp{a, b};
                const auto ms = manifold_spectrum(
                    TwoModeState::product(thermal_mode(a, kReferencePolicy), thermal_mode(b, kReferencePolicy)),
                    kReferencePolicy);
                worst_hs = std::max(worst_hs, std::abs(p_hs_thermal(tp) - p_hs_series(ms)));
                worst_b = std::max(worst_b, std::abs(p_bures_thermal(tp) - p_bures_series(ms)));
            }
        }
        out.checks.push_back(detail::residual_check("thermal.hs_closed_vs_series", worst_hs, 1e-8 * tol_scale));
        out.checks.push_back(detail::residual_check("thermal.bures_closed_vs_series", worst_b, 1e-8 * tol_scale));
    }

    if (full) {
        // Hilbert-Schmidt degree along n2 = 1, n1 = 1 + eps, eps in [0, 10].
        SweepConfig cfg;
        cfg.n2 = 1.0;
        cfg.epsilon_grid = linear_grid(0.0, 0.25, 41);
        const auto rows = run_sweep(cfg);
        std::size_t maxima = 0;
        std::size_t arg = 0;
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            if (rows[i].report.p_hs > rows[i - 1].report.p_hs && rows[i].report.p_hs > rows[i + 1].report.p_hs) {
                ++maxima;
                arg = i;
            }
        }
        CheckResult c;
        c.name = "thermal.hs_interior_maximum";
        c.tolerance = 0.0;
        c.passed = maxima == 1 && rows.back().report.p_hs < rows[arg].report.p_hs;
        c.worst = maxima == 1 ? rows[arg].report.p_hs - rows.back().report.p_hs : 0.0;
        c.detail = std::to_string(maxima) + " interior maxima" +
                   (maxima == 1 ? ", at eps=" + format_double(rows[arg].epsilon) : std::string{});
        out.checks.push_back(c);
    }
    return out;
}

} // namespace qpol
