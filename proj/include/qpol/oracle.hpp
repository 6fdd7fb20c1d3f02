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
 * Brute-force verifiers.
 *
 * minimize_over_unpolarized() evaluates the three distance definitions
 * entry by entry against a trial unpolarized state sigma_b(pi) and minimizes
 * over the weight simplex numerically. It never calls the series formulas or
 * the analytic optimum, so it can be used to check both.
 *
 * All three objectives are convex and separable in pi_N, so the optimum is
 * found by bisection on the Lagrange multiplier lambda of sum pi = 1: for a
 * fixed lambda every coordinate solves f_N'(pi_N) = lambda on its own. The
 * Frank-Wolfe gap <g, pi> - min_N g_N bounds f(pi) - f* from above and is
 * reported as the KKT residual.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "qpol/errors.hpp"
#include "qpol/state.hpp"

namespace qpol {

/// Largest manifold index the oracle accepts.
inline constexpr std::size_t kOracleMaxManifold = 32;

enum class Objective { HS, BuresFidelity, RelEntropy };

struct SimplexProblem {
    Objective objective = Objective::HS;
    ManifoldSpectrum spectrum;
    std::size_t n_max = 0;

    void validate() const {
        if (n_max != spectrum.n_max()) {
            throw DomainError("SimplexProblem: n_max does not match the spectrum extent");
        }
        if (n_max > kOracleMaxManifold) {
            throw DomainError("SimplexProblem: the oracle is restricted to n_max <= " +
                              std::to_string(kOracleMaxManifold));
        }
    }
};

struct OracleResult {
    double objective = 0.0; ///< HS distance, 1 - sqrt(F), or relative entropy
    double degree = 0.0;    ///< the corresponding polarization degree
    UnpolarizedWeights weights;
    double kkt_residual = 0.0;
    int iterations = 0;
};

namespace detail {

/// Per-manifold view of the objective: value and derivative in pi_N.
class SeparableObjective {
  public:
    explicit SeparableObjective(const SimplexProblem& p) : p_(p), row_sum_(p.spectrum.manifolds(), 0.0) {
        for (std::size_t N = 0; N < row_sum_.size(); ++N) {
            for (std::size_t n = 0; n <= N; ++n) {
                const double m = p.spectrum.mu(N, n);
                row_sum_[N] += p.objective == Objective::BuresFidelity ? std::sqrt(m) : m;
            }
        }
    }

    [[nodiscard]] std::size_t size() const { return p_.spectrum.manifolds(); }

    /// Term N of the objective at pi_N = x. Missing eigenvalues count as 0.
    [[nodiscard]] double term(std::size_t N, double x) const {
        const auto& ms = p_.spectrum;
        const auto dim = static_cast<double>(N + 1);
        const double s = x / dim;
        double acc = 0.0;
        switch (p_.objective) {
        case Objective::HS:
            for (std::size_t n = 0; n <= N; ++n) {
                const double d = ms.mu(N, n) - s;
                acc += d * d;
            }
            return acc;
        case Objective::BuresFidelity:
            for (std::size_t n = 0; n <= N; ++n) {
                acc -= std::sqrt(ms.mu(N, n) * s);
            }
            return acc;
        case Objective::RelEntropy:
            for (std::size_t n = 0; n <= N; ++n) {
                const double m = ms.mu(N, n);
                if (m > 0.0) {
                    acc += m * (std::log(m) - std::log(s));
                }
            }
            return acc;
        }
        return acc;
    }

    /// d term / d pi_N, from the row aggregates collected at construction.
    [[nodiscard]] double slope(std::size_t N, double x) const {
        const auto dim = static_cast<double>(N + 1);
        const double c = row_sum_[N];
        switch (p_.objective) {
        case Objective::HS:
            // sum over the N+1 entries of -2 (mu - x/dim) / dim
            return -2.0 * (c - x) / dim;
        case Objective::BuresFidelity:
            return c == 0.0 ? 0.0 : -c / (2.0 * std::sqrt(dim * x));
        case Objective::RelEntropy:
            return c == 0.0 ? 0.0 : -c / x;
        }
        return 0.0;
    }

    [[nodiscard]] double value(const std::vector<double>& pi) const {
        double acc = 0.0;
        for (std::size_t N = 0; N < size(); ++N) {
            acc += term(N, pi[N]);
        }
        if (p_.objective == Objective::BuresFidelity) {
            acc += 1.0; // 1 - sqrt(F)
        }
        return acc;
    }

    /// argmin_{x in [0,1]} term(N, x) - lambda x, by bisection in log x.
    [[nodiscard]] double coordinate(std::size_t N, double lambda) const {
        constexpr double kFloor = 1e-300;
        if (slope(N, 1.0) <= lambda) {
            return 1.0;
        }
        if (slope(N, kFloor) >= lambda) {
            return 0.0;
        }
        double lo = std::log(kFloor);
        double hi = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (slope(N, std::exp(mid)) < lambda) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return std::exp(0.5 * (lo + hi));
    }

  private:
    const SimplexProblem& p_;
    std::vector<double> row_sum_; // sum mu, or sum sqrt(mu) for Bures
};

} // namespace detail

/// Objective of `problem` at the unpolarized state with weights `pi`.
inline double objective_value(const SimplexProblem& problem, const std::vector<double>& pi) {
    return detail::SeparableObjective(problem).value(pi);
}

/**
 * Minimize the distance definition selected by `problem.objective` over all
 * unpolarized states of the same manifold extent. Converged when the
 * Frank-Wolfe gap is below `tol`; NoConvergence otherwise.
 */
inline OracleResult minimize_over_unpolarized(const SimplexProblem& problem, double tol = 1e-10) {
    problem.validate();
    if (!(tol > 0.0)) {
        throw DomainError("minimize_over_unpolarized: tol must be > 0");
    }
    const detail::SeparableObjective f(problem);
    const std::size_t k = f.size();

    auto weights_at = [&](double lambda) {
        std::vector<double> pi(k);
        for (std::size_t N = 0; N < k; ++N) {
            pi[N] = f.coordinate(N, lambda);
        }
        return pi;
    };
    auto mass = [](const std::vector<double>& pi) {
        double s = 0.0;
        for (double x : pi) {
            s += x;
        }
        return s;
    };

    // Bracket: at lambda_lo every pi_N <= 1/k, at lambda_hi every pi_N = 1.
    double lambda_lo = std::numeric_limits<double>::infinity();
    double lambda_hi = -std::numeric_limits<double>::infinity();
    for (std::size_t N = 0; N < k; ++N) {
        lambda_lo = std::min(lambda_lo, f.slope(N, 1.0 / static_cast<double>(k)));
        lambda_hi = std::max(lambda_hi, f.slope(N, 1.0));
    }

    std::vector<double> pi;
    double gap = std::numeric_limits<double>::infinity();
    int it = 0;
    constexpr int kMaxIterations = 400;
    const double width = lambda_hi - lambda_lo;
    for (; it < kMaxIterations; ++it) {
        const double span = lambda_hi - lambda_lo;
        const double mid = 0.5 * (lambda_lo + lambda_hi);
        if (mid <= lambda_lo || mid >= lambda_hi ||
            span <= 1e-16 * std::max(std::abs(lambda_lo), std::abs(lambda_hi)) || span <= 1e-20 * width) {
            break;
        }
        if (mass(weights_at(mid)) < 1.0) {
            lambda_lo = mid;
        } else {
            lambda_hi = mid;
        }
    }
    // Interpolate between the two bracketing points so the mass is exactly 1.
    auto below = weights_at(lambda_lo);
    auto above = weights_at(lambda_hi);
    const double m_lo = mass(below);
    const double m_hi = mass(above);
    const double t = m_hi > m_lo ? std::clamp((1.0 - m_lo) / (m_hi - m_lo), 0.0, 1.0) : 0.0;
    pi.resize(k);
    for (std::size_t N = 0; N < k; ++N) {
        pi[N] = below[N] + t * (above[N] - below[N]);
    }
    const double total = mass(pi);
    for (double& x : pi) {
        x /= total;
    }

    // Frank-Wolfe gap. Coordinates at zero with an infinite slope make the
    // gap infinite, which correctly reports non-optimality.
    double inner = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t N = 0; N < k; ++N) {
        const double g = pi[N] > 0.0 ? f.slope(N, pi[N]) : f.slope(N, 0.0);
        if (pi[N] > 0.0) {
            inner += pi[N] * g;
        }
        lowest = std::min(lowest, g);
    }
    gap = inner - lowest;
    if (!(gap < tol)) {
        throw NoConvergence("minimize_over_unpolarized: duality gap " + std::to_string(gap) + " after " +
                            std::to_string(it) + " iterations");
    }

    OracleResult r;
    r.objective = f.value(pi);
    switch (problem.objective) {
    case Objective::HS:
    case Objective::BuresFidelity:
        r.degree = r.objective;
        break;
    case Objective::RelEntropy:
        r.degree = r.objective / (1.0 + r.objective);
        break;
    }
    r.weights = UnpolarizedWeights{std::move(pi)};
    r.kkt_residual = gap;
    r.iterations = it;
    return r;
}

/// p_N = sum_n a_n b_{N-n} over the stored supports.
inline std::vector<double> convolve_distributions(const ModeDistribution& a, const ModeDistribution& b) {
    const auto x = a.probs();
    const auto y = b.probs();
    std::vector<double> out(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

/// Half the l1 distance between two weight vectors (zero padded).
inline double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        const double x = i < a.size() ? a[i] : 0.0;
        const double y = i < b.size() ? b[i] : 0.0;
        acc += std::abs(x - y);
    }
    return 0.5 * acc;
}

/**
 * Reproducible random Fock-diagonal spectrum on manifolds 0..n_max.
 *
 * Entries are squares of uniforms, and roughly one manifold in ten is left
 * empty so that boundary optima are exercised. Doubles are drawn from the raw
 * 64-bit engine output, so a seed gives the same spectrum on every platform.
 */
inline ManifoldSpectrum random_spectrum(std::size_t n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::vector<double>> rows(n_max + 1);
    double total = 0.0;
    for (std::size_t N = 0; N <= n_max; ++N) {
        const bool empty = uniform() < 0.1;
        rows[N].resize(N + 1);
        for (double& x : rows[N]) {
            const double u = uniform();
            x = empty ? 0.0 : u * u;
            total += x;
        }
    }
    if (total == 0.0) {
        rows[0][0] = total = 1.0;
    }
    for (auto& r : rows) {
        for (double& x : r) {
            x /= total;
        }
    }
    return ManifoldSpectrum::from_rows(rows);
}

} // namespace qpol
