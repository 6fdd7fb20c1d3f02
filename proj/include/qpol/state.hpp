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
 * Fock-diagonal two-mode states and their block-diagonal (polarization)
 * sector.
 *
 * A two-mode state is either a product of two single-mode photon-number
 * distributions or a pure state expanded over N-photon manifolds. Every
 * polarization degree in this library is a functional of the manifold
 * spectrum: the probabilities p_N of the excitation manifolds and the
 * eigenvalues mu_{N,n} of the projected blocks P_N rho P_N.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qpol/errors.hpp"
#include "qpol/numerics.hpp"

namespace qpol {

/// Normalization slack allowed on every probability sequence.
inline constexpr double kNormTolerance = 1e-12;

/// Controls how far infinite photon-number distributions are tabulated.
struct TruncationPolicy {
    double tail_tol = 1e-12;
    std::size_t n_max_cap = 4096;

    void validate() const {
        if (!(tail_tol > 0.0)) {
            throw DomainError("TruncationPolicy: tail_tol must be > 0");
        }
        if (n_max_cap < 1) {
            throw DomainError("TruncationPolicy: n_max_cap must be >= 1");
        }
    }
};

/// A thermal state of mean occupancy `nbar` with `added` photons applied.
/// added = 0 is the thermal state itself, nbar = 0 the Fock state |added>.
struct PatsSpec {
    double nbar = 0.0;
    unsigned added = 0;

    [[nodiscard]] double ratio() const { return nbar / (nbar + 1.0); }

    void validate() const {
        if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
            throw DomainError("PatsSpec: mean occupancy must be finite and >= 0");
        }
    }

    friend bool operator==(const PatsSpec&, const PatsSpec&) = default;
};

/**
 * Photon-number distribution of one mode.
 *
 * `tail_mass` is an upper bound on the probability carried by photon numbers
 * beyond the stored support. Distributions built by the thermal / PATS
 * factories remember their origin so that closed-form moments can be used.
 */
class ModeDistribution {
  public:
    ModeDistribution() : probs_{1.0} {}

    /// Point mass at photon number `m`.
    static ModeDistribution fock(unsigned m) {
        ModeDistribution d;
        d.probs_.assign(m + 1, 0.0);
        d.probs_[m] = 1.0;
        d.tail_mass_ = 0.0;
        d.origin_ = PatsSpec{0.0, m};
        return d;
    }

    /**
     * Arbitrary distribution. When `tail_mass` is omitted the missing mass
     * 1 - sum(probs) is used; it must not exceed the policy tolerance.
     */
    static ModeDistribution from_probs(std::vector<double> probs, std::optional<double> tail_mass = std::nullopt,
                                       const TruncationPolicy& policy = {}) {
        policy.validate();
        if (probs.empty()) {
            throw InvalidState("ModeDistribution: empty probability sequence");
        }
        double sum = 0.0;
        for (double x : probs) {
            if (!(x >= 0.0) || !std::isfinite(x)) {
                throw InvalidState("ModeDistribution: probabilities must be finite and >= 0");
            }
            sum += x;
        }
        if (probs.size() > policy.n_max_cap) {
            throw TruncationOverflow("ModeDistribution: support of " + std::to_string(probs.size()) +
                                     " exceeds n_max_cap");
        }
        const double tail = tail_mass ? *tail_mass : std::max(0.0, 1.0 - sum);
        if (!(tail >= 0.0)) {
            throw InvalidState("ModeDistribution: negative tail mass");
        }
        if (tail > policy.tail_tol) {
            throw InvalidState("ModeDistribution: tail mass " + std::to_string(tail) +
                               " exceeds the truncation tolerance");
        }
        if (sum > 1.0 + kNormTolerance || sum + tail < 1.0 - kNormTolerance) {
            throw InvalidState("ModeDistribution: probabilities sum to " + std::to_string(sum));
        }
        ModeDistribution d;
        d.probs_ = std::move(probs);
        d.tail_mass_ = tail;
        return d;
    }

    /// Used by the family factories, which certify their own tails.
    static ModeDistribution from_family(std::vector<double> probs, double tail_bound, PatsSpec origin) {
        ModeDistribution d;
        d.probs_ = std::move(probs);
        d.tail_mass_ = tail_bound;
        d.origin_ = origin;
        return d;
    }

    [[nodiscard]] std::span<const double> probs() const { return probs_; }
    [[nodiscard]] std::size_t size() const { return probs_.size(); }
    [[nodiscard]] double tail_mass() const { return tail_mass_; }
    [[nodiscard]] const std::optional<PatsSpec>& origin() const { return origin_; }

    /// Probability of `m` photons; zero beyond the stored support.
    [[nodiscard]] double operator[](std::size_t m) const { return m < probs_.size() ? probs_[m] : 0.0; }

  private:
    std::vector<double> probs_;
    double tail_mass_ = 0.0;
    std::optional<PatsSpec> origin_;
};

/// rho = rho_H (x) rho_V with both factors Fock-diagonal.
struct ProductDiagonal {
    ModeDistribution h;
    ModeDistribution v;
};

/// Pure state sum_N c_N |Psi_N>; only the weights |c_N|^2 matter.
struct PureExpansion {
    std::vector<double> weights;
    double tail = 0.0;
};

class TwoModeState {
  public:
    using Kind = std::variant<ProductDiagonal, PureExpansion>;

    static TwoModeState product(ModeDistribution h, ModeDistribution v) {
        return TwoModeState(ProductDiagonal{std::move(h), std::move(v)});
    }

    static TwoModeState pure(std::vector<double> weights, double tail = 0.0) {
        double sum = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0) || !std::isfinite(w)) {
                throw InvalidState("PureExpansion: weights must be finite and >= 0");
            }
            sum += w;
        }
        if (weights.empty() || tail < 0.0 || std::abs(sum + tail - 1.0) > kNormTolerance) {
            throw InvalidState("PureExpansion: weights must sum to 1, got " + std::to_string(sum + tail));
        }
        return TwoModeState(PureExpansion{std::move(weights), tail});
    }

    [[nodiscard]] const Kind& kind() const { return kind_; }
    [[nodiscard]] bool is_product() const { return std::holds_alternative<ProductDiagonal>(kind_); }

    [[nodiscard]] const ProductDiagonal& as_product() const {
        if (const auto* p = std::get_if<ProductDiagonal>(&kind_)) {
            return *p;
        }
        throw DomainError("operation requires a Fock-diagonal product state");
    }

  private:
    explicit TwoModeState(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

/// H <-> V exchange. Pure expansions are returned unchanged.
inline TwoModeState swap_modes(const TwoModeState& state) {
    if (state.is_product()) {
        const auto& pd = state.as_product();
        return TwoModeState::product(pd.v, pd.h);
    }
    return state;
}

/**
 * Manifold probabilities p_N and block eigenvalues mu_{N,n}.
 *
 * Row N is stored compactly: only a contiguous run of indices n starting at
 * `row_first(N)` is kept and every other eigenvalue of that block is zero.
 */
class ManifoldSpectrum {
  public:
    /// Full rows, rows[N] holding mu_{N,0..N} (shorter rows are zero padded).
    static ManifoldSpectrum from_rows(const std::vector<std::vector<double>>& rows, double tail = 0.0) {
        ManifoldSpectrum ms;
        for (std::size_t N = 0; N < rows.size(); ++N) {
            if (rows[N].size() > N + 1) {
                throw InvalidState("ManifoldSpectrum: row " + std::to_string(N) + " has more than N+1 entries");
            }
            ms.push_row(0, rows[N]);
        }
        ms.finish(tail);
        return ms;
    }

    /// A single nonzero eigenvalue p_N per manifold, as for pure expansions.
    static ManifoldSpectrum from_pure_weights(std::span<const double> weights, double tail = 0.0) {
        ManifoldSpectrum ms;
        for (double w : weights) {
            const double one[] = {w};
            ms.push_row(0, one);
        }
        ms.finish(tail);
        return ms;
    }

    [[nodiscard]] std::size_t manifolds() const { return p_.size(); }
    [[nodiscard]] std::size_t n_max() const { return p_.empty() ? 0 : p_.size() - 1; }
    [[nodiscard]] double tail() const { return tail_; }
    [[nodiscard]] std::span<const double> p() const { return p_; }
    [[nodiscard]] double p(std::size_t N) const { return N < p_.size() ? p_[N] : 0.0; }

    [[nodiscard]] std::span<const double> row(std::size_t N) const {
        return std::span<const double>(values_).subspan(offset_[N], offset_[N + 1] - offset_[N]);
    }
    [[nodiscard]] std::size_t row_first(std::size_t N) const { return first_[N]; }

    [[nodiscard]] double mu(std::size_t N, std::size_t n) const {
        if (N >= p_.size() || n < first_[N]) {
            return 0.0;
        }
        const auto r = row(N);
        return n - first_[N] < r.size() ? r[n - first_[N]] : 0.0;
    }

    /// First `n_max + 1` manifolds, rescaled to unit total probability.
    [[nodiscard]] ManifoldSpectrum truncated(std::size_t n_max) const {
        ManifoldSpectrum out;
        const std::size_t rows = std::min(n_max + 1, manifolds());
        double mass = 0.0;
        for (std::size_t N = 0; N < rows; ++N) {
            mass += p_[N];
        }
        if (!(mass > 0.0)) {
            throw InvalidState("ManifoldSpectrum: truncation leaves no probability mass");
        }
        for (std::size_t N = 0; N < rows; ++N) {
            std::vector<double> scaled(row(N).begin(), row(N).end());
            for (double& x : scaled) {
                x /= mass;
            }
            out.push_row(first_[N], scaled);
        }
        out.finish(0.0);
        return out;
    }

    /// Incremental construction; rows must be pushed in order N = 0, 1, ...
    void push_row(std::size_t first, std::span<const double> values) {
        const std::size_t N = p_.size();
        if (first + values.size() > N + 1) {
            throw InvalidState("ManifoldSpectrum: row " + std::to_string(N) + " overflows n = 0..N");
        }
        double sum = 0.0;
        for (double x : values) {
            if (!(x >= 0.0) || !std::isfinite(x)) {
                throw InvalidState("ManifoldSpectrum: eigenvalues must be finite and >= 0");
            }
            values_.push_back(x);
            sum += x;
        }
        first_.push_back(first);
        offset_.push_back(values_.size());
        p_.push_back(sum);
    }

    void finish(double tail) {
        double total = 0.0;
        for (double x : p_) {
            total += x;
        }
        if (!(tail >= 0.0) || total > 1.0 + kNormTolerance || total + tail < 1.0 - kNormTolerance) {
            throw InvalidState("ManifoldSpectrum: total probability " + std::to_string(total) + " with tail " +
                               std::to_string(tail));
        }
        tail_ = tail;
    }

  private:
    std::vector<double> p_;
    std::vector<std::size_t> first_;
    std::vector<std::size_t> offset_{0};
    std::vector<double> values_;
    double tail_ = 0.0;
};

/// Weights pi_N of an SU(2)-invariant state sum_N pi_N P_N / (N+1).
struct UnpolarizedWeights {
    std::vector<double> pi;

    void validate() const {
        double sum = 0.0;
        for (double x : pi) {
            if (!(x >= 0.0)) {
                throw InvalidState("UnpolarizedWeights: negative weight");
            }
            sum += x;
        }
        if (std::abs(sum - 1.0) > kNormTolerance) {
            throw InvalidState("UnpolarizedWeights: weights sum to " + std::to_string(sum));
        }
    }
};

/// Spectrum of the unpolarized state with weights `w`: mu_{N,n} = pi_N/(N+1).
inline ManifoldSpectrum unpolarized_spectrum(const UnpolarizedWeights& w) {
    w.validate();
    ManifoldSpectrum ms;
    for (std::size_t N = 0; N < w.pi.size(); ++N) {
        const std::vector<double> r(N + 1, w.pi[N] / static_cast<double>(N + 1));
        ms.push_row(0, r);
    }
    ms.finish(0.0);
    return ms;
}

/**
 * Block-diagonal sector of `state`.
 *
 * For products mu_{N,n} = xi_n eta_{N-n}. A pure expansion has one nonzero
 * eigenvalue |c_N|^2 per block. Throws TruncationOverflow when a factor's
 * support or tail is outside the policy.
 */
inline ManifoldSpectrum manifold_spectrum(const TwoModeState& state, const TruncationPolicy& policy = {}) {
    policy.validate();
    if (const auto* pe = std::get_if<PureExpansion>(&state.kind())) {
        if (pe->weights.size() > policy.n_max_cap) {
            throw TruncationOverflow("manifold_spectrum: pure expansion longer than n_max_cap");
        }
        return ManifoldSpectrum::from_pure_weights(pe->weights, pe->tail);
    }
    const auto& pd = state.as_product();
    for (const ModeDistribution* d : {&pd.h, &pd.v}) {
        if (d->size() > policy.n_max_cap || d->tail_mass() > policy.tail_tol) {
            throw TruncationOverflow("manifold_spectrum: mode support " + std::to_string(d->size()) +
                                     " with tail " + std::to_string(d->tail_mass()) +
                                     " does not meet the truncation policy");
        }
    }
    const auto xi = pd.h.probs();
    const auto eta = pd.v.probs();
    const std::size_t lh = xi.size();
    const std::size_t lv = eta.size();
    ManifoldSpectrum ms;
    std::vector<double> r;
    for (std::size_t N = 0; N + 2 <= lh + lv; ++N) {
        const std::size_t lo = N + 1 > lv ? N + 1 - lv : 0;
        const std::size_t hi = std::min(N, lh - 1);
        r.clear();
        for (std::size_t n = lo; n <= hi; ++n) {
            r.push_back(xi[n] * eta[N - n]);
        }
        ms.push_row(lo, r);
    }
    const double th = pd.h.tail_mass();
    const double tv = pd.v.tail_mass();
    ms.finish(th + tv - th * tv);
    return ms;
}

/// <N^j> = sum_m xi_m m^j over the stored support, j in {1, 2}.
inline double mode_moment(const ModeDistribution& dist, int order) {
    if (order != 1 && order != 2) {
        throw DomainError("mode_moment: order must be 1 or 2");
    }
    double acc = 0.0;
    const auto probs = dist.probs();
    for (std::size_t m = 0; m < probs.size(); ++m) {
        const auto mm = static_cast<double>(m);
        acc += probs[m] * (order == 1 ? mm : mm * mm);
    }
    return acc;
}

/// -sum_m xi_m ln xi_m.
inline double mode_entropy(const ModeDistribution& dist) {
    double acc = 0.0;
    for (double x : dist.probs()) {
        acc -= xlnx(x);
    }
    return acc;
}

/// von Neumann entropy of a product state: the two mode entropies add.
inline double von_neumann_entropy(const TwoModeState& state) {
    const auto& pd = state.as_product();
    return mode_entropy(pd.h) + mode_entropy(pd.v);
}

/// Entropy of the block-diagonal sector computed from its eigenvalues.
inline double spectrum_entropy(const ManifoldSpectrum& ms) {
    double acc = 0.0;
    for (std::size_t N = 0; N < ms.manifolds(); ++N) {
        for (double x : ms.row(N)) {
            acc -= xlnx(x);
        }
    }
    return acc;
}

} // namespace qpol
