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
 * Special functions and guarded elementary operations shared by the
 * degree evaluators.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "qpol/errors.hpp"

namespace qpol {

/**
 * Legendre polynomial of the first kind, P_L(x), for x >= 1.
 *
 * Evaluated with the Bonnet recurrence
 *   (l+1) P_{l+1}(x) = (2l+1) x P_l(x) - l P_{l-1}(x).
 * On x >= 1 every P_l is positive and increasing in l, so the recurrence is
 * free of cancellation.
 */
inline double legendre(unsigned degree, double x) {
    if (!(x >= 1.0)) {
        throw DomainError("legendre: argument must be >= 1, got " + std::to_string(x));
    }
    if (degree == 0 || x == 1.0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = x;
    for (unsigned l = 1; l < degree; ++l) {
        const double next = (static_cast<double>(2 * l + 1) * x * cur - static_cast<double>(l) * prev) /
                            static_cast<double>(l + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

/**
 * ln C(n, k).
 *
 * For min(k, n-k) <= 128 the product formula is summed term by term, which is
 * accurate to a few ulps and touches no global state. Larger arguments fall
 * back to log-gamma.
 */
inline double log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("log_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
    }
    const std::int64_t kk = std::min(k, n - k);
    if (kk == 0) {
        return 0.0;
    }
    if (kk <= 128) {
        double acc = 0.0;
        const auto base = static_cast<double>(n - kk);
        for (std::int64_t i = 1; i <= kk; ++i) {
            acc += std::log1p(base / static_cast<double>(i));
        }
        return acc;
    }
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

/// x ln x with the continuous extension 0 ln 0 = 0.
inline double xlnx(double x) {
    if (x < 0.0) {
        throw DomainError("xlnx: negative argument " + std::to_string(x));
    }
    if (x == 0.0) {
        return 0.0;
    }
    return x * std::log(x);
}

} // namespace qpol
