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


// Test-side reference computations. These deliberately avoid the library's
// closed forms so that agreement is meaningful.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace qpol_test {

/// splitmix64; fixed seeds make every property test reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    unsigned below(unsigned n) { return static_cast<unsigned>(next() % n); }

  private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kSeeds[] = {1, 7, 42, 1234, 99991, 271828, 314159, 0xdeadbeef};

/// Geometric weights by repeated multiplication, `len` entries.
inline std::vector<double> naive_thermal(double nbar, std::size_t len) {
    std::vector<double> w(len);
    const double q = nbar / (nbar + 1.0);
    double x = 1.0 / (nbar + 1.0);
    for (auto& v : w) {
        v = x;
        x *= q;
    }
    return w;
}

/// PATS weights by the ratio recurrence w_{l+1} = w_l q (l+1)/(l+1-M),
/// started from w_M = 1/(nbar+1)^{M+1}.
inline std::vector<double> naive_pats(double nbar, unsigned m, std::size_t len) {
    std::vector<double> w(len, 0.0);
    if (len <= m) {
        return w;
    }
    if (nbar == 0.0) {
        w[m] = 1.0;
        return w;
    }
    const double q = nbar / (nbar + 1.0);
    w[m] = std::pow(nbar + 1.0, -static_cast<double>(m) - 1.0);
    for (std::size_t l = m; l + 1 < len; ++l) {
        w[l + 1] = w[l] * q * static_cast<double>(l + 1) / static_cast<double>(l + 1 - m);
    }
    return w;
}

inline std::vector<double> naive_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s;
}

} // namespace qpol_test
