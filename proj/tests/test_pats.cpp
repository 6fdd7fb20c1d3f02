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


#include <cmath>

#include <gtest/gtest.h>

#include "qpol/degrees.hpp"
#include "qpol/errors.hpp"
#include "qpol/numerics.hpp"
#include "qpol/pats.hpp"
#include "qpol/thermal.hpp"
#include "test_support.hpp"

using namespace qpol;

namespace {

constexpr std::size_t kLen = 3000;

double direct_purity(double n, unsigned m) {
    double s = 0.0;
    for (double w : qpol_test::naive_pats(n, m, kLen)) {
        s += w * w;
    }
    return s;
}

double direct_entropy(double n, unsigned m) {
    double s = 0.0;
    for (double w : qpol_test::naive_pats(n, m, kLen)) {
        if (w > 0) {
            s -= w * std::log(w);
        }
    }
    return s;
}

} // namespace

TEST(PatsMode, ZeroOccupancyIsFock) {
    const auto d = pats_mode(PatsSpec{0.0, 3});
    ASSERT_EQ(d.size(), 4u);
    EXPECT_EQ(d[3], 1.0);
    EXPECT_EQ(d.tail_mass(), 0.0);
}

TEST(PatsMode, NoAddedPhotonsIsThermal) {
    const auto p = pats_mode(PatsSpec{1.5, 0});
    const auto t = thermal_mode(1.5);
    for (std::size_t l = 0; l < 100; ++l) {
        EXPECT_NEAR(p[l], t[l], 1e-15);
    }
}

TEST(PatsMode, MeanOfOneTwo) { EXPECT_NEAR(mode_moment(pats_mode(PatsSpec{1.0, 2}), 1), 5.0, 1e-10); }

TEST(PatsMode, WeightsMatchRecurrence) {
    for (double n : {0.1, 1.0, 2.0, 7.5}) {
        for (unsigned m : {0u, 1u, 2u, 4u, 9u}) {
            const auto d = pats_mode(PatsSpec{n, m});
            const auto ref = qpol_test::naive_pats(n, m, d.size());
            for (std::size_t l = 0; l < d.size(); ++l) {
                EXPECT_NEAR(d[l], ref[l], 1e-13 * std::max(ref[l], 1e-3)) << n << " " << m << " " << l;
            }
        }
    }
}

TEST(PatsMode, TailBoundIsAnUpperBound) {
    for (double n : {0.1, 1.0, 2.0}) {
        for (unsigned m : {0u, 2u, 4u}) {
            const auto d = pats_mode(PatsSpec{n, m});
            const auto ref = qpol_test::naive_pats(n, m, kLen);
            double rest = 0.0;
            for (std::size_t l = d.size(); l < ref.size(); ++l) {
                rest += ref[l];
            }
            EXPECT_LE(rest, d.tail_mass() * (1 + 1e-9));
            EXPECT_LT(d.tail_mass(), 1e-12);
        }
    }
}

TEST(PatsMode, CapOverflow) {
    EXPECT_THROW(pats_mode(PatsSpec{50.0, 2}, TruncationPolicy{1e-12, 100}), TruncationOverflow);
    EXPECT_THROW(pats_mode(PatsSpec{0.0, 200}, TruncationPolicy{1e-12, 100}), TruncationOverflow);
    EXPECT_THROW(pats_mode(PatsSpec{-1.0, 2}), DomainError);
}

TEST(PatsPurity, Examples) {
    for (unsigned m = 0; m < 6; ++m) {
        EXPECT_DOUBLE_EQ(pats_purity(PatsSpec{0.0, m}), 1.0);
    }
    EXPECT_DOUBLE_EQ(pats_purity(PatsSpec{1.0, 0}), 1.0 / 3.0);
    EXPECT_NEAR(pats_purity(PatsSpec{1.0, 2}), direct_purity(1.0, 2), 1e-10);
}

TEST(PatsPurity, MatchesSumOfSquares) {
    for (double n : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        for (unsigned m = 0; m <= 6; ++m) {
            EXPECT_NEAR(pats_purity(PatsSpec{n, m}), direct_purity(n, m), 1e-10) << n << " " << m;
        }
    }
}

TEST(PatsMoments, Examples) {
    auto check = [](PatsSpec s, double mean, double second) {
        const auto mo = pats_moments(s);
        EXPECT_DOUBLE_EQ(mo.mean, mean);
        EXPECT_DOUBLE_EQ(mo.second, second);
    };
    check(PatsSpec{0.0, 4}, 4, 16);
    check(PatsSpec{2.0, 0}, 2, 10);
    check(PatsSpec{1.0, 1}, 3, 13);
}

TEST(PatsMoments, MatchDirectSums) {
    for (double n : {0.1, 1.0, 2.0}) {
        for (unsigned m : {0u, 1u, 2u, 4u}) {
            const auto w = qpol_test::naive_pats(n, m, kLen);
            double m1 = 0.0;
            double m2 = 0.0;
            for (std::size_t l = 0; l < w.size(); ++l) {
                m1 += w[l] * static_cast<double>(l);
                m2 += w[l] * static_cast<double>(l * l);
            }
            const auto mo = pats_moments(PatsSpec{n, m});
            EXPECT_NEAR(mo.mean, m1, 1e-10 * std::max(1.0, m1));
            EXPECT_NEAR(mo.second, m2, 1e-10 * std::max(1.0, m2));
        }
    }
}

TEST(PatsEntropy, Examples) {
    EXPECT_EQ(pats_entropy(PatsSpec{0.0, 3}), 0.0);
    EXPECT_NEAR(pats_entropy(PatsSpec{2.0, 0}), thermal_entropy(2.0), 1e-12);
    EXPECT_NEAR(pats_entropy(PatsSpec{1.0, 2}), direct_entropy(1.0, 2), 1e-9);
}

TEST(PatsEntropy, MatchesDirectSum) {
    for (double n : {0.1, 1.0, 2.0}) {
        for (unsigned m : {0u, 1u, 2u, 4u}) {
            EXPECT_NEAR(pats_entropy(PatsSpec{n, m}), direct_entropy(n, m), 1e-9) << n << " " << m;
        }
    }
}

TEST(TwoModePatsPn, BelowSupportIsZero) {
    const TwoModePats tp{PatsSpec{1.0, 2}, PatsSpec{1.0, 3}};
    for (std::size_t N = 0; N < 5; ++N) {
        EXPECT_EQ(two_mode_pats_pn(tp, N), 0.0);
    }
    EXPECT_GT(two_mode_pats_pn(tp, 5), 0.0);
}

TEST(TwoModePatsPn, FockSecondModeReducesToSingleTerm) {
    for (double n1 : {0.1, 1.0, 2.0}) {
        for (unsigned m : {0u, 1u, 2u, 4u}) {
            for (unsigned s : {0u, 1u, 2u, 4u}) {
                const TwoModePats tp{PatsSpec{n1, m}, PatsSpec{0.0, s}};
                for (std::size_t N = m + s; N < m + s + 40; ++N) {
                    const auto k = static_cast<double>(N - s);
                    const double ref = std::exp(log_binomial(static_cast<std::int64_t>(N - s), m) +
                                                (k - m) * std::log(n1) - (k + 1) * std::log1p(n1));
                    EXPECT_NEAR(two_mode_pats_pn(tp, N), ref, 1e-14);
                }
            }
        }
    }
}

TEST(TwoModePatsPn, MatchesConvolution) {
    const TwoModePats tp{PatsSpec{1.0, 1}, PatsSpec{1.0, 2}};
    const auto conv = qpol_test::naive_convolve(qpol_test::naive_pats(1.0, 1, 200), qpol_test::naive_pats(1.0, 2, 200));
    for (std::size_t N = 0; N <= 40; ++N) {
        EXPECT_NEAR(two_mode_pats_pn(tp, N), conv[N], 1e-12);
    }
}

TEST(TwoModePatsPn, PropertyAgainstConvolution) {
    for (auto seed : qpol_test::kSeeds) {
        qpol_test::Rng rng(seed);
        const PatsSpec h{rng.uniform(0.0, 3.0), rng.below(5)};
        const PatsSpec v{rng.uniform(0.0, 3.0), rng.below(5)};
        const auto conv = qpol_test::naive_convolve(qpol_test::naive_pats(h.nbar, h.added, 500),
                                                    qpol_test::naive_pats(v.nbar, v.added, 500));
        for (std::size_t N = 0; N < 80; ++N) {
            EXPECT_NEAR(two_mode_pats_pn(TwoModePats{h, v}, N), conv[N], 1e-12);
        }
    }
}

TEST(HsPats, NoAddedPhotonsIsThermal) {
    for (double a : {0.0, 0.5, 2.0}) {
        for (double b : {0.0, 1.0, 3.0}) {
            EXPECT_NEAR(p_hs_pats(TwoModePats{PatsSpec{a, 0}, PatsSpec{b, 0}}), p_hs_thermal(ThermalPair{a, b}),
                        1e-12);
        }
    }
}

TEST(HsPats, FockLimit) {
    for (unsigned m = 0; m < 5; ++m) {
        for (unsigned s = 0; s < 5; ++s) {
            const double n = m + s;
            EXPECT_NEAR(p_hs_pats(TwoModePats{PatsSpec{0.0, m}, PatsSpec{0.0, s}}), n / (n + 1), 1e-15);
        }
    }
}

TEST(HsPats, MatchesSeries) {
    const TwoModePats tp{PatsSpec{1.0, 2}, PatsSpec{1.0, 2}};
    const auto ms = manifold_spectrum(TwoModeState::product(pats_mode(tp.h), pats_mode(tp.v)));
    EXPECT_NEAR(p_hs_pats(tp), p_hs_series(ms), 1e-8);
}

TEST(EvaluatePats, AgreesWithGenericEvaluation) {
    const TwoModePats tp{PatsSpec{1.0, 2}, PatsSpec{0.5, 1}};
    const TruncationPolicy fine{1e-24, 4096};
    const auto generic = evaluate(TwoModeState::product(pats_mode(tp.h, fine), pats_mode(tp.v, fine)), fine);
    const auto r = evaluate_pats(tp);
    EXPECT_NEAR(r.p_hs, generic.p_hs, 1e-10);
    EXPECT_NEAR(r.p_bures, generic.p_bures, 1e-10);
    EXPECT_NEAR(r.p_re, generic.p_re, 1e-10);
    EXPECT_NEAR(*r.p1, *generic.p1, 1e-10);
    EXPECT_NEAR(*r.p2, *generic.p2, 1e-10);
}

TEST(FockDegrees, OnePhoton) {
    const auto r = fock_degrees(1, 0);
    EXPECT_DOUBLE_EQ(*r.p1, 1.0);
    EXPECT_DOUBLE_EQ(*r.p2, 1.0 / std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(r.p_hs, 0.5);
    EXPECT_DOUBLE_EQ(r.p_bures, 1.0 - 1.0 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(r.p_re, 1.0 - 1.0 / (1.0 + std::log(2.0)));
}

TEST(FockDegrees, Balanced) {
    const auto r = fock_degrees(2, 2);
    EXPECT_EQ(*r.p1, 0.0);
    EXPECT_EQ(*r.p2, 0.0);
    EXPECT_DOUBLE_EQ(r.p_hs, 0.8);
}

TEST(FockDegrees, VacuumHasNoStokesDegrees) {
    const auto r = fock_degrees(0, 0);
    EXPECT_FALSE(r.p1.has_value());
    EXPECT_FALSE(r.p2.has_value());
    EXPECT_EQ(r.p_hs, 0.0);
}

TEST(FockDegrees, OrderingOfDistanceDegrees) {
    for (unsigned n = 1; n <= 100; ++n) {
        for (unsigned m : {0u, n / 2, n}) {
            const auto r = fock_degrees(m, n - m);
            EXPECT_GE(r.p_hs, r.p_bures);
            EXPECT_GE(r.p_hs, r.p_re);
            EXPECT_GE(*r.p1, *r.p2);
        }
    }
}

TEST(FockDegrees, MatchGenericEvaluation) {
    for (unsigned m = 0; m < 6; ++m) {
        for (unsigned s = 0; s < 6; ++s) {
            const auto a = fock_degrees(m, s);
            const auto b =
                evaluate(TwoModeState::product(ModeDistribution::fock(m), ModeDistribution::fock(s)));
            EXPECT_NEAR(a.p_hs, b.p_hs, 1e-15);
            EXPECT_NEAR(a.p_bures, b.p_bures, 1e-15);
            EXPECT_NEAR(a.p_re, b.p_re, 1e-15);
            EXPECT_EQ(a.p1.has_value(), b.p1.has_value());
        }
    }
}

// Adding photons lowers the first-order Stokes degree only once the
// occupancy imbalance is large enough; at small eps the order flips for an
// asymmetric pair.
TEST(PatsOrdering, FirstOrderStokesCrossover) {
    auto p1_pair = [](double eps, unsigned m, unsigned s) {
        const auto r = evaluate_pats(TwoModePats{PatsSpec{1.0 + eps, m}, PatsSpec{1.0, s}});
        return *r.p1;
    };
    const double cross = (std::sqrt(41.0) - 5.0) / 4.0;
    EXPECT_GT(p1_pair(0.25, 1, 2), p1_thermal(ThermalPair{1.25, 1.0}));
    EXPECT_LT(p1_pair(0.5, 1, 2), p1_thermal(ThermalPair{1.5, 1.0}));
    EXPECT_NEAR(p1_pair(cross, 1, 2), p1_thermal(ThermalPair{1.0 + cross, 1.0}), 1e-12);
}
