#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"
#include "ksb/spectrum.hpp"
#include "ksb/weights.hpp"

#include <gtest/gtest.h>

#include <bit>

namespace ksb {
namespace {

// K_k(i; n) read off the cube directly: sum over y of weight k of (-1)^{|S & y|}
// for a fixed S of weight i.
long cube_krawtchouk(int n, int k, int i) {
    const unsigned s = (1U << i) - 1;
    long total = 0;
    for (unsigned y = 0; y < (1U << n); ++y) {
        if (std::popcount(y) != k) continue;
        total += (std::popcount(s & y) % 2 == 0) ? 1 : -1;
    }
    return total;
}

std::vector<WeightScheme> all_schemes(int n) {
    std::vector<WeightScheme> out;
    for (int t = 1; 2 * t < n; ++t) out.push_back(kleitman_even(n, t));
    for (int t = 0; 2 * t + 1 < n; ++t) out.push_back(kleitman_odd(n, t));
    for (int t = 1; 2 * t < n; ++t) {
        for (int s = 1; s < t; ++s) out.push_back(consecutive_scheme(n, s, t));
    }
    return out;
}

WeightScheme indicator(int n, int k) {
    std::vector<BigInt> values(static_cast<std::size_t>(n), 0);
    values[static_cast<std::size_t>(k - 1)] = 1;
    return WeightScheme(n, values, "indicator");
}

TEST(Krawtchouk, SpecExamples) {
    const KrawtchoukTable table = krawtchouk_table(4);
    EXPECT_EQ(table(1, 1), 2);
    for (int i = 0; i <= 4; ++i) EXPECT_EQ(table(0, i), 1);
    EXPECT_EQ(table(2, 1), 0);
}

TEST(Krawtchouk, DomainAndResourceLimits) {
    EXPECT_THROW(krawtchouk_table(0), DomainError);
    EXPECT_NO_THROW(krawtchouk_table(64));
    EXPECT_THROW(krawtchouk_table(kMaxKrawtchoukDimension + 1), ResourceError);
}

TEST(Krawtchouk, MatchesCubeCount) {
    for (int n = 1; n <= 12; ++n) {
        const KrawtchoukTable table = krawtchouk_table(n);
        for (int k = 0; k <= n; ++k) {
            for (int i = 0; i <= n; ++i) ASSERT_EQ(table(k, i), cube_krawtchouk(n, k, i)) << n << " " << k << " " << i;
        }
    }
}

TEST(Krawtchouk, FirstRowIsHypercubeSpectrum) {
    for (int n = 1; n <= 64; ++n) {
        const KrawtchoukTable table = krawtchouk_table(n);
        for (int i = 0; i <= n; ++i) ASSERT_EQ(table(1, i), n - 2 * i);
    }
}

TEST(Krawtchouk, Orthogonality) {
    for (int n = 1; n <= 12; ++n) {
        const KrawtchoukTable table = krawtchouk_table(n);
        for (int k = 0; k <= n; ++k) {
            for (int l = 0; l <= n; ++l) {
                BigInt sum = 0;
                for (int i = 0; i <= n; ++i) sum += binomial(n, i) * table(k, i) * table(l, i);
                if (k == l) {
                    ASSERT_EQ(sum, BigInt(1) * pow(BigInt(2), n) * binomial(n, k));
                } else {
                    ASSERT_EQ(sum, 0) << n << " " << k << " " << l;
                }
            }
        }
    }
}

TEST(WeightedSpectrum, SpecExamples) {
    const SpectrumSummary kleitman = weighted_spectrum(6, kleitman_even(6, 1));
    for (int i = 2; i <= 5; ++i) EXPECT_EQ(kleitman.eigenvalues[static_cast<std::size_t>(i)], 1);

    const SpectrumSummary zero = weighted_spectrum(6, WeightScheme(6, std::vector<BigInt>(6, 0), "zero"));
    for (const auto& lambda : zero.eigenvalues) EXPECT_EQ(lambda, 0);
    EXPECT_EQ(zero.count_zero, 64);

    const SpectrumSummary cube = weighted_spectrum(5, indicator(5, 1));
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(cube.eigenvalues[static_cast<std::size_t>(i)], 5 - 2 * i);
}

TEST(WeightedSpectrum, TalliesAreConsistent) {
    for (int n = 2; n <= 30; ++n) {
        for (const auto& f : all_schemes(n)) {
            const SpectrumSummary spectrum = weighted_spectrum(n, f);
            BigInt total = 0;
            BigInt nonneg = 0;
            BigInt nonpos = 0;
            BigInt zero = 0;
            for (int i = 0; i <= n; ++i) {
                const auto& m = spectrum.multiplicities[static_cast<std::size_t>(i)];
                ASSERT_EQ(m, binomial(n, i));
                total += m;
                const int s = sign(spectrum.eigenvalues[static_cast<std::size_t>(i)]);
                if (s >= 0) nonneg += m;
                if (s <= 0) nonpos += m;
                if (s == 0) zero += m;
            }
            ASSERT_EQ(total, pow(BigInt(2), static_cast<unsigned long>(n)));
            ASSERT_EQ(spectrum.count_nonneg, nonneg);
            ASSERT_EQ(spectrum.count_nonpos, nonpos);
            ASSERT_EQ(spectrum.count_zero, zero);
            ASSERT_EQ(spectrum.count_nonneg + spectrum.count_nonpos - spectrum.count_zero, total);
        }
    }
}

TEST(WeightedSpectrum, TraceIsZero) {
    // The diagonal of sum_k f(k) M_{n,k} vanishes, so sum_i C(n,i) lambda_i = 0.
    for (int n = 2; n <= 30; ++n) {
        for (const auto& f : all_schemes(n)) {
            const SpectrumSummary spectrum = weighted_spectrum(n, f);
            BigInt trace = 0;
            for (int i = 0; i <= n; ++i) {
                trace += spectrum.multiplicities[static_cast<std::size_t>(i)] *
                         spectrum.eigenvalues[static_cast<std::size_t>(i)];
            }
            ASSERT_EQ(trace, 0) << f.label();
        }
    }
}

TEST(WeightedSpectrum, EvenSchemeSignPattern) {
    for (int n = 3; n <= 30; ++n) {
        for (int t = 1; t <= 5 && 2 * t < n; ++t) {
            const auto& lambda = weighted_spectrum(n, kleitman_even(n, t)).eigenvalues;
            for (int i = 0; i <= t; ++i) {
                const int expected = (i % 2 == 0) ? 1 : -1;
                ASSERT_EQ(sign(lambda[static_cast<std::size_t>(i)]), expected) << n << " " << t << " " << i;
            }
            const BigInt interior = (t % 2 == 1) ? 1 : -1;
            for (int i = t + 1; i <= n - t; ++i) ASSERT_EQ(lambda[static_cast<std::size_t>(i)], interior);
            for (int i = 0; i <= t - 1; ++i) {
                ASSERT_EQ(lambda[static_cast<std::size_t>(n - i)], lambda[static_cast<std::size_t>(i + 1)]);
            }
        }
    }
}

TEST(Fourier, SpecExamples) {
    EXPECT_TRUE(verify_fourier_eigenvectors(3, indicator(3, 1)));
    EXPECT_TRUE(verify_fourier_eigenvectors(6, kleitman_even(6, 1)));
    EXPECT_TRUE(verify_fourier_eigenvectors(5, consecutive_scheme(5, 1, 2)));
}

TEST(Fourier, EverySchemeUpToTwelve) {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& f : all_schemes(n)) ASSERT_TRUE(verify_fourier_eigenvectors(n, f)) << n << " " << f.label();
        for (int k = 1; k <= n; ++k) ASSERT_TRUE(verify_fourier_eigenvectors(n, indicator(n, k)));
    }
}

TEST(Fourier, RejectsDimensionAboveCap) {
    EXPECT_THROW(verify_fourier_eigenvectors(kMaxDenseVerificationDimension + 1, indicator(15, 1)), ResourceError);
}

TEST(WeightedSpectrum, FrozenKleitmanValues) {
    // n=10, t=3: computed once by the Krawtchouk sum and frozen.
    const auto spectrum = weighted_spectrum(10, kleitman_even(10, 3));
    const std::vector<BigInt> expected{209, -111, 49, -15, 1, 1, 1, 1, -15, 49, -111};
    EXPECT_EQ(spectrum.eigenvalues, expected);
    EXPECT_EQ(spectrum.count_nonneg, 848);
    EXPECT_EQ(spectrum.count_nonpos, 176);
}

}  // namespace
}  // namespace ksb
