#include "ksb/bounds.hpp"
#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"
#include "ksb/spectrum.hpp"

#include <gtest/gtest.h>

namespace ksb {
namespace {

TEST(Cvetkovic, SpecExamples) {
    EXPECT_EQ(cvetkovic_bound(5, DistanceSet(5, {1, 2}), kleitman_even(5, 1)).value, 6);
    EXPECT_EQ(cvetkovic_bound(5, DistanceSet(5, {1, 2, 3}), kleitman_odd(5, 1)).value, 10);
    EXPECT_LE(cvetkovic_bound(10, DistanceSet(10, {3, 4}), consecutive_scheme(10, 1, 2)).value, 12);
}

TEST(Cvetkovic, ValueIsMinOfTallies) {
    const BoundReport report = cvetkovic_bound(9, DistanceSet::upto(9, 4), kleitman_even(9, 2));
    const auto& witness = std::get<SpectralWitness>(report.witness);
    EXPECT_EQ(report.value, std::min(witness.count_nonneg, witness.count_nonpos));
    EXPECT_EQ(report.method, Method::Spectral);
    EXPECT_EQ(witness.scheme, kleitman_even(9, 2).label());
}

TEST(Cvetkovic, RejectsSupportOnAllowedDistance) {
    EXPECT_THROW(cvetkovic_bound(8, DistanceSet(8, {1, 2, 3}), kleitman_even(8, 1)), PreconditionError);
    EXPECT_THROW(cvetkovic_bound(8, DistanceSet(7, {1, 2}), kleitman_even(8, 1)), DomainError);
}

TEST(KleitmanClosedForm, SpecExamples) {
    EXPECT_EQ(kleitman_closed_form(5, 2).value, 6);
    EXPECT_EQ(kleitman_closed_form(5, 3).value, 10);
    EXPECT_EQ(kleitman_closed_form(4, 1).value, 2);
    EXPECT_THROW(kleitman_closed_form(5, 5), DomainError);
    EXPECT_THROW(kleitman_closed_form(5, 0), DomainError);
}

TEST(KleitmanClosedForm, SpectralRunReproducesIt) {
    for (int n = 2; n <= 30; ++n) {
        for (int d = 1; d < n && d <= 11; ++d) {
            const DistanceSet allowed = DistanceSet::upto(n, d);
            const auto scheme = matching_scheme(allowed);
            ASSERT_TRUE(scheme);
            ASSERT_EQ(cvetkovic_bound(n, allowed, *scheme).value, kleitman_closed_form(n, d).value)
                << "n=" << n << " d=" << d;
        }
    }
}

TEST(ConsecutiveClosedForm, SpecExamples) {
    EXPECT_EQ(consecutive_closed_form(10, 1, 2).value, 12);
    EXPECT_EQ(consecutive_closed_form(20, 2, 4).value, 232);
    EXPECT_THROW(consecutive_closed_form(10, 2, 2), DomainError);
    EXPECT_THROW(consecutive_closed_form(4, 0, 2), DomainError);
}

TEST(ConsecutiveClosedForm, SpectralIsAtMostClosedForm) {
    for (int n = 3; n <= 30; ++n) {
        for (int t = 1; t <= 5 && 2 * t < n; ++t) {
            for (int s = 0; s < t; ++s) {
                const DistanceSet allowed = DistanceSet::range(n, 2 * s + 1, 2 * t);
                const BoundReport spectral = cvetkovic_bound(n, allowed, consecutive_scheme(n, s, t));
                ASSERT_LE(spectral.value, consecutive_closed_form(n, s, t).value) << n << " " << s << " " << t;
            }
        }
    }
}

TEST(ConsecutiveClosedForm, SZeroSpectralGivesKleitmanValue) {
    for (int n = 3; n <= 30; ++n) {
        for (int t = 1; t <= 5 && 2 * t < n; ++t) {
            const DistanceSet allowed = DistanceSet::upto(n, 2 * t);
            EXPECT_EQ(cvetkovic_bound(n, allowed, consecutive_scheme(n, 0, t)).value, kleitman_closed_form(n, 2 * t).value);
        }
    }
}

TEST(ConsecutiveScheme, InteriorEigenvalue) {
    for (int n = 3; n <= 30; ++n) {
        for (int t = 1; t <= 5 && 2 * t < n; ++t) {
            for (int s = 0; s < t; ++s) {
                const auto lambda = weighted_spectrum(n, consecutive_scheme(n, s, t)).eigenvalues;
                const BigInt expected = ((t - s + 1) % 2 == 0 ? 1 : -1) * binomial(t, s);
                for (int i = t - s + 1; i <= n - (t - s); ++i) {
                    ASSERT_EQ(lambda[static_cast<std::size_t>(i)], expected) << n << " " << s << " " << t << " " << i;
                }
            }
        }
    }
}

TEST(Parity, SpecExamples) {
    EXPECT_EQ(parity_bound(DistanceSet(6, {1, 3, 5}))->value, 2);
    EXPECT_FALSE(parity_bound(DistanceSet(6, {2})));
    EXPECT_EQ(parity_bound(DistanceSet(7, {7}))->value, 2);
}

TEST(FranklWilson, SpecExamples) {
    EXPECT_EQ(frankl_wilson_form(10, DistanceSet(10, {1, 3})).value, 3);
    EXPECT_EQ(frankl_wilson_form(10, DistanceSet(10, {2})).value, 12);
    EXPECT_EQ(frankl_wilson_form(10, DistanceSet(10, {1, 2, 3, 4})).value, 225);
}

TEST(MatchingScheme, PicksByShape) {
    EXPECT_EQ(matching_scheme(DistanceSet::upto(9, 4))->values(), kleitman_even(9, 2).values());
    EXPECT_EQ(matching_scheme(DistanceSet::upto(9, 5))->values(), kleitman_odd(9, 2).values());
    EXPECT_EQ(matching_scheme(DistanceSet::range(9, 3, 4))->values(), consecutive_scheme(9, 1, 2).values());
    EXPECT_FALSE(matching_scheme(DistanceSet(9, {2, 5})));
    EXPECT_FALSE(matching_scheme(DistanceSet::upto(9, 9)));
}

TEST(KleitmanClosedForm, FrozenValues) {
    // n=10 row, d=1..9, computed once from the closed form and cross-checked by the oracle tests.
    const std::vector<long> expected{2, 11, 20, 56, 92, 176, 260, 386, 512};
    for (int d = 1; d <= 9; ++d) EXPECT_EQ(kleitman_closed_form(10, d).value, expected[static_cast<std::size_t>(d - 1)]);
}

}  // namespace
}  // namespace ksb
