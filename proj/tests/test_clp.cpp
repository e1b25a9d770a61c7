#include "ksb/clp.hpp"
#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"
#include "ksb/oracle.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>

namespace ksb {
namespace {

// Rank over F_2 by elimination on std::vector<bool> rows, reducing to
// reduced row echelon form. Independent of the bitset implementation.
std::size_t reference_rank(const F2Matrix& m) {
    std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c]) {
                for (std::size_t k = 0; k < m.cols(); ++k) rows[r][k] = rows[r][k] != rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

F2Matrix identity(std::size_t size) {
    F2Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
    return m;
}

// Sum over S of size <= 2t of prod_{i in S} (x_i - y_i), reduced mod 2.
bool polynomial_entry(unsigned x, unsigned y, int n, int t) {
    const unsigned diff = x ^ y;
    unsigned total = 0;
    for (unsigned s = 0; s < (1U << n); ++s) {
        if (std::popcount(s) > 2 * t) continue;
        if ((s & diff) == s) total ^= 1U;
    }
    return total == 1;
}

TEST(ClpDegreeBound, SpecExamples) {
    EXPECT_EQ(clp_degree_bound(8, 2), 18);
    EXPECT_EQ(clp_degree_bound(7, 0), 2);
    EXPECT_EQ(clp_degree_bound(6, 4), 44);
    EXPECT_THROW(clp_degree_bound(6, 7), DomainError);
    EXPECT_THROW(clp_degree_bound(6, -1), DomainError);
}

TEST(KleitmanMatrix, SpecExamples) {
    const F2Matrix m = build_kleitman_matrix(3, 1);
    for (unsigned x = 0; x < 8; ++x) {
        for (unsigned y = 0; y < 8; ++y) {
            const int d = std::popcount(x ^ y);
            EXPECT_EQ(m.get(x, y), d == 0 || d == 3) << x << " " << y;
        }
    }
    for (int n = 1; n <= 8; ++n) {
        for (int t = 0; t <= 3; ++t) {
            const F2Matrix k = build_kleitman_matrix(n, t);
            for (unsigned x = 0; x < (1U << n); ++x) {
                EXPECT_TRUE(k.get(x, x));
                for (unsigned y = 0; y < (1U << n); ++y) {
                    const int d = std::popcount(x ^ y);
                    if (d >= 1 && d <= 2 * t) {
                        ASSERT_FALSE(k.get(x, y));
                    }
                }
            }
        }
    }
}

TEST(KleitmanMatrix, MatchesMultilinearPolynomial) {
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; 2 * t <= n; ++t) {
            const F2Matrix m = build_kleitman_matrix(n, t);
            for (unsigned x = 0; x < (1U << n); ++x) {
                for (unsigned y = 0; y < (1U << n); ++y) ASSERT_EQ(m.get(x, y), polynomial_entry(x, y, n, t));
            }
        }
    }
}

TEST(KleitmanMatrix, Caps) {
    EXPECT_THROW(build_kleitman_matrix(kMaxClpDimension + 1, 1), ResourceError);
    EXPECT_THROW(build_kleitman_matrix(0, 1), DomainError);
}

TEST(DivisibilityMatrix, SpecExamples) {
    const F2Matrix four = build_divisibility_matrix(4, 2);
    const F2Matrix two = build_divisibility_matrix(4, 1);
    for (unsigned x = 0; x < 16; ++x) {
        EXPECT_TRUE(four.get(x, x));
        for (unsigned y = 0; y < 16; ++y) {
            const int d = std::popcount(x ^ y);
            EXPECT_EQ(four.get(x, y), d == 0 || d == 4);
            EXPECT_EQ(two.get(x, y), d % 2 == 0);
        }
    }
    EXPECT_THROW(build_divisibility_matrix(7, 3), DomainError);
    EXPECT_THROW(build_divisibility_matrix(8, 0), DomainError);
}

TEST(F2Rank, SpecExamples) {
    EXPECT_EQ(f2_rank(identity(8)), 8U);
    F2Matrix ones(8, 8);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) ones.set(r, c, true);
    }
    EXPECT_EQ(f2_rank(ones), 1U);
    EXPECT_LE(f2_rank(build_kleitman_matrix(6, 1)), 14U);
}

TEST(F2Rank, MatchesReferenceOnRandomMatrices) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 150;
        const std::size_t cols = 1 + rng() % 150;
        const unsigned density = 1 + rng() % 7;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % density == 0);
        }
        const std::size_t rank = f2_rank(m);
        ASSERT_EQ(rank, reference_rank(m)) << trial;
        ASSERT_LE(rank, std::min(rows, cols));
    }
}

TEST(F2Rank, FrozenKleitmanRanks) {
    // Computed once by the reference elimination above.
    EXPECT_EQ(f2_rank(build_kleitman_matrix(8, 2)), 46U);
    EXPECT_EQ(reference_rank(build_kleitman_matrix(6, 1)), f2_rank(build_kleitman_matrix(6, 1)));
}

TEST(F2Matrix, PrincipalMinor) {
    const F2Matrix m = build_kleitman_matrix(3, 1);
    EXPECT_TRUE(m.principal_minor({0, 1, 2, 4}).is_identity());
    EXPECT_TRUE(m.principal_minor({0, 1}).is_identity());
    EXPECT_FALSE(m.principal_minor({0, 7}).is_identity());
}

TEST(Clp, RankBelowDegreeBound) {
    for (int n = 1; n <= 10; ++n) {
        for (int t = 0; t <= 3 && 2 * t <= n; ++t) {
            ASSERT_LE(f2_rank(build_kleitman_matrix(n, t)), clp_degree_bound(n, 2 * t)) << n << " " << t;
        }
        for (int k = 1; (1 << k) <= n; ++k) {
            ASSERT_LE(f2_rank(build_divisibility_matrix(n, k)), divisibility_bound(n, k)) << n << " " << k;
        }
    }
}

TEST(Clp, OracleWitnessIsAnIdentityMinor) {
    for (int n = 2; n <= 10; ++n) {
        for (int t = 1; t <= 3 && 2 * t < n; ++t) {
            const BoundReport oracle = oracle_exact(n, DistanceSet::upto(n, 2 * t));
            const auto& family = std::get<FamilyWitness>(oracle.witness).family;
            std::vector<std::size_t> indices(family.vectors.begin(), family.vectors.end());
            const F2Matrix m = build_kleitman_matrix(n, t);
            ASSERT_TRUE(m.principal_minor(indices).is_identity()) << n << " " << t;
            ASSERT_LE(family.size(), f2_rank(m));
        }
    }
}

TEST(Clp, DivisibilityBoundIsSound) {
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; (1 << k) <= n; ++k) {
            const DistanceSet allowed = DistanceSet::not_divisible(n, k);
            ASSERT_LE(oracle_exact(n, allowed).value, divisibility_bound(n, k)) << n << " " << k;
        }
    }
}

TEST(DivisibilityBound, SpecExamples) {
    EXPECT_EQ(divisibility_bound(4, 1), 2);
    EXPECT_EQ(divisibility_bound(8, 2), 18);
    EXPECT_EQ(divisibility_bound(16, 3), 1394);
    EXPECT_THROW(divisibility_bound(3, 2), DomainError);
}

TEST(ClpReports, CarryRankAndBound) {
    const BoundReport kleitman = clp_rank_report(8, 2);
    EXPECT_EQ(kleitman.method, Method::ClpRank);
    EXPECT_EQ(kleitman.value, 46);
    EXPECT_EQ(std::get<RankWitness>(kleitman.witness).degree_bound, clp_degree_bound(8, 4));
    const BoundReport divisibility = divisibility_rank_report(8, 2);
    EXPECT_EQ(divisibility.allowed, DistanceSet::not_divisible(8, 2));
    EXPECT_LE(divisibility.value, 18);
    EXPECT_EQ(divisibility_form_report(8, 2).value, 18);
    EXPECT_THROW(clp_rank_report(4, 3), DomainError);
}

}  // namespace
}  // namespace ksb
