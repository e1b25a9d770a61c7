#include "ksb/clp.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ksb {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& word = bits_[r * words_per_row_ + (c >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    word = value ? (word | mask) : (word & ~mask);
}

F2Matrix F2Matrix::principal_minor(const std::vector<std::size_t>& indices) const {
    F2Matrix out(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) out.set(a, b, get(indices[a], indices[b]));
    }
    return out;
}

bool F2Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c) != (r == c)) return false;
        }
    }
    return true;
}

std::size_t f2_rank(const F2Matrix& m) {
    std::vector<std::uint64_t> bits = m.bits_;
    const std::size_t stride = m.words_per_row_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        const std::size_t word = c >> 6;
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::size_t pivot = rank;
        while (pivot < m.rows_ && (bits[pivot * stride + word] & mask) == 0) ++pivot;
        if (pivot == m.rows_) continue;
        if (pivot != rank) {
            std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * stride),
                             bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride),
                             bits.begin() + static_cast<std::ptrdiff_t>(rank * stride));
        }
        const std::uint64_t* pivot_row = bits.data() + rank * stride;
        for (std::size_t r = rank + 1; r < m.rows_; ++r) {
            std::uint64_t* row = bits.data() + r * stride;
            if ((row[word] & mask) == 0) continue;
            for (std::size_t w = word; w < stride; ++w) row[w] ^= pivot_row[w];
        }
        ++rank;
    }
    return rank;
}

BigInt clp_degree_bound(int n, int d) {
    if (d < 0 || d > n) {
        throw DomainError("clp_degree_bound needs 0 <= d <= n (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                          ")");
    }
    return 2 * binomial_prefix_sum(n, d / 2);
}

namespace {

void check_dimension(const char* what, int n) {
    if (n < 1) throw DomainError(std::string(what) + ": n must be >= 1");
    if (n > kMaxClpDimension) {
        throw ResourceError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the cap " +
                            std::to_string(kMaxClpDimension));
    }
}

// Fills a 2^n x 2^n matrix whose entry depends only on the distance.
template <typename Entry>
F2Matrix distance_matrix(int n, Entry entry) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<bool> by_distance(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) by_distance[static_cast<std::size_t>(d)] = entry(d);
    F2Matrix m(size, size);
    for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
            if (by_distance[static_cast<std::size_t>(std::popcount(x ^ y))]) m.set(x, y, true);
        }
    }
    return m;
}

}  // namespace

F2Matrix build_kleitman_matrix(int n, int t) {
    check_dimension("build_kleitman_matrix", n);
    if (t < 0) throw DomainError("build_kleitman_matrix: t must be >= 0");
    return distance_matrix(n, [t](int d) {
        // C(-1, 2t) = 1
        if (d == 0) return true;
        return binomial_mod_prime(static_cast<std::uint64_t>(d - 1), static_cast<std::uint64_t>(2 * t), 2) == 1;
    });
}

F2Matrix build_divisibility_matrix(int n, int k) {
    check_dimension("build_divisibility_matrix", n);
    if (k < 1 || (1L << k) > n) {
        throw DomainError("build_divisibility_matrix needs k >= 1 and 2^k <= n (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    return distance_matrix(n, [k](int d) {
        unsigned product = 1;
        for (int j = 0; j < k; ++j) {
            product *= 1U ^ binomial_mod_prime(static_cast<std::uint64_t>(d), std::uint64_t{1} << j, 2);
        }
        return product == 1;
    });
}

BigInt divisibility_bound(int n, int k) {
    if (k < 1 || k > 30 || (1L << k) > n) {
        throw DomainError("divisibility_bound needs k >= 1 and 2^k <= n (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    return 2 * binomial_prefix_sum(n, (1L << (k - 1)) - 1);
}

BoundReport clp_rank_report(int n, int t) {
    if (t < 1 || 2 * t > n) {
        throw DomainError("clp_rank_report needs 1 <= t and 2t <= n (n=" + std::to_string(n) + ", t=" +
                          std::to_string(t) + ")");
    }
    const std::size_t rank = f2_rank(build_kleitman_matrix(n, t));
    BoundReport report;
    report.n = n;
    report.allowed = DistanceSet::upto(n, 2 * t);
    report.method = Method::ClpRank;
    report.value = static_cast<unsigned long>(rank);
    report.witness = RankWitness{report.value, clp_degree_bound(n, 2 * t), "kleitman t=" + std::to_string(t)};
    return report;
}

BoundReport divisibility_rank_report(int n, int k) {
    const BigInt degree_bound = divisibility_bound(n, k);
    const std::size_t rank = f2_rank(build_divisibility_matrix(n, k));
    BoundReport report;
    report.n = n;
    report.allowed = DistanceSet::not_divisible(n, k);
    report.method = Method::ClpRank;
    report.value = static_cast<unsigned long>(rank);
    report.witness = RankWitness{report.value, degree_bound, "divisibility k=" + std::to_string(k)};
    return report;
}

BoundReport divisibility_form_report(int n, int k) {
    BoundReport report;
    report.n = n;
    report.allowed = DistanceSet::not_divisible(n, k);
    report.method = Method::DivisibilityForm;
    report.value = divisibility_bound(n, k);
    report.witness = ParameterWitness{{{"k", k}}, "2 sum_{i<2^(k-1)} C(n,i)"};
    return report;
}

}  // namespace ksb
