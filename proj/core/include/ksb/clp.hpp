#pragma once

#include "ksb/bigint.hpp"
#include "ksb/family.hpp"
#include "ksb/report.hpp"

#include <cstdint>
#include <vector>

namespace ksb {

inline constexpr int kMaxClpDimension = 13;

/// Dense matrix over F_2 with bitset rows.
class F2Matrix {
public:
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value);

    /// Principal submatrix on the given indices.
    F2Matrix principal_minor(const std::vector<std::size_t>& indices) const;

    bool is_identity() const;

private:
    friend std::size_t f2_rank(const F2Matrix& m);

    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

/// 2 Sum_{i<=floor(d/2)} C(n,i). Requires 0 <= d <= n.
BigInt clp_degree_bound(int n, int d);

/// Entry (x, y) = C(d(x,y) - 1, 2t) mod 2. Requires 0 <= t, n <= kMaxClpDimension.
F2Matrix build_kleitman_matrix(int n, int t);

/// Entry (x, y) = prod_{j<k} (1 - C(|x-y|, 2^j)) mod 2, the binomials reduced
/// by Lucas. Requires k >= 1, 2^k <= n <= kMaxClpDimension.
F2Matrix build_divisibility_matrix(int n, int k);

/// Rank over F_2 by row reduction.
std::size_t f2_rank(const F2Matrix& m);

/// 2 Sum_{i <= 2^{k-1}-1} C(n,i). Requires k >= 1 and n >= 2^k.
BigInt divisibility_bound(int n, int k);

/// Rank bound for L = {1..2t}: value = rank of build_kleitman_matrix(n, t).
BoundReport clp_rank_report(int n, int t);
/// Rank bound for L = non-multiples of 2^k: value = rank of the divisibility matrix.
BoundReport divisibility_rank_report(int n, int k);
/// Closed-form bound for L = non-multiples of 2^k.
BoundReport divisibility_form_report(int n, int k);

}  // namespace ksb
