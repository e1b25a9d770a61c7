#pragma once

#include "ksb/bigint.hpp"
#include "ksb/weights.hpp"

#include <vector>

namespace ksb {

inline constexpr int kMaxKrawtchoukDimension = 256;
inline constexpr int kMaxDenseVerificationDimension = 14;

/// K_k(i; n) for 0 <= k, i <= n: the eigenvalue of the distance-k matrix of
/// the n-cube on the level-i character space.
class KrawtchoukTable {
public:
    explicit KrawtchoukTable(int n);

    int n() const { return n_; }
    const BigInt& operator()(int k, int i) const {
        return values_[static_cast<std::size_t>(k) * (n_ + 1) + i];
    }

private:
    int n_;
    std::vector<BigInt> values_;
};

/// Throws DomainError for n < 1 and ResourceError above kMaxKrawtchoukDimension.
KrawtchoukTable krawtchouk_table(int n);

struct SpectrumSummary {
    int n = 0;
    std::vector<BigInt> eigenvalues;     // lambda_0 .. lambda_n
    std::vector<BigInt> multiplicities;  // C(n,0) .. C(n,n)
    BigInt count_nonneg;
    BigInt count_nonpos;
    BigInt count_zero;

    /// Sign of lambda_i as -1, 0 or +1.
    std::vector<int> signs() const;

    bool operator==(const SpectrumSummary&) const = default;
};

/// Exact spectrum of sum_k f(k) M_{n,k}: lambda_i = sum_k f(k) K_k(i; n) with
/// multiplicity C(n, i).
SpectrumSummary weighted_spectrum(int n, const WeightScheme& f);
SpectrumSummary weighted_spectrum(const KrawtchoukTable& table, const WeightScheme& f);

/// Materializes M = sum_k f(k) M_{n,k} row by row and checks M v_S =
/// lambda_{|S|} v_S entrywise for every S, where (v_S)_T = (-1)^{|S cap T|}.
/// Requires n <= kMaxDenseVerificationDimension (ResourceError otherwise) and
/// weights that fit in 64 bits (DomainError otherwise).
bool verify_fourier_eigenvectors(int n, const WeightScheme& f);

}  // namespace ksb
