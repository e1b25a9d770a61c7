#pragma once

#include "ksb/bigint.hpp"
#include "ksb/distance_set.hpp"

#include <istream>
#include <string>
#include <vector>

namespace ksb {

/// Integer weights f(1), ..., f(n) for the combination sum_k f(k) M_{n,k} of
/// distance matrices of the n-cube.
class WeightScheme {
public:
    WeightScheme(int n, std::vector<BigInt> values, std::string label);

    int n() const { return n_; }
    const std::string& label() const { return label_; }
    const std::vector<BigInt>& values() const { return values_; }

    /// f(k) for 1 <= k <= n; f(0) is defined as 0 (zero diagonal).
    const BigInt& operator()(int k) const;

    /// {k : f(k) != 0}
    std::vector<int> support() const;

    bool operator==(const WeightScheme& other) const = default;

private:
    int n_;
    std::vector<BigInt> values_;
    std::string label_;
};

/// f(k) = C(floor((k-1)/2), t). Requires t >= 1 and 2t < n.
WeightScheme kleitman_even(int n, int t);

/// f(k) = C(k/2 - 1, t) for even k and 0 for odd k. Requires t >= 0 and 2t+1 < n.
WeightScheme kleitman_odd(int n, int t);

/// f(k) = C(floor((k-1)/2) - s, t - s) with the generalized binomial.
/// Requires 0 <= s < t and 2t < n.
WeightScheme consecutive_scheme(int n, int s, int t);

/// Reads one integer per nonblank line; line k holds f(k). Exactly n values
/// are required.
WeightScheme custom_scheme(int n, std::istream& in, std::string label = "custom");

/// True iff f(k) = 0 for every k in L. Throws DomainError when f and L live in
/// different dimensions.
bool validate_support(const WeightScheme& f, const DistanceSet& allowed);

}  // namespace ksb
