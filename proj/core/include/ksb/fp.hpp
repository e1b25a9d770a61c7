#pragma once

#include "ksb/bigint.hpp"

namespace ksb {

/// F_p^N with the difference set J = {0,1}^N.
struct FpParams {
    int p = 3;
    int dimension = 1;

    /// p an odd prime, dimension >= 0. Throws DomainError otherwise.
    void validate() const;
    bool operator==(const FpParams&) const = default;
};

/// Classification of the p^N eigenvalues of the signed Cayley matrix.
struct EigSignCount {
    BigInt count_negative_certain;
    BigInt count_possibly_nonneg;
    BigInt zero_coordinate_count;

    bool operator==(const EigSignCount&) const = default;
};

}  // namespace ksb
