#pragma once

#include "ksb/bigint.hpp"
#include "ksb/fp.hpp"
#include "ksb/report.hpp"

#include <vector>

namespace ksb {

/// (p-1)^N - floor((p-2)^p (p-1)^{N-p} / 2) for N >= p; (p-1)^N otherwise.
BoundReport closed_form_bound(const FpParams& params);

/// True iff cos(pi N/2 - pi S/p) > 0, decided exactly on integers.
bool cosine_positive(int p, int dimension, long coordinate_sum);

/// Splits F_p^N by the sign certificate of the eigenvalue
/// 2 prod_j 2 sin(pi v_j/p) cos(pi N/2 - pi sum v_j/p) - 2 of the signed
/// Cayley matrix: a zero coordinate or a nonpositive cosine certifies a
/// negative eigenvalue. When `refine` is set, strata of equal coordinate
/// multiset whose eigenvalue interval lies entirely below zero are also moved
/// to the negative side.
EigSignCount exact_sign_count(const FpParams& params, bool refine = false);

/// Count over v in [p-2]^p x [p-1]^{N-p} of vectors classified possibly
/// nonnegative, and the size of that box. Requires N >= p.
struct PairingCount {
    BigInt possibly_nonneg;
    BigInt box_size;
};
PairingCount pairing_box_count(const FpParams& params);

/// Number of possibly-nonnegative eigenvalues as a bound on D_{F_p}(J, N).
BoundReport spectral_bound_fp(const FpParams& params, bool refine = false);

}  // namespace ksb
