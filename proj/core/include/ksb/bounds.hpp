#pragma once

#include "ksb/distance_set.hpp"
#include "ksb/report.hpp"
#include "ksb/spectrum.hpp"
#include "ksb/weights.hpp"

#include <optional>

namespace ksb {

/// Inertia bound: min(n_{>=0}, n_{<=0}) of the spectrum of sum_k f(k) M_{n,k},
/// zero eigenvalues counted on both sides. Throws PreconditionError if the
/// support of f meets L, and DomainError on a dimension mismatch.
BoundReport cvetkovic_bound(int n, const DistanceSet& allowed, const WeightScheme& f);

/// Sum_{i<=t} C(n,i) for d = 2t; 2 Sum_{i<=t} C(n-1,i) for d = 2t+1.
/// Requires 1 <= d < n.
BoundReport kleitman_closed_form(int n, int d);

/// C(n, t-s) + 2 Sum_{i<t-s} C(n,i). Requires 0 <= s < t and 2t < n.
BoundReport consecutive_closed_form(int n, int s, int t);

/// 2 when every member of L is odd; nothing otherwise.
std::optional<BoundReport> parity_bound(const DistanceSet& allowed);

/// 1 + |L| Sum_{i<=c} C(n,i) where c counts the even members of L.
BoundReport frankl_wilson_form(int n, const DistanceSet& allowed);

/// Picks the weight scheme matching L when one exists: kleitman-even for
/// {1..2t}, kleitman-odd for {1..2t+1}, consecutive for {2s+1..2t}.
std::optional<WeightScheme> matching_scheme(const DistanceSet& allowed);

}  // namespace ksb
