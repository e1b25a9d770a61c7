#pragma once

#include "ksb/bigint.hpp"
#include "ksb/distance_set.hpp"
#include "ksb/family.hpp"
#include "ksb/report.hpp"

#include <string>

namespace ksb {

inline constexpr std::size_t kMaxConstructionSize = std::size_t{1} << 22;

/// An explicit family together with the distance set it is meant to satisfy.
struct Construction {
    VectorFamily family;
    DistanceSet target;
    std::string label;
};

/// Every vector within distance r of `center`; target {1..min(2r, n)}.
/// Requires 0 <= r < n <= 63.
Construction hamming_ball(int n, int r, BinaryVector center = 0);

/// {0,1} x ball(n-1, r): coordinate 1 free, the rest within distance r of 0.
/// Target {1..min(2r+1, n)}. Requires 0 <= r < n-1.
Construction prism(int n, int r);

/// Greedy packing of t-subsets V_i of [n-t] with pairwise intersections at
/// most t-s-1, returned as indicator vectors of V_i plus {n-t+1..n}.
/// Target {2s+1..2t}. Requires 0 <= s < t and 2t < n <= 63.
Construction packing_family(int n, int s, int t);

/// Two vectors at distance max(L): the trivial family for any nonempty L.
Construction distance_pair(const DistanceSet& allowed);

bool validate_family(const Construction& construction);

/// 1 + (C(i,j) - 1)(i-j) + floor((n-i)/(i-j)). Requires i > j >= 1, n >= i.
BigInt lemma5_bound(int n, int i, int j);

/// Upper bound on f_{2s+1, 2s+2}(n) through the uniform-intersection
/// reduction: 1 + lemma5_bound(n+1, 2s+2, s+1).
BoundReport lemma5_chain(int n, int s);

BoundReport construction_report(const Construction& construction);

/// Largest valid construction this library knows for L (the trivial single
/// vector or pair, a ball, a prism or a packing).
Construction best_construction(const DistanceSet& allowed);

}  // namespace ksb
