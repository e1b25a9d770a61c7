#pragma once

#include "ksb/distance_set.hpp"
#include "ksb/report.hpp"

namespace ksb {

inline constexpr int kDefaultOracleMaxN = 12;
inline constexpr long kDefaultOracleMaxFpVertices = 2000;
inline constexpr long kDefaultOracleMaxNodes = 50'000'000;

/// Cap from KSB_MAX_ORACLE_N when set to a positive integer, else the default.
int oracle_max_n_from_environment();

struct OracleOptions {
    int max_n = kDefaultOracleMaxN;
    long max_fp_vertices = kDefaultOracleMaxFpVertices;
    /// Worker threads splitting the root subproblems. The size never depends
    /// on it; ties in the witness are resolved to the first subproblem in
    /// search order.
    unsigned threads = 1;
    /// Uses translation and coordinate-permutation symmetry to fix the first
    /// members of the family. Disabling it searches the whole cube.
    bool normalize = true;
    /// Branch-and-bound nodes allowed over the whole call before it gives
    /// up with ResourceError; 0 means no limit.
    long max_nodes = kDefaultOracleMaxNodes;
};

/// f_L(n): the largest family of length-n binary vectors with all pairwise
/// distances in L, with one maximum family as witness. ResourceError above
/// `max_n`.
BoundReport oracle_exact(int n, const DistanceSet& allowed, const OracleOptions& options = {});

/// D_{F_p}(J, N): the largest H in F_p^N with (H - H) disjoint from
/// J \ {0} and -J \ {0}, J = {0,1}^N. `p` is any prime. ResourceError when
/// p^N exceeds the vertex cap or the search runs out of nodes. The search
/// starts from the best of the hyperplane sum(x) = 0 (when N < p) and the
/// products of optimal families in lower dimensions.
BoundReport oracle_fp_exact(int p, int dimension, const OracleOptions& options = {});

}  // namespace ksb
