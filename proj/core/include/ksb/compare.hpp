#pragma once

#include "ksb/bigint.hpp"
#include "ksb/distance_set.hpp"
#include "ksb/oracle.hpp"
#include "ksb/report.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ksb {

/// Expands one grid term into distance sets:
///   diameter:A-B        {1..d} for every n in A..B and 1 <= d < n
///   diameter:A-B:d      {1..d} for every n in A..B with d < n
///   consecutive:A-B:T   {2s+1..2t} for 0 <= s < t <= T, 2t < n
///   pair:A-B:S          {2s+1, 2s+2} for 0 <= s <= S, 2s+2 <= n
///   explicit:A-B:LIST   LIST (any DistanceSet::parse form) for every n in A..B
/// A single n may be written instead of A-B. Throws DomainError on bad input.
std::vector<DistanceSet> expand_grid(std::string_view term);

inline constexpr long kDefaultCompareMaxNodes = 2'000'000;

struct CompareOptions {
    int oracle_max_n = kDefaultOracleMaxN;
    /// Search nodes allowed per row; a row that runs out gets no oracle value.
    long oracle_max_nodes = kDefaultCompareMaxNodes;
    /// Largest n for which the 2^n x 2^n rank bound is computed.
    int clp_max_n = 10;
    unsigned threads = 1;
};

struct CompareRow {
    int n = 0;
    DistanceSet allowed;
    /// Upper bounds by method; only applicable methods are present.
    std::map<Method, BigInt> bounds;
    std::optional<BigInt> oracle;
    BigInt construction;
    std::optional<BigInt> best_upper;
    bool sound = true;
};

/// Evaluates every applicable bound, the oracle within its cap and the best
/// known construction for each distance set. Rows come back sorted by
/// (n, L) with duplicates removed, whatever the thread count.
std::vector<CompareRow> run_compare(std::vector<DistanceSet> grid, const CompareOptions& options = {});

/// Methods that get a column, in column order.
const std::vector<Method>& compare_columns();

/// Header plus one line per row; members of L are separated by ';'.
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

}  // namespace ksb
