#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ksb {

/// The set L of allowed pairwise Hamming distances in dimension n.
/// Members are kept sorted and unique, all within 1..n.
class DistanceSet {
public:
    DistanceSet() = default;
    DistanceSet(int n, std::vector<int> members);

    /// {1, ..., d}
    static DistanceSet upto(int n, int d);
    /// {lo, ..., hi}
    static DistanceSet range(int n, int lo, int hi);
    /// Every l in 1..n with 2^k not dividing l.
    static DistanceSet not_divisible(int n, int k);

    /// Accepts a comma-separated mix of integers and ranges ("1,2,5", "1-6",
    /// "1-3,7"), or one of the keywords "upto:d" and "not-div:2^k".
    static DistanceSet parse(std::string_view spec, int n);

    int n() const { return n_; }
    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(int distance) const;
    int max() const { return members_.empty() ? 0 : members_.back(); }

    bool is_consecutive_block() const;
    bool all_odd() const;
    int count_even() const;

    /// d when the set is exactly {1..d}.
    std::optional<int> diameter() const;
    /// (s, t) when the set is exactly {2s+1, ..., 2t} with 0 <= s < t.
    std::optional<std::pair<int, int>> consecutive_parameters() const;
    /// k when the set is exactly the non-multiples of 2^k in 1..n, k >= 1.
    std::optional<int> divisibility_exponent() const;

    /// Comma-separated member list, e.g. "1,2,5"; empty string for the empty set.
    std::string to_string() const;

    bool is_subset_of(const DistanceSet& other) const;

    bool operator==(const DistanceSet& other) const = default;
    auto operator<=>(const DistanceSet& other) const = default;

private:
    int n_ = 0;
    std::vector<int> members_;
};

}  // namespace ksb
