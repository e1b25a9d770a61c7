#include "ksb/distance_set.hpp"

#include "ksb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace ksb {
namespace {

int parse_int(std::string_view text, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("bad integer '" + std::string(text) + "' in distance set '" +
                          std::string(context) + "'");
    }
    return value;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    return text;
}

}  // namespace

DistanceSet::DistanceSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
    if (n < 0) throw DomainError("distance set: negative dimension");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 1 || members_.back() > n)) {
        throw DomainError("distance set: members must lie in 1.." + std::to_string(n));
    }
}

DistanceSet DistanceSet::upto(int n, int d) { return range(n, 1, d); }

DistanceSet DistanceSet::range(int n, int lo, int hi) {
    std::vector<int> members;
    for (int l = lo; l <= hi; ++l) members.push_back(l);
    return DistanceSet(n, std::move(members));
}

DistanceSet DistanceSet::not_divisible(int n, int k) {
    if (k < 1 || k > 30) throw DomainError("not-div: exponent k must be in 1..30");
    const int modulus = 1 << k;
    std::vector<int> members;
    for (int l = 1; l <= n; ++l) {
        if (l % modulus != 0) members.push_back(l);
    }
    return DistanceSet(n, std::move(members));
}

DistanceSet DistanceSet::parse(std::string_view spec, int n) {
    spec = trim(spec);
    if (spec.starts_with("upto:")) return upto(n, parse_int(trim(spec.substr(5)), spec));
    if (spec.starts_with("not-div:")) {
        std::string_view rest = trim(spec.substr(8));
        if (!rest.starts_with("2^")) throw DomainError("not-div expects the form not-div:2^k");
        return not_divisible(n, parse_int(rest.substr(2), spec));
    }
    std::vector<int> members;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        std::string_view item = trim(spec.substr(0, comma));
        spec = (comma == std::string_view::npos) ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) continue;
        const auto dash = item.find('-', 1);
        if (dash == std::string_view::npos) {
            members.push_back(parse_int(item, item));
        } else {
            const int lo = parse_int(trim(item.substr(0, dash)), item);
            const int hi = parse_int(trim(item.substr(dash + 1)), item);
            if (lo > hi) throw DomainError("empty range '" + std::string(item) + "'");
            for (int l = lo; l <= hi; ++l) members.push_back(l);
        }
    }
    return DistanceSet(n, std::move(members));
}

bool DistanceSet::contains(int distance) const {
    return std::binary_search(members_.begin(), members_.end(), distance);
}

bool DistanceSet::is_consecutive_block() const {
    return !members_.empty() && members_.back() - members_.front() + 1 == static_cast<int>(members_.size());
}

bool DistanceSet::all_odd() const {
    return std::all_of(members_.begin(), members_.end(), [](int l) { return l % 2 != 0; });
}

int DistanceSet::count_even() const {
    return static_cast<int>(std::count_if(members_.begin(), members_.end(), [](int l) { return l % 2 == 0; }));
}

std::optional<int> DistanceSet::diameter() const {
    if (is_consecutive_block() && members_.front() == 1) return members_.back();
    return std::nullopt;
}

std::optional<std::pair<int, int>> DistanceSet::consecutive_parameters() const {
    if (!is_consecutive_block()) return std::nullopt;
    const int lo = members_.front();
    const int hi = members_.back();
    if (lo % 2 == 0 || hi % 2 != 0) return std::nullopt;
    return std::pair{(lo - 1) / 2, hi / 2};
}

std::optional<int> DistanceSet::divisibility_exponent() const {
    for (int k = 1; (1 << k) <= n_; ++k) {
        if (*this == not_divisible(n_, k)) return k;
    }
    return std::nullopt;
}

std::string DistanceSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i]);
    }
    return out;
}

bool DistanceSet::is_subset_of(const DistanceSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

}  // namespace ksb
