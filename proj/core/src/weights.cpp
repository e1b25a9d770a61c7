#include "ksb/weights.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <string>

namespace ksb {

WeightScheme::WeightScheme(int n, std::vector<BigInt> values, std::string label)
    : n_(n), values_(std::move(values)), label_(std::move(label)) {
    if (n < 1) throw DomainError("weight scheme: dimension must be >= 1");
    if (values_.size() != static_cast<std::size_t>(n)) {
        throw DomainError("weight scheme: expected " + std::to_string(n) + " values, got " +
                          std::to_string(values_.size()));
    }
}

const BigInt& WeightScheme::operator()(int k) const {
    static const BigInt zero = 0;
    if (k == 0) return zero;
    if (k < 0 || k > n_) throw DomainError("weight scheme: index " + std::to_string(k) + " out of range");
    return values_[static_cast<std::size_t>(k - 1)];
}

std::vector<int> WeightScheme::support() const {
    std::vector<int> out;
    for (int k = 1; k <= n_; ++k) {
        if ((*this)(k) != 0) out.push_back(k);
    }
    return out;
}

WeightScheme kleitman_even(int n, int t) {
    if (t < 1 || 2 * t >= n) {
        throw DomainError("kleitman-even needs t >= 1 and 2t < n (n=" + std::to_string(n) +
                          ", t=" + std::to_string(t) + ")");
    }
    std::vector<BigInt> values;
    for (int k = 1; k <= n; ++k) values.push_back(binomial((k - 1) / 2, t));
    return WeightScheme(n, std::move(values), "kleitman-even(t=" + std::to_string(t) + ")");
}

WeightScheme kleitman_odd(int n, int t) {
    if (t < 0 || 2 * t + 1 >= n) {
        throw DomainError("kleitman-odd needs t >= 0 and 2t+1 < n (n=" + std::to_string(n) +
                          ", t=" + std::to_string(t) + ")");
    }
    std::vector<BigInt> values;
    for (int k = 1; k <= n; ++k) values.push_back(k % 2 == 0 ? binomial(k / 2 - 1, t) : BigInt(0));
    return WeightScheme(n, std::move(values), "kleitman-odd(t=" + std::to_string(t) + ")");
}

WeightScheme consecutive_scheme(int n, int s, int t) {
    if (s < 0 || s >= t || 2 * t >= n) {
        throw DomainError("consecutive scheme needs 0 <= s < t and 2t < n (n=" + std::to_string(n) +
                          ", s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
    }
    std::vector<BigInt> values;
    for (int k = 1; k <= n; ++k) values.push_back(binomial((k - 1) / 2 - s, t - s));
    return WeightScheme(n, std::move(values),
                        "consecutive(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")");
}

WeightScheme custom_scheme(int n, std::istream& in, std::string label) {
    std::vector<BigInt> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        values.push_back(parse_bigint(line.substr(first, last - first + 1)));
    }
    return WeightScheme(n, std::move(values), std::move(label));
}

bool validate_support(const WeightScheme& f, const DistanceSet& allowed) {
    if (f.n() != allowed.n()) {
        throw DomainError("validate_support: scheme has n=" + std::to_string(f.n()) +
                          " but distance set has n=" + std::to_string(allowed.n()));
    }
    for (int l : allowed.members()) {
        if (f(l) != 0) return false;
    }
    return true;
}

}  // namespace ksb
