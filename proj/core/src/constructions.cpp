#include "ksb/constructions.hpp"

#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ksb {
namespace {

void check_size(const char* what, const BigInt& size) {
    if (size > static_cast<unsigned long>(kMaxConstructionSize)) {
        throw ResourceError(std::string(what) + ": family of size " + to_string(size) + " exceeds the cap " +
                            std::to_string(kMaxConstructionSize));
    }
}

// All vectors of weight <= r on the low `bits` coordinates.
std::vector<BinaryVector> low_weight_vectors(int bits, int r) {
    std::vector<BinaryVector> out{0};
    for (int w = 1; w <= r; ++w) {
        // Gosper's hack over w-subsets of `bits` positions.
        BinaryVector x = (BinaryVector{1} << w) - 1;
        const BinaryVector limit = BinaryVector{1} << bits;
        while (x < limit) {
            out.push_back(x);
            const BinaryVector c = x & (~x + 1);
            const BinaryVector r2 = x + c;
            x = (((r2 ^ x) >> 2) / c) | r2;
        }
    }
    return out;
}

}  // namespace

Construction hamming_ball(int n, int r, BinaryVector center) {
    if (n < 1 || n > 63 || r < 0 || r >= n) {
        throw DomainError("hamming_ball needs 0 <= r < n <= 63 (n=" + std::to_string(n) + ", r=" +
                          std::to_string(r) + ")");
    }
    if ((center >> n) != 0) throw DomainError("hamming_ball: center has bits beyond n");
    check_size("hamming_ball", binomial_prefix_sum(n, r));
    std::vector<BinaryVector> vectors = low_weight_vectors(n, r);
    for (auto& v : vectors) v ^= center;
    return {VectorFamily(n, std::move(vectors)), DistanceSet::upto(n, std::min(2 * r, n)),
            "ball r=" + std::to_string(r)};
}

Construction prism(int n, int r) {
    if (n < 2 || n > 63 || r < 0 || r >= n - 1) {
        throw DomainError("prism needs 0 <= r < n-1, n <= 63 (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                          ")");
    }
    check_size("prism", 2 * binomial_prefix_sum(n - 1, r));
    std::vector<BinaryVector> vectors;
    for (BinaryVector v : low_weight_vectors(n - 1, r)) {
        vectors.push_back(v << 1);
        vectors.push_back((v << 1) | 1U);
    }
    return {VectorFamily(n, std::move(vectors)), DistanceSet::upto(n, std::min(2 * r + 1, n)),
            "prism r=" + std::to_string(r)};
}

Construction packing_family(int n, int s, int t) {
    if (s < 0 || s >= t || 2 * t >= n || n > 63) {
        throw DomainError("packing_family needs 0 <= s < t, 2t < n <= 63 (n=" + std::to_string(n) + ", s=" +
                          std::to_string(s) + ", t=" + std::to_string(t) + ")");
    }
    const int ground = n - t;
    const BinaryVector block = ((BinaryVector{1} << t) - 1) << ground;
    std::vector<BinaryVector> chosen;
    std::vector<int> subset(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        BinaryVector v = 0;
        for (int e : subset) v |= BinaryVector{1} << e;
        const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                      [&](BinaryVector u) { return std::popcount(u & v) <= t - s - 1; });
        if (fits) {
            chosen.push_back(v);
            check_size("packing_family", static_cast<unsigned long>(chosen.size()));
        }
        // Next t-subset in colex order. Every subset of [m] comes before any
        // subset containing m, so the family for n-1 is a prefix of the one for n.
        int i = 0;
        while (i + 1 < t && subset[static_cast<std::size_t>(i)] + 1 == subset[static_cast<std::size_t>(i + 1)]) ++i;
        if (subset[static_cast<std::size_t>(i)] + 1 >= ground) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) subset[static_cast<std::size_t>(j)] = j;
    }
    for (auto& v : chosen) v |= block;
    return {VectorFamily(n, std::move(chosen)), DistanceSet::range(n, 2 * s + 1, 2 * t),
            "packing s=" + std::to_string(s) + " t=" + std::to_string(t)};
}

Construction distance_pair(const DistanceSet& allowed) {
    if (allowed.empty()) throw DomainError("distance_pair needs a nonempty distance set");
    if (allowed.n() > 63) throw DomainError("distance_pair: n exceeds 63");
    const BinaryVector far = (BinaryVector{1} << allowed.max()) - 1;
    return {VectorFamily(allowed.n(), {0, far}), allowed, "pair"};
}

bool validate_family(const Construction& construction) {
    return construction.family.n == construction.target.n() &&
           pairwise_distances_in(construction.family, construction.target);
}

BigInt lemma5_bound(int n, int i, int j) {
    if (j < 1 || i <= j || n < i) {
        throw DomainError("lemma5_bound needs i > j >= 1 and n >= i (n=" + std::to_string(n) + ", i=" +
                          std::to_string(i) + ", j=" + std::to_string(j) + ")");
    }
    BigInt value = 1 + (binomial(i, j) - 1) * (i - j);
    value += (n - i) / (i - j);
    return value;
}

BoundReport lemma5_chain(int n, int s) {
    if (s < 0 || 2 * s + 2 > n) {
        throw DomainError("lemma5_chain needs s >= 0 and 2s+2 <= n (n=" + std::to_string(n) + ", s=" +
                          std::to_string(s) + ")");
    }
    // The sets of sizes 2s+1 and 2s+2 become (2s+2)-subsets of [n+1].
    BoundReport report;
    report.n = n;
    report.allowed = DistanceSet(n, {2 * s + 1, 2 * s + 2});
    report.method = Method::Lemma5Chain;
    report.value = 1 + lemma5_bound(n + 1, 2 * s + 2, s + 1);
    report.witness = ParameterWitness{{{"s", s}}, "1 + lemma5_bound(n+1, 2s+2, s+1)"};
    return report;
}

BoundReport construction_report(const Construction& construction) {
    BoundReport report;
    report.n = construction.family.n;
    report.allowed = construction.target;
    report.method = Method::Construction;
    report.value = static_cast<unsigned long>(construction.family.size());
    report.witness = FamilyWitness{construction.family, construction.label};
    return report;
}

Construction best_construction(const DistanceSet& allowed) {
    const int n = allowed.n();
    if (n < 1 || n > 63) throw DomainError("best_construction needs 1 <= n <= 63");
    Construction best{VectorFamily(n, {0}), allowed, "single"};
    const auto consider = [&](Construction candidate) {
        if (candidate.family.size() > best.family.size()) {
            candidate.target = allowed;
            best = std::move(candidate);
        }
    };
    const auto fits = [&](BigInt size) { return size <= static_cast<unsigned long>(kMaxConstructionSize); };
    if (allowed.empty()) return best;
    consider(distance_pair(allowed));

    int prefix = 0;  // largest d with {1..d} in L
    while (prefix < n && allowed.contains(prefix + 1)) ++prefix;
    if (prefix >= 2) {
        const int r = std::min(prefix / 2, n - 1);
        if (fits(binomial_prefix_sum(n, r))) consider(hamming_ball(n, r));
    }
    if (prefix >= 1 && n >= 2) {
        const int r = std::min((prefix - 1) / 2, n - 2);
        if (fits(2 * binomial_prefix_sum(n - 1, r))) consider(prism(n, r));
    }
    // Packings only produce the even distances 2s+2, ..., 2t.
    for (int t = 1; 2 * t < n; ++t) {
        for (int s = 0; s < t; ++s) {
            bool covered = true;
            for (int l = 2 * s + 2; l <= 2 * t; l += 2) covered &= allowed.contains(l);
            if (!covered || !fits(binomial(n - t, t))) continue;
            consider(packing_family(n, s, t));
        }
    }
    return best;
}

}  // namespace ksb
