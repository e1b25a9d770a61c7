#include "ksb/oracle.hpp"

#include "ksb/clique.hpp"
#include "ksb/combinatorics.hpp"
#include "ksb/errors.hpp"
#include "clique_search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace ksb {
namespace {

// A slice of the search: the members already fixed by symmetry, and the
// vertices that may still join them.
template <typename Vertex>
struct Subproblem {
    std::vector<Vertex> fixed;
    std::vector<Vertex> candidates;
};

template <typename Vertex>
struct SubproblemOutcome {
    std::size_t lower_bound = 0;           // total family size the search had to beat
    std::optional<std::vector<Vertex>> family;  // best family found above lower_bound
};

// Runs every subproblem, sharing the incumbent for pruning, and returns the
// best family. The winner is the first subproblem in order containing a
// maximum family, whatever the thread count: a search that ran with a bound
// already at the optimum is repeated with the bound just below it.
template <typename Vertex, typename Compatible, typename MakeSymmetry>
std::vector<Vertex> solve_subproblems(const std::vector<Subproblem<Vertex>>& subproblems,
                                      std::vector<Vertex> incumbent, Compatible compatible,
                                      MakeSymmetry make_symmetry, unsigned threads, detail::NodeBudget* budget) {
    const auto search = [&](const Subproblem<Vertex>& sub, std::size_t lower_bound) -> std::optional<std::vector<Vertex>> {
        const std::size_t base = sub.fixed.size();
        if (base + sub.candidates.size() <= lower_bound) return std::nullopt;
        CompatGraph graph(sub.candidates.size());
        for (std::size_t a = 0; a < sub.candidates.size(); ++a) {
            for (std::size_t b = a + 1; b < sub.candidates.size(); ++b) {
                if (compatible(sub.candidates[a], sub.candidates[b])) graph.add_edge(a, b);
            }
        }
        const std::size_t needed = lower_bound > base ? lower_bound - base : 0;
        const CliqueResult clique = detail::CliqueSearch(graph, needed, make_symmetry(sub), budget).run();
        std::vector<Vertex> family = sub.fixed;
        for (auto idx : clique.vertices) family.push_back(sub.candidates[idx]);
        if (family.size() <= lower_bound) return std::nullopt;
        return family;
    };

    std::vector<SubproblemOutcome<Vertex>> outcomes(subproblems.size());
    std::mutex mutex;
    std::atomic<std::size_t> best_size = incumbent.size();
    std::atomic<std::size_t> next = 0;
    std::atomic<bool> failed = false;
    std::exception_ptr failure;
    const auto worker = [&] {
        for (std::size_t i = next++; i < subproblems.size() && !failed; i = next++) {
            try {
                const std::size_t bound = best_size.load();
                auto found = search(subproblems[i], bound);
                outcomes[i].lower_bound = bound;
                if (found) {
                    std::lock_guard lock(mutex);
                    if (found->size() > best_size.load()) best_size = found->size();
                    outcomes[i].family = std::move(found);
                }
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    const std::size_t optimum = best_size.load();
    if (optimum == incumbent.size()) return incumbent;
    for (std::size_t i = 0; i < subproblems.size(); ++i) {
        const auto& outcome = outcomes[i];
        if (outcome.lower_bound < optimum) {
            // Searched below the optimum, so the result is this subproblem's exact maximum.
            if (outcome.family && outcome.family->size() == optimum) return *outcome.family;
            continue;
        }
        if (auto found = search(subproblems[i], optimum - 1)) return *found;
    }
    return incumbent;
}

std::vector<BinaryVector> hamming_candidates(int n, const DistanceSet& allowed, int max_distance,
                                             const std::vector<BinaryVector>& fixed, int max_weight) {
    std::vector<BinaryVector> out;
    const BinaryVector end = BinaryVector{1} << n;
    for (BinaryVector x = 0; x < end; ++x) {
        if (hamming_weight(x) > max_weight) continue;
        bool ok = true;
        for (auto f : fixed) {
            const int d = hamming_distance(x, f);
            if (d > max_distance || !allowed.contains(d)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

// Symmetry reduction: translate one endpoint of a diametral pair to 0 and
// permute coordinates so the other endpoint is 1^D 0^{n-D}; among the
// remaining members take one of largest weight and permute within the two
// blocks so it reads 1^a 0^{D-a} 1^b 0^{n-D-b}. All other members then have
// weight at most a+b and every distance is at most D.
std::vector<Subproblem<BinaryVector>> normalized_subproblems(int n, const DistanceSet& allowed) {
    std::vector<Subproblem<BinaryVector>> out;
    const auto& members = allowed.members();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
        const int diameter = *it;
        const BinaryVector far = (BinaryVector{1} << diameter) - 1;
        for (int weight = diameter; weight >= 1; --weight) {
            if (!allowed.contains(weight)) continue;
            for (int inside = std::min(weight, diameter); inside >= 0; --inside) {
                const int outside = weight - inside;
                if (outside > n - diameter) continue;
                const int to_far = diameter - inside + outside;
                if (to_far < 1 || to_far > diameter || !allowed.contains(to_far)) continue;
                const BinaryVector third = ((BinaryVector{1} << inside) - 1) |
                                           (((BinaryVector{1} << outside) - 1) << diameter);
                Subproblem<BinaryVector> sub;
                sub.fixed = {0, far, third};
                sub.candidates = hamming_candidates(n, allowed, diameter, sub.fixed, weight);
                out.push_back(std::move(sub));
            }
        }
    }
    return out;
}

// Largest |x' u y'| over x' and y' obtained from x and y by deleting
// coordinates or moving them to lower indices: a greedy matching of the
// coordinates, each capped at its own index, onto distinct positions.
int shifted_union(BinaryVector x, BinaryVector y) {
    int caps[128];
    int count = 0;
    for (int j = 0; j < 64; ++j) {
        if ((x >> j) & 1U) caps[count++] = j;
        if ((y >> j) & 1U) caps[count++] = j;
    }
    int next = 0;
    for (int i = 0; i < count; ++i) {
        if (next <= caps[i]) ++next;
    }
    return next;
}

// For L = {1..d}, down-compressions and left-shifts keep every distance at
// most d, so some maximum family is a shifted down-set. In such a family
// |x u y| <= d for all members and for everything they shift down to, and any
// family with pairwise unions at most d has pairwise distances at most d.
// The search therefore runs on the much smaller "shifted union" graph.
Subproblem<BinaryVector> diameter_subproblem(int n, int diameter) {
    Subproblem<BinaryVector> sub;
    sub.fixed = {0};
    for (BinaryVector x = 1; x < (BinaryVector{1} << n); ++x) {
        if (shifted_union(x, x) <= diameter) sub.candidates.push_back(x);
    }
    return sub;
}

std::unique_ptr<detail::NodeBudget> make_budget(const OracleOptions& options) {
    if (options.max_nodes <= 0) return nullptr;
    return std::make_unique<detail::NodeBudget>(options.max_nodes);
}

using FpCode = std::uint32_t;

FpVector fp_digits(int p, int dimension, FpCode code) {
    FpVector v(static_cast<std::size_t>(dimension));
    for (int j = 0; j < dimension; ++j) {
        v[j] = static_cast<int>(code % static_cast<FpCode>(p));
        code /= static_cast<FpCode>(p);
    }
    return v;
}

// x - y lies in (J u -J) \ {0}.
bool fp_conflicting(int p, int dimension, FpCode x, FpCode y) {
    bool in_j = true;
    bool in_minus_j = true;
    bool nonzero = false;
    const auto base = static_cast<FpCode>(p);
    for (int j = 0; j < dimension; ++j) {
        const int diff = (static_cast<int>(x % base) - static_cast<int>(y % base) + p) % p;
        x /= base;
        y /= base;
        nonzero |= diff != 0;
        in_j &= diff == 0 || diff == 1;
        in_minus_j &= diff == 0 || diff == p - 1;
    }
    return nonzero && (in_j || in_minus_j);
}

bool fp_independent(int p, int dimension, const std::vector<FpCode>& codes) {
    for (std::size_t a = 0; a < codes.size(); ++a) {
        for (std::size_t b = a + 1; b < codes.size(); ++b) {
            if (fp_conflicting(p, dimension, codes[a], codes[b])) return false;
        }
    }
    return true;
}

// {x : sum x = 0}. Nonzero members of J u -J have coordinate sums in
// +-{1..N}, which are nonzero mod p when N < p.
std::vector<FpCode> fp_hyperplane(int p, int dimension) {
    std::vector<FpCode> out;
    FpCode total = 1;
    for (int j = 0; j < dimension; ++j) total *= static_cast<FpCode>(p);
    for (FpCode code = 0; code < total; ++code) {
        const FpVector v = fp_digits(p, dimension, code);
        long sum = 0;
        for (int j = 0; j < dimension; ++j) sum += v[j];
        if (sum % p == 0) out.push_back(code);
    }
    return out;
}

// A x B in F_p^a x F_p^b: a difference lies in J u -J only if both halves do.
std::vector<FpCode> fp_product(int p, int a, const std::vector<FpCode>& first, const std::vector<FpCode>& second) {
    FpCode shift = 1;
    for (int j = 0; j < a; ++j) shift *= static_cast<FpCode>(p);
    std::vector<FpCode> out;
    for (auto y : second) {
        for (auto x : first) out.push_back(x + shift * y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact maximum for F_p^N starting from an independent seed containing 0.
std::vector<FpCode> fp_search(int p, int dimension, std::vector<FpCode> seed, unsigned threads,
                              detail::NodeBudget* budget) {
    FpCode total = 1;
    for (int j = 0; j < dimension; ++j) total *= static_cast<FpCode>(p);
    const auto compatible = [p, dimension](FpCode a, FpCode b) { return !fp_conflicting(p, dimension, a, b); };

    // Translation invariance: some maximum set contains 0.
    Subproblem<FpCode> sub;
    sub.fixed = {0};
    for (FpCode x = 1; x < total; ++x) {
        if (compatible(x, 0)) sub.candidates.push_back(x);
    }
    const auto symmetry = [p, dimension](const Subproblem<FpCode>& s) {
        std::vector<std::vector<int>> vectors;
        for (auto code : s.candidates) vectors.push_back(fp_digits(p, dimension, code));
        std::vector<std::vector<int>> fixed;
        for (auto code : s.fixed) fixed.push_back(fp_digits(p, dimension, code));
        return detail::DigitSymmetry(dimension, p, std::move(vectors), fixed);
    };
    auto family = solve_subproblems(std::vector{sub}, std::move(seed), compatible, symmetry, threads, budget);
    std::sort(family.begin(), family.end());
    return family;
}

BoundReport binary_report(int n, const DistanceSet& allowed, std::vector<BinaryVector> family) {
    BoundReport report;
    report.n = n;
    report.allowed = allowed;
    report.method = Method::Oracle;
    report.value = static_cast<unsigned long>(family.size());
    report.witness = FamilyWitness{VectorFamily(n, std::move(family)), "oracle"};
    return report;
}

}  // namespace

int oracle_max_n_from_environment() {
    if (const char* text = std::getenv("KSB_MAX_ORACLE_N")) {
        char* end = nullptr;
        const long value = std::strtol(text, &end, 10);
        if (end != text && *end == '\0' && value > 0 && value <= 63) return static_cast<int>(value);
    }
    return kDefaultOracleMaxN;
}

namespace {

// Searches for the maximum family once the arguments are validated.
BoundReport oracle_exact_unguarded(int n, const DistanceSet& allowed, const OracleOptions& options) {
    if (allowed.empty()) return binary_report(n, allowed, {0});
    const auto budget = make_budget(options);

    if (options.normalize && allowed.is_consecutive_block() && allowed.members().front() == 1) {
        const int diameter = allowed.max();
        const auto within = [diameter](BinaryVector a, BinaryVector b) { return shifted_union(a, b) <= diameter; };
        const auto no_symmetry = [](const Subproblem<BinaryVector>&) { return detail::NoSymmetry{}; };
        std::vector<BinaryVector> incumbent{0, (BinaryVector{1} << diameter) - 1};
        return binary_report(n, allowed,
                             solve_subproblems(std::vector{diameter_subproblem(n, diameter)}, std::move(incumbent),
                                               within, no_symmetry, options.threads, budget.get()));
    }

    const auto compatible = [&allowed](BinaryVector a, BinaryVector b) {
        return allowed.contains(hamming_distance(a, b));
    };
    std::vector<Subproblem<BinaryVector>> subproblems;
    std::vector<BinaryVector> incumbent;
    if (options.normalize) {
        incumbent = {0, (BinaryVector{1} << allowed.max()) - 1};
        subproblems = normalized_subproblems(n, allowed);
    } else {
        if ((std::size_t{1} << n) > kMaxCliqueVertices) {
            throw ResourceError("oracle_exact: unnormalized search is limited to 2^n <= " +
                                std::to_string(kMaxCliqueVertices) + " vertices");
        }
        incumbent = {0};
        Subproblem<BinaryVector> whole;
        for (BinaryVector x = 0; x < (BinaryVector{1} << n); ++x) whole.candidates.push_back(x);
        subproblems.push_back(std::move(whole));
    }
    const auto symmetry = [n](const Subproblem<BinaryVector>& sub) {
        return detail::HammingSymmetry(n, sub.candidates, sub.fixed);
    };
    return binary_report(n, allowed,
                         solve_subproblems(subproblems, incumbent, compatible, symmetry, options.threads, budget.get()));
}

}  // namespace

BoundReport oracle_exact(int n, const DistanceSet& allowed, const OracleOptions& options) {
    if (n < 1) throw DomainError("oracle_exact: n must be >= 1");
    if (allowed.n() != n) throw DomainError("oracle_exact: distance set dimension mismatch");
    if (n > options.max_n) {
        throw ResourceError("oracle_exact: n=" + std::to_string(n) + " exceeds the oracle cap " +
                            std::to_string(options.max_n));
    }
    try {
        return oracle_exact_unguarded(n, allowed, options);
    } catch (const ResourceError& e) {
        throw ResourceError("oracle_exact: n=" + std::to_string(n) + ", L={" + allowed.to_string() + "}: " + e.what() +
                            " (max_nodes " + std::to_string(options.max_nodes) + ")");
    }
}

BoundReport oracle_fp_exact(int p, int dimension, const OracleOptions& options) {
    if (!is_prime(static_cast<unsigned long>(std::max(p, 0)))) {
        throw DomainError("oracle_fp_exact: p must be prime, got " + std::to_string(p));
    }
    if (dimension < 0) throw DomainError("oracle_fp_exact: N must be >= 0");
    long vertex_count = 1;
    for (int j = 0; j < dimension; ++j) {
        vertex_count *= p;
        if (vertex_count > options.max_fp_vertices) {
            throw ResourceError("oracle_fp_exact: p^N exceeds the vertex cap " +
                                std::to_string(options.max_fp_vertices));
        }
    }
    const auto budget = make_budget(options);

    // Optimal families in dimensions 0..N, as codes whose base-p digit j is
    // coordinate j. Lower dimensions seed the higher ones.
    std::vector<std::vector<FpCode>> best{{0}};
    for (int m = 1; m <= dimension; ++m) {
        std::vector<FpCode> seed = best[static_cast<std::size_t>(m - 1)];
        if (m < p) {
            auto plane = fp_hyperplane(p, m);
            if (plane.size() > seed.size()) seed = std::move(plane);
        }
        for (int a = 1; a < m; ++a) {
            auto product = fp_product(p, a, best[static_cast<std::size_t>(a)], best[static_cast<std::size_t>(m - a)]);
            if (product.size() > seed.size()) seed = std::move(product);
        }
        if (!fp_independent(p, m, seed)) throw std::logic_error("oracle_fp_exact: seed family is not independent");
        try {
            best.push_back(fp_search(p, m, std::move(seed), options.threads, budget.get()));
        } catch (const ResourceError& e) {
            throw ResourceError("oracle_fp_exact: p=" + std::to_string(p) + ", N=" + std::to_string(m) + ": " +
                                e.what() + " (max_nodes " + std::to_string(options.max_nodes) + ")");
        }
    }

    const auto& codes = best.back();
    FpFamily family;
    family.p = p;
    family.dimension = dimension;
    for (auto code : codes) family.vectors.push_back(fp_digits(p, dimension, code));
    std::sort(family.vectors.begin(), family.vectors.end());

    BoundReport report;
    report.n = dimension;
    report.p = p;
    report.allowed = DistanceSet(dimension, {});
    report.method = Method::Oracle;
    report.value = static_cast<unsigned long>(codes.size());
    report.witness = FpFamilyWitness{std::move(family)};
    return report;
}

}  // namespace ksb
