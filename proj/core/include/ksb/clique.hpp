#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ksb {

inline constexpr std::size_t kMaxCliqueVertices = std::size_t{1} << 12;

/// Fixed-width bitset row over a graph's vertex set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t capacity() const { return size_; }
    void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    bool empty() const;
    std::size_t count() const;

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected loop-free graph stored as bitset rows. `semantics` says whether
/// an edge means "may coexist" (cliques are the sought families) or "may not
/// coexist" (independent sets are).
class CompatGraph {
public:
    enum class Semantics { Compatible, Conflicting };

    explicit CompatGraph(std::size_t vertex_count, Semantics semantics = Semantics::Compatible);

    std::size_t vertex_count() const { return rows_.size(); }
    Semantics semantics() const { return semantics_; }

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const { return rows_[u].contains(v); }
    const VertexSet& neighbours(std::size_t v) const { return rows_[v]; }

    /// Same vertex set with the edge relation complemented and the semantics
    /// flipped, so the sought families are unchanged.
    CompatGraph complemented() const;

private:
    Semantics semantics_;
    std::vector<VertexSet> rows_;
};

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::size_t> vertices;  // ascending
};

/// Largest set of pairwise compatible vertices (a maximum clique for
/// Compatible semantics, a maximum independent set for Conflicting) by
/// branch-and-bound with greedy colouring bounds. Only searches for sets
/// strictly larger than `lower_bound`; returns size 0 and no vertices when
/// none exists. Throws ResourceError above kMaxCliqueVertices.
CliqueResult max_clique(const CompatGraph& graph, std::size_t lower_bound = 0);

}  // namespace ksb
