#pragma once

// Internal bitset branch-and-bound shared by max_clique and the oracles.

#include "ksb/clique.hpp"
#include "ksb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <vector>

namespace ksb::detail {

// Search nodes still allowed, shared by every search of one oracle call.
struct NodeBudget {
    explicit NodeBudget(long nodes) : remaining(nodes) {}
    std::atomic<long> remaining;
};

// Symmetry policy with no group: every branch removes only its own vertex.
struct NoSymmetry {
    void push(std::size_t) {}
    void pop() {}
    template <typename Remove>
    void remove_orbit(std::size_t, const std::uint64_t*, std::size_t, Remove&&) const {}
};

// Coordinate permutations of {0,1}^n that fix every chosen vector. Cells are
// the classes of coordinates on which all chosen vectors agree; two vectors
// are in one orbit iff they have the same number of ones in every cell.
class HammingSymmetry {
public:
    HammingSymmetry(int n, std::vector<std::uint64_t> vectors, const std::vector<std::uint64_t>& fixed)
        : vectors_(std::move(vectors)) {
        std::vector<std::uint64_t> cells{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        for (auto f : fixed) cells = refine(cells, f);
        stack_.push_back(std::move(cells));
        n_ = n;
    }

    // Vertex numbering is set by the search after reordering.
    void renumber(const std::vector<std::size_t>& order) {
        std::vector<std::uint64_t> out(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) out[i] = vectors_[order[i]];
        vectors_ = std::move(out);
    }

    void push(std::size_t v) { stack_.push_back(refine(stack_.back(), vectors_[v])); }
    void pop() { stack_.pop_back(); }

    template <typename Remove>
    void remove_orbit(std::size_t v, const std::uint64_t* candidates, std::size_t words, Remove&& remove) const {
        const auto& cells = stack_.back();
        if (cells.size() == static_cast<std::size_t>(n_)) return;
        const std::uint64_t x = vectors_[v];
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits != 0) {
                const std::size_t u = (w << 6) | static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const std::uint64_t y = vectors_[u];
                bool same = true;
                for (auto cell : cells) {
                    if (std::popcount(x & cell) != std::popcount(y & cell)) {
                        same = false;
                        break;
                    }
                }
                if (same) remove(u);
            }
        }
    }

private:
    static std::vector<std::uint64_t> refine(const std::vector<std::uint64_t>& cells, std::uint64_t x) {
        std::vector<std::uint64_t> out;
        out.reserve(cells.size() * 2);
        for (auto cell : cells) {
            if ((cell & x) != 0) out.push_back(cell & x);
            if ((cell & ~x) != 0) out.push_back(cell & ~x);
        }
        return out;
    }

    int n_ = 0;
    std::vector<std::uint64_t> vectors_;
    std::vector<std::vector<std::uint64_t>> stack_;
};

// Coordinate permutations of F_p^N fixing every chosen vector, with vectors
// given as digit arrays. Orbits are equal digit counts within every cell.
class DigitSymmetry {
public:
    DigitSymmetry(int dimension, int p, std::vector<std::vector<int>> vectors,
                  const std::vector<std::vector<int>>& fixed)
        : dimension_(dimension), p_(p), vectors_(std::move(vectors)) {
        std::vector<int> cells(static_cast<std::size_t>(dimension), 0);
        for (const auto& f : fixed) cells = refine(cells, f);
        stack_.push_back(std::move(cells));
    }

    void renumber(const std::vector<std::size_t>& order) {
        std::vector<std::vector<int>> out(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) out[i] = vectors_[order[i]];
        vectors_ = std::move(out);
    }

    void push(std::size_t v) { stack_.push_back(refine(stack_.back(), vectors_[v])); }
    void pop() { stack_.pop_back(); }

    template <typename Remove>
    void remove_orbit(std::size_t v, const std::uint64_t* candidates, std::size_t words, Remove&& remove) const {
        const auto& cells = stack_.back();
        const int cell_count = *std::max_element(cells.begin(), cells.end()) + 1;
        if (cell_count == dimension_) return;
        const auto signature = counts(cells, cell_count, vectors_[v]);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits != 0) {
                const std::size_t u = (w << 6) | static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (counts(cells, cell_count, vectors_[u]) == signature) remove(u);
            }
        }
    }

private:
    std::vector<int> counts(const std::vector<int>& cells, int cell_count, const std::vector<int>& x) const {
        std::vector<int> out(static_cast<std::size_t>(cell_count * p_), 0);
        for (int j = 0; j < dimension_; ++j) ++out[static_cast<std::size_t>(cells[j] * p_ + x[j])];
        return out;
    }

    std::vector<int> refine(const std::vector<int>& cells, const std::vector<int>& x) const {
        // Relabel (cell, digit) pairs densely in order of first appearance.
        std::vector<int> label(static_cast<std::size_t>(dimension_ * p_ + p_), -1);
        std::vector<int> out(cells.size());
        int next = 0;
        for (int j = 0; j < dimension_; ++j) {
            int& slot = label[static_cast<std::size_t>(cells[j] * p_ + x[j])];
            if (slot < 0) slot = next++;
            out[j] = slot;
        }
        return out;
    }

    int dimension_;
    int p_;
    std::vector<std::vector<int>> vectors_;
    std::vector<std::vector<int>> stack_;
};

// Bitset branch-and-bound in the style of BBMC: vertices are renumbered in a
// degeneracy order, candidate sets are word arrays, and each node is bounded
// by a greedy sequential colouring of its candidates. After a branch on v is
// exhausted, every vertex in v's orbit under the symmetry policy is dropped
// from the candidates as well.
template <typename Symmetry>
class CliqueSearch {
public:
    CliqueSearch(const CompatGraph& graph, std::size_t lower_bound, Symmetry symmetry = {},
                 NodeBudget* budget = nullptr)
        : vertex_count_(graph.vertex_count()),
          words_((vertex_count_ + 63) / 64),
          best_size_(lower_bound),
          symmetry_(std::move(symmetry)),
          budget_(budget) {
        order_ = degeneracy_order(graph);
        if constexpr (requires { symmetry_.renumber(order_); }) symmetry_.renumber(order_);
        adjacency_.assign(vertex_count_ * words_, 0);
        for (std::size_t i = 0; i < vertex_count_; ++i) {
            const std::size_t original = order_[i];
            for (std::size_t j = 0; j < vertex_count_; ++j) {
                if (graph.has_edge(original, order_[j])) {
                    adjacency_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                }
            }
        }
    }

    CliqueResult run() {
        if (vertex_count_ == 0) return {};
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t i = 0; i < vertex_count_; ++i) all[i >> 6] |= std::uint64_t{1} << (i & 63);
        expand(all);
        CliqueResult result;
        if (best_.empty()) return result;
        result.size = best_.size();
        for (auto i : best_) result.vertices.push_back(order_[i]);
        std::sort(result.vertices.begin(), result.vertices.end());
        return result;
    }

private:
    static std::vector<std::size_t> degeneracy_order(const CompatGraph& graph) {
        // Repeatedly peel a minimum-degree vertex; peeled vertices go last.
        const std::size_t n = graph.vertex_count();
        std::vector<std::size_t> degree(n);
        for (std::size_t v = 0; v < n; ++v) degree[v] = graph.neighbours(v).count();
        std::vector<bool> removed(n, false);
        std::vector<std::size_t> order(n);
        for (std::size_t slot = n; slot-- > 0;) {
            std::size_t pick = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
            }
            removed[pick] = true;
            order[slot] = pick;
            for (std::size_t v = 0; v < n; ++v) {
                if (!removed[v] && graph.has_edge(pick, v)) --degree[v];
            }
        }
        return order;
    }

    const std::uint64_t* row(std::size_t v) const { return adjacency_.data() + v * words_; }

    // Colours `candidates` greedily; only vertices whose colour reaches
    // `min_colour` are returned, in nondecreasing colour order.
    void colour(const std::vector<std::uint64_t>& candidates, std::size_t min_colour,
                std::vector<std::size_t>& vertices, std::vector<std::size_t>& colours) {
        vertices.clear();
        colours.clear();
        std::vector<std::uint64_t> uncoloured = candidates;
        std::vector<std::uint64_t> available(words_);
        std::size_t colour_index = 0;
        std::size_t first_word = 0;
        while (true) {
            while (first_word < words_ && uncoloured[first_word] == 0) ++first_word;
            if (first_word == words_) break;
            ++colour_index;
            std::copy(uncoloured.begin(), uncoloured.end(), available.begin());
            for (std::size_t w = first_word; w < words_; ++w) {
                while (available[w] != 0) {
                    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(available[w]));
                    const std::size_t v = (w << 6) | bit;
                    available[w] &= available[w] - 1;
                    uncoloured[w] &= ~(std::uint64_t{1} << bit);
                    const std::uint64_t* adj = row(v);
                    for (std::size_t x = w; x < words_; ++x) available[x] &= ~adj[x];
                    if (colour_index >= min_colour) {
                        vertices.push_back(v);
                        colours.push_back(colour_index);
                    }
                }
            }
        }
    }

    bool contains(const std::vector<std::uint64_t>& set, std::size_t v) const { return (set[v >> 6] >> (v & 63)) & 1U; }

    void expand(std::vector<std::uint64_t>& candidates) {
        if (budget_ && budget_->remaining.fetch_sub(1, std::memory_order_relaxed) <= 0) {
            throw ResourceError("branch-and-bound node budget exhausted");
        }
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> colours;
        const std::size_t depth = current_.size();
        const std::size_t min_colour = best_size_ >= depth ? best_size_ - depth + 1 : 1;
        colour(candidates, min_colour, vertices, colours);
        std::vector<std::uint64_t> next(words_);
        for (std::size_t idx = vertices.size(); idx-- > 0;) {
            if (depth + colours[idx] <= best_size_) return;
            const std::size_t v = vertices[idx];
            if (!contains(candidates, v)) continue;
            const std::uint64_t* adj = row(v);
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) {
                next[w] = candidates[w] & adj[w];
                any |= next[w] != 0;
            }
            current_.push_back(v);
            if (!any) {
                if (current_.size() > best_size_) {
                    best_size_ = current_.size();
                    best_ = current_;
                }
            } else {
                symmetry_.push(v);
                expand(next);
                symmetry_.pop();
            }
            current_.pop_back();
            candidates[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            symmetry_.remove_orbit(v, candidates.data(), words_, [&](std::size_t u) {
                candidates[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
            });
        }
    }

    std::size_t vertex_count_;
    std::size_t words_;
    std::vector<std::size_t> order_;
    std::vector<std::uint64_t> adjacency_;
    std::size_t best_size_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
    Symmetry symmetry_;
    NodeBudget* budget_;
};

}  // namespace ksb::detail
