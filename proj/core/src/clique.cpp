#include "ksb/clique.hpp"

#include "ksb/errors.hpp"
#include "clique_search.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ksb {

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

CompatGraph::CompatGraph(std::size_t vertex_count, Semantics semantics)
    : semantics_(semantics), rows_(vertex_count, VertexSet(vertex_count)) {}

void CompatGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    rows_[u].insert(v);
    rows_[v].insert(u);
}

CompatGraph CompatGraph::complemented() const {
    CompatGraph out(vertex_count(),
                    semantics_ == Semantics::Compatible ? Semantics::Conflicting : Semantics::Compatible);
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < vertex_count(); ++v) {
            if (!has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}


CliqueResult max_clique(const CompatGraph& graph, std::size_t lower_bound) {
    if (graph.vertex_count() > kMaxCliqueVertices) {
        throw ResourceError("max_clique: " + std::to_string(graph.vertex_count()) + " vertices exceeds cap " +
                            std::to_string(kMaxCliqueVertices));
    }
    if (graph.semantics() == CompatGraph::Semantics::Conflicting) {
        return max_clique(graph.complemented(), lower_bound);
    }
    return detail::CliqueSearch<detail::NoSymmetry>(graph, lower_bound).run();
}

}  // namespace ksb
