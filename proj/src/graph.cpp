#include "mcd/graph.hpp"

#include <algorithm>

#include "mcd/errors.hpp"

namespace mcd {

void AdjacencyGraph::add_edge(VertexId a, VertexId b) {
    if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    edges_.push_back({a, b});
    vertex_count_ = std::max(vertex_count_, b + 1);
}

void AdjacencyGraph::set_vertex_count(VertexId count) {
    for (const auto& e : edges_) {
        if (e.v >= count) throw ValidationError("vertex count below an edge endpoint");
    }
    vertex_count_ = count;
}

void AdjacencyGraph::require_simple() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw ValidationError("parallel edge " + std::to_string(dup->u) + " " +
                              std::to_string(dup->v));
    }
}

AdjacencyGraph AdjacencyGraph::relabeled(std::span<const VertexId> perm) const {
    if (perm.size() != vertex_count_) throw ValidationError("permutation size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (VertexId p : perm) {
        if (p >= perm.size() || seen[p]) throw ValidationError("not a permutation");
        seen[p] = true;
    }
    AdjacencyGraph out(vertex_count_);
    out.reserve_edges(edges_.size());
    for (const auto& e : edges_) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

AdjacencyGraph materialize_gadget(const HubGadget& g) {
    const auto counts = hub_counts(g);
    AdjacencyGraph graph(static_cast<VertexId>(counts.vertices_excluding_hub) + 1);
    graph.reserve_edges(static_cast<std::size_t>(counts.edges));
    for_each_gadget_edge(g, 0, 1, [&](VertexId a, VertexId b) { graph.add_edge(a, b); });
    return graph;
}

}  // namespace mcd
