#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcd/spectra.hpp"

namespace mcd {

using VertexId = std::uint64_t;

/// Undirected edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over vertex ids 0..vertex_count-1. Self-loops are
/// rejected on insertion; parallel edges are rejected by require_simple().
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    explicit AdjacencyGraph(VertexId vertex_count) : vertex_count_(vertex_count) {}

    /// Grows vertex_count when an endpoint is beyond it.
    void add_edge(VertexId a, VertexId b);
    void reserve_edges(std::size_t count) { edges_.reserve(count); }
    void set_vertex_count(VertexId count);

    VertexId vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Throws ValidationError on a parallel edge.
    void require_simple() const;

    /// Vertex v becomes perm[v]; perm must be a permutation of 0..n-1.
    AdjacencyGraph relabeled(std::span<const VertexId> perm) const;

private:
    VertexId vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Calls fn(a, b) for every edge of gadget `g` laid out with the hub at `hub`,
/// cycle vertices at base .. base+L-2 in cyclic order, then each spoke's
/// internal vertices in spoke order. Returns the first unused id.
template <class Fn>
VertexId for_each_gadget_edge(const HubGadget& g, VertexId hub, VertexId base, Fn&& fn) {
    const auto L = static_cast<VertexId>(g.cycle_len);
    auto cycle_vertex = [&](VertexId k) { return base + k - 1; };  // k in [1, L-1]
    fn(hub, cycle_vertex(1));
    for (VertexId k = 1; k + 1 < L; ++k) fn(cycle_vertex(k), cycle_vertex(k + 1));
    fn(cycle_vertex(L - 1), hub);
    VertexId next = base + L - 1;
    for (const auto& spoke : g.spokes) {
        const auto target = cycle_vertex(static_cast<VertexId>(spoke.attach_pos));
        VertexId prev = hub;
        for (Length k = 1; k < spoke.length; ++k) {
            fn(prev, next);
            prev = next++;
        }
        fn(prev, target);
    }
    return next;
}

/// Calls fn(a, b) for the edges of a plain cycle of `length` through `hub`.
template <class Fn>
VertexId for_each_cycle_edge(Length length, VertexId hub, VertexId base, Fn&& fn) {
    const auto L = static_cast<VertexId>(length);
    fn(hub, base);
    for (VertexId k = 0; k + 2 < L; ++k) fn(base + k, base + k + 1);
    fn(base + L - 2, hub);
    return base + L - 1;
}

/// Vertex 0 is the hub; layout as in for_each_gadget_edge with base 1.
AdjacencyGraph materialize_gadget(const HubGadget& g);

}  // namespace mcd
