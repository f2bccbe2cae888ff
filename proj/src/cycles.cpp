#include "mcd/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "mcd/errors.hpp"

namespace mcd {

namespace {

using Index = std::uint32_t;
constexpr Index kNone = std::numeric_limits<Index>::max();

struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<Index> neighbor;
    std::vector<Index> edge;

    std::size_t begin(Index v) const { return offsets[v]; }
    std::size_t end(Index v) const { return offsets[v + 1]; }
};

Csr build_csr(const AdjacencyGraph& g) {
    if (g.vertex_count() >= kNone || g.edge_count() >= kNone) {
        throw ValidationError("graph too large for cycle enumeration");
    }
    const auto n = static_cast<Index>(g.vertex_count());
    Csr csr;
    csr.offsets.assign(std::size_t{n} + 1, 0);
    for (const auto& e : g.edges()) {
        ++csr.offsets[e.u + 1];
        ++csr.offsets[e.v + 1];
    }
    for (std::size_t k = 1; k < csr.offsets.size(); ++k) csr.offsets[k] += csr.offsets[k - 1];
    csr.neighbor.resize(2 * g.edge_count());
    csr.edge.resize(2 * g.edge_count());
    std::vector<std::size_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
    Index id = 0;
    for (const auto& e : g.edges()) {
        const auto u = static_cast<Index>(e.u);
        const auto v = static_cast<Index>(e.v);
        csr.neighbor[fill[u]] = v;
        csr.edge[fill[u]++] = id;
        csr.neighbor[fill[v]] = u;
        csr.edge[fill[v]++] = id;
        ++id;
    }
    return csr;
}

// Multigraph with weighted edges; loops are kept apart since each one is a
// cycle on its own.
struct WeightedGraph {
    struct Arc {
        Index to;
        Index edge;
        Length weight;
    };
    Index vertex_count = 0;
    std::vector<std::vector<Arc>> arcs;
    std::vector<Length> loops;
    Index edge_count = 0;

    void add_edge(Index a, Index b, Length w) {
        if (a == b) {
            loops.push_back(w);
            return;
        }
        arcs[a].push_back({b, edge_count, w});
        arcs[b].push_back({a, edge_count, w});
        ++edge_count;
    }
};

WeightedGraph unit_weights(const AdjacencyGraph& g) {
    WeightedGraph w;
    w.vertex_count = static_cast<Index>(g.vertex_count());
    w.arcs.resize(w.vertex_count);
    for (const auto& e : g.edges()) {
        w.add_edge(static_cast<Index>(e.u), static_cast<Index>(e.v), 1);
    }
    return w;
}

// Cycles live in the 2-core. Within it, vertices of degree 2 only relay a
// path, so every maximal chain between branch vertices becomes one weighted
// edge. A component that is a bare cycle gets its smallest vertex as anchor
// and turns into a loop.
WeightedGraph contract(const AdjacencyGraph& g) {
    const Csr csr = build_csr(g);
    const auto n = static_cast<Index>(g.vertex_count());
    std::vector<Index> degree(n);
    std::vector<bool> removed(n, false);
    std::vector<Index> leaves;
    for (Index v = 0; v < n; ++v) {
        degree[v] = static_cast<Index>(csr.end(v) - csr.begin(v));
        if (degree[v] <= 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        const Index v = leaves.back();
        leaves.pop_back();
        if (removed[v]) continue;
        removed[v] = true;
        for (auto k = csr.begin(v); k < csr.end(v); ++k) {
            const Index w = csr.neighbor[k];
            if (!removed[w] && --degree[w] <= 1) leaves.push_back(w);
        }
    }

    std::vector<Index> anchor_id(n, kNone);
    WeightedGraph out;
    auto make_anchor = [&](Index v) {
        anchor_id[v] = out.vertex_count++;
        out.arcs.emplace_back();
    };
    for (Index v = 0; v < n; ++v) {
        if (!removed[v] && degree[v] != 2) make_anchor(v);
    }

    std::vector<bool> used(g.edge_count(), false);
    auto walk_from = [&](Index a) {
        for (auto k = csr.begin(a); k < csr.end(a); ++k) {
            if (removed[csr.neighbor[k]] || used[csr.edge[k]]) continue;
            Index edge = csr.edge[k];
            Index cur = csr.neighbor[k];
            used[edge] = true;
            Length weight = 1;
            while (anchor_id[cur] == kNone) {
                for (auto j = csr.begin(cur); j < csr.end(cur); ++j) {
                    if (removed[csr.neighbor[j]] || csr.edge[j] == edge) continue;
                    edge = csr.edge[j];
                    cur = csr.neighbor[j];
                    break;
                }
                used[edge] = true;
                ++weight;
            }
            out.add_edge(anchor_id[a], anchor_id[cur], weight);
        }
    };
    for (Index v = 0; v < n; ++v) {
        if (anchor_id[v] != kNone) walk_from(v);
    }
    for (Index v = 0; v < n; ++v) {
        if (removed[v] || anchor_id[v] != kNone) continue;
        bool untouched = false;
        for (auto k = csr.begin(v); k < csr.end(v); ++k) {
            if (!removed[csr.neighbor[k]] && !used[csr.edge[k]]) untouched = true;
        }
        if (!untouched) continue;
        make_anchor(v);
        walk_from(v);
    }
    return out;
}

// Johnson's elementary-circuit search on the symmetric digraph of `g`. Every
// undirected cycle shows up as two directed circuits through its least
// vertex, and every edge as a degenerate two-arc circuit; the sink keeps the
// orientation whose first edge id is smaller and drops the degenerate ones.
class CircuitSearch {
public:
    CircuitSearch(const WeightedGraph& g, std::int64_t cap, CycleLengthMultiset& out)
        : g_(g), cap_(cap), out_(out), blocked_(g.vertex_count, false),
          blocked_by_(g.vertex_count), component_(g.vertex_count, kNone) {}

    void run() {
        for (Length loop : g_.loops) record(loop);
        for (Index s = 0; s < g_.vertex_count; ++s) {
            if (collect_component(s) > 1) search_from(s);
        }
    }

private:
    struct Frame {
        Index v;
        std::size_t next_arc;
        bool found;
    };

    void record(Length length) {
        if (++found_ > cap_) throw CapExceededError(cap_);
        out_.add(length);
    }

    bool in_component(Index v, Index s) const { return component_[v] == s; }

    // Connected component of s in the subgraph induced by vertices >= s.
    std::size_t collect_component(Index s) {
        members_.clear();
        members_.push_back(s);
        component_[s] = s;
        for (std::size_t head = 0; head < members_.size(); ++head) {
            for (const auto& arc : g_.arcs[members_[head]]) {
                if (arc.to > s && component_[arc.to] != s) {
                    component_[arc.to] = s;
                    members_.push_back(arc.to);
                }
            }
        }
        return members_.size();
    }

    void unblock(Index u) {
        blocked_[u] = false;
        std::vector<Index> work{u};
        while (!work.empty()) {
            const Index x = work.back();
            work.pop_back();
            for (Index w : blocked_by_[x]) {
                if (blocked_[w]) {
                    blocked_[w] = false;
                    work.push_back(w);
                }
            }
            blocked_by_[x].clear();
        }
    }

    void search_from(Index s) {
        for (Index v : members_) {
            blocked_[v] = false;
            blocked_by_[v].clear();
        }
        std::vector<Frame> frames{{s, 0, false}};
        std::vector<Index> path_edges;
        std::vector<Length> path_len{0};
        blocked_[s] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& arcs = g_.arcs[f.v];
            if (f.next_arc < arcs.size()) {
                const auto& arc = arcs[f.next_arc++];
                if (!in_component(arc.to, s)) continue;
                if (arc.to == s) {
                    const Index first = path_edges.empty() ? arc.edge : path_edges.front();
                    if (first < arc.edge) record(path_len.back() + arc.weight);
                    f.found = true;
                } else if (!blocked_[arc.to]) {
                    path_edges.push_back(arc.edge);
                    path_len.push_back(path_len.back() + arc.weight);
                    blocked_[arc.to] = true;
                    frames.push_back({arc.to, 0, false});
                }
                continue;
            }
            const Frame done = f;
            if (done.found) {
                unblock(done.v);
            } else {
                for (const auto& arc : arcs) {
                    if (!in_component(arc.to, s)) continue;
                    auto& list = blocked_by_[arc.to];
                    if (std::find(list.begin(), list.end(), done.v) == list.end()) {
                        list.push_back(done.v);
                    }
                }
            }
            frames.pop_back();
            if (!frames.empty()) {
                path_edges.pop_back();
                path_len.pop_back();
                if (done.found) frames.back().found = true;
            }
        }
    }

    const WeightedGraph& g_;
    std::int64_t cap_;
    CycleLengthMultiset& out_;
    std::int64_t found_ = 0;
    std::vector<bool> blocked_;
    std::vector<std::vector<Index>> blocked_by_;
    std::vector<Index> component_;
    std::vector<Index> members_;
};

}  // namespace

CycleLengthMultiset enumerate_cycles(const AdjacencyGraph& graph,
                                     const EnumerateOptions& options) {
    if (options.cap < 1) throw ParameterError("cycle cap must be >= 1");
    graph.require_simple();
    const WeightedGraph reduced = options.contract_chains ? contract(graph) : unit_weights(graph);
    CycleLengthMultiset out;
    CircuitSearch(reduced, options.cap, out).run();
    return out;
}

CycleLengthMultiset enumerate_cycles(const AdjacencyGraph& graph, std::int64_t cap) {
    return enumerate_cycles(graph, EnumerateOptions{cap, true});
}

McdReport mcd_check(const AdjacencyGraph& graph, std::int64_t cap) {
    McdReport report;
    report.lengths = enumerate_cycles(graph, cap);
    report.collisions = collisions(report.lengths);
    report.is_mcd = report.collisions.empty();
    return report;
}

}  // namespace mcd
