#include "asr/hypergraph.hpp"

#include <algorithm>

namespace asr {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n), edges_(std::move(edges)) {
    require(n >= 0, "vertex count must be non-negative");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        require(!e.empty(), "edges must be non-empty");
        require(e.front() >= 0 && e.back() < n_, "edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    require(dup == edges_.end(), "edges must be distinct");
}

bool Hypergraph::has_isolated_vertex() const {
    std::vector<bool> covered(static_cast<std::size_t>(n_), false);
    for (const auto& e : edges_)
        for (int v : e) covered[static_cast<std::size_t>(v)] = true;
    return std::find(covered.begin(), covered.end(), false) != covered.end();
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const std::vector<int>& e) { return e.size() == 2; });
}

MonomialIdeal cover_ideal(const Hypergraph& h) {
    require(!h.has_isolated_vertex(), "isolated vertex");
    MonomialIdeal result = MonomialIdeal::unit(h.vertex_count());
    for (const auto& e : h.edges())
        result = intersect(result, PrimeSupport(e).to_ideal(h.vertex_count()));
    return result;
}

std::vector<PrimeSupport> minimal_vertex_covers(const Hypergraph& h) {
    return minimal_transversals(h.edges(), h.vertex_count());
}

namespace {

struct CycleSearch {
    const std::vector<std::vector<int>>& edges;
    std::vector<int> cycle_vertices;
    std::vector<int> cycle_edges;
    std::vector<bool> vertex_used;
    std::vector<bool> edge_used;

    bool edge_contains(int e, int v) const {
        const auto& ev = edges[static_cast<std::size_t>(e)];
        return std::binary_search(ev.begin(), ev.end(), v);
    }

    // Chosen edges must meet the chosen vertex set in exactly their own two
    // consecutive cycle vertices; adding v must not touch any earlier edge.
    bool vertex_admissible(int v) const {
        for (int e : cycle_edges)
            if (edge_contains(e, v)) return false;
        return true;
    }

    bool extend() {
        const int k = static_cast<int>(cycle_vertices.size());
        const int v_last = cycle_vertices.back();
        const int v_first = cycle_vertices.front();
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            if (edge_used[static_cast<std::size_t>(e)]) continue;
            if (!edge_contains(e, v_last)) continue;
            // Close an odd cycle of length >= 3: the edge meets the cycle in
            // exactly {v_last, v_first}.
            if (k >= 3 && k % 2 == 1 && edge_contains(e, v_first)) {
                bool clean = true;
                for (int t = 1; t + 1 < k && clean; ++t)
                    if (edge_contains(e, cycle_vertices[static_cast<std::size_t>(t)])) clean = false;
                if (clean) {
                    cycle_edges.push_back(e);
                    return true;
                }
            }
            // Extend: the edge must avoid all earlier cycle vertices.
            bool touches_earlier = false;
            for (int t = 0; t + 1 < k && !touches_earlier; ++t)
                if (edge_contains(e, cycle_vertices[static_cast<std::size_t>(t)]))
                    touches_earlier = true;
            if (touches_earlier) continue;
            for (int v : edges[static_cast<std::size_t>(e)]) {
                if (v == v_last || vertex_used[static_cast<std::size_t>(v)]) continue;
                if (!vertex_admissible(v)) continue;
                cycle_vertices.push_back(v);
                cycle_edges.push_back(e);
                vertex_used[static_cast<std::size_t>(v)] = true;
                edge_used[static_cast<std::size_t>(e)] = true;
                if (extend()) return true;
                vertex_used[static_cast<std::size_t>(v)] = false;
                edge_used[static_cast<std::size_t>(e)] = false;
                cycle_vertices.pop_back();
                cycle_edges.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

BalanceResult is_balanced(const Hypergraph& h) {
    CycleSearch search{h.edges(), {}, {},
                       std::vector<bool>(static_cast<std::size_t>(h.vertex_count()), false),
                       std::vector<bool>(h.edges().size(), false)};
    for (int v0 = 0; v0 < h.vertex_count(); ++v0) {
        search.cycle_vertices.assign(1, v0);
        search.cycle_edges.clear();
        search.vertex_used.assign(static_cast<std::size_t>(h.vertex_count()), false);
        search.vertex_used[static_cast<std::size_t>(v0)] = true;
        search.edge_used.assign(h.edges().size(), false);
        if (search.extend())
            return BalanceResult{false, BadCycle{search.cycle_vertices, search.cycle_edges}};
    }
    return BalanceResult{true, std::nullopt};
}

Hypergraph delete_vertex(const Hypergraph& h, int i) {
    require(i >= 0 && i < h.vertex_count(), "vertex index out of range");
    std::vector<std::vector<int>> kept;
    for (const auto& e : h.edges())
        if (!std::binary_search(e.begin(), e.end(), i)) kept.push_back(e);
    return Hypergraph(h.vertex_count(), std::move(kept));
}

bool is_bipartite_graph(const Hypergraph& h) {
    require(h.is_graph(), "bipartiteness is defined for graphs");
    std::vector<int> color(static_cast<std::size_t>(h.vertex_count()), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.vertex_count()));
    for (const auto& e : h.edges()) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (int s = 0; s < h.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace asr
