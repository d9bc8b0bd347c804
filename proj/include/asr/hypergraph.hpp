#pragma once

#include <optional>
#include <vector>

#include "asr/decomposition.hpp"
#include "asr/monomial.hpp"

namespace asr {

/// A hypergraph on vertices {0..n-1} with distinct non-empty edges,
/// stored sorted so equality is independent of edge order.
class Hypergraph {
  public:
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    bool has_isolated_vertex() const;
    /// True when every edge has exactly two vertices.
    bool is_graph() const;

    auto operator<=>(const Hypergraph&) const = default;

  private:
    int n_;
    std::vector<std::vector<int>> edges_;
};

/// A cycle (v_1, E_1, v_2, ..., v_k, E_k) of odd length k >= 3 in which every
/// edge of the cycle contains exactly two of the cycle vertices; its incidence
/// submatrix is a row/column permutation of the forbidden odd-cycle block.
struct BadCycle {
    std::vector<int> vertices;      // v_1..v_k
    std::vector<int> edge_indices;  // E_t contains {v_t, v_{t+1}} (cyclically)
};

struct BalanceResult {
    bool balanced;
    std::optional<BadCycle> witness;  // present iff not balanced
};

/// Generators are exactly the minimal vertex covers; rejects isolated vertices.
MonomialIdeal cover_ideal(const Hypergraph& h);

/// Inclusion-minimal transversals of the edge sets.
std::vector<PrimeSupport> minimal_vertex_covers(const Hypergraph& h);

/// Depth-first search for a bad odd cycle; exponential worst case, intended
/// for desk-scale inputs.
BalanceResult is_balanced(const Hypergraph& h);

/// Keeps only the edges avoiding vertex i (same ambient vertex set).
Hypergraph delete_vertex(const Hypergraph& h, int i);

/// 2-coloring test; usable as an independent balancedness oracle for graphs.
bool is_bipartite_graph(const Hypergraph& h);

}  // namespace asr
