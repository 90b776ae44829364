#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clutterlab/bitset.hpp"

namespace clutterlab {

/// Simple undirected graph on dense vertex indices 0..n-1.
/// Adjacency rows are bit vectors; symmetry and irreflexivity are maintained
/// by the mutators. Values are treated as immutable once built.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;
    std::vector<std::string> labels;  // empty, or length n

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices, VertexSet(vertices)) {
        if (vertices < 0) throw std::invalid_argument("negative vertex count");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj[u].test(v);
    }
    int degree(int v) const {
        check_vertex(v);
        return adj[v].count();
    }
    int edge_count() const {
        int total = 0;
        for (const auto& row : adj) total += row.count();
        return total / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            adj[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }
    std::string label(int v) const {
        check_vertex(v);
        return labels.empty() ? std::to_string(v) : labels[v];
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    }
};

Graph complement(const Graph& g);

/// Subgraph induced on s, vertices relabeled 0..|s|-1 in ascending original
/// order. Original identities are retained in the labels.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// True iff g[s] has exactly one connected component. s must be nonempty.
bool is_connected_subset(const Graph& g, const VertexSet& s);

std::vector<VertexSet> connected_components(const Graph& g);

/// Components of g[s] (as subsets of the original vertex indices).
std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& s);

/// Shortest-path edge count, or nullopt when u and v are in different
/// components.
std::optional<int> distance(const Graph& g, int u, int v);

/// A vertex is simplicial when its neighborhood induces a clique.
bool is_simplicial_vertex(const Graph& g, int v);

bool is_clique_set(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Maximum-cardinality search plus an elimination-order verification pass.
bool is_chordal_graph(const Graph& g);

/// Connected components of the complement; g is the join of the induced
/// subgraphs on the returned parts, and the list has length 1 exactly when g
/// is not a nontrivial join.
std::vector<VertexSet> join_decomposition(const Graph& g);

bool is_cut_vertex(const Graph& g, int v);

/// Replaces x by one fresh vertex per part, each adjacent to exactly that
/// part. parts must partition N(x). New vertices take indices n-1.. in part
/// order after the surviving vertices are compacted; returned labels track
/// the origins.
Graph split_vertex(const Graph& g, int x, const std::vector<VertexSet>& parts);

/// Biconnected components as vertex sets (bridges are 2-vertex blocks).
/// Isolated vertices yield no block.
std::vector<VertexSet> blocks(const Graph& g);

std::vector<int> cut_vertices(const Graph& g);

}  // namespace clutterlab
