#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clutterlab/graph.hpp"

namespace clutterlab {

Graph grid(int n, int m);
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& parts);

/// Union of cliques G^{p,m_i}, each on the common core x_1..x_p plus its own
/// peripheral vertices y_{i,1}..y_{i,m_i}.
Graph gamma_graph(int p, const std::vector<int>& ms);

/// Clique K (first k vertices, of which the first kprime form K'), an
/// independent set S (next s vertices), and all K'-S edges.
Graph partially_split(int k, int s, int kprime);

/// Random labeled tree via Prüfer sequences, resampled until the degree
/// bound holds. Deterministic per seed.
Graph random_tree_max_degree(int n, int maxdeg, uint64_t seed);

/// Connected chordal graph grown by repeatedly attaching a new simplicial
/// vertex to a random clique. Deterministic per seed.
Graph random_connected_chordal(int n, uint64_t seed);

enum class PieceKind { chordal, cycle };

struct CactusPiece {
    std::pair<int, int> skeleton_edge;
    PieceKind kind = PieceKind::chordal;
    VertexSet vertices;      // empty universe means "generate"
    int size = 0;            // used when vertices are unspecified
};

struct CactusDecomposition {
    Graph skeleton;
    std::vector<CactusPiece> pieces;
};

struct DecompositionViolation {
    int clause;  // 1..4, the first violated condition
    std::string detail;
};

/// Checks the four decomposition conditions against gbar: cactus skeleton,
/// declared piece kinds, exact vertex/edge cover, and the one-vertex
/// intersection pattern.
std::optional<DecompositionViolation> validate_decomposition(const Graph& gbar,
                                                             const CactusDecomposition& d);

struct CoChordalCactusInstance {
    Graph host;               // G
    Graph host_complement;    // the assembled gbar
    CactusDecomposition decomposition;  // with concrete piece vertex sets
};

/// Assembles gbar from the plan (generating random piece contents where
/// unspecified) and returns the host graph G = complement(gbar) together
/// with the concrete decomposition. Throws when the plan cannot validate.
CoChordalCactusInstance build_co_chordal_cactus(const CactusDecomposition& plan, uint64_t seed);

/// No 4-subset induces two disjoint edges or a chordless 4-cycle.
bool is_2k2_c4_free(const Graph& g);

/// V1 independent, V2 a clique, optionally V3 = C5 joined completely to V2
/// and not at all to V1; V1-V2 edges are random per seed. The output is
/// regenerated until the 4-subset scan accepts it.
Graph generate_2k2c4_free(int n1, int n2, bool with_c5, uint64_t seed);

/// Union of the given cliques; rejects inputs whose union's computed block
/// structure differs from the given cliques.
Graph block_graph(const std::vector<VertexSet>& block_sets);

/// Every maximal 2-connected subgraph is a clique.
bool is_block_graph(const Graph& g);

/// Seed-deterministic random block graph: cliques of size 2..4 attached at
/// random existing vertices, at most max_n vertices total.
Graph random_block_graph(int max_n, uint64_t seed);

}  // namespace clutterlab
