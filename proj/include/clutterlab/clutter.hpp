#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clutterlab/graph.hpp"

namespace clutterlab {

/// Uniform clutter: a set of d-subsets of {0..n-1}, kept sorted in the
/// lexicographic order of their ascending member sequences.
struct Clutter {
    int n = 0;
    int d = 0;
    std::vector<VertexSet> edges;

    Clutter() = default;
    Clutter(int ground, int uniformity) : n(ground), d(uniformity) {}
    Clutter(int ground, int uniformity, std::vector<VertexSet> edge_list);

    bool has_edge(const VertexSet& e) const;
    size_t size() const { return edges.size(); }
    bool empty_edges() const { return edges.empty(); }

    /// Stable digest of (n, d, canonical edge list); used to pin certificates
    /// to their source clutter.
    uint64_t canonical_hash() const;
};

/// 𝒞_r(G): the (r+1)-uniform clutter of vertex subsets inducing connected
/// subgraphs.
Clutter connected_clutter(const Graph& g, int r);

/// Same ground set, edges are exactly the d-subsets that are not edges.
Clutter complement_clutter(const Clutter& c);

/// sigma together with every v whose extension sigma+{v} is an edge.
/// sigma must have size d-1.
VertexSet closed_neighborhood(const Clutter& c, const VertexSet& sigma);

/// Every d-subset of w is an edge; subsets of size < d are cliques by
/// convention.
bool is_clique(const Clutter& c, const VertexSet& w);

/// All simplicial maximal subedges: (d-1)-subsets sigma of existing edges
/// with N[sigma] != sigma and N[sigma] a clique. Returned in lex order.
std::vector<VertexSet> simplicial_maximal_subedges(const Clutter& c);

/// Edges not containing sigma. sigma must have size d-1.
Clutter delete_subedge(const Clutter& c, const VertexSet& sigma);

struct EliminationCertificate {
    std::vector<VertexSet> steps;
};

enum class SearchOutcome { found, exhausted, refuted };

struct SearchResult {
    SearchOutcome outcome;
    std::optional<EliminationCertificate> certificate;
    uint64_t expansions = 0;
};

enum class SearchStrategy { greedy, backtracking };

/// Searches for an elimination order reducing c to the empty clutter.
/// greedy follows the lex-least simplicial subedge and cannot refute (a dead
/// end deeper than the root reports `exhausted`). backtracking explores the
/// full choice tree with a visited-state memo; `refuted` is reported only on
/// complete exhaustion of the tree within budget.
SearchResult find_elimination_order(const Clutter& c, SearchStrategy strategy,
                                    uint64_t budget = 10'000'000);

struct CertificateViolation {
    int step;  // -1 means the final-emptiness check
    std::string reason;
};

/// Replays the certificate; checks every step is a simplicial maximal
/// subedge of the current clutter and that the final clutter is empty.
std::optional<CertificateViolation> verify_certificate(const Clutter& c,
                                                       const EliminationCertificate& cert);

/// Elimination certificate for 𝒞_r(K_n), built by lex-peeling the subedges
/// through the smallest vertex and recursing on the rest.
EliminationCertificate elim_complete(int n, int r);

/// Elimination certificate for 𝒞_r(C_n): peel the arcs through vertex 0 and
/// both its neighbors, take the two end arcs, then treat the remaining path.
EliminationCertificate elim_cycle(int n, int r);

/// Elimination certificate for 𝒞_r(g) where g is a block graph: repeatedly
/// peel a non-cut vertex of a leaf block.
EliminationCertificate elim_block_graph(const Graph& g, int r);

struct ConeEliminationFailure {
    std::string reason;
};

/// Cone sweep: emits (d-1)-subsets, each containing b, each
/// simplicial in the successively deleted clutter, after which no edge of
/// the residual clutter contains b. Hypotheses: every d-subset of b+apex is
/// an edge of c, and every edge containing b lies inside b+apex.
std::variant<std::vector<VertexSet>, ConeEliminationFailure> eliminate_cone(
    const Clutter& c, const VertexSet& b, const VertexSet& apex);

/// Partition e = B ⊎ D with gbar[e] = gbar[B] ∨ gbar[D], gbar[D] complete,
/// x in B, and D maximal (reduced form). Preconditions: x in e, x simplicial
/// in gbar, gbar[e] a nontrivial join.
std::pair<VertexSet, VertexSet> reduced_form(const Graph& gbar, const VertexSet& e, int x);

enum class IsoOutcome { isomorphic, distinct, exhausted };

/// Brute-force relabeling equivalence, restricted to vertices that appear in
/// at least one edge. Intended for supports of size <= 10; the budget caps
/// the number of partial assignments explored.
IsoOutcome clutters_equal_up_to_relabeling(const Clutter& a, const Clutter& b,
                                           uint64_t budget = 50'000'000);

}  // namespace clutterlab
