#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clutterlab/field.hpp"
#include "clutterlab/ideal.hpp"

namespace clutterlab {

/// Simplicial complex by its maximal faces. An empty facet list is the void
/// complex; a single empty facet is the empty complex {∅}.
struct SimplicialComplex {
    int n = 0;
    std::vector<VertexSet> facets;

    SimplicialComplex() = default;
    explicit SimplicialComplex(int vertices) : n(vertices) {}
    /// Keeps only maximal faces of the given list.
    SimplicialComplex(int vertices, std::vector<VertexSet> faces);

    bool is_face(const VertexSet& a) const;
};

/// ind_r(G): faces are the subsets whose induced components all have at most
/// r vertices. This is the Stanley-Reisner complex of connected_ideal(g, r).
SimplicialComplex r_independence_complex(const Graph& g, int r);

/// Stanley-Reisner complex of a squarefree ideal: faces avoid every
/// generator support.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i);

/// Reduced homology ranks; entry [d+1] is rank H~_d, starting at d = -1.
std::vector<long> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& field);

struct BettiTable {
    std::map<std::pair<int, int>, long> entries;  // (i, j) -> rank
    FieldSpec field;

    long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    /// max j-i over nonzero entries; nullopt for an empty table.
    std::optional<int> regularity() const;
    std::string to_csv() const;
};

/// Hochster's formula: beta_{i,j} collects reduced homology of the induced
/// subcomplexes of the Stanley-Reisner complex over all j-subsets.
/// Guarded to at most 18 variables.
BettiTable betti_squarefree(const MonomialIdeal& i, const FieldSpec& field);

/// Multigraded Betti numbers from upper-Koszul complexes at the lcm-lattice
/// degrees, aggregated to total degree. Works for arbitrary monomial ideals;
/// refuses when the lcm lattice exceeds the cap.
BettiTable betti_general(const MonomialIdeal& i, const FieldSpec& field,
                         size_t lattice_cap = 200000);

/// Castelnuovo-Mumford regularity of the ideal; nullopt for the zero ideal.
std::optional<int> regularity(const MonomialIdeal& i, const FieldSpec& field);

/// True iff every Betti entry sits on the single diagonal j = i + degree.
/// The zero ideal has no entries and counts as linear.
bool has_linear_resolution(const MonomialIdeal& i, const FieldSpec& field);

}  // namespace clutterlab
