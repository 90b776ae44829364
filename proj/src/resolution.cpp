#include "clutterlab/resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clutterlab {

SimplicialComplex::SimplicialComplex(int vertices, std::vector<VertexSet> faces) : n(vertices) {
    for (const auto& f : faces)
        if (f.universe() != n) throw std::invalid_argument("face universe mismatch");
    for (size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < faces.size() && maximal; ++j)
            if (i != j && faces[i].is_subset_of(faces[j]) &&
                !(faces[j].is_subset_of(faces[i]) && j > i))
                maximal = false;
        if (maximal) facets.push_back(faces[i]);
    }
    std::sort(facets.begin(), facets.end(), VertexSet::lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
}

bool SimplicialComplex::is_face(const VertexSet& a) const {
    for (const auto& f : facets)
        if (a.is_subset_of(f)) return true;
    return false;
}

namespace {

// facets of the complex whose faces are the masks flagged true
std::vector<VertexSet> facets_from_bitmap(const std::vector<char>& face, int n) {
    std::vector<VertexSet> facets;
    for (uint64_t mask = 0; mask < face.size(); ++mask) {
        if (!face[mask]) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((mask >> v) & 1) && face[mask | (uint64_t(1) << v)]) maximal = false;
        if (!maximal) continue;
        VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) a.set(v);
        facets.push_back(a);
    }
    return facets;
}

}  // namespace

SimplicialComplex r_independence_complex(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (g.n > 20) throw std::runtime_error("independence complex guard: more than 20 vertices");
    std::vector<char> face(uint64_t(1) << g.n, 0);
    for (uint64_t mask = 0; mask < face.size(); ++mask) {
        VertexSet a(g.n);
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) a.set(v);
        bool ok = true;
        for (const auto& comp : connected_components_within(g, a))
            if (comp.count() > r) {
                ok = false;
                break;
            }
        face[mask] = ok;
    }
    SimplicialComplex out(g.n);
    out.facets = facets_from_bitmap(face, g.n);
    std::sort(out.facets.begin(), out.facets.end(), VertexSet::lex_less);
    return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i) {
    if (!i.all_squarefree()) throw std::invalid_argument("ideal is not squarefree");
    if (i.n > 20) throw std::runtime_error("Stanley-Reisner guard: more than 20 variables");
    std::vector<uint64_t> supports;
    for (const auto& g : i.gens) {
        uint64_t m = 0;
        g.support().for_each([&](int v) { m |= uint64_t(1) << v; });
        supports.push_back(m);
    }
    std::vector<char> face(uint64_t(1) << i.n, 1);
    for (uint64_t mask = 0; mask < face.size(); ++mask)
        for (uint64_t s : supports)
            if ((s & mask) == s) {
                face[mask] = 0;
                break;
            }
    SimplicialComplex out(i.n);
    out.facets = facets_from_bitmap(face, i.n);
    std::sort(out.facets.begin(), out.facets.end(), VertexSet::lex_less);
    return out;
}

namespace {

// Reduced homology ranks of the complex whose faces are exactly the masks
// with face_flag true (closed downward, must include the empty mask unless
// void). Entry [d+1] holds rank of H~_d.
std::vector<long> homology_from_masks(const std::vector<uint64_t>& all_faces, int nverts,
                                      const FieldSpec& field) {
    if (all_faces.empty()) return {};
    std::vector<std::vector<uint64_t>> by_card(nverts + 1);
    for (uint64_t f : all_faces) by_card[__builtin_popcountll(f)].push_back(f);
    int top = nverts;
    while (top >= 0 && by_card[top].empty()) --top;
    // boundary rank from card k faces to card k-1 faces, k = 1..top
    std::vector<long> boundary_rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        if (by_card[k].empty() || by_card[k - 1].empty()) continue;
        std::sort(by_card[k - 1].begin(), by_card[k - 1].end());
        std::vector<std::vector<int8_t>> rows(by_card[k].size(),
                                              std::vector<int8_t>(by_card[k - 1].size(), 0));
        for (size_t col = 0; col < by_card[k].size(); ++col) {
            uint64_t f = by_card[k][col];
            int sign = 1;
            uint64_t bits = f;
            while (bits) {
                uint64_t low = bits & ~(bits - 1);
                uint64_t sub = f & ~low;
                auto it = std::lower_bound(by_card[k - 1].begin(), by_card[k - 1].end(), sub);
                size_t row = size_t(it - by_card[k - 1].begin());
                rows[col][row] = int8_t(sign);
                sign = -sign;
                bits &= bits - 1;
            }
        }
        boundary_rank[k] = matrix_rank(rows, field);
    }
    std::vector<long> ranks(top + 1, 0);  // index c = card, H~_{c-1}
    for (int c = 0; c <= top; ++c) {
        long faces_c = long(by_card[c].size());
        ranks[c] = faces_c - boundary_rank[c] - boundary_rank[c + 1];
    }
    return ranks;
}

}  // namespace

std::vector<long> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& field) {
    if (k.n > 20) throw std::runtime_error("homology guard: more than 20 vertices");
    if (k.facets.empty()) return {};
    std::set<uint64_t> faces;
    for (const auto& facet : k.facets) {
        uint64_t m = 0;
        facet.for_each([&](int v) { m |= uint64_t(1) << v; });
        // enumerate subsets of the facet
        uint64_t sub = m;
        while (true) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    return homology_from_masks(std::vector<uint64_t>(faces.begin(), faces.end()), k.n, field);
}

std::optional<int> BettiTable::regularity() const {
    std::optional<int> best;
    for (const auto& [key, rank] : entries) {
        if (!rank) continue;
        int diff = key.second - key.first;
        if (!best || diff > *best) best = diff;
    }
    return best;
}

std::string BettiTable::to_csv() const {
    std::ostringstream out;
    out << "i,j,rank\n";
    for (const auto& [key, rank] : entries)
        if (rank) out << key.first << "," << key.second << "," << rank << "\n";
    return out.str();
}

BettiTable betti_squarefree(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (!ideal.all_squarefree()) throw std::invalid_argument("ideal is not squarefree");
    if (ideal.n > 18) throw std::runtime_error("Hochster guard: more than 18 variables");
    BettiTable table;
    table.field = field;
    if (ideal.zero()) return table;

    int n = ideal.n;
    std::vector<uint64_t> supports;
    for (const auto& g : ideal.gens) {
        uint64_t m = 0;
        g.support().for_each([&](int v) { m |= uint64_t(1) << v; });
        supports.push_back(m);
    }
    uint64_t full = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    std::vector<char> is_face(size_t(full) + 1, 1);
    for (uint64_t mask = 0; mask <= full; ++mask)
        for (uint64_t s : supports)
            if ((s & mask) == s) {
                is_face[mask] = 0;
                break;
            }

    std::vector<uint64_t> scratch;
    for (uint64_t w = 1; w <= full; ++w) {
        int card = __builtin_popcountll(w);
        scratch.clear();
        uint64_t sub = w;
        while (true) {
            if (is_face[sub]) scratch.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & w;
        }
        if (scratch.empty()) continue;
        std::vector<long> ranks = homology_from_masks(scratch, n, field);
        for (int c = 0; c < int(ranks.size()); ++c) {
            if (!ranks[c]) continue;
            int d = c - 1;            // homological dimension
            int i = card - d - 2;     // Hochster index shift
            if (i < 0) continue;
            table.entries[{i, card}] += ranks[c];
        }
    }
    return table;
}

BettiTable betti_general(const MonomialIdeal& ideal, const FieldSpec& field, size_t lattice_cap) {
    BettiTable table;
    table.field = field;
    if (ideal.zero()) return table;
    if (ideal.n > 20) throw std::runtime_error("upper-Koszul guard: more than 20 variables");

    // close the generator degrees under componentwise max
    std::set<std::vector<int>> lattice;
    for (const auto& g : ideal.gens) lattice.insert(g.exps);
    std::vector<std::vector<int>> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : frontier)
            for (const auto& g : ideal.gens) {
                std::vector<int> join(b.size());
                for (size_t v = 0; v < b.size(); ++v) join[v] = std::max(b[v], g.exps[v]);
                if (lattice.insert(join).second) next.push_back(std::move(join));
            }
        if (lattice.size() > lattice_cap)
            throw std::runtime_error("lcm lattice exceeds configured cap");
        frontier = std::move(next);
    }

    for (const auto& b : lattice) {
        // upper-Koszul complex at b: facets are the sets of variables that a
        // dividing generator leaves slack in
        std::vector<uint64_t> facets;
        for (const auto& g : ideal.gens) {
            bool div = true;
            for (int v = 0; v < ideal.n && div; ++v)
                if (g.exps[v] > b[v]) div = false;
            if (!div) continue;
            uint64_t f = 0;
            for (int v = 0; v < ideal.n; ++v)
                if (b[v] > 0 && g.exps[v] < b[v]) f |= uint64_t(1) << v;
            facets.push_back(f);
        }
        if (facets.empty()) continue;
        std::set<uint64_t> faces;
        for (uint64_t f : facets) {
            uint64_t sub = f;
            while (true) {
                faces.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        std::vector<long> ranks = homology_from_masks(
            std::vector<uint64_t>(faces.begin(), faces.end()), ideal.n, field);
        int total_degree = 0;
        for (int v : b) total_degree += v;
        for (int c = 0; c < int(ranks.size()); ++c) {
            if (!ranks[c]) continue;
            int i = c;  // beta_{i,b} = H~_{i-1}, and ranks[c] holds H~_{c-1}
            table.entries[{i, total_degree}] += ranks[c];
        }
    }
    return table;
}

std::optional<int> regularity(const MonomialIdeal& i, const FieldSpec& field) {
    if (i.zero()) return std::nullopt;
    BettiTable table =
        i.all_squarefree() && i.n <= 18 ? betti_squarefree(i, field) : betti_general(i, field);
    return table.regularity();
}

bool has_linear_resolution(const MonomialIdeal& i, const FieldSpec& field) {
    if (i.zero()) return true;  // no Betti entries off any diagonal
    auto degree = i.degree_pure();
    if (!degree) throw std::invalid_argument("linear resolution requires a pure-degree ideal");
    auto reg = regularity(i, field);
    return reg && *reg == *degree;
}

}  // namespace clutterlab
