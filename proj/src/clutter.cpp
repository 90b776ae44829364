#include "clutterlab/clutter.hpp"

#include <algorithm>
#include <stdexcept>

namespace clutterlab {

Clutter::Clutter(int ground, int uniformity, std::vector<VertexSet> edge_list)
    : n(ground), d(uniformity), edges(std::move(edge_list)) {
    for (const auto& e : edges) {
        if (e.universe() != n) throw std::invalid_argument("edge universe mismatch");
        if (e.count() != d) throw std::invalid_argument("edge cardinality mismatch");
    }
    std::sort(edges.begin(), edges.end(), VertexSet::lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Clutter::has_edge(const VertexSet& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e, VertexSet::lex_less);
    return it != edges.end() && *it == e;
}

uint64_t Clutter::canonical_hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ull;
    };
    mix(uint64_t(n));
    mix(uint64_t(d));
    for (const auto& e : edges) h = e.hash_mix(h);
    return h;
}

Clutter connected_clutter(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    Clutter c(g.n, r + 1);
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    for_each_subset_of(all, r + 1, g.n, [&](const VertexSet& s) {
        if (is_connected_subset(g, s)) c.edges.push_back(s);
        return true;
    });
    // subsets were produced in lex order already
    return c;
}

Clutter complement_clutter(const Clutter& c) {
    Clutter out(c.n, c.d);
    std::vector<int> all(c.n);
    for (int i = 0; i < c.n; ++i) all[i] = i;
    for_each_subset_of(all, c.d, c.n, [&](const VertexSet& s) {
        if (!c.has_edge(s)) out.edges.push_back(s);
        return true;
    });
    return out;
}

VertexSet closed_neighborhood(const Clutter& c, const VertexSet& sigma) {
    if (sigma.count() != c.d - 1) throw std::invalid_argument("subedge must have size d-1");
    VertexSet nb = sigma;
    for (int v = 0; v < c.n; ++v) {
        if (sigma.test(v)) continue;
        VertexSet ext = sigma;
        ext.set(v);
        if (c.has_edge(ext)) nb.set(v);
    }
    return nb;
}

bool is_clique(const Clutter& c, const VertexSet& w) {
    if (w.count() < c.d) return true;
    bool all = true;
    for_each_subset_of(w.members(), c.d, c.n, [&](const VertexSet& s) {
        if (!c.has_edge(s)) {
            all = false;
            return false;
        }
        return true;
    });
    return all;
}

std::vector<VertexSet> simplicial_maximal_subedges(const Clutter& c) {
    std::vector<VertexSet> candidates;
    for (const auto& e : c.edges)
        e.for_each([&](int v) {
            VertexSet sigma = e;
            sigma.reset(v);
            candidates.push_back(sigma);
        });
    std::sort(candidates.begin(), candidates.end(), VertexSet::lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<VertexSet> out;
    for (const auto& sigma : candidates) {
        VertexSet nb = closed_neighborhood(c, sigma);
        if (nb != sigma && is_clique(c, nb)) out.push_back(sigma);
    }
    return out;
}

Clutter delete_subedge(const Clutter& c, const VertexSet& sigma) {
    if (sigma.count() != c.d - 1) throw std::invalid_argument("subedge must have size d-1");
    Clutter out(c.n, c.d);
    for (const auto& e : c.edges)
        if (!sigma.is_subset_of(e)) out.edges.push_back(e);
    return out;
}

}  // namespace clutterlab
