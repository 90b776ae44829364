#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "clutterlab/families.hpp"
#include "clutterlab/graph.hpp"

using namespace clutterlab;

namespace {

// brute-force isomorphism oracle, n <= 8
bool iso_oracle(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.n && match; ++u)
            for (int v = u + 1; v < a.n && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// brute-force chordality oracle: no chordless induced cycle of length >= 4
bool chordal_oracle(const Graph& g) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n); ++mask) {
        if (__builtin_popcountll(mask) < 4) continue;
        VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) s.set(v);
        Graph sub = induced_subgraph(g, s);
        bool cycle_like = sub.edge_count() == sub.n && is_connected(sub);
        for (int v = 0; v < sub.n && cycle_like; ++v)
            if (sub.degree(v) != 2) cycle_like = false;
        if (cycle_like) return false;
    }
    return true;
}

Graph two_k2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

}  // namespace

TEST_CASE("complement basics") {
    CHECK(complement(complete(3)).edge_count() == 0);
    CHECK(iso_oracle(complement(cycle(4)), two_k2()));
    // C5 is self-complementary up to relabeling
    CHECK(iso_oracle(complement(cycle(5)), cycle(5)));
    // involution: exhaustive over all labeled graphs on 4 vertices, then
    // seeded samples up to 12
    for (uint64_t mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        Graph gcc = complement(complement(g));
        for (int v = 0; v < g.n; ++v) CHECK(gcc.adj[v] == g.adj[v]);
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 5 + int(rng() % 8);  // 5..12
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        Graph gcc = complement(complement(g));
        for (int v = 0; v < g.n; ++v) CHECK(gcc.adj[v] == g.adj[v]);
    }
}

TEST_CASE("subset connectivity agrees with component counting") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + int(rng() % 4);  // 3..6
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.set(v);
            bool one_part = connected_components(induced_subgraph(g, s)).size() == 1;
            CHECK(is_connected_subset(g, s) == one_part);
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph p3 = induced_subgraph(cycle(5), VertexSet(5, {0, 1, 2}));
    CHECK(p3.n == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(iso_oracle(p3, path(3)));

    Graph k3 = induced_subgraph(complete(5), VertexSet(5, {1, 3, 4}));
    CHECK(iso_oracle(k3, complete(3)));
    CHECK(k3.labels == std::vector<std::string>{"1", "3", "4"});

    // x_{1,1}, x_{1,2}, x_{2,2} of the 3x4 grid form a path
    Graph gr = grid(3, 4);
    Graph sub = induced_subgraph(gr, VertexSet(12, {0, 1, 5}));
    CHECK(iso_oracle(sub, path(3)));

    CHECK_THROWS(induced_subgraph(cycle(4), VertexSet(5, {0})));
}

TEST_CASE("connectivity of subsets") {
    CHECK_FALSE(is_connected_subset(cycle(5), VertexSet(5, {0, 2})));
    Graph k4 = complete(4);
    for (uint64_t mask = 1; mask < 16; ++mask) {
        VertexSet s(4);
        for (int v = 0; v < 4; ++v)
            if ((mask >> v) & 1) s.set(v);
        CHECK(is_connected_subset(k4, s));
    }
    // the diagonal of the 2x2 grid (a 4-cycle) is a non-edge
    CHECK_FALSE(is_connected_subset(grid(2, 2), VertexSet(4, {0, 3})));
    CHECK_THROWS(is_connected_subset(k4, VertexSet(4)));
}

TEST_CASE("connected components") {
    auto parts = connected_components(two_k2());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].count() == 2);
    CHECK(parts[1].count() == 2);
    CHECK(connected_components(cycle(6)).size() == 1);
    CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("distance") {
    CHECK(distance(cycle(6), 0, 3) == 3);
    CHECK(distance(complete(5), 1, 4) == 1);
    CHECK(distance(path(5), 0, 4) == 4);
    CHECK(distance(path(5), 2, 2) == 0);
    CHECK_FALSE(distance(two_k2(), 0, 2).has_value());
    CHECK_THROWS(distance(path(3), 0, 5));
}

TEST_CASE("simplicial vertices") {
    Graph t = random_tree_max_degree(7, 3, 11);
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == 1) CHECK(is_simplicial_vertex(t, v));
    for (int n = 4; n <= 6; ++n)
        for (int v = 0; v < n; ++v) CHECK_FALSE(is_simplicial_vertex(cycle(n), v));
    for (int v = 0; v < 5; ++v) CHECK(is_simplicial_vertex(complete(5), v));
}

TEST_CASE("chordality via MCS matches the induced-cycle scan") {
    CHECK(is_chordal_graph(random_tree_max_degree(8, 3, 5)));
    CHECK_FALSE(is_chordal_graph(cycle(4)));
    CHECK_FALSE(is_chordal_graph(grid(2, 3)));
    CHECK(is_chordal_graph(complete(6)));
    CHECK(is_chordal_graph(Graph(0)));

    // exhaustive agreement on all labeled graphs with 5 vertices, then a
    // seeded sample of larger ones
    for (uint64_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g(5);
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        CHECK(is_chordal_graph(g) == chordal_oracle(g));
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6 + int(rng() % 3);  // 6..8
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK(is_chordal_graph(g) == chordal_oracle(g));
    }
}

TEST_CASE("join decomposition") {
    CHECK(join_decomposition(complete(4)).size() == 4);
    CHECK(join_decomposition(cycle(5)).size() == 1);
    auto parts = join_decomposition(cycle(4));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].count() == 2);
    CHECK(parts[1].count() == 2);
}

TEST_CASE("cut vertices") {
    Graph star = complete_multipartite({1, 4});
    CHECK(is_cut_vertex(star, 0));
    for (int v = 1; v < 5; ++v) CHECK_FALSE(is_cut_vertex(star, v));
    for (int v = 0; v < 5; ++v) CHECK_FALSE(is_cut_vertex(cycle(5), v));
    Graph bowtie = gamma_graph(1, {2, 2});
    CHECK(is_cut_vertex(bowtie, 0));
}

TEST_CASE("split vertex") {
    Graph bowtie = gamma_graph(1, {2, 2});  // triangles {0,1,2} and {0,3,4}
    std::vector<VertexSet> parts = {VertexSet(5, {1, 2}), VertexSet(5, {3, 4})};
    Graph split = split_vertex(bowtie, 0, parts);
    CHECK(split.n == 6);
    auto comps = connected_components(split);
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) CHECK(iso_oracle(induced_subgraph(split, comp), complete(3)));

    // a single part renames the vertex and nothing else
    Graph p = path(4);
    Graph same = split_vertex(p, 1, {p.adj[1]});
    CHECK(iso_oracle(same, p));

    // path a-x-b split into singleton parts: two disjoint edges
    Graph axb = path(3);
    Graph split2 = split_vertex(axb, 1, {VertexSet(3, {0}), VertexSet(3, {2})});
    CHECK(iso_oracle(split2, two_k2()));

    CHECK_THROWS(split_vertex(axb, 1, {VertexSet(3, {0})}));  // not a partition
    CHECK_THROWS(split_vertex(axb, 1, {VertexSet(3, {0, 2}), VertexSet(3, {2})}));  // overlap
}

TEST_CASE("blocks and cut vertex detection") {
    Graph bowtie = gamma_graph(1, {2, 2});
    auto bl = blocks(bowtie);
    REQUIRE(bl.size() == 2);
    CHECK(bl[0].count() == 3);
    CHECK(bl[1].count() == 3);
    CHECK(cut_vertices(bowtie) == std::vector<int>{0});

    CHECK(blocks(cycle(5)).size() == 1);
    CHECK(blocks(path(5)).size() == 4);
    CHECK(blocks(Graph(3)).empty());
}
