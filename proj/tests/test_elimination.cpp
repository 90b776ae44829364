#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "clutterlab/clutter.hpp"
#include "clutterlab/families.hpp"

using namespace clutterlab;

namespace {

VertexSet vs(int n, std::initializer_list<int> members) { return VertexSet(n, members); }

Graph two_triangles() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    return g;
}

}  // namespace

TEST_CASE("certificate verification catches bad replays") {
    Clutter c5 = connected_clutter(cycle(5), 2);

    // empty certificate on a nonempty clutter: residual violation
    auto violation = verify_certificate(c5, EliminationCertificate{});
    REQUIRE(violation.has_value());
    CHECK(violation->step == -1);

    // wrong-size step
    violation = verify_certificate(c5, EliminationCertificate{{vs(5, {0})}});
    REQUIRE(violation.has_value());
    CHECK(violation->step == 0);

    // a subedge contained in no edge is not maximal
    Clutter lone(5, 3, {vs(5, {0, 1, 2})});
    violation = verify_certificate(lone, EliminationCertificate{{vs(5, {3, 4})}});
    REQUIRE(violation.has_value());
    CHECK(violation->reason == "step is not a maximal subedge");

    // a maximal subedge whose neighborhood is not a clique: in C_2(P_4),
    // N[{1,2}] = {0,1,2,3} but {0,1,3} induces no connected subgraph
    Clutter p4 = connected_clutter(path(4), 2);
    violation = verify_certificate(p4, EliminationCertificate{{vs(4, {1, 2})}});
    REQUIRE(violation.has_value());
    CHECK(violation->reason == "step is not simplicial");
}

TEST_CASE("empty clutter needs no steps") {
    Clutter empty(4, 3);
    CHECK_FALSE(verify_certificate(empty, EliminationCertificate{}).has_value());
    SearchResult res = find_elimination_order(empty, SearchStrategy::backtracking);
    CHECK(res.outcome == SearchOutcome::found);
    CHECK(res.certificate->steps.empty());
}

TEST_CASE("complete-graph certificates") {
    // base case: a single step {0..r-1}
    for (int r = 1; r <= 4; ++r) {
        EliminationCertificate cert = elim_complete(r + 1, r);
        REQUIRE(cert.steps.size() == 1);
        VertexSet expect(r + 1);
        for (int v = 0; v < r; ++v) expect.set(v);
        CHECK(cert.steps.front() == expect);
    }
    CHECK_THROWS(elim_complete(3, 0));
    CHECK_THROWS(elim_complete(2, 2));

    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r + 1 <= n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            Clutter c = connected_clutter(complete(n), r);
            CHECK_FALSE(verify_certificate(c, elim_complete(n, r)).has_value());
            // independent route: the search also certifies
            SearchResult res = find_elimination_order(c, SearchStrategy::backtracking);
            CHECK(res.outcome == SearchOutcome::found);
            CHECK_FALSE(verify_certificate(c, *res.certificate).has_value());
        }
}

TEST_CASE("cycle certificates") {
    EliminationCertificate base = elim_cycle(4, 3);
    REQUIRE(base.steps.size() == 1);
    CHECK(base.steps.front() == vs(4, {0, 1, 2}));

    CHECK(elim_cycle(3, 4).steps.empty());  // no connected 5-subsets in C_3
    CHECK_THROWS(elim_cycle(2, 2));
    CHECK_THROWS(elim_cycle(5, 1));

    for (int n = 3; n <= 8; ++n)
        for (int r = 2; r <= 4; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            Clutter c = connected_clutter(cycle(n), r);
            CHECK_FALSE(verify_certificate(c, elim_cycle(n, r)).has_value());
            SearchResult res = find_elimination_order(c, SearchStrategy::backtracking);
            CHECK(res.outcome == SearchOutcome::found);
        }
}

TEST_CASE("block-graph certificates") {
    // one block: agrees with the complete-graph case up to peel order
    for (int n = 3; n <= 6; ++n)
        for (int r = 2; r < n; ++r) {
            Clutter c = connected_clutter(complete(n), r);
            CHECK_FALSE(verify_certificate(c, elim_block_graph(complete(n), r)).has_value());
        }

    // paths
    for (int n = 2; n <= 8; ++n)
        for (int r = 2; r <= 3; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            Clutter c = connected_clutter(path(n), r);
            CHECK_FALSE(verify_certificate(c, elim_block_graph(path(n), r)).has_value());
        }

    // two triangles glued at a vertex
    Graph bowtie = gamma_graph(1, {2, 2});
    Clutter cb = connected_clutter(bowtie, 2);
    CHECK_FALSE(verify_certificate(cb, elim_block_graph(bowtie, 2)).has_value());

    // disconnected block graph
    Graph tt = two_triangles();
    Clutter ct = connected_clutter(tt, 2);
    CHECK_FALSE(verify_certificate(ct, elim_block_graph(tt, 2)).has_value());

    // random block graphs, with the search as an independent route
    for (uint64_t seed = 1; seed <= 12; ++seed)
        for (int r = 2; r <= 3; ++r) {
            Graph g = random_block_graph(9, seed);
            CAPTURE(seed);
            CAPTURE(r);
            Clutter c = connected_clutter(g, r);
            CHECK_FALSE(verify_certificate(c, elim_block_graph(g, r)).has_value());
            SearchResult res = find_elimination_order(c, SearchStrategy::backtracking);
            CHECK(res.outcome == SearchOutcome::found);
        }

    CHECK_THROWS(elim_block_graph(cycle(4), 2));  // not a block graph
    CHECK_THROWS(elim_block_graph(path(4), 1));
}

TEST_CASE("search outcomes") {
    // greedy and backtracking both certify the cone over C_4 (threshold case
    // with several simplicial choices)
    Clutter easy = connected_clutter(complete(5), 2);
    SearchResult greedy = find_elimination_order(easy, SearchStrategy::greedy);
    CHECK(greedy.outcome == SearchOutcome::found);
    CHECK_FALSE(verify_certificate(easy, *greedy.certificate).has_value());

    // the complement clutter of C_2(2K_3) is not chordal: backtracking
    // exhausts the whole tree and refutes
    Clutter blocked = complement_clutter(connected_clutter(two_triangles(), 2));
    SearchResult ref = find_elimination_order(blocked, SearchStrategy::backtracking);
    CHECK(ref.outcome == SearchOutcome::refuted);

    // greedy on the same instance must not refute unless stuck at the root
    SearchResult greedy_ref = find_elimination_order(blocked, SearchStrategy::greedy);
    CHECK(greedy_ref.outcome != SearchOutcome::found);

    // tiny budget reports exhaustion
    Clutter big = connected_clutter(complete(7), 3);
    SearchResult out = find_elimination_order(big, SearchStrategy::backtracking, 2);
    CHECK(out.outcome == SearchOutcome::exhausted);
}

namespace {

// memoless exhaustive chordality decision
bool chordal_clutter_oracle(const Clutter& c) {
    if (c.empty_edges()) return true;
    for (const VertexSet& s : simplicial_maximal_subedges(c))
        if (chordal_clutter_oracle(delete_subedge(c, s))) return true;
    return false;
}

}  // namespace

TEST_CASE("memoized search agrees with the memoless decision") {
    std::mt19937_64 rng(77);
    int refuted = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + int(rng() % 2);
        size_t want = 3 + rng() % 6;
        std::vector<VertexSet> edges;
        while (edges.size() < want) {
            std::vector<int> pool(n);
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            VertexSet e(n);
            for (int i = 0; i < 3; ++i) e.set(pool[i]);
            edges.push_back(e);
        }
        Clutter c(n, 3, edges);
        SearchResult res = find_elimination_order(c, SearchStrategy::backtracking, 100'000'000);
        REQUIRE(res.outcome != SearchOutcome::exhausted);
        bool found = res.outcome == SearchOutcome::found;
        CHECK(found == chordal_clutter_oracle(c));
        if (found)
            CHECK_FALSE(verify_certificate(c, *res.certificate).has_value());
        else
            ++refuted;
    }
    CHECK(refuted > 0);  // the sample must exercise genuine refutations
}

TEST_CASE("cone elimination") {
    // |b| = d-1: the single step is b itself
    Clutter k4 = connected_clutter(complete(4), 2);
    auto res = eliminate_cone(k4, vs(4, {0, 1}), vs(4, {2, 3}));
    auto* steps = std::get_if<std::vector<VertexSet>>(&res);
    REQUIRE(steps);
    REQUIRE(steps->size() == 1);
    CHECK(steps->front() == vs(4, {0, 1}));

    // the full 3-uniform clutter on 4 vertices, b = {0}: the sweep peels
    // {0,1} then {0,2}, after which no edge contains 0
    Clutter full = connected_clutter(complete(4), 2);
    res = eliminate_cone(full, vs(4, {0}), vs(4, {1, 2, 3}));
    steps = std::get_if<std::vector<VertexSet>>(&res);
    REQUIRE(steps);
    REQUIRE(steps->size() == 2);
    CHECK((*steps)[0] == vs(4, {0, 1}));
    CHECK((*steps)[1] == vs(4, {0, 2}));
    Clutter work = full;
    for (const auto& sigma : *steps) {
        VertexSet nb = closed_neighborhood(work, sigma);
        CHECK(nb != sigma);
        CHECK(is_clique(work, nb));
        work = delete_subedge(work, sigma);
    }
    for (const auto& e : work.edges) CHECK_FALSE(e.test(0));

    // b contained in no edge: no steps, trivially done
    Clutter sparse(5, 3, {vs(5, {1, 2, 3})});
    res = eliminate_cone(sparse, vs(5, {0, 4}), vs(5, {1, 2, 3}));
    steps = std::get_if<std::vector<VertexSet>>(&res);
    REQUIRE(steps);
    CHECK(steps->empty());

    // hypothesis violation: an edge containing b escapes the cone
    Clutter escape(5, 3, {vs(5, {0, 1, 2}), vs(5, {0, 1, 4}), vs(5, {0, 2, 4}),
                          vs(5, {1, 2, 4}), vs(5, {0, 3, 4})});
    res = eliminate_cone(escape, vs(5, {0}), vs(5, {1, 2, 4}));
    CHECK(std::get_if<ConeEliminationFailure>(&res));
}

TEST_CASE("reduced form") {
    // complete gbar[e]: everything except x moves to the complete side
    Graph k4 = complete(4);
    auto [b1, d1] = reduced_form(k4, VertexSet::full(4), 0);
    CHECK(b1 == vs(4, {0}));
    CHECK(d1 == vs(4, {1, 2, 3}));

    // star a-c-x with center c and leaf x: B = both leaves, D = the center
    Graph star = path(3);  // 0-1-2, center 1
    auto [b2, d2] = reduced_form(star, VertexSet::full(3), 2);
    CHECK(b2 == vs(3, {0, 2}));
    CHECK(d2 == vs(3, {1}));

    // K_1 joined with 2K_2: only the apex is universal
    Graph apex(5);
    apex.add_edge(0, 1);
    apex.add_edge(2, 3);
    for (int v = 0; v < 4; ++v) apex.add_edge(4, v);
    auto [b3, d3] = reduced_form(apex, VertexSet::full(5), 0);
    CHECK(d3 == vs(5, {4}));
    CHECK(b3 == vs(5, {0, 1, 2, 3}));

    CHECK_THROWS(reduced_form(k4, vs(4, {1, 2}), 0));     // x not in e
    CHECK_THROWS(reduced_form(cycle(5), VertexSet::full(5), 0));  // x not simplicial
}

TEST_CASE("clutter isomorphism up to relabeling") {
    Clutter a = connected_clutter(cycle(5), 2);
    CHECK(clutters_equal_up_to_relabeling(a, a) == IsoOutcome::isomorphic);

    // relabeled 5-cycle: 0->2->4->1->3->0
    Graph relabeled(5);
    int order[] = {0, 2, 4, 1, 3};
    for (int i = 0; i < 5; ++i) relabeled.add_edge(order[i], order[(i + 1) % 5]);
    Clutter b = connected_clutter(relabeled, 2);
    CHECK(clutters_equal_up_to_relabeling(a, b) == IsoOutcome::isomorphic);

    Clutter c = delete_subedge(a, vs(5, {0, 1}));
    CHECK(clutters_equal_up_to_relabeling(a, c) == IsoOutcome::distinct);

    // non-isomorphic with equal counts: path triples vs star triples
    Clutter p = connected_clutter(path(5), 2);
    Graph star = complete_multipartite({1, 4});
    Clutter s = connected_clutter(star, 2);
    REQUIRE(p.size() != s.size());
    CHECK(clutters_equal_up_to_relabeling(p, s) == IsoOutcome::distinct);
}
