#include <doctest.h>

#include "clutterlab/io.hpp"
#include "clutterlab/verifier.hpp"

using namespace clutterlab;

TEST_CASE("graph JSON round trip") {
    Graph g = grid(2, 3);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    CHECK(back.labels == g.labels);
    for (int v = 0; v < g.n; ++v) CHECK(back.adj[v] == g.adj[v]);

    CHECK_THROWS(graph_from_json("{"));
    CHECK_THROWS(graph_from_json(R"({"edges": []})"));
    CHECK_THROWS(graph_from_json(R"({"n": 3, "edges": [[0,0]]})"));
    CHECK_THROWS(graph_from_json(R"({"n": 3, "edges": [[0,3]]})"));
    CHECK_THROWS(graph_from_json(R"({"n": 3, "edges": [[0,1],[0,1]]})"));
    CHECK_THROWS(graph_from_json(R"({"n": 3, "edges": [[0,1],[1,0]]})"));  // reversed duplicate
    CHECK_THROWS(graph_from_json(R"({"n": 2, "edges": [], "labels": ["a"]})"));
}

TEST_CASE("clutter JSON round trip") {
    Clutter c = connected_clutter(cycle(5), 2);
    Clutter back = clutter_from_json(clutter_to_json(c));
    CHECK(back.n == c.n);
    CHECK(back.d == c.d);
    CHECK(back.edges == c.edges);
    CHECK_THROWS(clutter_from_json(R"({"n": 4, "d": 3, "edges": [[0,1]]})"));  // wrong size
    CHECK_THROWS(clutter_from_json(R"({"n": 4, "d": 2, "edges": [[0,0]]})"));  // repeat
}

TEST_CASE("certificate JSON is pinned to its source") {
    Clutter c = connected_clutter(complete(4), 2);
    auto res = find_elimination_order(c, SearchStrategy::backtracking);
    REQUIRE(res.outcome == SearchOutcome::found);
    std::string json = certificate_to_json(c, *res.certificate);
    EliminationCertificate back = certificate_from_json(c, json);
    CHECK(back.steps == res.certificate->steps);
    CHECK_FALSE(verify_certificate(c, back).has_value());

    Clutter other = connected_clutter(complete(5), 2);
    CHECK_THROWS(certificate_from_json(other, json));  // hash mismatch
}

TEST_CASE("ideal JSON round trip") {
    MonomialIdeal i = power(connected_ideal(cycle(5), 2), 2);
    MonomialIdeal back = ideal_from_json(ideal_to_json(i));
    CHECK(back.n == i.n);
    CHECK(back.gens == i.gens);
    CHECK_THROWS(ideal_from_json(R"({"n": 2, "gens": [[1]]})"));
    CHECK_THROWS(ideal_from_json(R"({"n": 2, "gens": [[-1, 0]]})"));
}

TEST_CASE("decomposition JSON round trip") {
    CoChordalCactusInstance inst = cactus_instance("p3", 7);
    std::string json = decomposition_to_json(inst.decomposition);
    CactusDecomposition back = decomposition_from_json(json);
    CHECK(back.pieces.size() == inst.decomposition.pieces.size());
    CHECK_FALSE(validate_decomposition(inst.host_complement, back).has_value());
    CHECK_THROWS(decomposition_from_json(R"({"pieces": []})"));
}
