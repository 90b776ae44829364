#include <doctest.h>

#include "clutterlab/resolution.hpp"
#include "clutterlab/verifier.hpp"

using namespace clutterlab;

TEST_CASE("graph enumeration matches the known censuses") {
    CHECK(graphs_up_to_iso(1, false).size() == 1);
    CHECK(graphs_up_to_iso(2, false).size() == 2);
    CHECK(graphs_up_to_iso(3, false).size() == 4);
    CHECK(graphs_up_to_iso(4, false).size() == 11);
    CHECK(graphs_up_to_iso(5, false).size() == 34);
    CHECK(graphs_up_to_iso(6, false).size() == 156);
    CHECK(graphs_up_to_iso(2, true).size() == 1);
    CHECK(graphs_up_to_iso(3, true).size() == 2);
    CHECK(graphs_up_to_iso(4, true).size() == 6);
    CHECK(graphs_up_to_iso(5, true).size() == 21);
    CHECK(graphs_up_to_iso(6, true).size() == 112);
}

TEST_CASE("theorem id naming") {
    for (TheoremId id : all_theorems()) CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK_FALSE(theorem_from_name("T9.9").has_value());
    CHECK(all_theorems().size() == 23);
}

TEST_CASE("cactus instances respect the size budget") {
    for (const auto& shape : cactus_all_shapes())
        for (uint64_t seed : {1u, 2u, 3u}) {
            CoChordalCactusInstance inst = cactus_instance(shape, seed);
            CHECK(inst.host.n <= 11);
            CHECK(inst.host.n >= 3);
            CHECK_FALSE(
                validate_decomposition(inst.host_complement, inst.decomposition).has_value());
        }
    // determinism
    CoChordalCactusInstance a = cactus_instance("c4", 9);
    CoChordalCactusInstance b = cactus_instance("c4", 9);
    CHECK(a.host.n == b.host.n);
    for (int v = 0; v < a.host.n; ++v) CHECK(a.host.adj[v] == b.host.adj[v]);
}

TEST_CASE("named instances") {
    Graph g = counterexample_graph_7();
    CHECK(g.n == 7);
    CHECK(g.edge_count() == 11);
    CHECK(is_chordal_graph(g));

    MonomialIdeal st = sturmfels_ideal();
    CHECK(st.n == 6);
    CHECK(st.gens.size() == 8);
    CHECK(st.degree_pure() == 3);
}

TEST_CASE("single checks produce verdicts") {
    CheckSpec spec;
    spec.id = TheoremId::L3_6;
    spec.max_n = 4;
    auto verdicts = run_check(spec);
    REQUIRE(!verdicts.empty());
    for (const auto& v : verdicts) CHECK(v.outcome == Outcome::pass);

    spec.id = TheoremId::E5_6;
    verdicts = run_check(spec);
    REQUIRE(verdicts.size() == 2);
    for (const auto& v : verdicts) CHECK(v.outcome == Outcome::pass);

    std::string json = verdicts_to_json(verdicts);
    CHECK(json.find("E5.6") != std::string::npos);
    CHECK(json.find("pass") != std::string::npos);
}

TEST_CASE("inclusion and join characterization at full invariant scale") {
    // n <= 7 and r <= 4 take a couple of seconds each
    for (TheoremId id : {TheoremId::L3_4, TheoremId::L3_7}) {
        CheckSpec spec;
        spec.id = id;
        spec.max_n = 7;
        spec.max_r = 4;
        for (const auto& v : run_check(spec)) {
            CAPTURE(v.instance);
            CHECK(v.outcome == Outcome::pass);
        }
    }
}

TEST_CASE("identical specs give identical verdicts") {
    CheckSpec spec;
    spec.id = TheoremId::T4_11;
    spec.max_r = 2;
    auto a = run_check(spec);
    auto b = run_check(spec);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].outcome == b[i].outcome);
        CHECK(a[i].witness == b[i].witness);
    }
}

TEST_CASE("budget exhaustion is reported as inconclusive") {
    CheckSpec spec;
    spec.id = TheoremId::L3_1;
    spec.max_n = 6;
    spec.budget = 1;
    auto verdicts = run_check(spec);
    bool saw_inconclusive = false;
    for (const auto& v : verdicts) {
        CHECK(v.outcome != Outcome::fail);
        saw_inconclusive |= v.outcome == Outcome::inconclusive;
    }
    CHECK(saw_inconclusive);
}
