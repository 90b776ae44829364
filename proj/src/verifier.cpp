#include "clutterlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "clutterlab/io.hpp"
#include "clutterlab/resolution.hpp"

namespace clutterlab {

namespace {

const std::map<TheoremId, std::string> kNames = {
    {TheoremId::L3_1, "L3.1"},   {TheoremId::T3_2, "T3.2"},   {TheoremId::T3_3, "T3.3"},
    {TheoremId::L3_4, "L3.4"},   {TheoremId::R3_5, "R3.5"},   {TheoremId::L3_6, "L3.6"},
    {TheoremId::L3_7, "L3.7"},   {TheoremId::L3_9, "L3.9"},   {TheoremId::O3_10, "O3.10"},
    {TheoremId::L3_11, "L3.11"}, {TheoremId::T4_7, "T4.7"},   {TheoremId::T4_8, "T4.8"},
    {TheoremId::T4_9, "T4.9"},   {TheoremId::T4_11, "T4.11"}, {TheoremId::T4_13, "T4.13"},
    {TheoremId::T5_1, "T5.1"},   {TheoremId::T5_2, "T5.2"},   {TheoremId::C5_3, "C5.3"},
    {TheoremId::E5_6, "E5.6"},   {TheoremId::L6_1, "L6.1"},   {TheoremId::T6_2, "T6.2"},
    {TheoremId::T6_3, "T6.3"},   {TheoremId::T6_5, "T6.5"},
};

}  // namespace

std::string theorem_name(TheoremId id) { return kNames.at(id); }

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (const auto& [id, n] : kNames)
        if (n == name) return id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (const auto& [id, n] : kNames) out.push_back(id);
    return out;
}

// ---------------------------------------------------------------------------
// graph enumeration up to isomorphism

namespace {

int pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

uint64_t canonical_mask(uint64_t mask, int n, const std::vector<std::vector<int>>& perms) {
    std::vector<std::pair<int, int>> present;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_index(i, j, n)) & 1) present.emplace_back(i, j);
    uint64_t best = ~uint64_t(0);
    for (const auto& perm : perms) {
        uint64_t out = 0;
        for (auto [i, j] : present) out |= uint64_t(1) << pair_index(perm[i], perm[j], n);
        best = std::min(best, out);
    }
    return best;
}

std::vector<uint64_t> all_masks_up_to_iso(int n) {
    if (n == 1) return {0};
    std::vector<uint64_t> smaller = all_masks_up_to_iso(n - 1);
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::set<uint64_t> out;
    for (uint64_t base : smaller) {
        // re-embed the (n-1)-vertex mask into the n-vertex pair indexing
        uint64_t embedded = 0;
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j)
                if ((base >> pair_index(i, j, n - 1)) & 1)
                    embedded |= uint64_t(1) << pair_index(i, j, n);
        for (uint64_t nb = 0; nb < (uint64_t(1) << (n - 1)); ++nb) {
            uint64_t mask = embedded;
            for (int v = 0; v < n - 1; ++v)
                if ((nb >> v) & 1) mask |= uint64_t(1) << pair_index(v, n - 1, n);
            out.insert(canonical_mask(mask, n, perms));
        }
    }
    return std::vector<uint64_t>(out.begin(), out.end());
}

Graph graph_from_mask(uint64_t mask, int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_index(i, j, n)) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("iso enumeration supports 1 <= n <= 7");
    std::vector<Graph> out;
    for (uint64_t mask : all_masks_up_to_iso(n)) {
        Graph g = graph_from_mask(mask, n);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// named instances

Graph counterexample_graph_7() {
    Graph g(7);
    // 1-indexed edge list: 12,13,17,23,27,37,45,46,56,57,67
    const int edges[][2] = {{1, 2}, {1, 3}, {1, 7}, {2, 3}, {2, 7}, {3, 7},
                            {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

MonomialIdeal sturmfels_ideal() {
    // variables a..f = 0..5
    auto m = [](std::initializer_list<int> support) {
        return Monomial::squarefree(6, VertexSet(6, support));
    };
    std::vector<Monomial> gens = {m({3, 4, 5}), m({2, 4, 5}), m({2, 3, 5}), m({2, 3, 4}),
                                  m({1, 4, 5}), m({1, 2, 3}), m({0, 2, 5}), m({0, 3, 4})};
    return MonomialIdeal(6, std::move(gens));
}

namespace {

Graph skeleton_for_shape(const std::string& shape) {
    if (shape == "edge") return path(2);
    if (shape == "p3") return path(3);
    if (shape == "p4") return path(4);
    if (shape == "c3") return cycle(3);
    if (shape == "c4") return cycle(4);
    if (shape == "c5") return cycle(5);
    if (shape == "star3") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        return g;
    }
    if (shape == "paw") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(2, 3);
        return g;
    }
    throw std::invalid_argument("unknown cactus skeleton shape: " + shape);
}

}  // namespace

std::vector<std::string> cactus_path_shapes() { return {"edge", "p3", "p4"}; }
std::vector<std::string> cactus_cycle_shapes() { return {"c3", "c4", "c5"}; }
std::vector<std::string> cactus_all_shapes() {
    return {"edge", "p3", "p4", "c3", "c4", "c5", "star3", "paw"};
}

CoChordalCactusInstance cactus_instance(const std::string& shape, uint64_t seed) {
    Graph skeleton = skeleton_for_shape(shape);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    auto edges = skeleton.edges();
    int connectors = 0;
    {
        VertexSet used(skeleton.n);
        for (auto [u, v] : edges) {
            used.set(u);
            used.set(v);
        }
        connectors = used.count();
    }
    int interior_budget = 11 - connectors;
    CactusDecomposition plan;
    plan.skeleton = skeleton;
    for (auto [u, v] : edges) {
        CactusPiece piece;
        piece.skeleton_edge = {u, v};
        bool want_cycle = (rng() % 5) < 2;
        int max_interior = std::min(3, interior_budget);
        if (want_cycle && max_interior >= 1) {
            piece.kind = PieceKind::cycle;
            int interior = 1 + int(rng() % uint64_t(max_interior));
            piece.size = 2 + interior;
            interior_budget -= interior;
        } else {
            piece.kind = PieceKind::chordal;
            int interior = max_interior > 0 ? int(rng() % uint64_t(max_interior + 1)) : 0;
            piece.size = 2 + interior;
            interior_budget -= interior;
        }
        plan.pieces.push_back(piece);
    }
    // keep the host away from degenerate sizes
    int host_n = connectors;
    for (const auto& piece : plan.pieces) host_n += piece.size - 2;
    for (size_t p = 0; host_n < 5 && interior_budget > 0; p = (p + 1) % plan.pieces.size()) {
        ++plan.pieces[p].size;
        --interior_budget;
        ++host_n;
    }
    return build_co_chordal_cactus(plan, rng());
}

// ---------------------------------------------------------------------------
// per-theorem checks

namespace {

struct Collector {
    TheoremId id;
    std::vector<Verdict>& out;

    void run(const std::string& instance, const std::function<std::pair<Outcome, std::string>()>& body) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = Outcome::fail;
        std::string witness;
        try {
            auto [o, w] = body();
            outcome = o;
            witness = w;
        } catch (const std::exception& e) {
            outcome = Outcome::fail;
            witness = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(Verdict{id, instance, outcome, witness, secs});
    }
};

std::pair<Outcome, std::string> ok() { return {Outcome::pass, ""}; }
std::pair<Outcome, std::string> ok_note(const std::string& note) { return {Outcome::pass, note}; }
std::pair<Outcome, std::string> bad(const std::string& witness) {
    return {Outcome::fail, witness};
}

// search + verify + replay; pass only when a verified certificate exists
std::pair<Outcome, std::string> certify_chordal(const Clutter& c, uint64_t budget) {
    SearchResult res = find_elimination_order(c, SearchStrategy::backtracking, budget);
    if (res.outcome == SearchOutcome::exhausted)
        return {Outcome::inconclusive,
                "budget exhausted after " + std::to_string(res.expansions) + " expansions"};
    if (res.outcome == SearchOutcome::refuted)
        return bad("backtracking refuted chordality (" + std::to_string(res.expansions) +
                   " expansions)");
    if (auto violation = verify_certificate(c, *res.certificate))
        return bad("search certificate failed replay at step " +
                   std::to_string(violation->step) + ": " + violation->reason);
    return ok();
}

std::string compact_graph(const Graph& g) {
    return nlohmann::json::parse(graph_to_json(g)).dump();
}

std::pair<Outcome, std::string> co_chordal_and_linear(const Graph& host, int r,
                                                      const FieldSpec& field, uint64_t budget) {
    Clutter comp = complement_clutter(connected_clutter(host, r));
    auto certified = certify_chordal(comp, budget);
    if (certified.first == Outcome::fail)
        return bad(certified.second + "; graph=" + compact_graph(host));
    if (certified.first != Outcome::pass) return certified;
    MonomialIdeal ideal = connected_ideal(host, r);
    if (ideal.zero())
        return ok_note("I_r has no generators; linear resolution holds vacuously");
    if (!has_linear_resolution(ideal, field)) {
        auto reg = regularity(ideal, field);
        return bad("certified co-chordal but reg=" + std::to_string(reg ? *reg : -1) +
                   " != " + std::to_string(r + 1) + "; graph=" + compact_graph(host));
    }
    return ok();
}

void check_L3_1(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 8;
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r + 1 <= n; ++r) {
            c.run("C_" + std::to_string(r) + "(K_" + std::to_string(n) + ")", [&] {
                Clutter cl = connected_clutter(complete(n), r);
                EliminationCertificate cert = elim_complete(n, r);
                if (auto violation = verify_certificate(cl, cert))
                    return bad("constructive certificate invalid at step " +
                               std::to_string(violation->step) + ": " + violation->reason);
                return certify_chordal(cl, spec.budget);
            });
        }
}

void check_T3_2(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int instances = spec.instances > 0 ? spec.instances : 20;
    int max_n = spec.max_n > 0 ? spec.max_n : 9;
    for (int k = 0; k < instances; ++k) {
        Graph g = random_block_graph(max_n, spec.seeds[k % spec.seeds.size()] * 1000 + k);
        for (int r = 2; r <= (spec.max_r > 0 ? spec.max_r : 3); ++r) {
            c.run("block graph #" + std::to_string(k) + " (n=" + std::to_string(g.n) +
                      "), r=" + std::to_string(r),
                  [&] {
                      Clutter cl = connected_clutter(g, r);
                      EliminationCertificate cert = elim_block_graph(g, r);
                      if (auto violation = verify_certificate(cl, cert))
                          return bad("constructive certificate invalid at step " +
                                     std::to_string(violation->step) + ": " + violation->reason);
                      return ok();
                  });
        }
    }
}

void check_T3_3(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 9;
    int max_r = spec.max_r > 0 ? spec.max_r : 4;
    for (int n = 3; n <= max_n; ++n)
        for (int r = 2; r <= max_r; ++r) {
            c.run("C_" + std::to_string(r) + "(cycle_" + std::to_string(n) + ")", [&] {
                Clutter cl = connected_clutter(cycle(n), r);
                EliminationCertificate cert = elim_cycle(n, r);
                if (auto violation = verify_certificate(cl, cert))
                    return bad("constructive certificate invalid at step " +
                               std::to_string(violation->step) + ": " + violation->reason);
                return ok();
            });
        }
}

void check_L3_4(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 6;
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    bool strict_seen = false;
    std::string strict_witness;
    for (int n = 2; n <= max_n; ++n) {
        c.run("all connected graphs on " + std::to_string(n) + " vertices, r<=" +
                  std::to_string(max_r),
              [&]() -> std::pair<Outcome, std::string> {
                  for (const Graph& g : graphs_up_to_iso(n, true)) {
                      Graph gbar = complement(g);
                      for (int r = 1; r <= max_r && r + 1 <= n; ++r) {
                          Clutter lhs = complement_clutter(connected_clutter(g, r));
                          Clutter rhs = connected_clutter(gbar, r);
                          for (const auto& e : lhs.edges)
                              if (!rhs.has_edge(e))
                                  return bad("inclusion fails for edge " + e.to_string());
                          if (r <= 2 && lhs.edges.size() != rhs.edges.size())
                              return bad("equality fails at r=" + std::to_string(r));
                          if (r >= 3 && lhs.edges.size() < rhs.edges.size() && !strict_seen) {
                              strict_seen = true;
                              strict_witness = "n=" + std::to_string(n) + " graph with " +
                                               std::to_string(g.edge_count()) + " edges, r=" +
                                               std::to_string(r);
                          }
                      }
                  }
                  return ok();
              });
    }
    if (max_r >= 3)
        c.run("strict inclusion witness for r>=3", [&]() -> std::pair<Outcome, std::string> {
            if (strict_seen) return ok_note(strict_witness);
            return bad("no strict witness found although r>=3 was scanned");
        });
}

void check_R3_5(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 9;
    for (int n = 4; n <= max_n; ++n) {
        Graph cocycle = complement(cycle(n));
        c.run("reg(I_1(co-C_" + std::to_string(n) + ")) == 3", [&] {
            auto reg = regularity(connected_ideal(cocycle, 1), spec.field);
            if (!reg || *reg != 3)
                return bad("computed reg=" + (reg ? std::to_string(*reg) : "undefined"));
            return ok();
        });
        c.run("reg(I_2(co-C_" + std::to_string(n) + ")) == 3", [&] {
            MonomialIdeal ideal = connected_ideal(cocycle, 2);
            if (ideal.zero()) {
                if (n == 4)
                    return ok_note(
                        "I_2(co-C_4) has no generators (every 3-subset of 2K_2 is "
                        "disconnected); regularity undefined, linearity vacuous");
                return bad("unexpected zero ideal");
            }
            auto reg = regularity(ideal, spec.field);
            if (!reg || *reg != 3)
                return bad("computed reg=" + (reg ? std::to_string(*reg) : "undefined"));
            return ok();
        });
    }
}

void check_L3_6(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 6;
    for (int n = 2; n <= max_n; ++n) {
        c.run("join decomposition on all graphs with " + std::to_string(n) + " vertices",
              [&]() -> std::pair<Outcome, std::string> {
                  for (const Graph& g : graphs_up_to_iso(n, false)) {
                      auto parts = join_decomposition(g);
                      bool complement_disconnected = connected_components(complement(g)).size() > 1;
                      if ((parts.size() >= 2) != complement_disconnected)
                          return bad("part count disagrees with complement connectivity");
                      // the join of the parts must reconstruct g edge for edge
                      Graph rebuilt(g.n);
                      std::vector<int> owner(g.n, -1);
                      for (size_t p = 0; p < parts.size(); ++p)
                          parts[p].for_each([&](int v) { owner[v] = int(p); });
                      for (int u = 0; u < g.n; ++u)
                          for (int v = u + 1; v < g.n; ++v)
                              if (owner[u] != owner[v] || g.has_edge(u, v))
                                  rebuilt.add_edge(u, v);
                      for (int u = 0; u < g.n; ++u)
                          if (rebuilt.adj[u] != g.adj[u])
                              return bad("join of parts does not rebuild the graph");
                  }
                  return ok();
              });
    }
}

void check_L3_7(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 6;
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    for (int n = 2; n <= max_n; ++n) {
        c.run("complement-clutter edges via joins, n=" + std::to_string(n),
              [&]() -> std::pair<Outcome, std::string> {
                  std::vector<int> all(n);
                  std::iota(all.begin(), all.end(), 0);
                  for (const Graph& g : graphs_up_to_iso(n, true)) {
                      Graph gbar = complement(g);
                      for (int r = 1; r <= max_r && r + 1 <= n; ++r) {
                          Clutter lhs = complement_clutter(connected_clutter(g, r));
                          bool good = true;
                          std::string why;
                          for_each_subset_of(all, r + 1, n, [&](const VertexSet& e) {
                              Graph sub = induced_subgraph(gbar, e);
                              bool characterized =
                                  is_connected(sub) && join_decomposition(sub).size() >= 2;
                              if (characterized != lhs.has_edge(e)) {
                                  good = false;
                                  why = "mismatch at " + e.to_string() +
                                        ", r=" + std::to_string(r);
                                  return false;
                              }
                              return true;
                          });
                          if (!good) return bad(why);
                      }
                  }
                  return ok();
              });
    }
}

// reduced-form instances: chordal gbar, simplicial x, edge of
// the complement clutter through x
void for_each_reduced_form_instance(
    int max_n, int max_r,
    const std::function<void(const Graph& gbar, const VertexSet& e, int x, int r)>& visit) {
    for (int n = 3; n <= max_n; ++n)
        for (const Graph& gbar : graphs_up_to_iso(n, true)) {
            Graph g = complement(gbar);
            for (int r = 2; r <= max_r && r + 1 <= n; ++r) {
                Clutter comp = complement_clutter(connected_clutter(g, r));
                for (const auto& e : comp.edges)
                    e.for_each([&](int x) {
                        if (is_simplicial_vertex(gbar, x)) visit(gbar, e, x, r);
                    });
            }
        }
}

void check_L3_9(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 6;
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    c.run("reduced form on all simplicial-vertex complement-clutter edges, n<=" +
              std::to_string(max_n),
          [&]() -> std::pair<Outcome, std::string> {
              long instances = 0;
              std::string failure;
              for_each_reduced_form_instance(max_n, max_r, [&](const Graph& gbar,
                                                               const VertexSet& e, int x, int) {
                  if (!failure.empty()) return;
                  ++instances;
                  auto [b, d] = reduced_form(gbar, e, x);
                  if ((b & d).count() || (b | d) != e) failure = "not a partition of e";
                  if (!b.test(x)) failure = "x not in B";
                  if (!is_clique_set(gbar, d)) failure = "D is not complete";
                  bool cross_complete = true;
                  b.for_each([&](int u) {
                      d.for_each([&](int v) {
                          if (!gbar.has_edge(u, v)) cross_complete = false;
                      });
                  });
                  if (!cross_complete) failure = "gbar[e] is not B join D";
                  // reduced: no movable vertex remains in B
                  b.for_each([&](int v) {
                      if (v == x) return;
                      VertexSet others = e;
                      others.reset(v);
                      if (others.is_subset_of(gbar.adj[v])) failure = "B still has a universal vertex";
                  });
              });
              if (!failure.empty()) return bad(failure);
              return ok_note(std::to_string(instances) + " instances");
          });
}

void check_O3_10(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 6;
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    c.run("distance-2 and non-neighbor observations on reduced forms, n<=" +
              std::to_string(max_n),
          [&]() -> std::pair<Outcome, std::string> {
              long instances = 0;
              std::string failure;
              for_each_reduced_form_instance(max_n, max_r, [&](const Graph& gbar,
                                                               const VertexSet& e, int x, int) {
                  if (!failure.empty()) return;
                  ++instances;
                  auto [b, d] = reduced_form(gbar, e, x);
                  e.for_each([&](int z) {
                      auto dist = distance(gbar, x, z);
                      if (dist && *dist == 2 && !b.test(z))
                          failure = "distance-2 vertex landed in D";
                  });
                  b.for_each([&](int y) {
                      if (y == x || !gbar.has_edge(x, y)) return;
                      bool found = false;
                      b.for_each([&](int z) {
                          if (z != y && !gbar.has_edge(y, z)) found = true;
                      });
                      if (!found) failure = "neighbor of x in B has no non-neighbor in B";
                  });
              });
              if (!failure.empty()) return bad(failure);
              return ok_note(std::to_string(instances) + " instances");
          });
}

void check_L3_11(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    // cone-shaped clutters with controlled extra edges away from b
    struct Case {
        int n, d, bsize;
        uint64_t seed;
    };
    std::vector<Case> cases = {{4, 3, 1, 1}, {5, 3, 1, 2}, {5, 3, 2, 3}, {6, 3, 2, 4},
                               {6, 4, 1, 5}, {6, 4, 2, 6}, {7, 4, 3, 7}, {7, 3, 2, 8}};
    for (const Case& k : cases) {
        c.run("cone sweep n=" + std::to_string(k.n) + " d=" + std::to_string(k.d) +
                  " |b|=" + std::to_string(k.bsize),
              [&]() -> std::pair<Outcome, std::string> {
                  std::mt19937_64 rng(k.seed);
                  VertexSet b(k.n), apex(k.n);
                  for (int v = 0; v < k.bsize; ++v) b.set(v);
                  int apex_size = std::min(k.n - k.bsize, k.d - k.bsize + 2);
                  for (int v = k.bsize; v < k.bsize + apex_size; ++v) apex.set(v);
                  VertexSet cone = b | apex;
                  std::vector<int> all(k.n);
                  std::iota(all.begin(), all.end(), 0);
                  std::vector<VertexSet> edges;
                  for_each_subset_of(all, k.d, k.n, [&](const VertexSet& s) {
                      bool in_cone = s.is_subset_of(cone);
                      bool contains_b = b.is_subset_of(s);
                      if (in_cone)
                          edges.push_back(s);  // hypothesis 1
                      else if (!contains_b && rng() % 2)
                          edges.push_back(s);  // noise away from the cone
                      return true;
                  });
                  Clutter cl(k.n, k.d, edges);
                  auto result = eliminate_cone(cl, b, apex);
                  if (auto* failure = std::get_if<ConeEliminationFailure>(&result))
                      return bad(failure->reason);
                  auto steps = std::get<std::vector<VertexSet>>(result);
                  Clutter work = cl;
                  for (size_t i = 0; i < steps.size(); ++i) {
                      if (!b.is_subset_of(steps[i])) return bad("step does not contain b");
                      VertexSet nb = closed_neighborhood(work, steps[i]);
                      if (nb == steps[i] || !is_clique(work, nb))
                          return bad("step " + std::to_string(i) + " not simplicial on replay");
                      work = delete_subedge(work, steps[i]);
                  }
                  for (const auto& e : work.edges)
                      if (b.is_subset_of(e)) return bad("residual edge still contains b");
                  return ok_note(std::to_string(steps.size()) + " steps");
              });
    }
}

void run_cactus_family(const CheckSpec& spec, const std::vector<std::string>& shapes,
                       std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    for (const auto& shape : shapes)
        for (uint64_t seed : spec.seeds) {
            CoChordalCactusInstance inst = cactus_instance(shape, seed);
            for (int r = 2; r <= max_r; ++r) {
                c.run("skeleton=" + shape + " seed=" + std::to_string(seed) +
                          " (n=" + std::to_string(inst.host.n) + ") r=" + std::to_string(r),
                      [&] { return co_chordal_and_linear(inst.host, r, spec.field, spec.budget); });
            }
        }
}

void check_T4_11(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    struct Shape {
        int n1, n2;
        bool with_c5;
    };
    std::vector<Shape> shapes = {{3, 4, false}, {4, 4, false}, {2, 2, true}, {3, 2, true}};
    for (const Shape& s : shapes)
        for (uint64_t seed : spec.seeds) {
            Graph g = generate_2k2c4_free(s.n1, s.n2, s.with_c5, seed);
            if (!is_2k2_c4_free(g)) {
                out.push_back(Verdict{spec.id, "generator closed loop", Outcome::fail,
                                      "generated graph fails the 4-subset scan", 0});
                continue;
            }
            for (int r = 2; r <= max_r; ++r)
                c.run("n1=" + std::to_string(s.n1) + " n2=" + std::to_string(s.n2) +
                          (s.with_c5 ? " +C5" : "") + " seed=" + std::to_string(seed) +
                          " r=" + std::to_string(r),
                      [&] { return co_chordal_and_linear(g, r, spec.field, spec.budget); });
        }
}

// the explicit simplicial prefixes used for the grid family
void check_grid_prefixes(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    auto vertex = [](const Graph& grid_graph, int i, int j) {
        std::string want = "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        for (int v = 0; v < grid_graph.n; ++v)
            if (grid_graph.labels[v] == want) return v;
        throw std::logic_error("grid label lookup failed");
    };
    auto replay_prefix = [](const Clutter& source, const std::vector<VertexSet>& steps)
        -> std::pair<Outcome, std::string> {
        Clutter work = source;
        for (size_t i = 0; i < steps.size(); ++i) {
            VertexSet nb = closed_neighborhood(work, steps[i]);
            if (nb == steps[i])
                return bad("prefix step " + std::to_string(i) + " is not a maximal subedge");
            if (!is_clique(work, nb))
                return bad("prefix step " + std::to_string(i) + " is not simplicial");
            work = delete_subedge(work, steps[i]);
        }
        return ok();
    };

    {
        Graph gr = grid(3, 4);
        Graph host = complement(gr);
        auto v = [&](int i, int j) { return vertex(gr, i, j); };
        c.run("explicit prefix, grid(3,4), r=2", [&] {
            Clutter comp = complement_clutter(connected_clutter(host, 2));
            std::vector<VertexSet> steps;
            auto add = [&](std::initializer_list<std::pair<int, int>> verts) {
                VertexSet s(comp.n);
                for (auto [i, j] : verts) s.set(v(i, j));
                steps.push_back(s);
            };
            add({{1, 1}, {1, 3}});
            add({{1, 1}, {3, 1}});
            add({{1, 1}, {2, 2}});
            add({{1, 1}, {1, 2}});
            add({{1, 2}, {1, 4}});
            add({{1, 2}, {3, 2}});
            add({{1, 2}, {2, 1}});
            add({{1, 2}, {2, 3}});
            add({{1, 2}, {1, 3}});
            auto res = replay_prefix(comp, steps);
            if (res.first != Outcome::pass) return res;
            // after the first four steps no edge may contain x_{1,1}
            Clutter work = comp;
            for (int i = 0; i < 4; ++i) work = delete_subedge(work, steps[i]);
            for (const auto& e : work.edges)
                if (e.test(v(1, 1))) return bad("edge through x_{1,1} survived its peel");
            return ok();
        });
        c.run("explicit prefix, grid(3,4), r=3", [&] {
            Clutter comp = complement_clutter(connected_clutter(host, 3));
            std::vector<VertexSet> steps;
            auto add = [&](std::initializer_list<std::pair<int, int>> verts) {
                VertexSet s(comp.n);
                for (auto [i, j] : verts) s.set(v(i, j));
                steps.push_back(s);
            };
            add({{1, 1}, {1, 3}, {2, 2}});
            add({{1, 1}, {2, 2}, {3, 1}});
            add({{1, 1}, {1, 2}, {2, 1}});
            add({{1, 2}, {2, 1}, {3, 2}});
            add({{1, 2}, {3, 2}, {2, 3}});
            add({{1, 2}, {2, 1}, {2, 3}});
            add({{1, 2}, {1, 4}, {2, 3}});
            add({{1, 2}, {1, 3}, {2, 3}});
            return replay_prefix(comp, steps);
        });
        c.run("explicit prefix, grid(3,4), r=4", [&] {
            Clutter comp = complement_clutter(connected_clutter(host, 4));
            for (const auto& e : comp.edges)
                if (e.test(v(1, 1))) return bad("an edge contains x_{1,1} at r=4");
            VertexSet s(comp.n);
            for (auto [i, j] : {std::pair{1, 2}, {2, 1}, {2, 3}, {3, 2}}) s.set(v(i, j));
            return replay_prefix(comp, {s});
        });
    }
    {
        Graph gr = grid(2, 4);
        Graph host = complement(gr);
        auto v = [&](int i, int j) { return vertex(gr, i, j); };
        c.run("explicit prefix, grid(2,4), r=2", [&] {
            Clutter comp = complement_clutter(connected_clutter(host, 2));
            std::vector<VertexSet> steps;
            auto add = [&](std::initializer_list<std::pair<int, int>> verts) {
                VertexSet s(comp.n);
                for (auto [i, j] : verts) s.set(v(i, j));
                steps.push_back(s);
            };
            add({{1, 1}, {1, 3}});
            add({{1, 1}, {2, 2}});
            add({{1, 1}, {1, 2}});
            add({{2, 1}, {2, 3}});
            add({{2, 1}, {1, 2}});
            return replay_prefix(comp, steps);
        });
        c.run("explicit prefix, grid(2,4), r=3", [&] {
            Clutter comp = complement_clutter(connected_clutter(host, 3));
            std::vector<VertexSet> steps;
            auto add = [&](std::initializer_list<std::pair<int, int>> verts) {
                VertexSet s(comp.n);
                for (auto [i, j] : verts) s.set(v(i, j));
                steps.push_back(s);
            };
            add({{1, 1}, {1, 3}, {2, 2}});
            add({{1, 1}, {2, 1}, {2, 2}});
            add({{2, 1}, {2, 3}, {1, 2}});
            return replay_prefix(comp, steps);
        });
    }
}

void check_T4_13(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 3;
    int max_m = spec.max_m > 0 ? spec.max_m : 5;
    int max_r = spec.max_r > 0 ? spec.max_r : 4;
    std::vector<std::pair<int, int>> dims;
    for (int m = 2; m <= max_m; ++m) dims.emplace_back(2, m);
    if (max_n >= 3) {
        dims.emplace_back(3, 3);
        if (max_m >= 4) dims.emplace_back(3, 4);
    }
    for (auto [n, m] : dims) {
        Graph host = complement(grid(n, m));
        for (int r = 2; r <= max_r; ++r) {
            c.run("co-grid(" + std::to_string(n) + "," + std::to_string(m) +
                      "), r=" + std::to_string(r),
                  [&]() -> std::pair<Outcome, std::string> {
                      Clutter comp = complement_clutter(connected_clutter(host, r));
                      auto certified = certify_chordal(comp, spec.budget);
                      if (certified.first != Outcome::pass) return certified;
                      if (host.n > 12) return ok_note("regularity skipped above 12 vertices");
                      MonomialIdeal ideal = connected_ideal(host, r);
                      if (ideal.zero()) {
                          if (n == 2 && m == 2)
                              return ok_note("I_r(co-grid(2,2)) has no generators; linearity vacuous");
                          return bad("unexpected zero ideal");
                      }
                      auto reg = regularity(ideal, spec.field);
                      if (!reg || *reg != r + 1)
                          return bad("reg=" + (reg ? std::to_string(*reg) : "undefined") +
                                     " != " + std::to_string(r + 1));
                      return ok();
                  });
        }
    }
    check_grid_prefixes(spec, out);
}

void check_T5_1(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    for (const auto& shape : cactus_all_shapes())
        for (uint64_t seed : spec.seeds) {
            CoChordalCactusInstance inst = cactus_instance(shape, seed);
            c.run("reg(I_1) <= 3, skeleton=" + shape + " seed=" + std::to_string(seed), [&] {
                MonomialIdeal ideal = connected_ideal(inst.host, 1);
                if (ideal.zero()) return ok_note("edgeless host; nothing to bound");
                auto reg = regularity(ideal, spec.field);
                if (reg && *reg <= 3) return ok_note("reg=" + std::to_string(*reg));
                return bad("reg=" + (reg ? std::to_string(*reg) : "undefined"));
            });
        }
}

void check_T5_2(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    std::vector<std::pair<int, int>> dims = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};
    for (auto [n, m] : dims) {
        c.run("reg(I_1(co-grid(" + std::to_string(n) + "," + std::to_string(m) + "))) <= 3", [&] {
            Graph host = complement(grid(n, m));
            auto reg = regularity(connected_ideal(host, 1), spec.field);
            if (reg && *reg <= 3) return ok_note("reg=" + std::to_string(*reg));
            return bad("reg=" + (reg ? std::to_string(*reg) : "undefined"));
        });
    }
}

void check_C5_3(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    for (int r = 2; r <= (spec.max_r > 0 ? spec.max_r : 3); ++r) {
        c.run("cactus sample, r=" + std::to_string(r), [&] {
            CoChordalCactusInstance inst = cactus_instance("p3", spec.seeds.front());
            MonomialIdeal ideal = connected_ideal(inst.host, r);
            if (ideal.zero() || has_linear_resolution(ideal, spec.field)) return ok();
            return bad("linear resolution fails");
        });
        c.run("(2K2,C4)-free sample, r=" + std::to_string(r), [&] {
            Graph g = generate_2k2c4_free(3, 3, true, spec.seeds.front());
            MonomialIdeal ideal = connected_ideal(g, r);
            if (ideal.zero() || has_linear_resolution(ideal, spec.field)) return ok();
            return bad("linear resolution fails");
        });
        c.run("co-grid sample, r=" + std::to_string(r), [&] {
            MonomialIdeal ideal = connected_ideal(complement(grid(2, 4)), r);
            if (ideal.zero() || has_linear_resolution(ideal, spec.field)) return ok();
            return bad("linear resolution fails");
        });
    }
}

void check_E5_6(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    Graph g = counterexample_graph_7();
    c.run("reg(I_1) == 3", [&] {
        auto reg = regularity(connected_ideal(g, 1), spec.field);
        if (reg && *reg == 3) return ok();
        return bad("reg=" + (reg ? std::to_string(*reg) : "undefined"));
    });
    c.run("reg(I_2) >= 5, I_2 not linear", [&] {
        MonomialIdeal ideal = connected_ideal(g, 2);
        auto reg = regularity(ideal, spec.field);
        if (!reg) return bad("regularity undefined");
        if (*reg < 5) return bad("reg=" + std::to_string(*reg) + " < 5");
        if (has_linear_resolution(ideal, spec.field)) return bad("I_2 is unexpectedly linear");
        return ok_note("exact reg(I_2) = " + std::to_string(*reg));
    });
}

void check_L6_1(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int lo = 6, hi = spec.max_n > 0 ? std::min(spec.max_n, 7) : 7;
    for (int n = lo; n <= hi; ++n) {
        c.run("degree-6 monomials with support >= 5 on " + std::to_string(n) + " variables",
              [&]() -> std::pair<Outcome, std::string> {
                  MonomialIdeal sq = power(connected_ideal(complement(path(n)), 2), 2);
                  std::vector<int> all(n);
                  std::iota(all.begin(), all.end(), 0);
                  long count = 0;
                  std::string failure;
                  for (int support = 5; support <= std::min(6, n); ++support) {
                      for_each_subset_of(all, support, n, [&](const VertexSet& s) {
                          std::vector<int> base(n, 0);
                          s.for_each([&](int v) { base[v] = 1; });
                          std::vector<std::vector<int>> monomials;
                          if (support == 6) {
                              monomials.push_back(base);
                          } else {
                              s.for_each([&](int v) {
                                  auto exps = base;
                                  exps[v] = 2;
                                  monomials.push_back(exps);
                              });
                          }
                          for (auto& exps : monomials) {
                              ++count;
                              Monomial m(exps);
                              if (!is_minimal_generator(sq, m)) {
                                  failure = m.to_string() + " is not a minimal generator";
                                  return false;
                              }
                          }
                          return true;
                      });
                      if (!failure.empty()) break;
                  }
                  if (!failure.empty()) return bad(failure);
                  return ok_note(std::to_string(count) + " monomials checked");
              });
    }
}

// shared by the power checks: linear quotients and linear resolution for
// small powers of an ideal that already passed its exchange test
std::pair<Outcome, std::string> powers_have_linear_quotients(const MonomialIdeal& base,
                                                             int max_q, const FieldSpec& field,
                                                             uint64_t budget) {
    for (int q = 1; q <= max_q; ++q) {
        MonomialIdeal pw = power(base, q);
        if (pw.zero()) continue;
        auto lq = has_linear_quotients(pw, budget);
        if (auto* failure = std::get_if<LinearQuotientFailure>(&lq)) {
            if (failure->refuted)
                return bad("linear quotients refuted at q=" + std::to_string(q));
            return {Outcome::inconclusive, "linear quotients budget out at q=" + std::to_string(q)};
        }
        if (pw.n <= 12 && !has_linear_resolution(pw, field))
            return bad("power q=" + std::to_string(q) + " is not linear");
    }
    return ok();
}

void check_T6_2(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_n = spec.max_n > 0 ? spec.max_n : 7;
    int max_q = spec.max_q > 0 ? spec.max_q : 2;
    for (int n = 4; n <= max_n; ++n)
        for (int q = 1; q <= max_q; ++q) {
            c.run("I_2(co-P_" + std::to_string(n) + ")^" + std::to_string(q) +
                      " weakly polymatroidal",
                  [&] {
                      MonomialIdeal ideal = power(connected_ideal(complement(path(n)), 2), q);
                      auto witness = weakly_polymatroidal_witness(ideal, identity_order(n));
                      if (witness)
                          return bad("weak exchange fails at generator pair (" +
                                     std::to_string(witness->f) + "," + std::to_string(witness->g) +
                                     ")");
                      auto lq = has_linear_quotients(ideal, spec.budget);
                      if (auto* failure = std::get_if<LinearQuotientFailure>(&lq)) {
                          if (failure->refuted) return bad("linear quotients refuted");
                          return std::pair(Outcome::inconclusive,
                                           std::string("linear quotients budget out"));
                      }
                      if (!has_linear_resolution(ideal, spec.field))
                          return bad("power is not linear");
                      return ok();
                  });
        }
    for (int r = 3; r <= 4; ++r) {
        int trees = spec.instances > 0 ? spec.instances : 5;
        for (int k = 0; k < trees; ++k) {
            uint64_t seed = spec.seeds[k % spec.seeds.size()] + 17 * k;
            Graph t = random_tree_max_degree(6 + (k % 3), r, seed);
            c.run("I_" + std::to_string(r) + "(co-tree #" + std::to_string(k) +
                      ", n=" + std::to_string(t.n) + ") polymatroidal",
                  [&] {
                      MonomialIdeal ideal = connected_ideal(complement(t), r);
                      auto witness = polymatroidal_witness(ideal);
                      if (witness)
                          return bad("exchange fails at pair (" + std::to_string(witness->u) +
                                     "," + std::to_string(witness->v) + ")");
                      return powers_have_linear_quotients(ideal, spec.max_q > 0 ? spec.max_q : 2,
                                                          spec.field, spec.budget);
                  });
        }
    }
}

void check_T6_3(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_q = spec.max_q > 0 ? spec.max_q : 2;
    struct Case {
        std::string name;
        Graph g;
        std::vector<int> rs;
    };
    std::vector<Case> cases;
    cases.push_back({"K_{2,2}", complete_multipartite({2, 2}), {1, 2, 3}});
    cases.push_back({"K_{1,2,2}", complete_multipartite({1, 2, 2}), {1, 2, 3}});
    cases.push_back({"co-C_6", complement(cycle(6)), {3}});
    cases.push_back({"Gamma_{1,(2,2)}", gamma_graph(1, {2, 2}), {2, 3}});
    cases.push_back({"Gamma_{2,(1,2)}", gamma_graph(2, {1, 2}), {2, 3}});
    for (const Case& k : cases)
        for (int r : k.rs) {
            c.run("I_" + std::to_string(r) + "(" + k.name + ") polymatroidal", [&] {
                MonomialIdeal ideal = connected_ideal(k.g, r);
                if (ideal.zero()) return ok_note("zero ideal");
                auto witness = polymatroidal_witness(ideal);
                if (witness)
                    return bad("exchange fails at pair (" + std::to_string(witness->u) + "," +
                               std::to_string(witness->v) + ")");
                return powers_have_linear_quotients(ideal, max_q, spec.field, spec.budget);
            });
        }
}

void check_T6_5(const CheckSpec& spec, std::vector<Verdict>& out) {
    Collector c{spec.id, out};
    int max_q = spec.max_q > 0 ? spec.max_q : 2;
    int max_r = spec.max_r > 0 ? spec.max_r : 3;
    for (int kprime : {1, 2})
        for (int r = 2; r <= max_r; ++r)
            for (int q = 1; q <= max_q; ++q) {
                c.run("I_" + std::to_string(r) + "(split(3,2," + std::to_string(kprime) + "))^" +
                          std::to_string(q) + " weakly polymatroidal",
                      [&] {
                          Graph g = partially_split(3, 2, kprime);
                          MonomialIdeal ideal = power(connected_ideal(g, r), q);
                          if (ideal.zero()) return ok_note("zero ideal");
                          auto witness = weakly_polymatroidal_witness(ideal, identity_order(g.n));
                          if (witness)
                              return bad("weak exchange fails at pair (" +
                                         std::to_string(witness->f) + "," +
                                         std::to_string(witness->g) + ")");
                          MonomialIdeal base = connected_ideal(g, r);
                          return powers_have_linear_quotients(base, max_q, spec.field,
                                                              spec.budget);
                      });
            }
}

}  // namespace

std::vector<Verdict> run_check(const CheckSpec& spec) {
    std::vector<Verdict> out;
    switch (spec.id) {
        case TheoremId::L3_1: check_L3_1(spec, out); break;
        case TheoremId::T3_2: check_T3_2(spec, out); break;
        case TheoremId::T3_3: check_T3_3(spec, out); break;
        case TheoremId::L3_4: check_L3_4(spec, out); break;
        case TheoremId::R3_5: check_R3_5(spec, out); break;
        case TheoremId::L3_6: check_L3_6(spec, out); break;
        case TheoremId::L3_7: check_L3_7(spec, out); break;
        case TheoremId::L3_9: check_L3_9(spec, out); break;
        case TheoremId::O3_10: check_O3_10(spec, out); break;
        case TheoremId::L3_11: check_L3_11(spec, out); break;
        case TheoremId::T4_7: run_cactus_family(spec, cactus_path_shapes(), out); break;
        case TheoremId::T4_8: run_cactus_family(spec, cactus_cycle_shapes(), out); break;
        case TheoremId::T4_9: run_cactus_family(spec, {"star3", "paw"}, out); break;
        case TheoremId::T4_11: check_T4_11(spec, out); break;
        case TheoremId::T4_13: check_T4_13(spec, out); break;
        case TheoremId::T5_1: check_T5_1(spec, out); break;
        case TheoremId::T5_2: check_T5_2(spec, out); break;
        case TheoremId::C5_3: check_C5_3(spec, out); break;
        case TheoremId::E5_6: check_E5_6(spec, out); break;
        case TheoremId::L6_1: check_L6_1(spec, out); break;
        case TheoremId::T6_2: check_T6_2(spec, out); break;
        case TheoremId::T6_3: check_T6_3(spec, out); break;
        case TheoremId::T6_5: check_T6_5(spec, out); break;
    }
    return out;
}

SuiteReport run_all(uint64_t budget, int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("CLUTTERLAB_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = int(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
        threads = std::min(threads, 8);
    }
    std::vector<TheoremId> ids = all_theorems();
    std::vector<std::vector<Verdict>> results(ids.size());
    std::mutex queue_mutex;
    size_t next = 0;
    auto worker = [&] {
        while (true) {
            size_t mine;
            {
                std::lock_guard<std::mutex> lock(queue_mutex);
                if (next >= ids.size()) return;
                mine = next++;
            }
            CheckSpec spec;
            spec.id = ids[mine];
            spec.budget = budget;
            results[mine] = run_check(spec);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    SuiteReport report;
    report.all_pass = true;
    std::set<TheoremId> passed;
    for (size_t i = 0; i < ids.size(); ++i)
        for (auto& v : results[i]) {
            if (v.outcome == Outcome::pass) passed.insert(v.id);
            if (v.outcome != Outcome::pass) report.all_pass = false;
            report.verdicts.push_back(std::move(v));
        }
    report.covered = passed.size() == ids.size();
    return report;
}

std::string verdicts_to_json(const std::vector<Verdict>& verdicts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : verdicts) {
        nlohmann::json j;
        j["theorem"] = theorem_name(v.id);
        j["instance"] = v.instance;
        j["outcome"] = v.outcome == Outcome::pass          ? "pass"
                       : v.outcome == Outcome::inconclusive ? "inconclusive"
                                                            : "fail";
        if (!v.witness.empty()) j["witness"] = v.witness;
        j["seconds"] = v.seconds;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace clutterlab
