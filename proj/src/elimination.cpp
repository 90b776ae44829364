#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "clutterlab/clutter.hpp"
#include "clutterlab/families.hpp"

namespace clutterlab {

std::optional<CertificateViolation> verify_certificate(const Clutter& c,
                                                       const EliminationCertificate& cert) {
    Clutter current = c;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const VertexSet& sigma = cert.steps[i];
        if (sigma.universe() != c.n || sigma.count() != c.d - 1)
            return CertificateViolation{int(i), "step is not a (d-1)-subset of the ground set"};
        VertexSet nb = closed_neighborhood(current, sigma);
        if (nb == sigma)
            return CertificateViolation{int(i), "step is not a maximal subedge"};
        if (!is_clique(current, nb))
            return CertificateViolation{int(i), "step is not simplicial"};
        current = delete_subedge(current, sigma);
    }
    if (!current.empty_edges())
        return CertificateViolation{-1, "residual clutter is nonempty"};
    return std::nullopt;
}

namespace {

struct Searcher {
    uint64_t budget;
    uint64_t expansions = 0;
    bool out_of_budget = false;
    std::unordered_set<uint64_t> dead;
    std::vector<VertexSet> steps;

    bool dfs(const Clutter& state) {
        if (state.empty_edges()) return true;
        uint64_t h = state.canonical_hash();
        if (dead.count(h)) return false;
        if (expansions >= budget) {
            out_of_budget = true;
            return false;
        }
        ++expansions;
        for (const VertexSet& sigma : simplicial_maximal_subedges(state)) {
            steps.push_back(sigma);
            if (dfs(delete_subedge(state, sigma))) return true;
            steps.pop_back();
            if (out_of_budget) return false;
        }
        dead.insert(h);
        return false;
    }
};

}  // namespace

SearchResult find_elimination_order(const Clutter& c, SearchStrategy strategy, uint64_t budget) {
    if (strategy == SearchStrategy::greedy) {
        Clutter current = c;
        EliminationCertificate cert;
        uint64_t expansions = 0;
        while (!current.empty_edges()) {
            if (expansions >= budget)
                return SearchResult{SearchOutcome::exhausted, std::nullopt, expansions};
            ++expansions;
            auto sims = simplicial_maximal_subedges(current);
            if (sims.empty()) {
                // a stuck root refutes (no strategy has a first move); a
                // deeper dead end only exhausts this heuristic
                auto outcome =
                    cert.steps.empty() ? SearchOutcome::refuted : SearchOutcome::exhausted;
                return SearchResult{outcome, std::nullopt, expansions};
            }
            cert.steps.push_back(sims.front());
            current = delete_subedge(current, sims.front());
        }
        return SearchResult{SearchOutcome::found, cert, expansions};
    }

    Searcher searcher;
    searcher.budget = budget;
    if (searcher.dfs(c))
        return SearchResult{SearchOutcome::found, EliminationCertificate{searcher.steps},
                            searcher.expansions};
    auto outcome = searcher.out_of_budget ? SearchOutcome::exhausted : SearchOutcome::refuted;
    return SearchResult{outcome, std::nullopt, searcher.expansions};
}

EliminationCertificate elim_complete(int n, int r) {
    if (r < 1 || r + 1 > n) throw std::invalid_argument("need 1 <= r and r+1 <= n");
    EliminationCertificate cert;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    while (int(verts.size()) > r + 1) {
        int v0 = verts.front();
        std::vector<int> pool(verts.begin() + 1, verts.end() - 1);
        for_each_subset_of(pool, r - 1, n, [&](const VertexSet& rest) {
            VertexSet sigma = rest;
            sigma.set(v0);
            cert.steps.push_back(sigma);
            return true;
        });
        verts.erase(verts.begin());
    }
    VertexSet last(n);
    for (int i = 0; i < r; ++i) last.set(verts[i]);
    cert.steps.push_back(last);
    return cert;
}

EliminationCertificate elim_cycle(int n, int r) {
    if (n < 3 || r < 2) throw std::invalid_argument("need n >= 3 and r >= 2");
    EliminationCertificate cert;
    if (r + 1 > n) return cert;  // no connected (r+1)-subsets exist
    if (r + 1 == n) {
        VertexSet sigma(n);
        for (int i = 0; i < r; ++i) sigma.set(i);
        cert.steps.push_back(sigma);
        return cert;
    }
    // arcs through vertex 0 containing both neighbors, with 0 removed
    std::vector<VertexSet> head;
    for (int k = 1; k <= r - 1; ++k) {
        VertexSet sigma(n);
        for (int i = 1; i <= k; ++i) sigma.set(n - i);
        for (int i = 1; i <= r - k; ++i) sigma.set(i);
        head.push_back(sigma);
    }
    std::sort(head.begin(), head.end(), VertexSet::lex_less);
    cert.steps.insert(cert.steps.end(), head.begin(), head.end());

    VertexSet up(n);
    for (int i = 0; i < r; ++i) up.set(i);
    cert.steps.push_back(up);
    VertexSet down(n);
    down.set(0);
    for (int i = 1; i <= r - 1; ++i) down.set(n - i);
    cert.steps.push_back(down);

    // remaining edges live on the path 1-2-...-(n-1); when n = r+2 the head
    // steps have already consumed its single connected (r+1)-set
    if (n > r + 2) {
        Graph remainder(n);
        for (int i = 1; i + 1 < n; ++i) remainder.add_edge(i, i + 1);
        EliminationCertificate tail = elim_block_graph(remainder, r);
        cert.steps.insert(cert.steps.end(), tail.steps.begin(), tail.steps.end());
    }
    return cert;
}

EliminationCertificate elim_block_graph(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (!is_block_graph(g)) throw std::invalid_argument("not a block graph");
    EliminationCertificate cert;
    VertexSet alive = VertexSet::full(g.n);
    while (true) {
        Graph sub = induced_subgraph(g, alive);
        std::vector<int> map = alive.members();
        // smallest-anchored component still large enough to host edges
        std::vector<VertexSet> comps = connected_components(sub);
        const VertexSet* target = nullptr;
        for (const auto& comp : comps)
            if (comp.count() >= r + 1 && (!target || comp.min() < target->min())) target = &comp;
        if (!target) break;

        std::vector<VertexSet> comp_blocks;
        for (const auto& b : blocks(sub))
            if (b.is_subset_of(*target)) comp_blocks.push_back(b);
        std::vector<int> cuts = cut_vertices(sub);
        VertexSet cut_set(sub.n);
        for (int v : cuts) cut_set.set(v);

        VertexSet leaf(sub.n);
        int x1_local = -1;
        if (comp_blocks.size() == 1) {
            leaf = comp_blocks.front();
        } else {
            bool have = false;
            for (const auto& b : comp_blocks) {
                if ((b & cut_set).count() != 1) continue;
                if (!have || VertexSet::lex_less(b, leaf)) {
                    leaf = b;
                    have = true;
                }
            }
            x1_local = (leaf & cut_set).min();
        }
        VertexSet choice = leaf;
        if (x1_local >= 0) choice.reset(x1_local);
        int x0_local = choice.min();

        int x0 = map[x0_local];
        int x1 = x1_local >= 0 ? map[x1_local] : -1;
        VertexSet block_orig(g.n);
        leaf.for_each([&](int v) { block_orig.set(map[v]); });

        // far edges: connected (r+1)-sets through x0 that leave the leaf
        // block; each must pass through the cut vertex, which gets removed
        if (x1 >= 0) {
            std::vector<int> others;
            alive.for_each([&](int v) {
                if (v != x0) others.push_back(v);
            });
            std::vector<VertexSet> far;
            for_each_subset_of(others, r, g.n, [&](const VertexSet& rest) {
                VertexSet e = rest;
                e.set(x0);
                if (!e.is_subset_of(block_orig) && is_connected_subset(g, e)) {
                    VertexSet sigma = e;
                    sigma.reset(x1);
                    far.push_back(sigma);
                }
                return true;
            });
            std::sort(far.begin(), far.end(), VertexSet::lex_less);
            cert.steps.insert(cert.steps.end(), far.begin(), far.end());
        }

        // edges through x0 inside the leaf block: lex peel avoiding the
        // largest other block vertex
        if (block_orig.count() >= r + 1) {
            VertexSet rest_of_block = block_orig;
            rest_of_block.reset(x0);
            int last = rest_of_block.max();
            rest_of_block.reset(last);
            for_each_subset_of(rest_of_block.members(), r - 1, g.n, [&](const VertexSet& rest) {
                VertexSet sigma = rest;
                sigma.set(x0);
                cert.steps.push_back(sigma);
                return true;
            });
        }
        alive.reset(x0);
    }
    return cert;
}

std::variant<std::vector<VertexSet>, ConeEliminationFailure> eliminate_cone(
    const Clutter& c, const VertexSet& b, const VertexSet& apex) {
    int t = b.count();
    if (t < 1 || t > c.d - 1)
        return ConeEliminationFailure{"b must have between 1 and d-1 vertices"};
    if (b.intersects(apex)) return ConeEliminationFailure{"b and apex overlap"};
    {
        bool b_in_some_edge = false;
        for (const auto& e : c.edges)
            if (b.is_subset_of(e)) b_in_some_edge = true;
        if (!b_in_some_edge) return std::vector<VertexSet>{};  // nothing to sweep
    }
    VertexSet cone = b | apex;
    if (cone.count() >= c.d) {
        bool hypothesis1 = true;
        for_each_subset_of(cone.members(), c.d, c.n, [&](const VertexSet& s) {
            if (!c.has_edge(s)) {
                hypothesis1 = false;
                return false;
            }
            return true;
        });
        if (!hypothesis1)
            return ConeEliminationFailure{"a d-subset of b+apex is missing from the clutter"};
    }
    for (const auto& e : c.edges)
        if (b.is_subset_of(e) && !e.is_subset_of(cone))
            return ConeEliminationFailure{"an edge containing b leaves b+apex"};

    auto contained_in_some_edge = [](const Clutter& cl, const VertexSet& sigma) {
        for (const auto& e : cl.edges)
            if (sigma.is_subset_of(e)) return true;
        return false;
    };

    std::vector<VertexSet> steps;
    Clutter work = c;
    auto emit = [&](const VertexSet& sigma) -> bool {
        VertexSet nb = closed_neighborhood(work, sigma);
        if (nb == sigma || !is_clique(work, nb)) return false;
        steps.push_back(sigma);
        work = delete_subedge(work, sigma);
        return true;
    };

    if (t == c.d - 1) {
        if (contained_in_some_edge(work, b) && !emit(b))
            return ConeEliminationFailure{"b itself is not simplicial"};
    } else {
        std::vector<int> xs = apex.members();
        for (size_t k = 0; k + 1 < xs.size(); ++k) {
            std::vector<int> pool(xs.begin() + k + 1, xs.end() - 1);
            bool ok = true;
            for_each_subset_of(pool, c.d - 2 - t, c.n, [&](const VertexSet& rest) {
                VertexSet sigma = rest | b;
                sigma.set(xs[k]);
                if (contained_in_some_edge(work, sigma) && !emit(sigma)) {
                    ok = false;
                    return false;
                }
                return true;
            });
            if (!ok)
                return ConeEliminationFailure{"sweep produced a non-simplicial subedge"};
        }
    }
    for (const auto& e : work.edges)
        if (b.is_subset_of(e))
            return ConeEliminationFailure{"residual clutter still has an edge containing b"};
    return steps;
}

std::pair<VertexSet, VertexSet> reduced_form(const Graph& gbar, const VertexSet& e, int x) {
    if (!e.test(x)) throw std::invalid_argument("x must belong to e");
    if (!is_simplicial_vertex(gbar, x))
        throw std::invalid_argument("x is not simplicial in gbar");
    Graph sub = induced_subgraph(gbar, e);
    if (join_decomposition(sub).size() < 2)
        throw std::invalid_argument("gbar[e] is not a nontrivial join");
    VertexSet d(gbar.n);
    e.for_each([&](int v) {
        if (v == x) return;
        VertexSet others = e;
        others.reset(v);
        if (others.is_subset_of(gbar.adj[v])) d.set(v);  // universal inside gbar[e]
    });
    if (d.empty()) throw std::logic_error("no universal vertex outside x; preconditions violated");
    return {e - d, d};
}

IsoOutcome clutters_equal_up_to_relabeling(const Clutter& a, const Clutter& b, uint64_t budget) {
    if (a.d != b.d || a.edges.size() != b.edges.size()) return IsoOutcome::distinct;
    if (a.edges.empty()) return IsoOutcome::isomorphic;

    auto support_degrees = [](const Clutter& c) {
        std::vector<int> deg(c.n, 0);
        for (const auto& e : c.edges) e.for_each([&](int v) { ++deg[v]; });
        return deg;
    };
    std::vector<int> deg_a = support_degrees(a);
    std::vector<int> deg_b = support_degrees(b);
    std::vector<int> verts_a, verts_b;
    for (int v = 0; v < a.n; ++v)
        if (deg_a[v]) verts_a.push_back(v);
    for (int v = 0; v < b.n; ++v)
        if (deg_b[v]) verts_b.push_back(v);
    if (verts_a.size() != verts_b.size()) return IsoOutcome::distinct;
    {
        std::vector<int> sa, sb;
        for (int v : verts_a) sa.push_back(deg_a[v]);
        for (int v : verts_b) sb.push_back(deg_b[v]);
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return IsoOutcome::distinct;
    }

    std::vector<int> image(a.n, -1);
    std::vector<bool> used(b.n, false);
    uint64_t tried = 0;
    bool out_of_budget = false;

    auto edges_match = [&]() {
        for (const auto& e : a.edges) {
            VertexSet mapped(b.n);
            e.for_each([&](int v) { mapped.set(image[v]); });
            if (!b.has_edge(mapped)) return false;
        }
        return true;
    };

    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
        if (tried >= budget) {
            out_of_budget = true;
            return false;
        }
        if (i == verts_a.size()) {
            ++tried;
            return edges_match();
        }
        int va = verts_a[i];
        for (int vb : verts_b) {
            if (used[vb] || deg_b[vb] != deg_a[va]) continue;
            ++tried;
            image[va] = vb;
            used[vb] = true;
            if (assign(i + 1)) return true;
            used[vb] = false;
            image[va] = -1;
            if (out_of_budget) return false;
        }
        return false;
    };

    if (assign(0)) return IsoOutcome::isomorphic;
    return out_of_budget ? IsoOutcome::exhausted : IsoOutcome::distinct;
}

}  // namespace clutterlab
