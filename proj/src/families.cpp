#include "clutterlab/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace clutterlab {

namespace {

// Seed-stable bounded integer; avoids platform-dependent distributions.
int bounded(std::mt19937_64& rng, int n) {
    return n <= 1 ? 0 : int(rng() % uint64_t(n));
}

}  // namespace

Graph grid(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("grid dimensions must be positive");
    Graph g(n * m);
    g.labels.resize(g.n);
    auto id = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            g.labels[id(i, j)] =
                "x_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            if (j + 1 < m) g.add_edge(id(i, j), id(i, j + 1));
            if (i + 1 < n) g.add_edge(id(i, j), id(i + 1, j));
        }
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty part list");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("parts must be positive");
        n += p;
    }
    Graph g(n);
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), parts[i], int(i));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph gamma_graph(int p, const std::vector<int>& ms) {
    if (p < 1) throw std::invalid_argument("core size must be positive");
    if (ms.empty()) throw std::invalid_argument("empty clique list");
    int n = p;
    for (int m : ms) {
        if (m < 1) throw std::invalid_argument("peripheral counts must be positive");
        n += m;
    }
    Graph g(n);
    g.labels.resize(n);
    for (int i = 0; i < p; ++i) g.labels[i] = "x_" + std::to_string(i + 1);
    int next = p;
    for (size_t i = 0; i < ms.size(); ++i) {
        std::vector<int> clique;
        for (int c = 0; c < p; ++c) clique.push_back(c);
        for (int j = 0; j < ms[i]; ++j) {
            g.labels[next] = "y_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            clique.push_back(next++);
        }
        for (size_t a = 0; a < clique.size(); ++a)
            for (size_t b = a + 1; b < clique.size(); ++b) g.add_edge(clique[a], clique[b]);
    }
    return g;
}

Graph partially_split(int k, int s, int kprime) {
    if (k < 1 || s < 0 || kprime < 1 || kprime > k)
        throw std::invalid_argument("invalid partially split parameters");
    Graph g(k + s);
    g.labels.resize(g.n);
    for (int i = 0; i < k; ++i)
        g.labels[i] = (i < kprime ? "K'_" : "K_") + std::to_string(i + 1);
    for (int j = 0; j < s; ++j) g.labels[k + j] = "S_" + std::to_string(j + 1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    for (int i = 0; i < kprime; ++i)
        for (int j = 0; j < s; ++j) g.add_edge(i, k + j);
    return g;
}

Graph random_tree_max_degree(int n, int maxdeg, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs at least 1 vertex");
    if (n >= 3 && maxdeg < 2) throw std::invalid_argument("degree bound infeasible");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<int> pruefer(n - 2);
        std::vector<int> deg(n, 1);
        for (int& x : pruefer) {
            x = bounded(rng, n);
            ++deg[x];
        }
        if (*std::max_element(deg.begin(), deg.end()) > maxdeg) continue;
        // standard Prüfer decode
        std::vector<int> count = deg;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (count[v] == 1) leaves.insert(v);
        Graph t(n);
        for (int x : pruefer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            t.add_edge(leaf, x);
            if (--count[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin();
        int b = *std::next(leaves.begin());
        t.add_edge(a, b);
        return t;
    }
}

Graph random_connected_chordal(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least 1 vertex");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        // attach v to a clique inside the current graph: a random vertex plus
        // a greedy random subset of its neighbors that stays a clique
        int u = bounded(rng, v);
        std::vector<int> base = {u};
        std::vector<int> nb;
        g.adj[u].for_each([&](int w) {
            if (w < v) nb.push_back(w);
        });
        std::shuffle(nb.begin(), nb.end(), rng);
        for (int w : nb) {
            bool ok = true;
            for (int x : base)
                if (x != w && !g.has_edge(x, w) && x != u) ok = false;
            if (ok && bounded(rng, 2) == 0) base.push_back(w);
        }
        for (int x : base) g.add_edge(v, x);
    }
    return g;
}

bool is_block_graph(const Graph& g) {
    for (const VertexSet& b : blocks(g))
        if (!is_clique_set(g, b)) return false;
    return true;
}

Graph block_graph(const std::vector<VertexSet>& block_sets) {
    if (block_sets.empty()) throw std::invalid_argument("no blocks given");
    int n = 0;
    for (const auto& b : block_sets) {
        if (b.count() < 2) throw std::invalid_argument("blocks need at least 2 vertices");
        n = std::max(n, b.universe());
    }
    Graph g(n);
    for (const auto& b : block_sets) {
        auto verts = b.members();
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) g.add_edge(verts[i], verts[j]);
    }
    // the union must decompose into exactly the given cliques
    std::vector<VertexSet> computed = blocks(g);
    auto key = [](std::vector<VertexSet> v) {
        std::sort(v.begin(), v.end(), VertexSet::lex_less);
        return v;
    };
    std::vector<VertexSet> given = block_sets;
    for (auto& b : given)
        if (b.universe() != n) {
            VertexSet grown(n);
            b.for_each([&](int v) { grown.set(v); });
            b = grown;
        }
    if (key(std::move(given)) != key(std::move(computed)))
        throw std::invalid_argument("given cliques are not the blocks of their union");
    return g;
}

Graph random_block_graph(int max_n, uint64_t seed) {
    if (max_n < 2) throw std::invalid_argument("need room for at least one edge");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> cliques;
    int first = 2 + bounded(rng, std::min(3, max_n - 1));
    int used = first;
    {
        std::vector<int> c(first);
        for (int i = 0; i < first; ++i) c[i] = i;
        cliques.push_back(c);
    }
    while (used < max_n) {
        int extra = 1 + bounded(rng, std::min(3, max_n - used));
        int attach = bounded(rng, used);
        std::vector<int> c = {attach};
        for (int i = 0; i < extra; ++i) c.push_back(used++);
        cliques.push_back(c);
    }
    Graph g(used);
    for (const auto& c : cliques)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
    return g;
}

bool is_2k2_c4_free(const Graph& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    bool ok = true;
    for_each_subset_of(all, 4, g.n, [&](const VertexSet& s) {
        auto verts = s.members();
        int edge_count = 0;
        int degs[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (g.has_edge(verts[i], verts[j])) {
                    ++edge_count;
                    ++degs[i];
                    ++degs[j];
                }
        bool two_k2 = edge_count == 2 && degs[0] == 1 && degs[1] == 1 && degs[2] == 1 && degs[3] == 1;
        bool c4 = edge_count == 4 && degs[0] == 2 && degs[1] == 2 && degs[2] == 2 && degs[3] == 2;
        if (two_k2 || c4) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

Graph generate_2k2c4_free(int n1, int n2, bool with_c5, uint64_t seed) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("negative part size");
    int n3 = with_c5 ? 5 : 0;
    if (n1 + n2 + n3 == 0) throw std::invalid_argument("need at least one vertex");
    std::mt19937_64 rng(seed);
    while (true) {
        Graph g(n1 + n2 + n3);
        for (int i = 0; i < n2; ++i)
            for (int j = i + 1; j < n2; ++j) g.add_edge(n1 + i, n1 + j);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                if (bounded(rng, 2)) g.add_edge(i, n1 + j);
        if (with_c5) {
            int base = n1 + n2;
            for (int i = 0; i < 5; ++i) g.add_edge(base + i, base + (i + 1) % 5);
            for (int i = 0; i < n2; ++i)
                for (int j = 0; j < 5; ++j) g.add_edge(n1 + i, base + j);
        }
        if (is_2k2_c4_free(g)) return g;
    }
}

namespace {

bool skeleton_is_cactus(const Graph& t) {
    // every block is a single edge or a cycle
    for (const VertexSet& b : blocks(t)) {
        Graph sub = induced_subgraph(t, b);
        if (sub.n == 2) continue;
        bool cycle_block = sub.edge_count() == sub.n;
        for (int v = 0; v < sub.n && cycle_block; ++v)
            if (sub.degree(v) != 2) cycle_block = false;
        if (!cycle_block) return false;
    }
    return true;
}

bool looks_like_cycle(const Graph& g) {
    if (g.n < 3 || g.edge_count() != g.n || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

std::optional<DecompositionViolation> validate_decomposition(const Graph& gbar,
                                                             const CactusDecomposition& d) {
    const Graph& t = d.skeleton;
    std::set<std::pair<int, int>> piece_edges;
    for (const auto& piece : d.pieces) {
        auto [u, v] = piece.skeleton_edge;
        if (u < 0 || v < 0 || u >= t.n || v >= t.n || !t.has_edge(u, v))
            return DecompositionViolation{1, "piece references a non-edge of the skeleton"};
        if (!piece_edges.emplace(std::min(u, v), std::max(u, v)).second)
            return DecompositionViolation{1, "two pieces assigned to one skeleton edge"};
    }
    if (int(piece_edges.size()) != t.edge_count())
        return DecompositionViolation{1, "skeleton edge without a piece"};
    if (!skeleton_is_cactus(t))
        return DecompositionViolation{1, "skeleton has an edge lying on two cycles"};

    for (const auto& piece : d.pieces) {
        if (piece.vertices.universe() != gbar.n)
            return DecompositionViolation{2, "piece vertex set universe mismatch"};
        Graph sub = induced_subgraph(gbar, piece.vertices);
        if (piece.kind == PieceKind::chordal) {
            if (!is_chordal_graph(sub))
                return DecompositionViolation{
                    2, "piece " + piece.vertices.to_string() + " declared chordal is not"};
        } else {
            if (!looks_like_cycle(sub))
                return DecompositionViolation{
                    2, "piece " + piece.vertices.to_string() + " declared cycle is not"};
        }
    }

    VertexSet vertex_union(gbar.n);
    for (const auto& piece : d.pieces) vertex_union |= piece.vertices;
    if (vertex_union != VertexSet::full(gbar.n))
        return DecompositionViolation{3, "pieces do not cover every vertex"};
    Graph edge_union(gbar.n);
    for (const auto& piece : d.pieces) {
        Graph sub = induced_subgraph(gbar, piece.vertices);
        auto verts = piece.vertices.members();
        for (auto [a, b] : sub.edges()) edge_union.add_edge(verts[a], verts[b]);
    }
    for (int v = 0; v < gbar.n; ++v)
        if (edge_union.adj[v] != gbar.adj[v])
            return DecompositionViolation{3, "piece edges do not cover E(gbar) exactly"};

    for (size_t i = 0; i < d.pieces.size(); ++i)
        for (size_t j = i + 1; j < d.pieces.size(); ++j) {
            VertexSet inter = d.pieces[i].vertices & d.pieces[j].vertices;
            if (inter.count() > 1)
                return DecompositionViolation{
                    4, "pieces " + std::to_string(i) + "," + std::to_string(j) +
                           " share " + inter.to_string()};
            if (inter.count() == 1) {
                auto [a1, b1] = d.pieces[i].skeleton_edge;
                auto [a2, b2] = d.pieces[j].skeleton_edge;
                bool shares_endpoint = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
                if (!shares_endpoint)
                    return DecompositionViolation{
                        4, "pieces " + std::to_string(i) + "," + std::to_string(j) +
                               " intersect without a shared skeleton endpoint"};
            }
        }
    return std::nullopt;
}

CoChordalCactusInstance build_co_chordal_cactus(const CactusDecomposition& plan, uint64_t seed) {
    const Graph& t = plan.skeleton;
    if (!skeleton_is_cactus(t)) throw std::invalid_argument("skeleton is not a cactus");
    for (const auto& piece : plan.pieces) {
        auto [u, v] = piece.skeleton_edge;
        if (u < 0 || v < 0 || u >= t.n || v >= t.n || !t.has_edge(u, v))
            throw std::invalid_argument("piece references a non-edge of the skeleton");
    }

    std::mt19937_64 rng(seed);
    // one host connector vertex per skeleton vertex that carries a piece
    std::vector<int> connector(t.n, -1);
    int host_n = 0;
    for (const auto& piece : plan.pieces)
        for (int v : {piece.skeleton_edge.first, piece.skeleton_edge.second})
            if (connector[v] < 0) connector[v] = host_n++;
    struct Assembled {
        std::vector<int> verts;
        std::vector<std::pair<int, int>> local_edges;
    };
    std::vector<Assembled> assembled;
    for (const auto& piece : plan.pieces) {
        int want = piece.vertices.universe() > 0 ? piece.vertices.count() : piece.size;
        if (want < 2) throw std::invalid_argument("piece size must be at least 2");
        if (piece.kind == PieceKind::cycle && want < 3)
            throw std::invalid_argument("cycle pieces need length at least 3");
        Assembled a;
        a.verts.push_back(connector[piece.skeleton_edge.first]);
        a.verts.push_back(connector[piece.skeleton_edge.second]);
        for (int i = 2; i < want; ++i) a.verts.push_back(host_n++);
        if (piece.kind == PieceKind::cycle) {
            // place the two connectors at random distinct positions of the cycle
            std::vector<int> order(want);
            for (int i = 0; i < want; ++i) order[i] = i;
            std::shuffle(order.begin() + 1, order.end(), rng);
            for (int i = 0; i < want; ++i)
                a.local_edges.emplace_back(order[i], order[(i + 1) % want]);
        } else {
            Graph c = random_connected_chordal(want, rng());
            a.local_edges = c.edges();
        }
        assembled.push_back(std::move(a));
    }

    Graph gbar(host_n);
    CactusDecomposition concrete;
    concrete.skeleton = t;
    for (size_t i = 0; i < plan.pieces.size(); ++i) {
        CactusPiece piece = plan.pieces[i];
        piece.vertices = VertexSet::of(host_n, assembled[i].verts);
        piece.size = int(assembled[i].verts.size());
        concrete.pieces.push_back(piece);
        for (auto [a, b] : assembled[i].local_edges)
            gbar.add_edge(assembled[i].verts[a], assembled[i].verts[b]);
    }

    if (auto violation = validate_decomposition(gbar, concrete))
        throw std::runtime_error("generated decomposition failed validation: " +
                                 violation->detail);
    return CoChordalCactusInstance{complement(gbar), gbar, concrete};
}

}  // namespace clutterlab
