#include "clutterlab/graph.hpp"

#include <algorithm>
#include <deque>

namespace clutterlab {

Graph complement(const Graph& g) {
    Graph c(g.n);
    c.labels = g.labels;
    for (int u = 0; u < g.n; ++u) {
        c.adj[u] = g.adj[u].complemented();
        c.adj[u].reset(u);
    }
    return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n) throw std::invalid_argument("subset universe mismatch");
    std::vector<int> verts = s.members();
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = int(i);
    Graph h(int(verts.size()));
    h.labels.reserve(verts.size());
    for (int v : verts) h.labels.push_back(g.label(v));
    for (size_t i = 0; i < verts.size(); ++i) {
        VertexSet nb = g.adj[verts[i]] & s;
        nb.for_each([&](int w) { h.adj[i].set(pos[w]); });
    }
    return h;
}

namespace {

// BFS closure of {start} inside `allowed`.
VertexSet reach_within(const Graph& g, const VertexSet& allowed, int start) {
    VertexSet seen(g.n);
    seen.set(start);
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        VertexSet next = (g.adj[u] & allowed) - seen;
        next.for_each([&](int v) {
            seen.set(v);
            queue.push_back(v);
        });
    }
    return seen;
}

}  // namespace

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("empty subset has no connectivity status");
    if (s.universe() != g.n) throw std::invalid_argument("subset universe mismatch");
    return reach_within(g, s, s.min()).count() == s.count();
}

std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> parts;
    VertexSet remaining = s;
    while (!remaining.empty()) {
        VertexSet comp = reach_within(g, remaining, remaining.min());
        parts.push_back(comp);
        remaining -= comp;
    }
    return parts;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components_within(g, VertexSet::full(g.n));
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return connected_components(g).size() == 1;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(g.n, -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        bool hit = false;
        g.adj[w].for_each([&](int x) {
            if (dist[x] < 0) {
                dist[x] = dist[w] + 1;
                if (x == v) hit = true;
                queue.push_back(x);
            }
        });
        if (hit) return dist[v];
    }
    return std::nullopt;
}

bool is_clique_set(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.members();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adj[verts[i]].test(verts[j])) return false;
    return true;
}

bool is_simplicial_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    return is_clique_set(g, g.adj[v]);
}

bool is_chordal_graph(const Graph& g) {
    // Maximum-cardinality search, then check the reverse order is a perfect
    // elimination ordering.
    if (g.n == 0) return true;
    std::vector<int> weight(g.n, 0);
    std::vector<bool> numbered(g.n, false);
    std::vector<int> order;  // MCS visiting order
    order.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        order.push_back(best);
        g.adj[best].for_each([&](int w) {
            if (!numbered[w]) ++weight[w];
        });
    }
    // Elimination order = reverse of MCS order. For each vertex, its
    // later-eliminated neighbors minus the first of them must be adjacent to
    // that first one.
    std::vector<int> elim_pos(g.n);
    for (int i = 0; i < g.n; ++i) elim_pos[order[g.n - 1 - i]] = i;
    for (int v = 0; v < g.n; ++v) {
        int first = -1;
        VertexSet later(g.n);
        g.adj[v].for_each([&](int w) {
            if (elim_pos[w] > elim_pos[v]) {
                later.set(w);
                if (first < 0 || elim_pos[w] < elim_pos[first]) first = w;
            }
        });
        if (first < 0) continue;
        later.reset(first);
        if (!later.is_subset_of(g.adj[first])) return false;
    }
    return true;
}

std::vector<VertexSet> join_decomposition(const Graph& g) {
    return connected_components(complement(g));
}

bool is_cut_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    VertexSet rest = VertexSet::full(g.n);
    rest.reset(v);
    size_t before = connected_components(g).size();
    size_t after = rest.empty() ? 0 : connected_components_within(g, rest).size();
    return after > before;
}

Graph split_vertex(const Graph& g, int x, const std::vector<VertexSet>& parts) {
    g.check_vertex(x);
    VertexSet covered(g.n);
    for (const auto& p : parts) {
        if (p.universe() != g.n) throw std::invalid_argument("part universe mismatch");
        if (p.intersects(covered)) throw std::invalid_argument("parts overlap");
        covered |= p;
    }
    if (covered != g.adj[x]) throw std::invalid_argument("parts do not partition N(x)");

    int m = int(parts.size());
    Graph h(g.n - 1 + m);
    std::vector<int> pos(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (v != x) pos[v] = next++;
    h.labels.resize(h.n);
    for (int v = 0; v < g.n; ++v)
        if (v != x) h.labels[pos[v]] = g.label(v);
    for (int j = 0; j < m; ++j) h.labels[g.n - 1 + j] = g.label(x) + "'" + std::to_string(j);

    for (int u = 0; u < g.n; ++u) {
        if (u == x) continue;
        g.adj[u].for_each([&](int v) {
            if (v != x && u < v) h.add_edge(pos[u], pos[v]);
        });
    }
    for (int j = 0; j < m; ++j)
        parts[j].for_each([&](int v) { h.add_edge(g.n - 1 + j, pos[v]); });
    return h;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<VertexSet> found;
    std::vector<bool> is_cut;
    int counter = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), num(graph.n, -1), low(graph.n, 0), is_cut(graph.n, false) {}

    void dfs(int u, int parent) {
        num[u] = low[u] = counter++;
        int children = 0;
        g.adj[u].for_each([&](int v) {
            if (v == parent) return;
            if (num[v] < 0) {
                ++children;
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if ((parent >= 0 && low[v] >= num[u]) || (parent < 0 && children > 1))
                    is_cut[u] = true;
                if (low[v] >= num[u]) pop_block(u, v);
            } else if (num[v] < num[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], num[v]);
            }
        });
    }

    void pop_block(int u, int v) {
        VertexSet block(g.n);
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.set(a);
            block.set(b);
            if (a == u && b == v) break;
        }
        found.push_back(block);
    }
};

}  // namespace

std::vector<VertexSet> blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.n; ++v)
        if (finder.num[v] < 0) finder.dfs(v, -1);
    return finder.found;
}

std::vector<int> cut_vertices(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.n; ++v)
        if (finder.num[v] < 0) finder.dfs(v, -1);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (finder.is_cut[v]) out.push_back(v);
    return out;
}

}  // namespace clutterlab
