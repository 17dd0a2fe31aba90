#include "rigidlab/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "rigidlab/errors.hpp"

namespace rigidlab {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool Hypergraph::is_simple() const {
    for (const auto& e : edges) {
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1]) return false;
    }
    return true;
}

Hypergraph make_hypergraph(int k, int vertex_count, std::vector<std::vector<int>> edges) {
    require(k >= 1, "hypergraph arity k must be >= 1");
    require(vertex_count >= 0, "vertex_count must be >= 0");
    std::set<std::vector<int>> seen;
    for (auto& e : edges) {
        require(static_cast<int>(e.size()) == k, "hyperedge arity mismatch");
        std::sort(e.begin(), e.end());
        require(e.front() >= 0 && e.back() < vertex_count, "hyperedge vertex out of range");
        require(seen.insert(e).second, "duplicate hyperedge");
    }
    Hypergraph g;
    g.k = k;
    g.vertex_count = vertex_count;
    g.edges = std::move(edges);
    return g;
}

Hypergraph complete_graph(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return make_hypergraph(2, n, std::move(edges));
}

Hypergraph path_graph(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return make_hypergraph(2, n, std::move(edges));
}

Hypergraph cycle_graph(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return make_hypergraph(2, n, std::move(edges));
}

Hypergraph star_graph(int leaves) {
    std::vector<std::vector<int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return make_hypergraph(2, leaves + 1, std::move(edges));
}

Hypergraph complete_with_loops(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) edges.push_back({i, j});
    return make_hypergraph(2, n, std::move(edges));
}

Hypergraph complete_uniform_with_repeats(int n, int k) {
    std::vector<std::vector<int>> edges;
    std::vector<int> cur(k, 0);
    // Ascending multisets over {0..n-1}.
    while (true) {
        edges.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - 1) --i;
        if (i < 0) break;
        const int v = cur[i] + 1;
        for (int j = i; j < k; ++j) cur[j] = v;
    }
    return make_hypergraph(k, n, std::move(edges));
}

int max_degree(const Hypergraph& g) {
    require(g.vertex_count > 0, "max_degree of empty vertex set");
    std::vector<int> deg(g.vertex_count, 0);
    for (const auto& e : g.edges) {
        int prev = -1;
        for (int v : e) {
            if (v != prev) deg[v]++;  // repeated vertices count once per edge
            prev = v;
        }
    }
    return *std::max_element(deg.begin(), deg.end());
}

bool is_connected(const Hypergraph& g) {
    if (g.vertex_count <= 1) return true;
    Dsu dsu(g.vertex_count);
    for (const auto& e : g.edges)
        for (size_t i = 1; i < e.size(); ++i) dsu.unite(e[0], e[i]);
    const int root = dsu.find(0);
    for (int v = 1; v < g.vertex_count; ++v)
        if (dsu.find(v) != root) return false;
    return true;
}

namespace {

// Path between a and b inside the forest `adj` (edge indices on the path),
// empty if none. Used for the fundamental cycle in the tree-packing search.
std::vector<int> forest_path(const std::vector<std::vector<std::pair<int, int>>>& adj, int a, int b) {
    if (a == b) return {};
    std::vector<int> via_edge(adj.size(), -1);
    std::vector<int> via_from(adj.size(), -1);
    std::deque<int> queue{a};
    std::vector<char> seen(adj.size(), 0);
    seen[a] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (auto [to, ei] : adj[v]) {
            if (seen[to]) continue;
            seen[to] = 1;
            via_edge[to] = ei;
            via_from[to] = v;
            queue.push_back(to);
        }
    }
    if (!seen[b]) return {};
    std::vector<int> path;
    for (int v = b; v != a; v = via_from[v]) path.push_back(via_edge[v]);
    return path;
}

}  // namespace

bool has_two_edge_disjoint_spanning_trees(const Hypergraph& g) {
    require(g.k == 2, "tree packing needs k=2");
    require(g.is_simple(), "tree packing needs a simple graph");
    const int n = g.vertex_count;
    if (n <= 1) return true;
    const int m = g.edge_count();
    if (m < 2 * (n - 1) || !is_connected(g)) return false;

    // Matroid-union augmentation over two graphic matroids: maintain two
    // forests; to admit a new edge, BFS the exchange graph (insert here,
    // kick an edge of the created cycle, re-home the kicked edge, ...).
    std::vector<int> forest_of(m, -1);  // -1 = unused
    std::vector<std::vector<std::pair<int, int>>> adj[2];
    adj[0].assign(n, {});
    adj[1].assign(n, {});
    auto insert_edge = [&](int ei, int f) {
        const auto& e = g.edges[ei];
        adj[f][e[0]].push_back({e[1], ei});
        adj[f][e[1]].push_back({e[0], ei});
        forest_of[ei] = f;
    };
    auto remove_edge = [&](int ei) {
        const int f = forest_of[ei];
        const auto& e = g.edges[ei];
        for (int v : {e[0], e[1]}) {
            auto& lst = adj[f][v];
            lst.erase(std::remove_if(lst.begin(), lst.end(),
                                     [&](const std::pair<int, int>& p) { return p.second == ei; }),
                      lst.end());
        }
        forest_of[ei] = -1;
    };

    int accepted = 0;
    for (int e0 = 0; e0 < m && accepted < 2 * (n - 1); ++e0) {
        // BFS over edges needing a home; pred[] records the kicked-out chain.
        std::vector<int> pred(m, -2), pred_forest(m, -1);
        std::deque<int> queue{e0};
        pred[e0] = -1;
        int terminal = -1, terminal_forest = -1;
        while (!queue.empty() && terminal == -1) {
            const int f = queue.front();
            queue.pop_front();
            for (int i = 0; i < 2 && terminal == -1; ++i) {
                const auto& ev = g.edges[f];
                const std::vector<int> cyc = forest_path(adj[i], ev[0], ev[1]);
                if (cyc.empty()) {
                    terminal = f;
                    terminal_forest = i;
                    break;
                }
                for (int x : cyc) {
                    if (pred[x] != -2) continue;
                    pred[x] = f;
                    pred_forest[x] = i;
                    queue.push_back(x);
                }
            }
        }
        if (terminal == -1) continue;  // e0 is spanned by the union closure
        // Unwind: insert terminal into its free forest, then re-home the
        // chain back to e0, each edge taking the forest slot of the edge it
        // displaced.
        int cur = terminal;
        int dest = terminal_forest;
        while (true) {
            if (forest_of[cur] != -1) remove_edge(cur);
            insert_edge(cur, dest);
            const int p = pred[cur];
            if (p == -1) break;
            // pred[cur] displaced cur from forest pred_forest[cur]; cur has
            // now vacated it, so pred goes there.
            dest = pred_forest[cur];
            cur = p;
        }
        ++accepted;
    }
    return accepted == 2 * (n - 1);
}

Hypergraph zero_extension(const Hypergraph& g, int u, int w) {
    require(g.k == 2, "zero_extension needs k=2");
    require(u != w, "zero_extension endpoints must differ");
    require(u >= 0 && u < g.vertex_count && w >= 0 && w < g.vertex_count,
            "zero_extension vertex out of range");
    std::vector<std::vector<int>> edges = g.edges;
    const int nv = g.vertex_count;
    edges.push_back({u, nv});
    edges.push_back({w, nv});
    return make_hypergraph(2, nv + 1, std::move(edges));
}

std::vector<std::vector<int>> simple_cycles(const Hypergraph& g) {
    require(g.k == 2, "cycle enumeration needs k=2");
    const int n = g.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edges[ei];
        if (e[0] == e[1]) continue;  // loops are not simple cycles
        adj[e[0]].push_back({e[1], ei});
        adj[e[1]].push_back({e[0], ei});
    }
    std::vector<std::vector<int>> out;
    std::vector<int> path_v, path_e;
    std::vector<char> onpath(n, 0);
    // Canonical enumeration: each cycle is produced from its smallest vertex
    // s, walking only vertices > s, and once per orientation (second vertex
    // smaller than the last).
    auto dfs = [&](auto&& self, int s, int v) -> void {
        for (auto [to, ei] : adj[v]) {
            if (to == s && path_v.size() >= 3) {
                if (path_v[1] < path_v.back()) {
                    std::vector<int> cyc = path_e;
                    cyc.push_back(ei);
                    out.push_back(std::move(cyc));
                }
                continue;
            }
            if (to <= s || onpath[to]) continue;
            onpath[to] = 1;
            path_v.push_back(to);
            path_e.push_back(ei);
            self(self, s, to);
            path_e.pop_back();
            path_v.pop_back();
            onpath[to] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path_v = {s};
        path_e = {};
        std::fill(onpath.begin(), onpath.end(), 0);
        onpath[s] = 1;
        dfs(dfs, s, s);
    }
    return out;
}

bool is_nac_colouring(const Hypergraph& g, const std::vector<int>& colouring) {
    require(static_cast<int>(colouring.size()) == g.edge_count(), "colouring size mismatch");
    bool has_red = false, has_blue = false;
    for (int c : colouring) {
        require(c == 0 || c == 1, "NAC colouring must be 0/1");
        (c == 0 ? has_red : has_blue) = true;
    }
    if (!has_red || !has_blue) return false;
    for (const auto& cyc : simple_cycles(g)) {
        int red = 0, blue = 0;
        for (int ei : cyc) (colouring[ei] == 0 ? red : blue)++;
        if (red == 0 || blue == 0) continue;
        if (red < 2 || blue < 2) return false;
    }
    return true;
}

std::optional<EdgeColouring> find_nac_colouring(const Hypergraph& g) {
    require(g.k == 2 && g.is_simple(), "NAC search needs a simple graph");
    const int m = g.edge_count();
    if (m > 20) {
        throw BudgetError("NAC search is exhaustive over 2^|E|; refusing |E| > 20 (got " +
                          std::to_string(m) + ")");
    }
    if (m < 2) return std::nullopt;
    const auto cycles = simple_cycles(g);
    std::vector<unsigned> cycle_mask;
    std::vector<int> cycle_len;
    for (const auto& c : cycles) {
        unsigned mask = 0;
        for (int ei : c) mask |= 1u << ei;
        cycle_mask.push_back(mask);
        cycle_len.push_back(static_cast<int>(c.size()));
    }
    const unsigned full = (1u << m) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {  // skip monochromatic masks
        bool ok = true;
        for (size_t i = 0; i < cycle_mask.size() && ok; ++i) {
            const int blue = __builtin_popcount(cycle_mask[i] & mask);
            const int red = cycle_len[i] - blue;
            if (blue == 0 || red == 0) continue;
            if (blue < 2 || red < 2) ok = false;
        }
        if (ok) {
            EdgeColouring col;
            col.colour_of.resize(m);
            for (int i = 0; i < m; ++i) col.colour_of[i] = (mask >> i) & 1u;
            return col;
        }
    }
    return std::nullopt;
}

std::vector<int> tree_parents(const Hypergraph& g, int root) {
    require(g.k == 2, "tree ops need k=2");
    require(root >= 0 && root < g.vertex_count, "root out of range");
    require(g.edge_count() == g.vertex_count - 1 && is_connected(g) && g.is_simple(),
            "graph is not a tree");
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const auto& e : g.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> parent(g.vertex_count, -2);
    std::deque<int> queue{root};
    parent[root] = -1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int to : adj[v]) {
            if (parent[to] != -2) continue;
            parent[to] = v;
            queue.push_back(to);
        }
    }
    return parent;
}

std::vector<std::vector<int>> depth_partition(const Hypergraph& g, int root) {
    const std::vector<int> parent = tree_parents(g, root);
    std::vector<int> depth(g.vertex_count, 0);
    std::vector<std::vector<int>> levels;
    // Parents precede children in BFS order, but compute depths explicitly
    // by walking up; the tree is tiny.
    int maxd = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int d = 0;
        for (int u = v; parent[u] != -1; u = parent[u]) ++d;
        depth[v] = d;
        maxd = std::max(maxd, d);
    }
    levels.assign(maxd + 1, {});
    for (int v = 0; v < g.vertex_count; ++v) levels[depth[v]].push_back(v);
    return levels;
}

}  // namespace rigidlab
