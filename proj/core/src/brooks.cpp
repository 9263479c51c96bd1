#include "ndg/brooks.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace ndg {

namespace {

// BFS distances inside an allowed-vertex mask; -1 for unreachable/forbidden.
std::vector<int> bfs_distances(const Graph& g, int root, const std::vector<char>& allowed) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (allowed[v] && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

// Vertices of the mask ordered farthest-from-root first, root last.
std::vector<int> peel_order_from(const Graph& g, int root, const std::vector<char>& allowed) {
    auto dist = bfs_distances(g, root, allowed);
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (allowed[v] && dist[v] >= 0)
            order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] > dist[b]; });
    return order;
}

bool connected_without(const Graph& g, const std::vector<char>& allowed, int n_allowed) {
    if (n_allowed == 0)
        return true;
    int root = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (allowed[v]) {
            root = v;
            break;
        }
    auto dist = bfs_distances(g, root, allowed);
    int seen = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (allowed[v] && dist[v] >= 0)
            ++seen;
    return seen == n_allowed;
}

std::vector<int> cut_vertices(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<int> cuts;
    int timer = 0;
    // iterative DFS
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0)
            continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        disc[s] = low[s] = timer++;
        int root_children = 0;
        bool s_is_cut = false;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < g.neighbors(u).size()) {
                int v = g.neighbors(u)[idx++];
                if (disc[v] < 0) {
                    parent[v] = u;
                    if (u == s)
                        ++root_children;
                    disc[v] = low[v] = timer++;
                    stack.emplace_back(v, 0);
                } else if (v != parent[u]) {
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (p != s && low[u] >= disc[p])
                        if (std::find(cuts.begin(), cuts.end(), p) == cuts.end())
                            cuts.push_back(p);
                }
            }
        }
        if (root_children > 1)
            s_is_cut = true;
        if (s_is_cut)
            cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

// Easy Brooks case: some vertex of degree < delta inside the mask.
Coloring color_from_low_degree_root(const Graph& g, int root, const std::vector<char>& allowed,
                                    int delta, Coloring col) {
    auto order = peel_order_from(g, root, allowed);
    for (int v : order) {
        std::vector<char> used(delta + 1, 0);
        for (int u : g.neighbors(v))
            if (col[u] > 0 && col[u] <= delta)
                used[col[u]] = 1;
        int c = 1;
        while (c <= delta && used[c])
            ++c;
        if (c > delta)
            throw Error("internal: no free color in Brooks easy case");
        col[v] = c;
    }
    return col;
}

} // namespace

Coloring greedy_color(const Graph& g, const std::vector<int>& order, int k) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw Error("order is not a permutation of the vertex set");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw Error("order is not a permutation of the vertex set");
        seen[v] = 1;
    }
    Coloring col(n, 0);
    for (int v : order) {
        std::vector<char> used(k + 1, 0);
        for (int u : g.neighbors(v))
            if (col[u] > 0 && col[u] <= k)
                used[col[u]] = 1;
        int c = 1;
        while (c <= k && used[c])
            ++c;
        if (c > k)
            throw Error("not k-degenerate order");
        col[v] = c;
    }
    return col;
}

Coloring brooks_color(const Graph& g, int delta) {
    int n = g.vertex_count();
    if (delta < 1)
        throw Error("delta must be positive");
    if (n == 0)
        return {};
    if (g.max_degree() > delta)
        throw Error("degree exceeds delta");
    std::vector<char> all(n, 1);
    if (!connected_without(g, all, n))
        throw Error("graph is not connected");
    if (n == delta + 1 && g.min_degree() == delta)
        throw Error("complete graph");

    // some vertex of degree below delta: plain degeneracy order
    if (g.min_degree() < delta) {
        int root = 0;
        while (g.degree(root) >= delta)
            ++root;
        return color_from_low_degree_root(g, root, all, delta, Coloring(n, 0));
    }

    // delta-regular from here on
    if (delta == 2) {
        if (n % 2 == 1)
            throw Error("odd cycle");
        auto dist = bfs_distances(g, 0, all);
        Coloring col(n);
        for (int v = 0; v < n; ++v)
            col[v] = dist[v] % 2 + 1;
        return col;
    }

    auto cuts = cut_vertices(g);
    if (!cuts.empty()) {
        // split at the smallest cut vertex; it has degree < delta in each piece
        int v = cuts.front();
        std::vector<char> mask(n, 1);
        mask[v] = 0;
        Coloring col(n, 0);
        std::vector<char> done(n, 0);
        bool v_colored = false;
        for (int s = 0; s < n; ++s) {
            if (s == v || done[s])
                continue;
            // component of g - v containing s, plus v
            auto dist = bfs_distances(g, s, mask);
            std::vector<char> piece(n, 0);
            for (int u = 0; u < n; ++u)
                if (u != v && dist[u] >= 0) {
                    piece[u] = 1;
                    done[u] = 1;
                }
            piece[v] = 1;
            Coloring sub = color_from_low_degree_root(g, v, piece, delta, Coloring(n, 0));
            if (!v_colored) {
                for (int u = 0; u < n; ++u)
                    if (piece[u])
                        col[u] = sub[u];
                v_colored = true;
            } else {
                // permute the piece's colors so the shared cut vertex matches
                int a = sub[v], b = col[v];
                for (int u = 0; u < n; ++u)
                    if (piece[u] && u != v) {
                        int c = sub[u];
                        if (c == a)
                            c = b;
                        else if (c == b)
                            c = a;
                        col[u] = c;
                    }
            }
        }
        return col;
    }

    // 2-connected, delta-regular, not complete: find v with non-adjacent
    // neighbors x, y whose removal keeps the graph connected
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                int x = nb[a], y = nb[b];
                if (g.has_edge(x, y))
                    continue;
                std::vector<char> mask(n, 1);
                mask[x] = mask[y] = 0;
                if (!connected_without(g, mask, n - 2))
                    continue;
                Coloring col(n, 0);
                col[x] = col[y] = 1;
                return color_from_low_degree_root(g, v, mask, delta, std::move(col));
            }
    }
    throw Error("internal: no Brooks pivot found in 2-connected regular graph");
}

Coloring extend_coloring_pivot(const Graph& f, const VertexSet& s1, const VertexSet& s2,
                               int v, const PartialColoring& pre_col, int k) {
    int n = f.vertex_count();
    if (!is_vertex_set(s1, n) || !is_vertex_set(s2, n))
        throw Error("invalid vertex id in s1/s2");
    if (!set_intersection(s1, s2).empty() ||
        static_cast<int>(set_union(s1, s2).size()) != n)
        throw Error("s1 and s2 do not partition the vertex set");
    if (!set_contains(s1, v))
        throw Error("pivot not in s1");
    for (int u : s2)
        if (f.degree(u) > k)
            throw Error("s2 vertex degree exceeds k");
    for (int u : s1)
        if (u != v && !f.has_edge(v, u))
            throw Error("pivot not adjacent to all of s1");
    if (f.degree(v) >= k)
        throw Error("pivot degree not below k");
    if (static_cast<int>(pre_col.size()) != n)
        throw Error("precoloring size mismatch");
    for (int u : s1) {
        if (pre_col[u] < 1 || pre_col[u] > k)
            throw Error("precoloring not total on s1");
        for (int w : f.neighbors(u))
            if (set_contains(s1, w) && pre_col[w] == pre_col[u])
                throw Error("precoloring not proper on s1");
    }
    std::vector<char> s2v_mask(n, 0);
    for (int u : s2)
        s2v_mask[u] = 1;
    s2v_mask[v] = 1;
    if (!connected_without(f, s2v_mask, static_cast<int>(s2.size()) + 1))
        throw Error("s2 plus pivot not connected");

    Coloring col(n, 0);
    for (int u : s1)
        col[u] = pre_col[u];

    // color s2 outward from v: farthest first, each keeps a later neighbor free
    std::vector<char> s2_mask = s2v_mask;
    s2_mask[v] = 0;
    auto dist = bfs_distances(f, v, s2v_mask);
    std::vector<int> order;
    for (int u : s2)
        order.push_back(u);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] > dist[b]; });
    for (int u : order) {
        std::vector<char> used(k + 1, 0);
        for (int w : f.neighbors(u))
            if (w != v && col[w] > 0)
                used[col[w]] = 1;
        int c = 1;
        while (c <= k && used[c])
            ++c;
        if (c > k)
            throw Error("internal: no free color while extending");
        col[u] = c;
    }

    // recolor v, then swap classes so v recovers its original color
    std::vector<char> used(k + 1, 0);
    for (int w : f.neighbors(v))
        used[col[w]] = 1;
    int c = 1;
    while (c <= k && used[c])
        ++c;
    if (c > k)
        throw Error("internal: no free color for pivot");
    int original = pre_col[v];
    col[v] = c;
    if (c != original)
        for (int u = 0; u < n; ++u) {
            if (col[u] == c)
                col[u] = original;
            else if (col[u] == original)
                col[u] = c;
        }
    return col;
}

} // namespace ndg
