#include "ndg/graph.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ndg {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw Error("invalid vertex id: " + std::to_string(v));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error("self-loop at vertex " + std::to_string(u));
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v)
        throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

long long Graph::edge_count() const {
    long long total = 0;
    for (const auto& a : adj_)
        total += static_cast<long long>(a.size());
    return total / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_)
        d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty())
        return 0;
    int d = degree(0);
    for (const auto& a : adj_)
        d = std::min(d, static_cast<int>(a.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool is_vertex_set(const VertexSet& s, int n) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            return false;
        if (i > 0 && s[i] <= s[i - 1])
            return false;
    }
    return true;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_vertex_set(s, g.vertex_count()))
        throw Error("invalid vertex id in induced_subgraph");
    std::vector<int> to_sub(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i)
        to_sub[s[i]] = static_cast<int>(i);
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(s.size()));
    out.original_id = s;
    for (int u : s)
        for (int v : g.neighbors(u))
            if (u < v && to_sub[v] >= 0)
                out.graph.add_edge(to_sub[u], to_sub[v]);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        VertexSet members;
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            members.push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

bool extend_clique(const Graph& g, std::vector<int>& chosen, const std::vector<int>& cand,
                   size_t start, int need) {
    if (need == 0)
        return true;
    for (size_t i = start; i + static_cast<size_t>(need) <= cand.size(); ++i) {
        int u = cand[i];
        bool ok = true;
        for (int w : chosen)
            if (!g.has_edge(u, w)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        chosen.push_back(u);
        if (extend_clique(g, chosen, cand, i + 1, need - 1))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<VertexSet> clique_in_closed_neighborhood(const Graph& g, int v, int k,
                                                       const VertexSet& within) {
    if (k < 1)
        throw Error("clique size must be positive");
    if (!set_contains(within, v))
        throw Error("pivot vertex not in search set");
    if (k == 1)
        return VertexSet{v};
    std::vector<int> cand;
    for (int u : g.neighbors(v))
        if (set_contains(within, u))
            cand.push_back(u);
    if (static_cast<int>(cand.size()) < k - 1)
        return std::nullopt;
    std::vector<int> chosen{v};
    if (!extend_clique(g, chosen, cand, 0, k - 1))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace ndg
