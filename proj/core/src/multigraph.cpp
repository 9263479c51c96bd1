#include "ndg/multigraph.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace ndg {

void MultiGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw Error("invalid vertex id: " + std::to_string(v));
}

MultiGraph MultiGraph::from_graph(const Graph& g) {
    MultiGraph mg(g.vertex_count());
    for (auto [u, v] : g.edges())
        mg.add_edge(u, v);
    return mg;
}

void MultiGraph::add_edge(int u, int v, int mult) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error("self-loop at vertex " + std::to_string(u));
    if (mult <= 0)
        throw Error("edge multiplicity must be positive");
    auto bump = [&](int a, int b) {
        auto& row = adj_[a];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, 0));
        if (it != row.end() && it->first == b)
            it->second += mult;
        else
            row.insert(it, {b, mult});
    };
    bump(u, v);
    bump(v, u);
}

int MultiGraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0));
    if (it != row.end() && it->first == v)
        return it->second;
    return 0;
}

long long MultiGraph::degree(int v) const {
    check_vertex(v);
    long long d = 0;
    for (auto [u, m] : adj_[v])
        d += m;
    return d;
}

Graph MultiGraph::skeleton() const {
    Graph g(vertex_count());
    for (int u = 0; u < vertex_count(); ++u)
        for (auto [v, m] : adj_[u])
            if (u < v)
                g.add_edge(u, v);
    return g;
}

PeelResult peel(const MultiGraph& mg, const VertexSet& targets, int threshold) {
    if (threshold < 1)
        throw Error("peel threshold must be positive");
    if (!is_vertex_set(targets, mg.vertex_count()))
        throw Error("invalid vertex id in peel targets");

    int n = mg.vertex_count();
    std::vector<char> alive(n, 0);
    for (int v : targets)
        alive[v] = 1;
    std::vector<long long> deg(n, 0);
    for (int v : targets)
        for (auto [u, m] : mg.incidences(v))
            if (alive[u])
                deg[v] += m;

    // FIFO over ascending ids: the whole currently-deletable batch drains
    // before vertices it exposed, so degrees never need re-sorting
    std::deque<int> queue;
    std::vector<char> queued(n, 0);
    for (int v : targets)
        if (deg[v] < threshold) {
            queue.push_back(v);
            queued[v] = 1;
        }

    std::vector<int> order;
    order.reserve(targets.size());
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        alive[v] = 0;
        order.push_back(v);
        for (auto [u, m] : mg.incidences(v))
            if (alive[u]) {
                deg[u] -= m;
                if (deg[u] < threshold && !queued[u]) {
                    queue.push_back(u);
                    queued[u] = 1;
                }
            }
    }

    if (order.size() == targets.size())
        return DeletionCertificate{std::move(order), threshold};

    CoreState core;
    core.threshold = threshold;
    core.partial_order = std::move(order);
    for (int v : targets)
        if (alive[v])
            core.remaining.push_back(v);
    return core;
}

} // namespace ndg
