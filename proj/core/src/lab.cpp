#include "ndg/lab.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace ndg {

namespace {

// the definition, restated from scratch: proper, and every vertex of degree
// >= p has >= c distinct colors in its neighborhood
bool definition_holds(const Graph& g, const std::vector<int>& col, int c, long long p) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (int u : g.neighbors(v)) {
            if (col[u] == col[v])
                return false;
            seen.insert(col[u]);
        }
        if (g.degree(v) >= p && static_cast<int>(seen.size()) < c)
            return false;
    }
    return true;
}

struct Enumerator {
    const Graph& g;
    int D, c;
    long long p;
    long long budget;
    long long nodes = 0;
    Coloring col;

    bool search(int v) {
        if (++nodes > budget)
            throw Error("budget exceeded");
        if (v == g.vertex_count())
            return definition_holds(g, col, c, p);
        int top = v == 0 ? 1 : D; // fixing vertex 0 loses nothing by symmetry
        for (int color = 1; color <= top; ++color) {
            bool clash = false;
            for (int u : g.neighbors(v))
                if (u < v && col[u] == color) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            col[v] = color;
            if (search(v + 1))
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<Coloring> brute_force_ndg_exists(const Graph& g, int D, int c, long long p,
                                               long long budget) {
    if (D < 1)
        throw Error("D must be positive");
    int n = g.vertex_count();
    if (budget < 0) {
        double leaves = std::pow(static_cast<double>(D), n);
        // proper 2-colorings are scarce, so D = 2 stays cheap at any size
        if (n > 8 && leaves > 1e7 && D != 2)
            throw Error("budget exceeded");
        budget = 100000000;
    }
    if (n == 0)
        return Coloring{};
    Enumerator e{g, D, c, p, budget, 0, Coloring(n, 0)};
    if (e.search(0))
        return e.col;
    return std::nullopt;
}

Graph gen_bipartite_counterexample(int p, int D) {
    if (p < 2 || D < 2)
        throw Error("p and D must be at least 2");
    long long m = static_cast<long long>(p - 1) * D + 1;
    long long subsets = 1;
    for (int i = 0; i < p; ++i) {
        subsets = subsets * (m - i) / (i + 1);
        if (subsets > 2000000)
            throw Error("budget exceeded");
    }
    Graph g(static_cast<int>(m + subsets));
    std::vector<int> pick(p);
    std::iota(pick.begin(), pick.end(), 0);
    int id = static_cast<int>(m);
    while (true) {
        for (int e : pick)
            g.add_edge(e, id);
        ++id;
        // next p-combination of 0..m-1 in lexicographic order
        int i = p - 1;
        while (i >= 0 && pick[i] == m - p + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < p; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return g;
}

namespace {

bool contains_k_clique_around(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet closed = g.neighbors(v);
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        if (clique_in_closed_neighborhood(g, v, k, closed))
            return true;
    }
    return false;
}

std::optional<Graph> pair_stubs_once(int n, int D, std::mt19937_64& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * D);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < D; ++i)
            stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);

    auto key = [n](int u, int v) {
        if (u > v)
            std::swap(u, v);
        return static_cast<long long>(u) * n + v;
    };
    std::set<long long> used;
    std::vector<std::pair<int, int>> pairs(stubs.size() / 2);
    for (size_t i = 0; i < pairs.size(); ++i)
        pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};

    // validate pairs left to right; a loop or duplicate is repaired by
    // exchanging an endpoint with a random already-validated pair
    long long attempts = 0;
    const long long cap = 200LL * n * D + 1000;
    for (size_t i = 0; i < pairs.size();) {
        auto [u, v] = pairs[i];
        if (u != v && !used.count(key(u, v))) {
            used.insert(key(u, v));
            ++i;
            continue;
        }
        if (++attempts > cap || i == 0)
            return std::nullopt;
        std::uniform_int_distribution<size_t> pick(0, i - 1);
        size_t j = pick(rng);
        auto [x, y] = pairs[j];
        if (u == y || x == v || used.count(key(u, y)) || used.count(key(x, v)))
            continue;
        used.erase(key(x, y));
        used.insert(key(u, y));
        pairs[j] = {u, y};
        pairs[i] = {x, v}; // re-checked on the next loop pass
    }
    Graph g(n);
    for (auto [u, v] : pairs)
        g.add_edge(u, v);
    return g;
}

} // namespace

Graph gen_regular_kfree(int n, int D, uint64_t seed) {
    if (static_cast<long long>(n) * D % 2 != 0)
        throw Error("n*D must be even");
    if (n < D + 2)
        throw Error("n must be at least D+2");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto g = pair_stubs_once(n, D, rng);
        if (!g)
            continue;
        if (g->min_degree() != D || g->max_degree() != D)
            continue;
        if (contains_k_clique_around(*g, D + 1))
            continue;
        return *g;
    }
    throw Error("rejection budget exceeded");
}

LemmaInstance gen_lemma_instance(int bn, int q, int d, int a_count, uint64_t seed) {
    if (bn <= d)
        throw Error("bn must exceed d");
    if (q < 1 || d < q || a_count < 0)
        throw Error("bad parameters");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        LemmaInstance inst;
        inst.q = q;
        inst.d = d;
        inst.b_graph = Graph(bn);
        std::vector<int> deg(bn, 0);
        // connected base: random tree, then extra edges under a degree cap
        const int cap = std::max(3, std::min(8, d - (a_count + q - 1) / q));
        for (int v = 1; v < bn; ++v) {
            std::uniform_int_distribution<int> parent(0, v - 1);
            int u = parent(rng);
            for (int tries = 0; deg[u] >= cap && tries < 32; ++tries)
                u = parent(rng);
            inst.b_graph.add_edge(u, v);
            ++deg[u];
            ++deg[v];
        }
        std::uniform_int_distribution<int> anyv(0, bn - 1);
        for (int e = 0; e < bn; ++e) {
            int u = anyv(rng), v = anyv(rng);
            if (u == v || deg[u] >= cap || deg[v] >= cap || inst.b_graph.has_edge(u, v))
                continue;
            inst.b_graph.add_edge(u, v);
            ++deg[u];
            ++deg[v];
        }
        std::vector<int> pool(bn);
        std::iota(pool.begin(), pool.end(), 0);
        for (int a = 0; a < a_count; ++a) {
            std::uniform_int_distribution<int> size_pick(d, bn);
            int s = size_pick(rng);
            for (int i = 0; i < s; ++i) {
                std::uniform_int_distribution<int> j(i, bn - 1);
                std::swap(pool[i], pool[j(rng)]);
            }
            VertexSet cs(pool.begin(), pool.begin() + s);
            std::sort(cs.begin(), cs.end());
            inst.cross.push_back(std::move(cs));
        }
        // trim cross edges wherever the per-vertex bound fails
        bool ok = true;
        for (int v = 0; v < bn && ok; ++v) {
            while (inst.b_graph.degree(v) + (inst.a_degree(v) + q - 1) / q > d) {
                bool trimmed = false;
                for (auto& cs : inst.cross)
                    if (static_cast<int>(cs.size()) > d && set_contains(cs, v)) {
                        cs.erase(std::lower_bound(cs.begin(), cs.end(), v));
                        trimmed = true;
                        break;
                    }
                if (!trimmed) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok)
            continue;
        if (check_preconditions(inst, true).ok())
            return inst;
    }
    throw Error("resample budget exceeded");
}

} // namespace ndg
