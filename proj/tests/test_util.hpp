#ifndef NDG_TEST_UTIL_HPP
#define NDG_TEST_UTIL_HPP

#include "ndg/graph.hpp"

#include <random>

namespace test_util {

inline ndg::Graph path(int n) {
    ndg::Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline ndg::Graph cycle(int n) {
    ndg::Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

inline ndg::Graph complete(int n) {
    ndg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline ndg::Graph petersen() {
    ndg::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(i, i + 5);              // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return g;
}

inline ndg::Graph gnp(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    ndg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

} // namespace test_util

#endif
