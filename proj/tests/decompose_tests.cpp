#include "ndg/decompose.hpp"
#include "ndg/error.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace ndg;
using namespace test_util;

namespace {

AlphaVector av_of(std::vector<int> alphas) {
    AlphaVector av;
    av.alphas = std::move(alphas);
    av.D = std::accumulate(av.alphas.begin(), av.alphas.end(), 0);
    return av;
}

int mono_degree(const Graph& g, const Coloring& col, int v) {
    int d = 0;
    for (int u : g.neighbors(v))
        if (col[u] == col[v])
            ++d;
    return d;
}

} // namespace

TEST_CASE("alpha_split") {
    AlphaVector a = alpha_split(7, 3);
    CHECK(a.alphas == std::vector<int>{3, 2, 2});
    CHECK(a.D == 7);
    CHECK(alpha_split(6, 3).alphas == std::vector<int>{2, 2, 2});
    CHECK_THROWS_WITH_AS(alpha_split(5, 3), "alpha below 2", Error);
    CHECK(alpha_split(252, 3).alphas == std::vector<int>{84, 84, 84});
    CHECK(alpha_split(7, 3).lcm() == 6);
}

TEST_CASE("phi") {
    CHECK(phi(complete(3), {1, 1, 1}, av_of({2, 2, 2})) == Rational(3, 2));
    CHECK(phi(cycle(4), {1, 2, 1, 2}, av_of({2, 2})) == Rational(0));
    CHECK(phi(path(3), {1, 1, 1}, av_of({2, 3})) == Rational(1));
}

TEST_CASE("recolor_delta") {
    Graph k3 = complete(3);
    AlphaVector av = av_of({2, 2, 2});
    CHECK(recolor_delta(k3, {1, 1, 1}, 0, 2, av) == Rational(-1));
    CHECK(recolor_delta(k3, {1, 1, 1}, 0, 1, av) == Rational(0));
    Graph iso(2);
    CHECK(recolor_delta(iso, {1, 1}, 0, 2, av_of({2, 2})) == Rational(0));

    // delta matches the recomputed difference on random states
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(10, 0.4, 500 + seed);
        std::mt19937_64 rng(seed);
        Coloring col(10);
        for (auto& c : col)
            c = static_cast<int>(rng() % 3) + 1;
        for (int v = 0; v < 10; ++v)
            for (int j = 1; j <= 3; ++j) {
                Coloring moved = col;
                moved[v] = j;
                CHECK(recolor_delta(g, col, v, j, av) ==
                      phi(g, moved, av) - phi(g, col, av));
            }
    }
}

TEST_CASE("descend_phi reaches the K4 optimum") {
    AlphaVector av = av_of({2, 2});
    Graph k4 = complete(4);
    // reference minimum by exhaustion over all 2-colorings
    Rational best(1000);
    for (int mask = 0; mask < 16; ++mask) {
        Coloring col(4);
        for (int v = 0; v < 4; ++v)
            col[v] = (mask >> v) & 1 ? 2 : 1;
        best = std::min(best, phi(k4, col, av));
    }
    CHECK(best == Rational(1));
    Coloring out = descend_phi(k4, {1, 1, 1, 1}, av);
    CHECK(phi(k4, out, av) == Rational(1));
}

TEST_CASE("descend_phi leaves proper colorings alone") {
    Graph c6 = cycle(6);
    Coloring proper{1, 2, 1, 2, 1, 2};
    CHECK(descend_phi(c6, proper, av_of({2, 2})) == proper);
    Graph empty(0);
    CHECK(descend_phi(empty, {}, av_of({2, 2})).empty());
}

TEST_CASE("descent output satisfies the local-minimum structure") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gnp(14, 0.5, 640 + seed);
        AlphaVector av = av_of({3, 2, 2});
        if (g.max_degree() > av.D)
            continue;
        Coloring col(14);
        for (int v = 0; v < 14; ++v)
            col[v] = v % 3 + 1;
        DescentStats stats;
        col = descend_phi(g, std::move(col), av, &stats);
        CHECK(stats.moves <= g.edge_count() * av.lcm());
        for (int v = 0; v < 14; ++v) {
            for (int j = 1; j <= 3; ++j)
                CHECK(recolor_delta(g, col, v, j, av) >= Rational(0));
            int i = col[v];
            std::vector<int> m(4, 0);
            for (int u : g.neighbors(v))
                ++m[col[u]];
            // p1: monochromatic degree bounded by alpha
            CHECK(m[i] <= av.alphas[i - 1]);
            // p2: at the bound, every other class is seen exactly alpha_j times
            if (m[i] == av.alphas[i - 1])
                for (int j = 1; j <= 3; ++j)
                    if (j != i)
                        CHECK(m[j] == av.alphas[j - 1]);
            // p3: a same-color neighbor forces all colors present
            if (m[i] >= 1)
                for (int j = 1; j <= 3; ++j)
                    if (j != i)
                        CHECK(m[j] >= 1);
        }
    }
}

TEST_CASE("find_large_clique") {
    AlphaVector av = av_of({2, 2});
    SUBCASE("monochromatic triangle found") {
        auto hit = find_large_clique(complete(3), {1, 1, 1}, av);
        REQUIRE(hit.has_value());
        CHECK(hit->first == 1);
        CHECK(hit->second == VertexSet{0, 1, 2});
    }
    SUBCASE("proper coloring has none") {
        CHECK(!find_large_clique(cycle(4), {1, 2, 1, 2}, av));
    }
    SUBCASE("triangle-free monochromatic C5") {
        CHECK(!find_large_clique(cycle(5), {1, 1, 1, 1, 1}, av));
    }
    SUBCASE("precondition enforced") {
        CHECK_THROWS_WITH_AS(find_large_clique(complete(4), {1, 1, 1, 1}, av),
                             "monochromatic degree exceeds alpha", Error);
    }
}

TEST_CASE("eliminate_large_cliques certifies K5") {
    AlphaVector av = av_of({2, 2});
    Graph k5 = complete(5);
    Coloring col = descend_phi(k5, {1, 1, 1, 1, 1}, av);
    auto res = eliminate_large_cliques(k5, col, av);
    auto* cert = std::get_if<CliqueCertificate>(&res);
    REQUIRE(cert);
    CHECK(cert->vertices == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("eliminate_large_cliques keeps proper colorings") {
    AlphaVector av = av_of({2, 2});
    Graph c4 = cycle(4);
    auto res = eliminate_large_cliques(c4, {1, 2, 1, 2}, av);
    CHECK(std::get<Coloring>(res) == Coloring{1, 2, 1, 2});
}

TEST_CASE("eliminate_large_cliques clears the C6 plus K3 obstruction") {
    Graph g(9); // C6 on 0..5, K3 on 6..8
    for (int v = 0; v < 6; ++v)
        g.add_edge(v, (v + 1) % 6);
    g.add_edge(6, 7);
    g.add_edge(6, 8);
    g.add_edge(7, 8);
    AlphaVector av = av_of({2, 2});
    Coloring col = descend_phi(g, Coloring(9, 1), av);
    auto res = eliminate_large_cliques(g, col, av);
    auto* out = std::get_if<Coloring>(&res);
    REQUIRE(out);
    CHECK(!find_large_clique(g, *out, av));
    for (int v = 0; v < 9; ++v)
        for (int j = 1; j <= 2; ++j)
            CHECK(recolor_delta(g, *out, v, j, av) >= Rational(0));
}

TEST_CASE("decompose_lovasz on the Petersen graph") {
    auto res = decompose_lovasz(petersen(), alpha_split(4, 2));
    auto* dec = std::get_if<Decomposition>(&res);
    REQUIRE(dec);
    CHECK(verify_decomposition(petersen(), *dec).ok());
    for (const auto& cert : dec->certificates) {
        CHECK(cert.max_degree <= 2);
        CHECK(cert.clique_free);
    }
}

TEST_CASE("decompose_lovasz certifies complete graphs") {
    auto res = decompose_lovasz(complete(5), alpha_split(4, 2));
    REQUIRE(std::holds_alternative<CliqueCertificate>(res));
    CHECK(std::get<CliqueCertificate>(res).vertices.size() == 5);
}

TEST_CASE("decompose_lovasz on the edgeless graph") {
    auto res = decompose_lovasz(Graph(5), alpha_split(4, 2));
    auto* dec = std::get_if<Decomposition>(&res);
    REQUIRE(dec);
    CHECK(verify_decomposition(Graph(5), *dec).ok());
}

TEST_CASE("clique-free graphs always decompose") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gnp(12, 0.45, 71 + seed);
        int D = std::max(4, g.max_degree());
        AlphaVector av = alpha_split(D, 2);
        // skip the rare K_{D+1} (needs D+1 mutually adjacent vertices)
        bool has_full_clique = false;
        VertexSet all(12);
        std::iota(all.begin(), all.end(), 0);
        for (int v = 0; v < 12 && !has_full_clique; ++v)
            has_full_clique = clique_in_closed_neighborhood(g, v, D + 1, all).has_value();
        if (has_full_clique)
            continue;
        auto res = decompose_lovasz(g, av);
        auto* dec = std::get_if<Decomposition>(&res);
        REQUIRE(dec);
        CHECK(verify_decomposition(g, *dec).ok());
    }
}

TEST_CASE("verify_decomposition flags violations") {
    Graph k3 = complete(3);
    AlphaVector av = av_of({2, 2});
    Decomposition dec;
    dec.alphas = av;
    dec.parts = {{0, 1, 2}, {}};
    dec.certificates.resize(2);
    Report rep = verify_decomposition(k3, dec);
    bool clique_violation = false;
    for (const auto& v : rep.violations)
        clique_violation |= v.kind == "clique";
    CHECK(clique_violation);

    dec.parts = {{0, 1}, {}};
    rep = verify_decomposition(k3, dec);
    bool coverage = false;
    for (const auto& v : rep.violations)
        coverage |= v.kind == "coverage";
    CHECK(coverage);
}
