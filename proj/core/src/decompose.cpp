#include "ndg/decompose.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace ndg {

long long AlphaVector::lcm() const {
    long long l = 1;
    for (int a : alphas)
        l = std::lcm(l, static_cast<long long>(a));
    return l;
}

AlphaVector alpha_split(int D, int k) {
    if (k < 1)
        throw Error("alpha_split needs at least one part");
    if (D < 2 * k)
        throw Error("alpha below 2");
    AlphaVector av;
    av.D = D;
    int base = D / k, rem = D % k;
    for (int i = 0; i < k; ++i)
        av.alphas.push_back(i < rem ? base + 1 : base);
    return av;
}

namespace {

void check_coloring(const Graph& g, const Coloring& col, const AlphaVector& av) {
    if (static_cast<int>(col.size()) != g.vertex_count())
        throw Error("coloring size does not match graph");
    for (int c : col)
        if (c < 1 || c > av.k())
            throw Error("color index out of range");
}

} // namespace

Rational phi(const Graph& g, const Coloring& col, const AlphaVector& av) {
    check_coloring(g, col, av);
    std::vector<long long> f(av.k(), 0);
    for (auto [u, v] : g.edges())
        if (col[u] == col[v])
            ++f[col[u] - 1];
    Rational total(0);
    for (int i = 0; i < av.k(); ++i)
        total += Rational(f[i], av.alphas[i]);
    return total;
}

Rational recolor_delta(const Graph& g, const Coloring& col, int v, int j,
                       const AlphaVector& av) {
    check_coloring(g, col, av);
    if (j < 1 || j > av.k())
        throw Error("color index out of range");
    int i = col[v];
    if (i == j)
        return Rational(0);
    long long mi = 0, mj = 0;
    for (int u : g.neighbors(v)) {
        if (col[u] == i)
            ++mi;
        else if (col[u] == j)
            ++mj;
    }
    return Rational(mj, av.alphas[j - 1]) - Rational(mi, av.alphas[i - 1]);
}

namespace {

/// Incrementally maintained neighbor color counts for fast descent.
struct PhiState {
    const Graph& g;
    const AlphaVector& av;
    Coloring col;
    std::vector<std::vector<int>> counts; // counts[v][c-1]

    PhiState(const Graph& graph, Coloring coloring, const AlphaVector& alphas)
        : g(graph), av(alphas), col(std::move(coloring)),
          counts(g.vertex_count(), std::vector<int>(av.k(), 0)) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int u : g.neighbors(v))
                ++counts[v][col[u] - 1];
    }

    Rational delta(int v, int j) const {
        int i = col[v];
        if (i == j)
            return Rational(0);
        return Rational(counts[v][j - 1], av.alphas[j - 1]) -
               Rational(counts[v][i - 1], av.alphas[i - 1]);
    }

    void apply(int v, int j) {
        int i = col[v];
        for (int u : g.neighbors(v)) {
            --counts[u][i - 1];
            ++counts[u][j - 1];
        }
        col[v] = j;
    }
};

} // namespace

Coloring descend_phi(const Graph& g, Coloring col, const AlphaVector& av,
                     DescentStats* stats) {
    check_coloring(g, col, av);
    if (g.max_degree() > av.D)
        throw Error("degree exceeds D");
    PhiState st(g, std::move(col), av);
    const long long bound = g.edge_count() * av.lcm();
    long long moves = 0;
    int n = g.vertex_count();
    int pos = 0;
    while (pos < n) {
        bool moved = false;
        for (int j = 1; j <= av.k(); ++j) {
            if (j == st.col[pos])
                continue;
            if (st.delta(pos, j) < Rational(0)) {
                int v = pos;
                st.apply(v, j);
                ++moves;
                if (moves > bound)
                    throw Error("descent exceeded the |E|*lcm(alpha) move bound");
                // only v and its neighbors changed; earlier vertices stay settled
                for (int u : g.neighbors(v))
                    pos = std::min(pos, u);
                moved = true;
                break;
            }
        }
        if (!moved)
            ++pos;
    }
    if (stats)
        stats->moves += moves;
    return std::move(st.col);
}

namespace {

bool has_improving_move(const Graph& g, const Coloring& col, const AlphaVector& av) {
    PhiState st(g, col, av);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int j = 1; j <= av.k(); ++j)
            if (j != col[v] && st.delta(v, j) < Rational(0))
                return true;
    return false;
}

/// Same-colored neighbors of v.  At a local minimum this has at most
/// alpha_i members, so {v} + mono(v) is the only possible large clique
/// through v.
VertexSet mono_neighbors(const Graph& g, const Coloring& col, int v) {
    VertexSet m;
    for (int u : g.neighbors(v))
        if (col[u] == col[v])
            m.push_back(u);
    return m;
}

bool pairwise_adjacent(const Graph& g, const VertexSet& s) {
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (!g.has_edge(s[a], s[b]))
                return false;
    return true;
}

std::optional<VertexSet> large_clique_at(const Graph& g, const Coloring& col,
                                         const AlphaVector& av, int v) {
    int alpha = av.alphas[col[v] - 1];
    VertexSet m = mono_neighbors(g, col, v);
    if (static_cast<int>(m.size()) > alpha)
        throw Error("monochromatic degree exceeds alpha");
    if (static_cast<int>(m.size()) < alpha)
        return std::nullopt;
    if (!pairwise_adjacent(g, m))
        return std::nullopt;
    VertexSet clique = m;
    clique.insert(std::lower_bound(clique.begin(), clique.end(), v), v);
    return clique;
}

long long count_large_cliques(const Graph& g, const Coloring& col,
                              const AlphaVector& av) {
    std::set<VertexSet> seen;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto c = large_clique_at(g, col, av, v))
            seen.insert(*c);
    return static_cast<long long>(seen.size());
}

} // namespace

std::optional<std::pair<int, VertexSet>>
find_large_clique(const Graph& g, const Coloring& col, const AlphaVector& av) {
    check_coloring(g, col, av);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto c = large_clique_at(g, col, av, v))
            return std::make_pair(col[v], *c);
    return std::nullopt;
}

namespace {

struct ChainOutcome {
    bool progress = false;
    Coloring coloring;     // when progress
    VertexSet component;   // when certified: the complete C1 + C2 block
};

std::string dump_set(const VertexSet& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

/// The chain procedure for one ordered color pair.  Returns either a
/// strictly (Phi, clique-count)-smaller coloring, or certifies that the
/// component of C1 among the two colors is a complete, isolated block.
ChainOutcome run_chain(const Graph& g, const Coloring& start, const AlphaVector& av,
                       int color_i, int color_j, const VertexSet& clique1,
                       long long& budget, std::ostream* trace) {
    Rational phi0 = phi(g, start, av);
    long long cliques0 = count_large_cliques(g, start, av);

    Coloring base = start;       // xi_1 of the current chain segment
    VertexSet c1 = clique1;
    int col_a = color_i;         // color of the segment's first clique
    int col_b = color_j;

    std::vector<Coloring> snaps{base};
    std::vector<VertexSet> cliques{c1};
    std::vector<int> recolored;
    std::vector<char> is_recolored(g.vertex_count(), 0);
    Coloring cur = base;

    auto lex_better = [&](const Coloring& cand) {
        Rational p = phi(g, cand, av);
        if (p < phi0)
            return true;
        if (p > phi0)
            return false;
        return count_large_cliques(g, cand, av) < cliques0;
    };

    while (budget-- > 0) {
        const VertexSet& c = cliques.back();
        int v = -1;
        for (int u : c)
            if (!is_recolored[u]) {
                v = u;
                break;
            }
        if (v < 0) {
            for (int u : c)
                if (u != recolored.back()) {
                    v = u;
                    break;
                }
        }
        int target = (recolored.size() % 2 == 0) ? col_b : col_a;
        cur[v] = target;
        recolored.push_back(v);
        is_recolored[v] = 1;
        if (trace)
            *trace << "chain: recolor v=" << v << " -> " << target << "\n";

        if (has_improving_move(g, cur, av)) {
            Coloring out = descend_phi(g, cur, av);
            if (trace)
                *trace << "chain: descent progress, phi " << phi(g, out, av) << "\n";
            return {true, std::move(out), {}};
        }
        auto next = large_clique_at(g, cur, av, v);
        if (!next) {
            if (trace)
                *trace << "chain: clique count dropped\n";
            return {true, cur, {}};
        }

        int revisit = -1;
        for (size_t l = 0; l < cliques.size(); ++l) {
            for (int u : *next)
                if (!is_recolored[u] && set_contains(cliques[l], u)) {
                    revisit = static_cast<int>(l);
                    break;
                }
            if (revisit >= 0)
                break;
        }
        if (revisit < 0) {
            cliques.push_back(*next);
            snaps.push_back(cur);
            continue;
        }
        if (revisit > 0) {
            // returned into a later clique: restart the chain there
            base = snaps[revisit];
            c1 = cliques[revisit];
            if (revisit % 2 == 1)
                std::swap(col_a, col_b);
            snaps.assign(1, base);
            cliques.assign(1, c1);
            recolored.clear();
            std::fill(is_recolored.begin(), is_recolored.end(), 0);
            cur = base;
            if (trace)
                *trace << "chain: restart at clique " << dump_set(c1) << "\n";
            continue;
        }

        // back to a part of the first clique
        if (recolored.size() == 2) {
            VertexSet block = set_union(cliques[0], cliques[1]);
            int alpha_a = av.alphas[col_a - 1];
            int alpha_b = av.alphas[col_b - 1];
            bool complete = static_cast<int>(block.size()) == alpha_a + alpha_b + 1 &&
                            pairwise_adjacent(g, block);
            bool isolated = false;
            if (complete) {
                VertexSet both;
                for (int u = 0; u < g.vertex_count(); ++u)
                    if (base[u] == col_a || base[u] == col_b)
                        both.push_back(u);
                auto sub = induced_subgraph(g, both);
                for (const auto& comp : connected_components(sub.graph)) {
                    VertexSet orig;
                    for (int u : comp)
                        orig.push_back(sub.original_id[u]);
                    std::sort(orig.begin(), orig.end());
                    if (set_contains(orig, cliques[0][0])) {
                        isolated = orig == block;
                        break;
                    }
                }
            }
            if (complete && isolated) {
                if (trace)
                    *trace << "chain: certified block " << dump_set(block) << "\n";
                return {false, {}, block};
            }
        }

        // pair move: recolor another C1 vertex together with a final-clique vertex
        const VertexSet& last = *next;
        for (int v2 : cliques[0]) {
            if (v2 == recolored.front())
                continue;
            for (int u : last) {
                if (u == recolored.back() || u == v2 || is_recolored[u])
                    continue;
                Coloring cand = base;
                cand[v2] = col_b;
                cand[u] = col_a;
                if (has_improving_move(g, cand, av))
                    cand = descend_phi(g, cand, av);
                if (lex_better(cand)) {
                    if (trace)
                        *trace << "chain: pair move v2=" << v2 << " u=" << u << "\n";
                    return {true, std::move(cand), {}};
                }
            }
        }
        std::ostringstream os;
        os << "invariant breach: chain neither progresses nor certifies; clique "
           << dump_set(cliques[0]) << " colors (" << col_a << "," << col_b
           << ") recolored " << dump_set(VertexSet(recolored.begin(), recolored.end()));
        throw Error(os.str());
    }
    throw Error("invariant breach: chain iteration cap exceeded");
}

} // namespace

std::variant<Coloring, CliqueCertificate>
eliminate_large_cliques(const Graph& g, Coloring col, const AlphaVector& av,
                        std::ostream* trace) {
    check_coloring(g, col, av);
    if (has_improving_move(g, col, av))
        throw Error("input coloring is not a single-move local minimum");

    const int k = av.k();
    long long budget =
        4LL * (g.vertex_count() + 1) * (k + 1) + 16 * g.edge_count() * av.lcm();
    while (true) {
        auto lc = find_large_clique(g, col, av);
        if (!lc)
            return col;
        auto [i, c1] = *lc;
        if (trace)
            *trace << "eliminate: large clique " << dump_set(c1) << " color " << i
                   << ", phi=" << phi(g, col, av) << "\n";
        std::vector<VertexSet> blocks;
        bool progressed = false;
        for (int j = 1; j <= k && !progressed; ++j) {
            if (j == i)
                continue;
            ChainOutcome oc = run_chain(g, col, av, i, j, c1, budget, trace);
            if (oc.progress) {
                col = std::move(oc.coloring);
                progressed = true;
            } else {
                blocks.push_back(std::move(oc.component));
            }
        }
        if (progressed)
            continue;
        VertexSet certificate = c1;
        for (const auto& b : blocks)
            certificate = set_union(certificate, b);
        if (static_cast<int>(certificate.size()) != av.D + 1 ||
            !pairwise_adjacent(g, certificate))
            throw Error("invariant breach: assembled clique certificate failed "
                        "pairwise-adjacency verification");
        return CliqueCertificate{std::move(certificate)};
    }
}

Decomposition decomposition_from_coloring(const Graph& g, const Coloring& col,
                                          const AlphaVector& av) {
    check_coloring(g, col, av);
    Decomposition dec;
    dec.alphas = av;
    dec.parts.assign(av.k(), {});
    for (int v = 0; v < g.vertex_count(); ++v)
        dec.parts[col[v] - 1].push_back(v);
    for (int i = 0; i < av.k(); ++i) {
        PartCertificate cert;
        cert.clique_free = true;
        const VertexSet& part = dec.parts[i];
        for (int v : part) {
            int d = static_cast<int>(set_intersection(
                VertexSet(g.neighbors(v).begin(), g.neighbors(v).end()), part).size());
            cert.max_degree = std::max(cert.max_degree, d);
        }
        for (int v : part)
            if (clique_in_closed_neighborhood(g, v, av.alphas[i] + 1, part)) {
                cert.clique_free = false;
                break;
            }
        dec.certificates.push_back(cert);
    }
    return dec;
}

std::variant<Decomposition, CliqueCertificate>
decompose_lovasz(const Graph& g, const AlphaVector& av, std::ostream* trace,
                 DescentStats* stats) {
    if (g.max_degree() > av.D)
        throw Error("degree exceeds D");
    Coloring col(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        col[v] = v % av.k() + 1;
    col = descend_phi(g, std::move(col), av, stats);
    auto res = eliminate_large_cliques(g, std::move(col), av, trace);
    if (std::holds_alternative<CliqueCertificate>(res))
        return std::get<CliqueCertificate>(std::move(res));
    Decomposition dec =
        decomposition_from_coloring(g, std::get<Coloring>(res), av);
    Report rep = verify_decomposition(g, dec);
    if (!rep.ok())
        throw Error("internal: decomposition failed verification: " +
                    rep.violations.front().kind);
    return dec;
}

Report verify_decomposition(const Graph& g, const Decomposition& dec) {
    Report rep;
    int n = g.vertex_count();
    if (static_cast<int>(dec.parts.size()) != dec.alphas.k()) {
        rep.add("shape", "part count does not match alpha vector");
        return rep;
    }
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < dec.parts.size(); ++i)
        for (int v : dec.parts[i]) {
            if (v < 0 || v >= n) {
                rep.add("coverage", "vertex id out of range: " + std::to_string(v));
                continue;
            }
            if (owner[v] >= 0)
                rep.add("coverage", "vertex " + std::to_string(v) + " in two parts");
            owner[v] = static_cast<int>(i);
        }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0)
            rep.add("coverage", "vertex " + std::to_string(v) + " missing");
    if (!rep.ok())
        return rep;
    for (size_t i = 0; i < dec.parts.size(); ++i) {
        int alpha = dec.alphas.alphas[i];
        const VertexSet& part = dec.parts[i];
        for (int v : part) {
            VertexSet nb(g.neighbors(v).begin(), g.neighbors(v).end());
            int d = static_cast<int>(set_intersection(nb, part).size());
            if (d > alpha)
                rep.add("degree", "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(d) + " in part " +
                                      std::to_string(i + 1));
        }
        for (int v : part)
            if (auto c = clique_in_closed_neighborhood(g, v, alpha + 1, part)) {
                rep.add("clique", "part " + std::to_string(i + 1) +
                                      " contains clique " + dump_set(*c));
                break;
            }
    }
    return rep;
}

} // namespace ndg
