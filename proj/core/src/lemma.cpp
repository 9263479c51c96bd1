#include "ndg/lemma.hpp"
#include "ndg/brooks.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace ndg {

long long lemma_degree_threshold(int q) {
    long long Q = q;
    return Q * Q * Q + 2 * Q * Q - Q - 8;
}

int LemmaInstance::a_degree(int v) const {
    int d_a = 0;
    for (const auto& s : cross)
        if (set_contains(s, v))
            ++d_a;
    return d_a;
}

namespace {

void check_instance_shape(const LemmaInstance& inst) {
    if (inst.q < 1 || inst.d < 1)
        throw Error("q and d must be positive");
    for (const auto& s : inst.cross)
        if (!is_vertex_set(s, inst.b_count()))
            throw Error("invalid B-vertex id in cross set");
}

// connectivity of H = b_graph edges plus A-B cross edges
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Report check_preconditions(const LemmaInstance& inst, bool strict) {
    check_instance_shape(inst);
    Report rep;
    if (inst.d < inst.q)
        rep.add("d below q", "d=" + std::to_string(inst.d) + " q=" + std::to_string(inst.q));
    for (int a = 0; a < inst.a_count(); ++a)
        if (static_cast<int>(inst.cross[a].size()) < inst.q)
            rep.add("A-degree below q", "A-vertex " + std::to_string(a));
    if (!strict)
        return rep;

    if (inst.q < 4)
        rep.add("q below 4", "q=" + std::to_string(inst.q));
    long long threshold = lemma_degree_threshold(inst.q);
    if (inst.d < threshold)
        rep.add("d below threshold",
                "d=" + std::to_string(inst.d) + " threshold=" + std::to_string(threshold));
    for (int a = 0; a < inst.a_count(); ++a)
        if (static_cast<long long>(inst.cross[a].size()) < inst.d)
            rep.add("A-degree below d", "A-vertex " + std::to_string(a) + " has degree " +
                                            std::to_string(inst.cross[a].size()));
    for (int v = 0; v < inst.b_count(); ++v) {
        long long lhs = inst.b_graph.degree(v) +
                        (inst.a_degree(v) + inst.q - 1) / inst.q;
        if (lhs > inst.d)
            rep.add("eq(1) fails", "B-vertex " + std::to_string(v) + ": " +
                                       std::to_string(lhs) + " > " + std::to_string(inst.d));
    }
    // connectivity of H over B and A together
    if (inst.b_count() > 0) {
        UnionFind uf(inst.b_count() + inst.a_count());
        for (auto [u, v] : inst.b_graph.edges())
            uf.unite(u, v);
        for (int a = 0; a < inst.a_count(); ++a)
            for (int v : inst.cross[a])
                uf.unite(inst.b_count() + a, v);
        int root = uf.find(0);
        bool connected = true;
        for (int v = 1; v < inst.b_count() && connected; ++v)
            connected = uf.find(v) == root;
        for (int a = 0; a < inst.a_count() && connected; ++a)
            connected = inst.cross[a].empty() ? false
                                              : uf.find(inst.b_count() + a) == root;
        if (!connected)
            rep.add("H not connected", "");
    }
    return rep;
}

Rational l_value(const LemmaInstance& inst, int v) {
    if (v < 0 || v >= inst.b_count())
        throw Error("invalid B-vertex id");
    return Rational(inst.b_graph.degree(v)) + Rational(inst.a_degree(v), inst.q + 1);
}

Rational expected_degree_bound(const LemmaInstance& inst, int v) {
    if (v < 0 || v >= inst.b_count())
        throw Error("invalid B-vertex id");
    long long denom = lemma_degree_threshold(inst.q);
    return Rational(inst.b_graph.degree(v)) +
           Rational(static_cast<long long>(inst.a_degree(v)) * (inst.q - 1) * inst.q, denom);
}

PermissibleSampling init_sampling(const LemmaInstance& inst, std::mt19937_64& rng) {
    check_instance_shape(inst);
    PermissibleSampling smp;
    for (const auto& crossed : inst.cross) {
        if (static_cast<int>(crossed.size()) < inst.q)
            throw Error("A-degree below q");
        std::vector<int> pool = crossed;
        // partial Fisher-Yates: first q entries are a uniform q-subset
        for (int i = 0; i < inst.q; ++i) {
            std::uniform_int_distribution<int> pick(i, static_cast<int>(pool.size()) - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        VertexSet s(pool.begin(), pool.begin() + inst.q);
        std::sort(s.begin(), s.end());
        smp.sets.push_back(std::move(s));
    }
    return smp;
}

MultiGraph augment(const LemmaInstance& inst, const PermissibleSampling& smp) {
    if (static_cast<int>(smp.sets.size()) != inst.a_count())
        throw Error("sampling does not match instance");
    MultiGraph mg(inst.b_count());
    for (auto [u, v] : inst.b_graph.edges())
        mg.add_edge(u, v);
    for (const auto& s : smp.sets)
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                mg.add_edge(s[i], s[j]);
    return mg;
}

PermissibleSampling refine(const LemmaInstance& inst, const PermissibleSampling& smp,
                           const CoreState& core) {
    for (int a = 0; a < inst.a_count(); ++a) {
        VertexSet in_core = set_intersection(smp.sets[a], core.remaining);
        if (in_core.empty())
            continue;
        VertexSet blocked = set_union(smp.sets[a], core.remaining);
        VertexSet candidates = set_difference(inst.cross[a], blocked);
        if (candidates.empty())
            continue;
        int x = in_core.front();
        int v = candidates.front();
        PermissibleSampling out = smp;
        VertexSet& s = out.sets[a];
        s.erase(std::lower_bound(s.begin(), s.end(), x));
        s.insert(std::lower_bound(s.begin(), s.end(), v), v);
        return out;
    }
    // diagnostics: the condition-(2) comparison on the stuck core
    MultiGraph mg = augment(inst, smp);
    long long sum_deg = 0;
    Rational sum_l(0);
    for (int v : core.remaining) {
        for (auto [u, m] : mg.incidences(v))
            if (set_contains(core.remaining, u))
                sum_deg += m;
        sum_l += l_value(inst, v);
    }
    std::ostringstream os;
    os << "no non-degenerate change; core size " << core.remaining.size()
       << ", sum deg " << sum_deg << ", sum L " << sum_l;
    throw Error(os.str());
}

Report verify_rainbow(const LemmaInstance& inst, const Coloring& col, int q) {
    Report rep;
    if (static_cast<int>(col.size()) != inst.b_count()) {
        rep.add("shape", "coloring size does not match B");
        return rep;
    }
    for (auto [u, v] : inst.b_graph.edges())
        if (col[u] == col[v])
            rep.add("properness", "monochromatic edge " + std::to_string(u) + "-" +
                                      std::to_string(v));
    for (int a = 0; a < inst.a_count(); ++a) {
        std::set<int> colors;
        for (int v : inst.cross[a])
            colors.insert(col[v]);
        if (static_cast<int>(colors.size()) < q)
            rep.add("rainbow", "A-vertex " + std::to_string(a) + " sees " +
                                   std::to_string(colors.size()) + " colors");
    }
    return rep;
}

namespace {

struct SubInstance {
    LemmaInstance inst;
    std::vector<int> b_global; // local B id -> caller B id
};

// split on connectivity of H (B edges plus cross edges); A-vertices follow
// their cross neighborhoods
std::vector<SubInstance> split_components(const LemmaInstance& inst) {
    int nb = inst.b_count(), na = inst.a_count();
    UnionFind uf(nb + na);
    for (auto [u, v] : inst.b_graph.edges())
        uf.unite(u, v);
    for (int a = 0; a < na; ++a)
        for (int v : inst.cross[a])
            uf.unite(nb + a, v);
    std::vector<int> root_of(nb);
    std::vector<int> roots;
    for (int v = 0; v < nb; ++v) {
        root_of[v] = uf.find(v);
        roots.push_back(root_of[v]);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::vector<SubInstance> out;
    for (int r : roots) {
        SubInstance sub;
        std::vector<int> to_local(nb, -1);
        for (int v = 0; v < nb; ++v)
            if (root_of[v] == r) {
                to_local[v] = static_cast<int>(sub.b_global.size());
                sub.b_global.push_back(v);
            }
        sub.inst.q = inst.q;
        sub.inst.d = inst.d;
        sub.inst.b_graph = Graph(static_cast<int>(sub.b_global.size()));
        for (auto [u, v] : inst.b_graph.edges())
            if (to_local[u] >= 0 && to_local[v] >= 0)
                sub.inst.b_graph.add_edge(to_local[u], to_local[v]);
        for (int a = 0; a < na; ++a) {
            if (inst.cross[a].empty() || to_local[inst.cross[a].front()] < 0)
                continue;
            VertexSet local;
            for (int v : inst.cross[a])
                local.push_back(to_local[v]);
            std::sort(local.begin(), local.end());
            sub.inst.cross.push_back(std::move(local));
        }
        out.push_back(std::move(sub));
    }
    return out;
}

struct ComponentOutcome {
    std::optional<Coloring> coloring;
    LemmaFailure failure;
};

ComponentOutcome solve_component(const LemmaInstance& inst, uint64_t seed,
                                 const SolveLimits& limits, bool strict,
                                 std::ostream* trace) {
    VertexSet all_b(inst.b_count());
    std::iota(all_b.begin(), all_b.end(), 0);
    long long max_swaps = limits.max_swaps >= 0
                              ? limits.max_swaps
                              : static_cast<long long>(inst.a_count()) * inst.q *
                                    std::max(1, inst.b_count());
    LemmaFailure last;
    for (int attempt = 0; attempt <= limits.max_restarts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        PermissibleSampling smp = init_sampling(inst, rng);
        long long swaps = 0;
        while (true) {
            MultiGraph mg = augment(inst, smp);
            PeelResult res = peel(mg, all_b, inst.d);
            if (auto* cert = std::get_if<DeletionCertificate>(&res)) {
                std::vector<int> order(cert->order.rbegin(), cert->order.rend());
                Coloring col = greedy_color(mg.skeleton(), order, inst.d);
                Report rep = verify_rainbow(inst, col, inst.q);
                if (!rep.ok())
                    throw Error("internal: recursive coloring failed rainbow check: " +
                                rep.violations.front().kind);
                return {col, {}};
            }
            const CoreState& core = std::get<CoreState>(res);
            if (trace)
                *trace << "lemma: stuck core of " << core.remaining.size()
                       << " vertices after " << swaps << " swaps\n";
            if (inst.a_count() == 0) {
                // nothing to resample; a plain proper d-coloring settles the
                // component and the rainbow condition is vacuous
                try {
                    return {brooks_color(inst.b_graph, inst.d), {}};
                } catch (const Error& e) {
                    return {std::nullopt,
                            {std::string("proper coloring fallback failed: ") + e.what(),
                             core, swaps, attempt}};
                }
            }
            if (strict) {
                long long sum_deg = 0;
                Rational sum_l(0);
                for (int v : core.remaining) {
                    for (auto [u, m] : mg.incidences(v))
                        if (set_contains(core.remaining, u))
                            sum_deg += m;
                    sum_l += l_value(inst, v);
                }
                if (Rational(sum_deg) <= sum_l)
                    throw Error("invariant breach: stuck core violates the degree "
                                "sum condition");
            }
            if (++swaps > max_swaps) {
                last = {"swap cap exhausted", core, swaps, attempt};
                break;
            }
            try {
                smp = refine(inst, smp, core);
            } catch (const Error& e) {
                last = {e.what(), core, swaps, attempt};
                break;
            }
        }
    }
    return {std::nullopt, last};
}

} // namespace

SolveResult solve(const LemmaInstance& inst, uint64_t seed, SolveLimits limits,
                  bool strict, std::ostream* trace) {
    check_instance_shape(inst);
    Report pre = check_preconditions(inst, strict);
    // a disconnected H is handled by the per-component split below
    pre.violations.erase(std::remove_if(pre.violations.begin(), pre.violations.end(),
                                        [](const Violation& v) {
                                            return v.kind == "H not connected";
                                        }),
                         pre.violations.end());
    if (!pre.ok()) {
        LemmaFailure f;
        f.reason = "precondition failed: " + pre.violations.front().kind + " (" +
                   pre.violations.front().detail + ")";
        return f;
    }

    Coloring full(inst.b_count(), 0);
    auto components = split_components(inst);
    for (size_t ci = 0; ci < components.size(); ++ci) {
        const auto& sub = components[ci];
        ComponentOutcome oc =
            solve_component(sub.inst, seed + 1315423911ULL * ci, limits, strict, trace);
        if (!oc.coloring) {
            // lift core ids back to the caller's B ids
            LemmaFailure f = oc.failure;
            for (int& v : f.core.remaining)
                v = sub.b_global[v];
            for (int& v : f.core.partial_order)
                v = sub.b_global[v];
            std::sort(f.core.remaining.begin(), f.core.remaining.end());
            return f;
        }
        for (size_t i = 0; i < sub.b_global.size(); ++i)
            full[sub.b_global[i]] = (*oc.coloring)[i];
    }

    NdgColoring out;
    out.coloring = std::move(full);
    Report rep = verify_rainbow(inst, out.coloring, inst.q);
    if (!rep.ok())
        throw Error("internal: assembled lemma coloring failed verification");
    for (int a = 0; a < inst.a_count(); ++a) {
        std::set<int> colors;
        for (int v : inst.cross[a])
            colors.insert(out.coloring[v]);
        out.a_color_counts.push_back(static_cast<int>(colors.size()));
    }
    return out;
}

} // namespace ndg
