#include "ndg/pipeline.hpp"
#include "ndg/brooks.hpp"
#include "ndg/error.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace ndg {

PipelineParams params(int c) {
    if (c < 2)
        throw Error("c must be at least 2");
    PipelineParams pp;
    pp.c = c;
    long long C = c;
    pp.p = (C * C * C + 8 * C * C + 19 * C + 6) * (C + 1);
    pp.q = c + 2;
    pp.d = lemma_degree_threshold(pp.q);
    if (pp.d * (C + 1) != pp.p)
        throw Error("internal: parameter identity d*(c+1) = p failed");
    return pp;
}

AmplifyResult amplify_min_degree(const Graph& g, long long p, int max_rounds) {
    if (max_rounds < 0)
        throw Error("max_rounds must be nonnegative");
    AmplifyResult out;
    out.graph = g;
    out.origin.resize(g.vertex_count());
    std::iota(out.origin.begin(), out.origin.end(), 0);
    while (out.graph.vertex_count() > 0 && out.graph.min_degree() < p &&
           out.rounds < max_rounds) {
        const Graph& cur = out.graph;
        int n = cur.vertex_count();
        Graph doubled(2 * n);
        for (auto [u, v] : cur.edges()) {
            doubled.add_edge(u, v);
            doubled.add_edge(u + n, v + n);
        }
        for (int v = 0; v < n; ++v)
            if (cur.degree(v) < p)
                doubled.add_edge(v, v + n);
        std::vector<int> origin(2 * n);
        for (int v = 0; v < n; ++v)
            origin[v] = origin[v + n] = out.origin[v];
        out.graph = std::move(doubled);
        out.origin = std::move(origin);
        ++out.rounds;
    }
    out.reached = out.graph.vertex_count() == 0 || out.graph.min_degree() >= p;
    return out;
}

ThetaPartition theta_partition(const Graph& g, const Coloring& col, long long p, int c,
                               const AlphaVector& av, bool enforce_anchor) {
    int n = g.vertex_count();
    int k = av.k();
    ThetaPartition tp;
    tp.theta.assign(k, {});
    tp.anchor.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < p)
            continue;
        std::vector<int> count(k + 1, 0);
        std::set<int> distinct;
        for (int u : g.neighbors(v)) {
            ++count[col[u]];
            distinct.insert(col[u]);
        }
        if (static_cast<int>(distinct.size()) >= c)
            continue;
        int best = 0;
        for (int i = 1; i <= k; ++i)
            if (i != col[v] && (best == 0 || count[i] > count[best]))
                best = i;
        if (enforce_anchor && count[best] < av.alphas[best - 1] + 1)
            throw Error("pigeonhole breach at vertex " + std::to_string(v));
        tp.upsilon.push_back(v);
        tp.anchor[v] = best;
        tp.theta[best - 1].push_back(v);
    }
    return tp;
}

Report class_degree_check(const Graph& g, const Coloring& col, const ThetaPartition& tp,
                          const AlphaVector& av, int c) {
    Report rep;
    std::vector<char> in_theta_of(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int i = col[v];
        int d_class = 0, d_theta = 0;
        for (int u : g.neighbors(v)) {
            if (col[u] == i)
                ++d_class;
            if (set_contains(tp.theta[i - 1], u))
                ++d_theta;
        }
        int lhs = d_class + (d_theta + c + 1) / (c + 2); // ceil(d_theta/(c+2))
        if (lhs > av.alphas[i - 1])
            rep.add("degree inequality", "vertex " + std::to_string(v) + " in class " +
                                             std::to_string(i) + ": " +
                                             std::to_string(lhs) + " > " +
                                             std::to_string(av.alphas[i - 1]));
    }
    return rep;
}

BuiltInstance build_lemma_instance(const Graph& g, const Coloring& col, int color,
                                   const ThetaPartition& tp, int q, int alpha) {
    BuiltInstance out;
    std::vector<int> to_local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (col[v] == color) {
            to_local[v] = static_cast<int>(out.b_global.size());
            out.b_global.push_back(v);
        }
    out.inst.q = q;
    out.inst.d = alpha;
    out.inst.b_graph = Graph(static_cast<int>(out.b_global.size()));
    for (auto [u, v] : g.edges())
        if (to_local[u] >= 0 && to_local[v] >= 0)
            out.inst.b_graph.add_edge(to_local[u], to_local[v]);
    for (int a : tp.theta[color - 1]) {
        VertexSet cs;
        for (int u : g.neighbors(a))
            if (to_local[u] >= 0)
                cs.push_back(to_local[u]);
        std::sort(cs.begin(), cs.end());
        out.a_global.push_back(a);
        out.inst.cross.push_back(std::move(cs));
    }
    return out;
}

NdgReport verify_ndg(const Graph& g, const Coloring& col, int c, long long p, int D) {
    NdgReport rep;
    int n = g.vertex_count();
    if (static_cast<int>(col.size()) != n) {
        rep.violations.push_back({"shape", "coloring size mismatch"});
        return rep;
    }
    rep.proper = true;
    for (int v = 0; v < n; ++v)
        if (col[v] < 1 || col[v] > D)
            rep.violations.push_back(
                {"palette", "vertex " + std::to_string(v) + " has color " +
                                std::to_string(col[v]) + " outside 1.." +
                                std::to_string(D)});
    for (auto [u, v] : g.edges())
        if (col[u] == col[v]) {
            rep.proper = false;
            rep.violations.push_back({"properness", "monochromatic edge " +
                                                        std::to_string(u) + "-" +
                                                        std::to_string(v)});
        }
    rep.per_vertex.resize(n);
    for (int v = 0; v < n; ++v) {
        std::set<int> distinct;
        for (int u : g.neighbors(v))
            distinct.insert(col[u]);
        rep.per_vertex[v] = {g.degree(v), static_cast<int>(distinct.size())};
        if (g.degree(v) >= p && static_cast<int>(distinct.size()) < c)
            rep.violations.push_back(
                {"nondegeneracy", "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(g.degree(v)) + " but sees only " +
                                      std::to_string(distinct.size()) + " colors"});
    }
    return rep;
}

namespace {

bool is_complete_component(const Graph& g, const VertexSet& comp) {
    for (int v : comp)
        if (g.degree(v) != static_cast<int>(comp.size()) - 1)
            return false;
    return true;
}

struct ClassOutcome {
    bool ok = false;
    std::string reason;
    Coloring local; // class-local colors 1..alpha on b_global order
};

ClassOutcome color_class(const Graph& g, const Coloring& col, const ThetaPartition& tp,
                         int color, int q, int alpha, uint64_t seed,
                         const SolveLimits& limits, std::ostream* trace) {
    ClassOutcome out;
    // alpha caps the usable palette; when it drops below q shrink q with it
    // so sampling still fits
    int q_eff = std::min(q, alpha);
    BuiltInstance built = build_lemma_instance(g, col, color, tp, q_eff, alpha);
    Report pre = check_preconditions(built.inst, true);
    bool strict = true;
    for (const auto& v : pre.violations)
        if (v.kind != "H not connected")
            strict = false;
    if (trace)
        *trace << "pipeline: class " << color << " |B|=" << built.inst.b_count()
               << " |A|=" << built.inst.a_count() << (strict ? " strict" : " heuristic")
               << "\n";
    SolveResult res = solve(built.inst, seed, limits, strict, trace);
    if (auto* fail = std::get_if<LemmaFailure>(&res)) {
        out.reason = "class " + std::to_string(color) + ": " + fail->reason;
        return out;
    }
    out.ok = true;
    out.local = std::get<NdgColoring>(res).coloring;
    return out;
}

} // namespace

NdgResult ndg_color(const Graph& g, int c, const NdgOptions& opts) {
    PipelineParams pp = params(c);
    long long p_eff = opts.heuristic_p.value_or(pp.p);
    if (p_eff < 1)
        throw Error("p must be positive");
    int D = opts.D.value_or(g.max_degree());
    if (D < 1)
        D = 1;
    if (g.max_degree() > D)
        throw Error("degree exceeds D");

    // K_{D+1} detection up front
    auto comps = connected_components(g);
    for (const auto& comp : comps)
        if (static_cast<int>(comp.size()) == D + 1 && is_complete_component(g, comp))
            return CliqueCertificate{comp};

    if (static_cast<long long>(D) < p_eff) {
        // no vertex can reach the nondegeneracy threshold: a plain proper
        // D-coloring suffices
        Coloring col(g.vertex_count(), 0);
        for (const auto& comp : comps) {
            auto sub = induced_subgraph(g, comp);
            Coloring sc;
            try {
                sc = brooks_color(sub.graph, D);
            } catch (const Error& e) {
                return PipelineFailure{"component coloring failed: " +
                                       std::string(e.what())};
            }
            for (size_t i = 0; i < comp.size(); ++i)
                col[sub.original_id[i]] = sc[i];
        }
        NdgReport rep = verify_ndg(g, col, c, p_eff, D);
        if (!rep.ok())
            throw Error("internal: vacuous coloring failed verification");
        return NdgSuccess{std::move(col), std::move(rep), D, p_eff};
    }

    // full machinery
    AlphaVector av;
    try {
        av = alpha_split(D, c + 1);
    } catch (const Error& e) {
        return PipelineFailure{e.what()};
    }
    Coloring col(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        col[v] = v % av.k() + 1;
    col = descend_phi(g, std::move(col), av);

    ThetaPartition tp;
    bool enforce_anchor = !opts.heuristic_p.has_value();
    const long long repair_cap = g.edge_count() * av.lcm() + 16;
    Rational last_phi = phi(g, col, av);
    for (long long round = 0;; ++round) {
        if (round > repair_cap)
            return PipelineFailure{"degree-inequality repair loop exceeded its bound"};
        auto elim = eliminate_large_cliques(g, col, av, opts.trace);
        if (std::holds_alternative<CliqueCertificate>(elim))
            return std::get<CliqueCertificate>(std::move(elim));
        col = std::get<Coloring>(std::move(elim));
        try {
            tp = theta_partition(g, col, p_eff, c, av, enforce_anchor);
        } catch (const Error& e) {
            return PipelineFailure{e.what()};
        }
        Report check = class_degree_check(g, col, tp, av, c);
        if (check.ok())
            break;
        // repair: move the offending theta class out of the deficient color,
        // exposing a strictly improving move, then descend again
        std::istringstream parse(check.violations.front().detail);
        std::string word;
        int v = -1, i = -1;
        parse >> word >> v >> word >> word >> i;
        if (v < 0 || i < 1)
            return PipelineFailure{"internal: unparseable degree-inequality report"};
        int d_class = 0;
        std::vector<int> m(av.k() + 1, 0);
        for (int u : g.neighbors(v)) {
            if (col[u] == col[v])
                ++d_class;
            if (!set_contains(tp.theta[i - 1], u))
                ++m[col[u]];
        }
        int deficient = 0;
        for (int j = 1; j <= av.k(); ++j) {
            if (j == i)
                continue;
            if (static_cast<long long>(m[j]) * av.alphas[i - 1] <
                static_cast<long long>(av.alphas[j - 1]) * d_class) {
                deficient = j;
                break;
            }
        }
        if (deficient == 0)
            return PipelineFailure{"degree-inequality repair found no deficient color"};
        for (int u : tp.theta[i - 1]) {
            if (col[u] != deficient)
                continue;
            std::vector<char> present(av.k() + 1, 0);
            for (int w : g.neighbors(u))
                present[col[w]] = 1;
            for (int x = 1; x <= av.k(); ++x)
                if (!present[x] && x != deficient && x != i) {
                    col[u] = x;
                    break;
                }
        }
        col = descend_phi(g, col, av);
        Rational now = phi(g, col, av);
        if (!(now < last_phi))
            return PipelineFailure{"degree-inequality repair stalled"};
        last_phi = now;
    }

    // per-class refinement with disjoint fresh palettes
    std::vector<long long> offset(av.k() + 1, 0);
    for (int i = 1; i <= av.k(); ++i)
        offset[i] = offset[i - 1] + av.alphas[i - 1];
    std::vector<ClassOutcome> outcomes(av.k());
    auto run_class = [&](int idx) {
        return color_class(g, col, tp, idx + 1, pp.q, av.alphas[idx],
                           opts.seed + 7919ULL * idx, opts.limits, opts.trace);
    };
    if (opts.jobs > 1) {
        std::vector<std::future<ClassOutcome>> futures;
        for (int idx = 0; idx < av.k(); ++idx)
            futures.push_back(std::async(std::launch::async, run_class, idx));
        for (int idx = 0; idx < av.k(); ++idx)
            outcomes[idx] = futures[idx].get();
    } else {
        for (int idx = 0; idx < av.k(); ++idx)
            outcomes[idx] = run_class(idx);
    }

    Coloring final_col(g.vertex_count(), 0);
    for (int idx = 0; idx < av.k(); ++idx) {
        if (!outcomes[idx].ok)
            return PipelineFailure{outcomes[idx].reason};
        BuiltInstance built = build_lemma_instance(g, col, idx + 1, tp, pp.q,
                                                   av.alphas[idx]);
        for (size_t b = 0; b < built.b_global.size(); ++b)
            final_col[built.b_global[b]] =
                static_cast<int>(offset[idx]) + outcomes[idx].local[b];
    }

    NdgReport rep = verify_ndg(g, final_col, c, p_eff, D);
    if (!rep.ok())
        throw Error("internal: assembled coloring failed verification: " +
                    rep.violations.front().kind + " " + rep.violations.front().detail);
    return NdgSuccess{std::move(final_col), std::move(rep), D, p_eff};
}

} // namespace ndg
