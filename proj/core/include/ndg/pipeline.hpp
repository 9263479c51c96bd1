#ifndef NDG_PIPELINE_HPP
#define NDG_PIPELINE_HPP

#include "ndg/decompose.hpp"
#include "ndg/graph.hpp"
#include "ndg/lemma.hpp"
#include "ndg/report.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ndg {

/// Parameter bundle: p = (c^3+8c^2+19c+6)(c+1), q = c+2,
/// d = q^3+2q^2-q-8 = p/(c+1).
struct PipelineParams {
    int c = 0;
    long long p = 0;
    int q = 0;
    long long d = 0;
};

PipelineParams params(int c);

struct AmplifyResult {
    Graph graph;
    std::vector<int> origin; // output vertex -> source vertex
    int rounds = 0;
    bool reached = false; // min degree >= p achieved
};

/// Copy-doubling: join low-degree vertex pairs across two copies until the
/// minimum degree reaches p or rounds run out.
AmplifyResult amplify_min_degree(const Graph& g, long long p, int max_rounds);

/// High-degree vertices seeing fewer than c distinct neighbor colors,
/// assigned to the color class where they have the most neighbors.
struct ThetaPartition {
    VertexSet upsilon;
    std::vector<VertexSet> theta; // one set per color
    std::vector<int> anchor;      // per vertex: anchor color, 0 if not in upsilon
};

/// min_anchor > 0 enforces the pigeonhole guarantee (anchor count >= min_anchor).
ThetaPartition theta_partition(const Graph& g, const Coloring& col, long long p, int c,
                               const AlphaVector& av, bool enforce_anchor = true);

/// Per-vertex degree inequality ceil(d_{H_i}(v) + d_theta(v)/(c+2)) <= alpha_i.
Report class_degree_check(const Graph& g, const Coloring& col, const ThetaPartition& tp,
                          const AlphaVector& av, int c);

struct BuiltInstance {
    LemmaInstance inst;
    std::vector<int> b_global; // local B id -> graph vertex id
    std::vector<int> a_global; // local A id -> graph vertex id
};

BuiltInstance build_lemma_instance(const Graph& g, const Coloring& col, int color,
                                   const ThetaPartition& tp, int q, int alpha);

struct NdgVertexAudit {
    int degree = 0;
    int distinct_neighbor_colors = 0;
};

struct NdgReport {
    bool proper = false;
    std::vector<NdgVertexAudit> per_vertex;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

NdgReport verify_ndg(const Graph& g, const Coloring& col, int c, long long p, int D);

struct NdgOptions {
    std::optional<int> D;
    uint64_t seed = 1;
    std::optional<long long> heuristic_p; // override below the guaranteed threshold
    SolveLimits limits;
    int jobs = 1;
    std::ostream* trace = nullptr;
};

struct NdgSuccess {
    Coloring coloring;
    NdgReport report;
    int D = 0;
    long long p = 0;
};

struct PipelineFailure {
    std::string reason;
};

using NdgResult = std::variant<NdgSuccess, CliqueCertificate, PipelineFailure>;

/// Full composition: decomposition, theta machinery, per-class rainbow or
/// Brooks refinement, assembly, verification.
NdgResult ndg_color(const Graph& g, int c, const NdgOptions& opts = {});

} // namespace ndg

#endif
