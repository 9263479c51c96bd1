#ifndef NDG_LEMMA_HPP
#define NDG_LEMMA_HPP

#include "ndg/decompose.hpp"
#include "ndg/graph.hpp"
#include "ndg/multigraph.hpp"
#include "ndg/rational.hpp"
#include "ndg/report.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <variant>
#include <vector>

namespace ndg {

/// Rainbow-neighborhood instance: an edgeless vertex set A attached to the
/// graph on B; every B-coloring is judged by how many distinct colors each
/// A-vertex sees across its B-neighbors.
struct LemmaInstance {
    Graph b_graph;                 // the induced graph on B
    std::vector<VertexSet> cross;  // per A-vertex: sorted B-neighbor ids
    int q = 0;
    int d = 0;

    int a_count() const { return static_cast<int>(cross.size()); }
    int b_count() const { return b_graph.vertex_count(); }
    /// Number of A-vertices whose cross set contains v.
    int a_degree(int v) const;
};

/// Per-A-vertex q-subset of its cross neighborhood.
struct PermissibleSampling {
    std::vector<VertexSet> sets;
};

/// Strict mode checks the full guarantee preconditions; heuristic mode only
/// the ones solve() cannot work without.
Report check_preconditions(const LemmaInstance& inst, bool strict = true);

/// L(v) = d_G(v) + d_A(v)/(q+1).
Rational l_value(const LemmaInstance& inst, int v);

/// Upper bound on the expected augmented degree of v under uniform sampling:
/// d_G(v) + d_A(v)(q-1)q/(q^3+2q^2-q-8).
Rational expected_degree_bound(const LemmaInstance& inst, int v);

/// Independent uniform q-subsets, reproducible from the generator state.
PermissibleSampling init_sampling(const LemmaInstance& inst, std::mt19937_64& rng);

/// B-multigraph: original edges plus a q-clique over every sampled set,
/// multiplicities accumulated.
MultiGraph augment(const LemmaInstance& inst, const PermissibleSampling& smp);

/// One regular non-degenerate swap: removes a core vertex from some S_a and
/// inserts a non-core replacement.  Throws "no non-degenerate change" with
/// core diagnostics when no swap applies.
PermissibleSampling refine(const LemmaInstance& inst, const PermissibleSampling& smp,
                           const CoreState& core);

struct NdgColoring {
    Coloring coloring;                // proper on b_graph, colors 1..d
    std::vector<int> a_color_counts;  // distinct colors seen per A-vertex
};

struct SolveLimits {
    long long max_swaps = -1; // default: q * |B| per A-vertex
    int max_restarts = 3;
};

struct LemmaFailure {
    std::string reason;
    CoreState core;
    long long swaps = 0;
    int restarts = 0;
};

using SolveResult = std::variant<NdgColoring, LemmaFailure>;

/// Sample, augment, peel, refine until the augmented graph is recursive,
/// then greedy-color in reverse deletion order.  Output always verified.
SolveResult solve(const LemmaInstance& inst, uint64_t seed, SolveLimits limits = {},
                  bool strict = true, std::ostream* trace = nullptr);

/// Properness on B plus per-A distinct-color counts against q.
Report verify_rainbow(const LemmaInstance& inst, const Coloring& col, int q);

/// Minimal strict d for a given q: q^3 + 2q^2 - q - 8.
long long lemma_degree_threshold(int q);

} // namespace ndg

#endif
