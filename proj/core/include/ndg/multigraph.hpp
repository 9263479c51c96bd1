#ifndef NDG_MULTIGRAPH_HPP
#define NDG_MULTIGRAPH_HPP

#include "ndg/graph.hpp"

#include <variant>
#include <vector>

namespace ndg {

/// Undirected multigraph; degree counts edge multiplicities.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : adj_(n) {}

    static MultiGraph from_graph(const Graph& g);

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    // Accumulates multiplicity; throws on self-loops and bad ids.
    void add_edge(int u, int v, int mult = 1);

    int multiplicity(int u, int v) const;
    long long degree(int v) const;
    const std::vector<std::pair<int, int>>& incidences(int v) const { return adj_[v]; }

    /// Simple graph with an edge wherever multiplicity is positive.
    Graph skeleton() const;

private:
    void check_vertex(int v) const;
    // per vertex: sorted (neighbor, multiplicity)
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Full deletion order proving the target set is recursively deletable at
/// the given degree threshold.
struct DeletionCertificate {
    std::vector<int> order;
    int threshold = 0;
};

/// Stuck peeling state: every vertex in `remaining` has degree >= threshold
/// within `remaining`.
struct CoreState {
    VertexSet remaining;
    int threshold = 0;
    std::vector<int> partial_order;
};

using PeelResult = std::variant<DeletionCertificate, CoreState>;

/// Repeatedly deletes the smallest-id target vertex whose degree (with
/// multiplicity, restricted to the alive targets) is below `threshold`.
PeelResult peel(const MultiGraph& mg, const VertexSet& targets, int threshold);

} // namespace ndg

#endif
