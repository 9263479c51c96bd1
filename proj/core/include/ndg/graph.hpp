#ifndef NDG_GRAPH_HPP
#define NDG_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace ndg {

/// Sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

/// Simple undirected graph on dense integer vertex ids 0..n-1.
/// Adjacency lists are kept sorted so every traversal is reproducible.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const;

    // Throws on self-loops, out-of-range ids and duplicate edges.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    std::vector<std::pair<int, int>> edges() const; // sorted, u < v

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_id; // dense id -> id in the parent graph
};

/// Induced subgraph on `s`, vertices relabeled densely in ascending order of id.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Maximal connected sets, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Exact search for a k-clique containing v whose vertices lie in
/// (N(v) ∩ within) ∪ {v}.  Returns the lexicographically smallest such
/// clique, or nothing.
std::optional<VertexSet> clique_in_closed_neighborhood(const Graph& g, int v, int k,
                                                       const VertexSet& within);

bool is_vertex_set(const VertexSet& s, int n);
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

} // namespace ndg

#endif
