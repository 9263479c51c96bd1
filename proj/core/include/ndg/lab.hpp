#ifndef NDG_LAB_HPP
#define NDG_LAB_HPP

#include "ndg/graph.hpp"
#include "ndg/decompose.hpp"
#include "ndg/lemma.hpp"

#include <cstdint>
#include <optional>

namespace ndg {

/// Exhaustive search over proper D-colorings for one where every vertex of
/// degree >= p sees at least c distinct neighbor colors.  The check is a
/// standalone re-statement of the definition so it can serve as an oracle.
/// budget < 0 picks a default; the search throws "budget exceeded" when the
/// explored-node count passes it.
std::optional<Coloring> brute_force_ndg_exists(const Graph& g, int D, int c,
                                               long long p, long long budget = -1);

/// Incidence graph between a ground set of (p-1)*D+1 elements and all of its
/// p-element subsets.  Elements come first, subsets follow in lexicographic
/// order.
Graph gen_bipartite_counterexample(int p, int D);

/// Seeded D-regular simple graph without K_{D+1}, built by stub pairing with
/// local collision repair and whole-graph rejection on the clique check.
Graph gen_regular_kfree(int n, int D, uint64_t seed);

/// Seeded instance passing the strict lemma preconditions: connected
/// low-degree graph on bn vertices, a_count A-vertices with at least d
/// B-neighbors each, cross sets trimmed until the per-vertex degree bound
/// holds.
LemmaInstance gen_lemma_instance(int bn, int q, int d, int a_count, uint64_t seed);

} // namespace ndg

#endif
