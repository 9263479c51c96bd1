#ifndef NDG_DECOMPOSE_HPP
#define NDG_DECOMPOSE_HPP

#include "ndg/graph.hpp"
#include "ndg/rational.hpp"
#include "ndg/report.hpp"

#include <optional>
#include <ostream>
#include <utility>
#include <variant>
#include <vector>

namespace ndg {

/// Total vertex -> color map, colors 1..k.  Color 0 means unassigned and is
/// only valid inside partial colorings.
using Coloring = std::vector<int>;

/// The split D = sum alpha_i with every alpha_i >= 2, larger entries first.
struct AlphaVector {
    std::vector<int> alphas;
    int D = 0;

    int k() const { return static_cast<int>(alphas.size()); }
    long long lcm() const;
};

AlphaVector alpha_split(int D, int k);

/// Phi = sum_i f_i / alpha_i where f_i counts monochromatic edges of color i.
Rational phi(const Graph& g, const Coloring& col, const AlphaVector& av);

/// Phi(after) - Phi(before) for recoloring v with color j; O(deg(v)).
Rational recolor_delta(const Graph& g, const Coloring& col, int v, int j,
                       const AlphaVector& av);

struct DescentStats {
    long long moves = 0;
};

/// Runs strictly improving single-vertex recolorings to a local minimum.
/// Scan order: vertices ascending, colors ascending, first improving move.
Coloring descend_phi(const Graph& g, Coloring col, const AlphaVector& av,
                     DescentStats* stats = nullptr);

/// First monochromatic K_{alpha_i+1} in canonical vertex order, if any.
/// Requires the coloring to satisfy the local-minimum degree bound
/// (monochromatic degree <= alpha_i everywhere).
std::optional<std::pair<int, VertexSet>> find_large_clique(const Graph& g,
                                                           const Coloring& col,
                                                           const AlphaVector& av);

struct CliqueCertificate {
    VertexSet vertices; // pairwise adjacent, size D+1
};

/// Chain-recoloring elimination of monochromatic K_{alpha_i+1} cliques.
/// Either returns a local-minimum coloring with none left, or a verified
/// K_{D+1} certificate.
std::variant<Coloring, CliqueCertificate>
eliminate_large_cliques(const Graph& g, Coloring col, const AlphaVector& av,
                        std::ostream* trace = nullptr);

struct PartCertificate {
    int max_degree = 0;
    bool clique_free = false;
};

struct Decomposition {
    std::vector<VertexSet> parts;
    AlphaVector alphas;
    std::vector<PartCertificate> certificates;
};

/// Decomposition engine: greedy init, descent, clique elimination, verification.
std::variant<Decomposition, CliqueCertificate>
decompose_lovasz(const Graph& g, const AlphaVector& av, std::ostream* trace = nullptr,
                 DescentStats* stats = nullptr);

Report verify_decomposition(const Graph& g, const Decomposition& dec);

/// Coloring -> Decomposition with freshly computed certificates.
Decomposition decomposition_from_coloring(const Graph& g, const Coloring& col,
                                          const AlphaVector& av);

} // namespace ndg

#endif
