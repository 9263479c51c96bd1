#ifndef NDG_IO_HPP
#define NDG_IO_HPP

#include "ndg/decompose.hpp"
#include "ndg/graph.hpp"
#include "ndg/lemma.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace ndg {

// DIMACS ".col": "p edge n m" header, "e u v" lines, 1-based ids.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// {"n": int, "edges": [[u,v],...]}, 0-based, edges sorted.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

Graph load_graph(const std::string& path, const std::string& format);
void save_graph(const std::string& path, const std::string& format, const Graph& g);

// {"alphas": [...], "parts": [[...], ...]}
nlohmann::json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const nlohmann::json& j);

// {"q": int, "d": int, "b": graph, "cross": [[b-ids], ...]}
nlohmann::json lemma_instance_to_json(const LemmaInstance& inst);
LemmaInstance lemma_instance_from_json(const nlohmann::json& j);

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

} // namespace ndg

#endif
