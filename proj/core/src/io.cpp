#include "ndg/io.hpp"
#include "ndg/error.hpp"

#include <fstream>
#include <sstream>

namespace ndg {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = 0, edges_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            ls >> kind >> n >> m;
            if (!ls || kind != "edge" || n < 0)
                throw Error("malformed DIMACS problem line");
            g = Graph(n);
        } else if (tag == 'e') {
            if (n < 0)
                throw Error("DIMACS edge before problem line");
            int u, v;
            ls >> u >> v;
            if (!ls || u < 1 || v < 1 || u > n || v > n)
                throw Error("malformed DIMACS edge line");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        }
    }
    if (n < 0)
        throw Error("missing DIMACS problem line");
    if (edges_seen != m)
        throw Error("DIMACS edge count mismatch");
    return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw Error("graph JSON must have \"n\" and \"edges\"");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error("graph JSON edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({u, v});
    return j;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    if (format == "dimacs")
        return read_dimacs(in);
    if (format == "json") {
        nlohmann::json j;
        in >> j;
        return graph_from_json(j);
    }
    throw Error("unknown graph format: " + format);
}

void save_graph(const std::string& path, const std::string& format, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open " + path);
    if (format == "dimacs") {
        write_dimacs(out, g);
    } else if (format == "json") {
        out << graph_to_json(g).dump(2) << "\n";
    } else {
        throw Error("unknown graph format: " + format);
    }
}

nlohmann::json decomposition_to_json(const Decomposition& dec) {
    nlohmann::json j;
    j["alphas"] = dec.alphas.alphas;
    j["parts"] = nlohmann::json::array();
    for (const auto& p : dec.parts)
        j["parts"].push_back(p);
    return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    Decomposition dec;
    dec.alphas.alphas = j.at("alphas").get<std::vector<int>>();
    dec.alphas.D = 0;
    for (int a : dec.alphas.alphas)
        dec.alphas.D += a;
    for (const auto& p : j.at("parts"))
        dec.parts.push_back(p.get<VertexSet>());
    dec.certificates.resize(dec.parts.size());
    return dec;
}

nlohmann::json lemma_instance_to_json(const LemmaInstance& inst) {
    nlohmann::json j;
    j["q"] = inst.q;
    j["d"] = inst.d;
    j["b"] = graph_to_json(inst.b_graph);
    j["cross"] = nlohmann::json::array();
    for (const auto& s : inst.cross)
        j["cross"].push_back(s);
    return j;
}

LemmaInstance lemma_instance_from_json(const nlohmann::json& j) {
    LemmaInstance inst;
    inst.q = j.at("q").get<int>();
    inst.d = j.at("d").get<int>();
    inst.b_graph = graph_from_json(j.at("b"));
    for (const auto& s : j.at("cross")) {
        VertexSet cs = s.get<VertexSet>();
        if (!is_vertex_set(cs, inst.b_count()))
            throw Error("cross set is not a sorted set of valid B ids");
        inst.cross.push_back(std::move(cs));
    }
    return inst;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open " + path);
    out << j.dump(2) << "\n";
}

} // namespace ndg
