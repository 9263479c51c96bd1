#include "ndg/error.hpp"
#include "ndg/io.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <sstream>

using namespace ndg;
using namespace test_util;

TEST_CASE("dimacs round trip") {
    Graph g = petersen();
    std::stringstream buf;
    write_dimacs(buf, g);
    Graph back = read_dimacs(buf);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("dimacs rejects malformed input") {
    std::stringstream no_header("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(no_header), Error);
    std::stringstream count_mismatch("p edge 3 2\ne 1 2\n");
    CHECK_THROWS_AS(read_dimacs(count_mismatch), Error);
    std::stringstream out_of_range("p edge 2 1\ne 1 3\n");
    CHECK_THROWS_AS(read_dimacs(out_of_range), Error);
    std::stringstream comments("c hello\np edge 2 1\ne 1 2\n");
    CHECK(read_dimacs(comments).edge_count() == 1);
}

TEST_CASE("graph json round trip") {
    Graph g = gnp(9, 0.4, 31);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), Error);
}

TEST_CASE("decomposition json round trip") {
    Decomposition dec;
    dec.alphas.alphas = {3, 2};
    dec.alphas.D = 5;
    dec.parts = {{0, 2, 4}, {1, 3}};
    dec.certificates.resize(2);
    Decomposition back = decomposition_from_json(decomposition_to_json(dec));
    CHECK(back.parts == dec.parts);
    CHECK(back.alphas.alphas == dec.alphas.alphas);
    CHECK(back.alphas.D == 5);
}

TEST_CASE("lemma instance json round trip") {
    LemmaInstance inst;
    inst.q = 4;
    inst.d = 84;
    inst.b_graph = path(5);
    inst.cross = {{0, 1, 2, 3}, {1, 2, 3, 4}};
    LemmaInstance back = lemma_instance_from_json(lemma_instance_to_json(inst));
    CHECK(back.q == 4);
    CHECK(back.d == 84);
    CHECK(back.b_graph.edges() == inst.b_graph.edges());
    CHECK(back.cross == inst.cross);

    nlohmann::json bad = lemma_instance_to_json(inst);
    bad["cross"][0] = {3, 1};
    CHECK_THROWS_AS(lemma_instance_from_json(bad), Error);
}
