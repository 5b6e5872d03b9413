#include <doctest.h>

#include "corpus.hpp"
#include "gridlab/errors.hpp"
#include "gridlab/formats.hpp"
#include "gridlab/generators.hpp"
#include "gridlab/map_graphs.hpp"
#include "gridlab/minor_models.hpp"
#include "gridlab/tree_decomposition.hpp"

using namespace gridlab;

namespace {

int parse_line(auto&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE(".gr layout and round trip") {
    SimpleGraph g = path_graph(3);
    CHECK(write_gr(g) == "p tw 3 2\n1 2\n2 3\n");
    for (const auto& [name, h] : corpus::small_graphs(12)) {
        CAPTURE(name);
        std::string text = write_gr(h);
        CHECK(read_gr(text) == h);
        CHECK(write_gr(read_gr(text)) == text);
    }
    CHECK(read_gr("c comment\n\np tw 2 1\nc x\n2 1\n") == path_graph(2));
}

TEST_CASE(".gr errors carry line numbers") {
    CHECK(parse_line([] { read_gr("p tw 2 1\n1 1\n"); }) == 2);
    CHECK(parse_line([] { read_gr("p tw 2 1\n1 3\n"); }) == 2);
    CHECK(parse_line([] { read_gr("p tw 3 2\n1 2\n2 1\n"); }) == 3);
    CHECK(parse_line([] { read_gr("p tw 3 2\n1 2\n"); }) > 0);
    CHECK(parse_line([] { read_gr("c only\nq tw 3 2\n"); }) == 2);
    CHECK(parse_line([] { read_gr("p tw 3 1\n1 x\n"); }) == 2);
}

TEST_CASE(".td round trip") {
    for (const auto& [name, g] : corpus::small_graphs(10)) {
        CAPTURE(name);
        TreeDecomposition td = treewidth_exact(g).decomposition;
        std::string text = write_td(td, g.num_vertices());
        TdFile back = read_td(text);
        CHECK(back.td == td);
        CHECK(back.num_vertices == g.num_vertices());
        CHECK(write_td(back.td, back.num_vertices) == text);
    }
    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
    CHECK(write_td(td, 3) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    CHECK(parse_line([] { read_td("s td 2 2 3\nb 1 1 2\nb 2 2 4\n1 2\n"); }) == 3);
    CHECK(parse_line([] { read_td("s td 1 1 1\nb 2 1\n"); }) == 2);
}

TEST_CASE(".emb round trip") {
    std::vector<EmbeddedMap> maps{wheel_map(1), wheel_map(2), wheel_map(3), nation_grid_map(2)};
    for (std::uint64_t seed = 0; seed < 10; ++seed) maps.push_back(random_canonical_map(5 + seed % 5, seed, 20));
    for (const auto& m : maps) {
        std::string text = write_emb(m.graph, &m.labels);
        EmbFile back = read_emb(text);
        CHECK(back.graph == m.graph);
        REQUIRE(back.labels.has_value());
        CHECK(*back.labels == m.labels);
        CHECK(write_emb(back.graph, &*back.labels) == text);
    }
    EmbeddedGraph t = random_planar_triangulation(6, 1);
    EmbFile plain = read_emb(write_emb(t));
    CHECK(plain.graph == t);
    CHECK_FALSE(plain.labels.has_value());
    CHECK(parse_line([] { read_emb("emb 2\ntwin 1 0\nnext 0 1\nvertex_of 0 0 0\n"); }) == 4);
    CHECK(parse_line([] { read_emb("emb 2\ntwin 0 1\nnext 0 1\nvertex_of 0 1\n"); }) > 0);
}

TEST_CASE("model certificate round trip") {
    MinorModel m = *minor_containment_exact(complete_graph(4), grid_graph(3, 3));
    std::string text = write_model_json(m, "grid3x3.gr");
    CHECK(certificate_type(text) == "minor_model");
    MinorModel back = read_model_json(text, m.host);
    CHECK(back == m);
    CHECK(write_model_json(back, "grid3x3.gr") == text);
    CHECK_THROWS_AS(read_model_json(text, grid_graph(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(read_model_json("{\"type\": \"minor_model\"", m.host), ParseError);
}

TEST_CASE("sequence certificate round trip") {
    TransferInstance inst = nation_grid_transfer_instance(12, 4);
    SimpleGraph host = union_radial_dual(inst.map.graph, inst.map.labels);
    SequenceCertificate c{inst.sequence, "map.emb", host.num_vertices(), host.num_edges()};
    std::string text = write_sequence_json(c);
    CHECK(certificate_type(text) == "contraction_sequence");
    SequenceCertificate back = read_sequence_json(text);
    CHECK(back.sequence == c.sequence);
    CHECK(back.host_ref == "map.emb");
    CHECK(back.host_vertices == c.host_vertices);
    CHECK(back.host_edges == c.host_edges);
    CHECK(write_sequence_json(back) == text);
}
