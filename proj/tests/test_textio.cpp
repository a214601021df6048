#include <doctest.h>

#include "graphjac/errors.hpp"
#include "graphjac/gluing.hpp"
#include "graphjac/textio.hpp"

using namespace graphjac;

TEST_CASE("graph round trip") {
    const std::string text = "n 3\ne 0 1\ne 1 2\ne 2 0\n";
    const Multigraph g = parse_graph(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(emit_graph(g) == text);
    CHECK(emit_graph(parse_graph(emit_graph(cycle_graph(2)))) ==
          emit_graph(cycle_graph(2)));
}

TEST_CASE("comments and blank lines are ignored") {
    const Multigraph g = parse_graph("# a triangle\nn 3\n\ne 0 1 # first\ne 1 2\ne 2 0\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("malformed graphs are rejected") {
    CHECK_THROWS_AS(parse_graph(""), input_error);
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0\n"), input_error);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_graph("n two\n"), input_error);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0 2\n"), input_error);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0 0\n"), input_error);
    CHECK_THROWS_AS(parse_graph("n 2\nf 0 1\n"), input_error);
}

TEST_CASE("matrix round trip") {
    const std::string text = "2 3\n1 -2 3\n0 5 -600000000000000000000\n";
    const IntMatrix m = parse_matrix(text);
    CHECK(m.rows() == 2);
    CHECK(m.at(1, 2) == Int("-600000000000000000000"));
    CHECK(emit_matrix(m) == text);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n"), input_error);
    CHECK_THROWS_AS(parse_matrix("1 2\n1 2 3\n"), input_error);
    CHECK_THROWS_AS(parse_matrix("1 1\nx\n"), input_error);
}

TEST_CASE("divisor round trip") {
    CHECK(parse_divisor("3 -1 0") == Divisor{3, -1, 0});
    CHECK(parse_divisor("3 -1 # trailing\n0") == Divisor{3, -1, 0});
    CHECK(emit_divisor({3, -1, 0}) == "3 -1 0\n");
    CHECK_THROWS_AS(parse_divisor(""), input_error);
    CHECK_THROWS_AS(parse_divisor("1 x"), input_error);
}

TEST_CASE("embedding round trip") {
    const std::string text =
        "n 3\ne 0 1\ne 1 2\ne 2 0\n"
        "rot 0 0:0 2:1\nrot 1 1:0 0:1\nrot 2 2:0 1:1\n";
    const PlanarEmbedding emb = parse_embedding(text);
    CHECK(emb.rotations()[0] == std::vector<int>{0, 5});
    CHECK(emit_embedding(emb) == text);
    const PlanarEmbedding with_outer = parse_embedding(text + "outer 1\n");
    CHECK(with_outer.outer_face_override() == 1);
    CHECK(emit_embedding(with_outer) == text + "outer 1\n");
    CHECK_THROWS_AS(parse_embedding(text + "rot 0 0:0 2:1\n"), input_error);
    CHECK_THROWS_AS(parse_embedding("n 2\ne 0 1\nrot 0 0:2\nrot 1 0:1\n"),
                    input_error);
}

TEST_CASE("rotor round trip") {
    const std::string text = read_text_file(DATA_DIR "/wheel3.rotor");
    const Rotor r = parse_rotor(text);
    CHECK(r.base == 1);
    CHECK(r.order == 3);
    CHECK(r.automorphism[8] == 2);
    CHECK(parse_rotor(emit_rotor(r)).automorphism == r.automorphism);
    CHECK_THROWS_AS(parse_rotor("n 2\ne 0 1\nauto 1 0\nbase 0\norder 2\n"),
                    input_error); // order below 3
    CHECK_THROWS_AS(parse_rotor("n 2\ne 0 1\nbase 0\norder 3\n"), input_error);
}

TEST_CASE("attachment round trip") {
    const Attachment a = parse_attachment(read_text_file(DATA_DIR "/path.attach"));
    CHECK(a.back_graph.vertex_count() == 4);
    CHECK(a.sites.at(3) == 7);
    const Attachment b = parse_attachment(emit_attachment(a));
    CHECK(b.sites == a.sites);
    CHECK_THROWS_AS(parse_attachment("n 2\ne 0 1\n"), input_error);
    CHECK_THROWS_AS(parse_attachment("n 2\ne 0 1\nattach 0 1\nattach 0 2\n"),
                    input_error);
}

TEST_CASE("missing files raise input errors") {
    CHECK_THROWS_AS(read_text_file("/nonexistent/path"), input_error);
}
