#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphjac/divisor.hpp"
#include "graphjac/errors.hpp"
#include "graphjac/gluing.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/planar.hpp"
#include "graphjac/rotor.hpp"
#include "graphjac/textio.hpp"
#include "graphjac/tuttepoly.hpp"

namespace {

using namespace graphjac;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    return read_text_file(path);
}

void print_report(const RotorReport& rep, const char* label_a,
                  const char* label_b) {
    std::cout << "jac " << label_a << ": " << rep.jac_g.to_string() << "\n";
    std::cout << "jac " << label_b << ": " << rep.jac_h.to_string() << "\n";
    std::cout << "groups: " << (rep.groups_match ? "match" : "differ") << "\n";
    if (rep.tutte_match)
        std::cout << "tutte: " << (*rep.tutte_match ? "match" : "differ") << "\n";
    if (rep.graphs_isomorphic)
        std::cout << "isomorphic: " << (*rep.graphs_isomorphic ? "yes" : "no") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact Jacobians (critical groups) of finite multigraphs"};
    app.require_subcommand(1);

    // jac
    std::string jac_file;
    int jac_removed = -1;
    bool jac_faces = false, jac_reduced = false, jac_trees = false, jac_picard = false;
    auto* jac_cmd = app.add_subcommand("jac", "Jacobian of a graph");
    jac_cmd->add_option("file", jac_file, "graph file, or embedding with --faces ('-' for stdin)")->required();
    jac_cmd->add_option("--removed", jac_removed, "vertex removed from the Laplacian");
    jac_cmd->add_flag("--faces", jac_faces, "input is an embedding; use the face-cycle matrix");
    jac_cmd->add_flag("--reduced", jac_reduced, "also print the reduced Laplacian");
    jac_cmd->add_flag("--trees", jac_trees, "also print the spanning tree count");
    jac_cmd->add_flag("--picard", jac_picard, "print the Picard group instead");

    // snf
    std::string snf_file;
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form diagonal of an integer matrix");
    snf_cmd->add_option("file", snf_file, "matrix file ('-' for stdin)")->required();

    // faces
    std::string faces_file;
    auto* faces_cmd = app.add_subcommand("faces", "face boundaries of an embedding");
    faces_cmd->add_option("file", faces_file, "embedding file ('-' for stdin)")->required();

    // dual
    std::string dual_file;
    auto* dual_cmd = app.add_subcommand("dual", "dual graph of an embedding");
    dual_cmd->add_option("file", dual_file, "embedding file ('-' for stdin)")->required();

    // glue
    std::string glue_family, glue_emit = "group";
    std::vector<int> glue_params;
    auto* glue_cmd = app.add_subcommand("glue", "glued cycle families with known Jacobians");
    glue_cmd->add_option("family", glue_family,
                         "cycles n k p | doubled n | fan m n | chords n p1 p2 a | "
                         "triangle n a b c | chain n1 n2 ...")->required();
    glue_cmd->add_option("params", glue_params, "family parameters")->required();
    glue_cmd->add_option("--emit", glue_emit, "group (default), graph, or both")
        ->check(CLI::IsMember({"group", "graph", "both"}));

    // chip
    auto* chip_cmd = app.add_subcommand("chip", "chip firing on divisors");
    std::string chip_graph, chip_div;
    int chip_q = 0;
    auto* reduce_cmd = chip_cmd->add_subcommand("reduce", "q-reduced form of a divisor");
    reduce_cmd->add_option("graph", chip_graph, "graph file")->required();
    reduce_cmd->add_option("divisor", chip_div, "divisor file")->required();
    reduce_cmd->add_option("--q", chip_q, "reduction vertex (default 0)");
    auto* win_cmd = chip_cmd->add_subcommand("winnable", "is the divisor equivalent to an effective one");
    win_cmd->add_option("graph", chip_graph, "graph file")->required();
    win_cmd->add_option("divisor", chip_div, "divisor file")->required();
    chip_cmd->require_subcommand(1);

    // rotor
    std::string rotor_file, attach_file, rotor_mode = "identify";
    bool rotor_tutte = false, rotor_iso = false, rotor_reversal = false;
    auto* rotor_cmd = app.add_subcommand("rotor", "compare supergraphs of a rotor");
    auto* verify_cmd = rotor_cmd->add_subcommand("verify", "glue a back graph both ways and compare");
    verify_cmd->add_option("rotor", rotor_file, "rotor file")->required();
    verify_cmd->add_option("attachment", attach_file, "back graph and attach sites")->required();
    verify_cmd->add_option("--mode", rotor_mode, "identify (default) or edge-join")
        ->check(CLI::IsMember({"identify", "edge-join"}));
    verify_cmd->add_flag("--tutte", rotor_tutte, "also compare Tutte polynomials");
    verify_cmd->add_flag("--iso", rotor_iso, "also test graph isomorphism");
    verify_cmd->add_flag("--reversal", rotor_reversal,
                         "compare against the reversed attachment instead of the twist");
    rotor_cmd->require_subcommand(1);

    // tutte
    std::string tutte_file;
    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial coefficients");
    tutte_cmd->add_option("file", tutte_file, "graph file ('-' for stdin)")->required();

    CLI11_PARSE(app, argc, argv);

    if (jac_cmd->parsed()) {
        if (jac_faces) {
            const PlanarEmbedding emb = parse_embedding(slurp(jac_file));
            std::cout << jacobian_via_faces(emb).to_string() << "\n";
            return 0;
        }
        const Multigraph g = parse_graph(slurp(jac_file));
        if (jac_reduced) {
            const auto pair = reduced_laplacian(g, jac_removed < 0 ? 0 : jac_removed);
            std::cout << pair.reduced.to_string();
        }
        if (jac_trees)
            std::cout << "trees " << spanning_tree_count(g).get_str() << "\n";
        if (jac_picard)
            std::cout << picard(g).to_string() << "\n";
        else
            std::cout << jacobian(g, jac_removed < 0 ? std::optional<int>{}
                                                     : std::optional<int>{jac_removed})
                             .to_string()
                      << "\n";
        return 0;
    }

    if (snf_cmd->parsed()) {
        const IntMatrix m = parse_matrix(slurp(snf_file));
        const std::vector<Int> d = smith_normal_form(m);
        for (std::size_t i = 0; i < d.size(); ++i)
            std::cout << (i ? " " : "") << d[i].get_str();
        std::cout << "\n";
        return 0;
    }

    if (faces_cmd->parsed()) {
        const PlanarEmbedding emb = parse_embedding(slurp(faces_file));
        const FaceSet fs = trace_faces(emb);
        for (int i = 0; i < fs.face_count(); ++i) {
            std::cout << "face " << i << " len " << fs.lengths[i] << ":";
            for (int d : fs.faces[i])
                std::cout << " " << dart_edge(d) << ":" << dart_end(d);
            std::cout << "\n";
        }
        std::cout << "outer " << fs.outer << "\n";
        return 0;
    }

    if (dual_cmd->parsed()) {
        const PlanarEmbedding emb = parse_embedding(slurp(dual_file));
        std::cout << emit_graph(dual_graph(emb).graph);
        return 0;
    }

    if (glue_cmd->parsed()) {
        const std::vector<int>& p = glue_params;
        auto need = [&](std::size_t k) {
            if (p.size() != k)
                throw input_error("family '" + glue_family + "' takes " +
                                  std::to_string(k) + " parameters");
        };
        Multigraph g = Multigraph::build(0, {});
        if (glue_family == "cycles") {
            need(3);
            g = glue_cycles_along_path(p[0], p[1], p[2]);
        } else if (glue_family == "doubled") {
            need(1);
            g = doubled_cycle(p[0]);
        } else if (glue_family == "fan") {
            need(2);
            g = fan(p[0], p[1]);
        } else if (glue_family == "chords") {
            need(4);
            g = three_cycle_chords(p[0], p[1], p[2], p[3]);
        } else if (glue_family == "triangle") {
            need(4);
            g = triangle_chords(p[0], p[1], p[2], p[3]);
        } else if (glue_family == "chain") {
            if (p.size() < 2) throw input_error("chain needs at least two cycle lengths");
            g = chain_of_cycles(p);
        } else {
            throw input_error("unknown family: " + glue_family);
        }
        if (glue_emit == "graph" || glue_emit == "both") std::cout << emit_graph(g);
        if (glue_emit == "group" || glue_emit == "both")
            std::cout << jacobian(g).to_string() << "\n";
        return 0;
    }

    if (chip_cmd->parsed()) {
        const Multigraph g = parse_graph(slurp(chip_graph));
        const Divisor d = parse_divisor(slurp(chip_div));
        if (d.size() != static_cast<std::size_t>(g.vertex_count()))
            throw input_error("divisor length does not match the vertex count");
        if (reduce_cmd->parsed()) {
            if (chip_q < 0 || chip_q >= g.vertex_count())
                throw input_error("reduction vertex out of range");
            std::cout << emit_divisor(q_reduce(g, d, chip_q));
        } else {
            std::cout << (is_winnable(g, d) ? "winnable" : "not winnable") << "\n";
        }
        return 0;
    }

    if (rotor_cmd->parsed()) {
        const Rotor r = parse_rotor(slurp(rotor_file));
        const Attachment a = parse_attachment(slurp(attach_file));
        const GlueMode mode =
            rotor_mode == "identify" ? GlueMode::identify : GlueMode::edge_join;
        if (rotor_reversal) {
            print_report(verify_reversal_pair(r, a, mode, rotor_tutte, rotor_iso),
                         "original", "reversed");
        } else {
            print_report(verify_pair(r, a, mode, rotor_tutte, rotor_iso),
                         "twist0", "twist1");
        }
        return 0;
    }

    if (tutte_cmd->parsed()) {
        const Multigraph g = parse_graph(slurp(tutte_file));
        std::cout << tutte_polynomial(g).to_lines();
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const graphjac::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const graphjac::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
