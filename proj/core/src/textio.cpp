#include "graphjac/textio.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "graphjac/errors.hpp"

namespace graphjac {

namespace {

// meaningful lines: comments stripped, blanks dropped
std::vector<std::string> clean_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) out.push_back(line);
    }
    return out;
}

int parse_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw input_error("");
        return value;
    } catch (const std::exception&) {
        throw input_error(std::string("expected an integer ") + what +
                          ", got '" + token + "'");
    }
}

struct GraphLines {
    Multigraph graph;
    std::vector<std::string> rest; // lines after the graph section
};

GraphLines parse_graph_section(const std::vector<std::string>& lines) {
    if (lines.empty()) throw input_error("empty graph description");
    std::istringstream head(lines[0]);
    std::string key, count, extra;
    if (!(head >> key >> count) || key != "n" || (head >> extra))
        throw input_error("graph must start with a line 'n <vertex count>'");
    const int n = parse_int(count, "vertex count");
    std::vector<std::pair<int, int>> edges;
    std::size_t i = 1;
    for (; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string tag;
        in >> tag;
        if (tag != "e") break;
        std::string u, v;
        if (!(in >> u >> v) || (in >> extra))
            throw input_error("edge line must be 'e <u> <v>'");
        edges.emplace_back(parse_int(u, "endpoint"), parse_int(v, "endpoint"));
    }
    return {Multigraph::build(n, edges),
            std::vector<std::string>(lines.begin() + i, lines.end())};
}

} // namespace

Multigraph parse_graph(const std::string& text) {
    GraphLines gl = parse_graph_section(clean_lines(text));
    if (!gl.rest.empty())
        throw input_error("unexpected line in graph file: " + gl.rest[0]);
    return gl.graph;
}

std::string emit_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

IntMatrix parse_matrix(const std::string& text) {
    const std::vector<std::string> lines = clean_lines(text);
    if (lines.empty()) throw input_error("empty matrix description");
    std::istringstream head(lines[0]);
    std::string rows, cols, extra;
    if (!(head >> rows >> cols) || (head >> extra))
        throw input_error("matrix must start with '<rows> <cols>'");
    const int r = parse_int(rows, "row count");
    const int c = parse_int(cols, "column count");
    if (r < 0 || c < 0) throw input_error("matrix dimensions must be nonnegative");
    if (static_cast<int>(lines.size()) != 1 + r)
        throw input_error("matrix needs exactly one line per row");
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        std::istringstream in(lines[1 + i]);
        std::string token;
        for (int j = 0; j < c; ++j) {
            if (!(in >> token))
                throw input_error("matrix row is too short");
            try {
                m.at(i, j) = mpz_class(token);
            } catch (const std::invalid_argument&) {
                throw input_error("bad matrix entry '" + token + "'");
            }
        }
        if (in >> token) throw input_error("matrix row is too long");
    }
    return m;
}

std::string emit_matrix(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m.at(i, j).get_str();
        out << "\n";
    }
    return out.str();
}

Divisor parse_divisor(const std::string& text) {
    Divisor d;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        try {
            std::size_t used = 0;
            d.push_back(std::stoll(token, &used));
            if (used != token.size()) throw input_error("");
        } catch (const std::exception&) {
            throw input_error("bad divisor entry '" + token + "'");
        }
    }
    if (d.empty()) throw input_error("empty divisor description");
    return d;
}

std::string emit_divisor(const Divisor& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out << (i ? " " : "") << d[i];
    out << "\n";
    return out.str();
}

PlanarEmbedding parse_embedding(const std::string& text) {
    GraphLines gl = parse_graph_section(clean_lines(text));
    const int n = gl.graph.vertex_count();
    std::vector<std::vector<int>> rotations(n);
    std::vector<bool> given(n, false);
    std::optional<int> outer;
    for (const std::string& line : gl.rest) {
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "rot") {
            std::string vtoken;
            if (!(in >> vtoken)) throw input_error("rot line needs a vertex");
            const int v = parse_int(vtoken, "vertex");
            if (v < 0 || v >= n) throw input_error("rot vertex out of range");
            if (given[v]) throw input_error("duplicate rot line for a vertex");
            given[v] = true;
            std::string dart;
            while (in >> dart) {
                const auto colon = dart.find(':');
                if (colon == std::string::npos)
                    throw input_error("dart must be written <edge>:<end>");
                const int e = parse_int(dart.substr(0, colon), "edge id");
                const int s = parse_int(dart.substr(colon + 1), "edge end");
                if (e < 0 || e >= gl.graph.edge_count() || (s != 0 && s != 1))
                    throw input_error("dart out of range: " + dart);
                rotations[v].push_back(dart_id(e, s));
            }
        } else if (tag == "outer") {
            std::string ftoken, extra;
            if (!(in >> ftoken) || (in >> extra))
                throw input_error("outer line must be 'outer <face>'");
            outer = parse_int(ftoken, "face index");
        } else {
            throw input_error("unexpected line in embedding file: " + line);
        }
    }
    return PlanarEmbedding(gl.graph, std::move(rotations), outer);
}

std::string emit_embedding(const PlanarEmbedding& emb) {
    std::ostringstream out;
    out << emit_graph(emb.graph());
    for (int v = 0; v < emb.graph().vertex_count(); ++v) {
        out << "rot " << v;
        for (int d : emb.rotations()[v])
            out << " " << dart_edge(d) << ":" << dart_end(d);
        out << "\n";
    }
    if (emb.outer_face_override()) out << "outer " << *emb.outer_face_override() << "\n";
    return out.str();
}

Rotor parse_rotor(const std::string& text) {
    GraphLines gl = parse_graph_section(clean_lines(text));
    Rotor r{std::move(gl.graph), {}, -1, -1};
    for (const std::string& line : gl.rest) {
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "auto") {
            if (!r.automorphism.empty())
                throw input_error("duplicate auto line in rotor file");
            std::string token;
            while (in >> token)
                r.automorphism.push_back(parse_int(token, "vertex image"));
        } else if (tag == "base") {
            std::string token, extra;
            if (!(in >> token) || (in >> extra))
                throw input_error("base line must be 'base <vertex>'");
            r.base = parse_int(token, "base vertex");
        } else if (tag == "order") {
            std::string token, extra;
            if (!(in >> token) || (in >> extra))
                throw input_error("order line must be 'order <k>'");
            r.order = parse_int(token, "order");
        } else {
            throw input_error("unexpected line in rotor file: " + line);
        }
    }
    if (r.automorphism.empty() || r.base < 0 || r.order < 0)
        throw input_error("rotor file needs auto, base and order lines");
    const RotorCheck c = validate_rotor(r);
    if (!c.ok) throw input_error("invalid rotor: " + c.message);
    return r;
}

std::string emit_rotor(const Rotor& r) {
    std::ostringstream out;
    out << emit_graph(r.graph);
    out << "auto";
    for (int w : r.automorphism) out << " " << w;
    out << "\n";
    out << "base " << r.base << "\n";
    out << "order " << r.order << "\n";
    return out.str();
}

Attachment parse_attachment(const std::string& text) {
    GraphLines gl = parse_graph_section(clean_lines(text));
    Attachment a{std::move(gl.graph), {}};
    for (const std::string& line : gl.rest) {
        std::istringstream in(line);
        std::string tag, s, w, extra;
        in >> tag;
        if (tag != "attach" || !(in >> s >> w) || (in >> extra))
            throw input_error("expected 'attach <back vertex> <rotor vertex>', got: " + line);
        const int sv = parse_int(s, "back graph vertex");
        if (a.sites.count(sv))
            throw input_error("vertex attached twice in attachment file");
        a.sites.emplace(sv, parse_int(w, "rotor vertex"));
    }
    if (a.sites.empty()) throw input_error("attachment file has no attach lines");
    return a;
}

std::string emit_attachment(const Attachment& a) {
    std::ostringstream out;
    out << emit_graph(a.back_graph);
    for (const auto& [s, w] : a.sites) out << "attach " << s << " " << w << "\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace graphjac
