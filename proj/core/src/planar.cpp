#include "graphjac/planar.hpp"

#include "graphjac/errors.hpp"
#include "graphjac/jacobian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphjac {

int FaceSet::face_of(int dart) const {
    for (int f = 0; f < face_count(); ++f)
        for (int d : faces[f])
            if (d == dart) return f;
    throw input_error("dart not on any face");
}

PlanarEmbedding::PlanarEmbedding(Multigraph graph, std::vector<std::vector<int>> rotations,
                                 std::optional<int> outer_face)
    : graph_(std::move(graph)), rotations_(std::move(rotations)), outer_(outer_face) {
    const int n = graph_.vertex_count();
    const int m = graph_.edge_count();
    if (static_cast<int>(rotations_.size()) != n)
        throw input_error("rotation system: one rotation per vertex required");
    std::vector<char> seen(2 * m, 0);
    for (int v = 0; v < n; ++v)
        for (int d : rotations_[v]) {
            if (d < 0 || d >= 2 * m) throw input_error("rotation system: dart id out of range");
            if (seen[d]) throw input_error("rotation system: dart listed twice");
            seen[d] = 1;
            const Edge& e = graph_.edge(dart_edge(d));
            int origin = dart_end(d) == 0 ? e.u : e.v;
            if (origin != v)
                throw input_error("rotation system: dart " + std::to_string(d) +
                                  " listed at a vertex that is not its origin");
        }
    for (int d = 0; d < 2 * m; ++d)
        if (!seen[d]) throw input_error("rotation system: missing dart " + std::to_string(d));
}

PlanarEmbedding PlanarEmbedding::with_outer(int face) const {
    return PlanarEmbedding(graph_, rotations_, face);
}

namespace {

std::vector<std::vector<int>> face_orbits(const PlanarEmbedding& emb) {
    const Multigraph& g = emb.graph();
    const int m = g.edge_count();
    // rotation successor per dart
    std::vector<int> rot_next(2 * m, -1);
    for (const auto& rot : emb.rotations())
        for (size_t i = 0; i < rot.size(); ++i) rot_next[rot[i]] = rot[(i + 1) % rot.size()];

    std::vector<char> visited(2 * m, 0);
    std::vector<std::vector<int>> faces;
    for (int start = 0; start < 2 * m; ++start) {
        if (visited[start]) continue;
        std::vector<int> face;
        int d = start;
        do {
            visited[d] = 1;
            face.push_back(d);
            d = rot_next[dart_twin(d)];
        } while (d != start);
        faces.push_back(std::move(face));
    }
    return faces;
}

} // namespace

FaceSet trace_faces(const PlanarEmbedding& emb) {
    const Multigraph& g = emb.graph();
    if (!g.is_connected()) throw guard_error("trace_faces: graph is not connected");
    FaceSet fs;
    fs.faces = face_orbits(emb);
    for (const auto& f : fs.faces) fs.lengths.push_back(static_cast<int>(f.size()));

    const int euler = g.vertex_count() - g.edge_count() + fs.face_count();
    if (euler != 2)
        throw guard_error("trace_faces: Euler check failed (V - E + F = " + std::to_string(euler) +
                          "), rotation system is not spherical");

    if (emb.outer_face_override()) {
        int o = *emb.outer_face_override();
        if (o < 0 || o >= fs.face_count()) throw input_error("outer face index out of range");
        fs.outer = o;
    } else {
        int best = 0;
        for (int f = 1; f < fs.face_count(); ++f)
            if (fs.lengths[f] > fs.lengths[best]) best = f;
        fs.outer = best;
    }
    return fs;
}

int resolve_outer_face(const PlanarEmbedding& emb) {
    return trace_faces(emb).outer;
}

DualResult dual_graph(const PlanarEmbedding& emb) {
    FaceSet fs = trace_faces(emb);
    const int m = emb.graph().edge_count();
    std::vector<int> face_of_dart(2 * m, -1);
    for (int f = 0; f < fs.face_count(); ++f)
        for (int d : fs.faces[f]) face_of_dart[d] = f;

    std::vector<std::pair<int, int>> endpoints;
    endpoints.reserve(m);
    for (int e = 0; e < m; ++e)
        endpoints.emplace_back(face_of_dart[dart_id(e, 0)], face_of_dart[dart_id(e, 1)]);
    return {Multigraph::build(fs.face_count(), endpoints, /*allows_loops=*/true), std::move(fs)};
}

IntMatrix face_edge_incidence(const PlanarEmbedding& emb) {
    FaceSet fs = trace_faces(emb);
    const int m = emb.graph().edge_count();
    const int g = emb.graph().genus();
    IntMatrix bf(g, m);
    int row = 0;
    for (int f = 0; f < fs.face_count(); ++f) {
        if (f == fs.outer) continue;
        for (int d : fs.faces[f]) {
            // both darts of a bridge lie on the same face and cancel
            bf.at(row, dart_edge(d)) += dart_end(d) == 0 ? 1 : -1;
        }
        ++row;
    }
    return bf;
}

IntMatrix face_cycle_matrix(const PlanarEmbedding& emb) {
    FaceSet fs = trace_faces(emb);
    const Multigraph& graph = emb.graph();
    const int m = graph.edge_count();
    const int g = graph.genus();

    // inner-face indices in face order
    std::vector<int> inner;
    for (int f = 0; f < fs.face_count(); ++f)
        if (f != fs.outer) inner.push_back(f);
    std::vector<int> face_of_dart(2 * m, -1);
    for (int f = 0; f < fs.face_count(); ++f)
        for (int d : fs.faces[f]) face_of_dart[d] = f;
    std::vector<int> inner_index(fs.face_count(), -1);
    for (int i = 0; i < g; ++i) inner_index[inner[i]] = i;

    // combinatorial entries: each edge joins the faces on its two sides
    IntMatrix b(g, g);
    for (int e = 0; e < m; ++e) {
        int fa = face_of_dart[dart_id(e, 0)];
        int fb = face_of_dart[dart_id(e, 1)];
        if (fa == fb) continue; // bridge: no contribution
        int ia = inner_index[fa], ib = inner_index[fb];
        if (ia >= 0) b.at(ia, ia) += 1;
        if (ib >= 0) b.at(ib, ib) += 1;
        if (ia >= 0 && ib >= 0) {
            b.at(ia, ib) -= 1;
            b.at(ib, ia) -= 1;
        }
    }

    IntMatrix bf = face_edge_incidence(emb);
    IntMatrix product = bf * bf.transposed();
    if (!(product == b))
        throw std::logic_error("face_cycle_matrix: combinatorial and algebraic forms disagree");
    return b;
}

AbelianGroup jacobian_via_faces(const PlanarEmbedding& emb) {
    AbelianGroup grp = cokernel_group(face_cycle_matrix(emb));
    grp.free_rank = 0; // face-cycle matrix of a connected embedded graph is nonsingular
    return grp;
}

} // namespace graphjac
