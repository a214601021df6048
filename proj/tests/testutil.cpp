#include "testutil.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "graphjac/errors.hpp"

namespace graphjac::testutil {

namespace {

// embedding under construction; rotations hold darts (2*edge + end)
struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;

    int origin(int dart) const {
        const auto& e = edges[dart / 2];
        return dart % 2 == 0 ? e.first : e.second;
    }

    // inserts dart d into rot[v] immediately before dart `before`
    void insert_before(int v, int d, int before) {
        auto& r = rot[v];
        r.insert(std::find(r.begin(), r.end(), before), d);
    }

    void insert_after(int v, int d, int after) {
        auto& r = rot[v];
        r.insert(std::next(std::find(r.begin(), r.end(), after)), d);
    }

    // parallel copy of edge e forming a bigon with it
    void double_edge(int e) {
        const int a = 2 * e, b = 2 * e + 1;
        const int id = static_cast<int>(edges.size());
        edges.push_back(edges[e]);
        insert_after(origin(a), 2 * id, a);
        insert_before(origin(b), 2 * id + 1, b);
    }

    // chord between origin(face[i]) and origin(face[j]) splitting the face
    void add_chord(const std::vector<int>& face, int i, int j) {
        const int u = origin(face[i]), v = origin(face[j]);
        const int id = static_cast<int>(edges.size());
        edges.emplace_back(u, v);
        insert_before(u, 2 * id, face[i]);
        insert_before(v, 2 * id + 1, face[j]);
    }

    // two-edge path through a fresh vertex, across a face like a chord
    void add_path(const std::vector<int>& face, int i, int j) {
        const int u = origin(face[i]), v = origin(face[j]);
        const int w = n++;
        const int e1 = static_cast<int>(edges.size());
        edges.emplace_back(u, w);
        const int e2 = static_cast<int>(edges.size());
        edges.emplace_back(w, v);
        rot.push_back({2 * e1 + 1, 2 * e2});
        insert_before(u, 2 * e1, face[i]);
        insert_before(v, 2 * e2 + 1, face[j]);
    }

    PlanarEmbedding embedding() const {
        return PlanarEmbedding(Multigraph::build(n, edges), rot);
    }
};

Builder triangle() {
    Builder b;
    b.n = 3;
    b.edges = {{0, 1}, {1, 2}, {2, 0}};
    b.rot = {{0, 5}, {2, 1}, {4, 3}};
    return b;
}

} // namespace

PlanarEmbedding random_planar_embedding(Rng& rng, int max_vertices, int max_edges) {
    Builder b = triangle();
    const int steps = std::uniform_int_distribution<>(0, max_edges - 3)(rng);
    for (int s = 0; s < steps && static_cast<int>(b.edges.size()) < max_edges; ++s) {
        const int move = std::uniform_int_distribution<>(0, 2)(rng);
        if (move == 0) {
            b.double_edge(std::uniform_int_distribution<>(
                0, static_cast<int>(b.edges.size()) - 1)(rng));
            continue;
        }
        const FaceSet fs = trace_faces(b.embedding());
        const int f = std::uniform_int_distribution<>(0, fs.face_count() - 1)(rng);
        const auto& face = fs.faces[f];
        const int len = static_cast<int>(face.size());
        if (len < 2) continue;
        const int i = std::uniform_int_distribution<>(0, len - 1)(rng);
        const int j = std::uniform_int_distribution<>(0, len - 1)(rng);
        if (move == 1) {
            if (i == j || b.origin(face[i]) == b.origin(face[j])) continue;
            b.add_chord(face, i, j);
        } else {
            if (b.n >= max_vertices) continue;
            if (i == j) continue; // a path from a vertex to itself is fine
                                  // geometrically but would need i != j darts
            b.add_path(face, i, j);
        }
    }
    return b.embedding();
}

Multigraph random_connected_multigraph(Rng& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<>(0, v - 1)(rng), v);
    for (int k = 0; k < extra_edges; ++k) {
        const int u = std::uniform_int_distribution<>(0, n - 1)(rng);
        const int v = std::uniform_int_distribution<>(0, n - 1)(rng);
        if (u == v) continue;
        edges.emplace_back(u, v);
    }
    return Multigraph::build(n, edges);
}

long brute_force_spanning_trees(const Multigraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > 20) throw std::invalid_argument("brute force oracle limited to m <= 20");
    if (n == 1) return 1;
    long count = 0;
    std::vector<int> parent(n);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        std::iota(parent.begin(), parent.end(), 0);
        int merges = 0;
        for (int e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            const int a = find(g.edge(e).u), b = find(g.edge(e).v);
            if (a == b) break; // cycle
            parent[a] = b;
            ++merges;
        }
        if (merges == n - 1) ++count;
    }
    return count;
}

} // namespace graphjac::testutil
