#pragma once

#include "graphjac/intlinalg.hpp"
#include "graphjac/multigraph.hpp"

#include <optional>
#include <vector>

namespace graphjac {

// A dart is one of the two directed sides of an edge, encoded as 2*edge + end.
// Dart (e, s) points from endpoint s of e toward endpoint 1-s.
inline int dart_id(int edge, int end) { return 2 * edge + end; }
inline int dart_edge(int dart) { return dart / 2; }
inline int dart_end(int dart) { return dart % 2; }
inline int dart_twin(int dart) { return dart ^ 1; }

struct FaceSet {
    std::vector<std::vector<int>> faces; // dart sequences, one orbit each
    std::vector<int> lengths;            // boundary lengths (dart counts)
    int outer;                           // designated outer face index

    int face_count() const { return static_cast<int>(faces.size()); }
    /// Face containing a given dart.
    int face_of(int dart) const;
};

/// Combinatorial (spherical) embedding: a rotation system plus a designated
/// outer face. Embeddings are inputs; no planarity testing happens here.
/// The Euler check in trace_faces rejects non-spherical rotation systems.
class PlanarEmbedding {
public:
    /// rotations[v] lists the darts with origin v in cyclic order.
    PlanarEmbedding(Multigraph graph, std::vector<std::vector<int>> rotations,
                    std::optional<int> outer_face = std::nullopt);

    const Multigraph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::optional<int>& outer_face_override() const { return outer_; }

    PlanarEmbedding with_outer(int face) const;

private:
    Multigraph graph_;
    std::vector<std::vector<int>> rotations_;
    std::optional<int> outer_;
};

/// Face orbits of the rotation system (successor: rotation-next of the twin).
/// Throws guard_error when V - E + F != 2.
FaceSet trace_faces(const PlanarEmbedding& emb);

struct DualResult {
    Multigraph graph; // one vertex per face; loop mode (bridges give loops)
    FaceSet faces;    // primal faces, indices = dual vertex ids
    // Dual edge i corresponds to primal edge i: joins the faces on its two sides.
};

DualResult dual_graph(const PlanarEmbedding& emb);

/// Oriented inner-face/edge incidence matrix B_f (g x m): +1 when the face
/// traverses the edge forward, -1 backward, 0 when not on the face (or twice).
IntMatrix face_edge_incidence(const PlanarEmbedding& emb);

/// Face-cycle matrix over inner faces: diagonal = boundary edges shared with
/// another face, off-diagonal = -(shared edge count). Computed both from the
/// combinatorial formula and as B_f * B_f^T; the two must agree.
IntMatrix face_cycle_matrix(const PlanarEmbedding& emb);

/// Jacobian through the face-cycle matrix; equals jacobian(graph).
AbelianGroup jacobian_via_faces(const PlanarEmbedding& emb);

/// Resolved outer face index: the explicit override when present, otherwise
/// the longest face with ties broken by smallest index.
int resolve_outer_face(const PlanarEmbedding& emb);

} // namespace graphjac
