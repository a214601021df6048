#pragma once

#include "graphjac/intlinalg.hpp"
#include "graphjac/multigraph.hpp"

#include <optional>

namespace graphjac {

struct LaplacianPair {
    IntMatrix full;    // n x n, symmetric, zero row sums
    IntMatrix reduced; // (n-1) x (n-1), full minus row/column of removed_vertex
    int removed_vertex;
};

/// Graph Laplacian (degree matrix minus adjacency). Rejects loop-mode graphs.
IntMatrix laplacian(const Multigraph& g);

LaplacianPair reduced_laplacian(const Multigraph& g, int removed = 0);

/// Jacobian (critical group): cokernel of a reduced Laplacian.
/// Independent of the removed vertex; loops in a loop-mode graph are suppressed.
AbelianGroup jacobian(const Multigraph& g, std::optional<int> removed = std::nullopt);

/// Picard group: Jacobian torsion plus one free factor.
AbelianGroup picard(const Multigraph& g);

/// Matrix-tree count: determinant of any reduced Laplacian.
Int spanning_tree_count(const Multigraph& g);

inline bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

} // namespace graphjac
