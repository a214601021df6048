#pragma once

#include "graphjac/intlinalg.hpp"
#include "graphjac/multigraph.hpp"

#include <vector>

namespace graphjac {

/// Cycle with n >= 2 vertices 0..n-1 and edges i -> (i+1) mod n in id order.
/// C_2 is the doubled edge.
Multigraph cycle_graph(int n);

/// Also K_p builders used across tests and the CLI.
Multigraph complete_graph(int n);
Multigraph path_graph(int n);

/// Disjoint union with v1 and v2 identified. Vertices of g1 keep their ids;
/// vertices of g2 follow in id order (skipping v2).
Multigraph glue_at_vertex(const Multigraph& g1, int v1, const Multigraph& g2, int v2);

/// C_n and C_k sharing a path of p consecutive edges (1 <= p < min(n, k)).
/// Vertices 0..n-1 form the first cycle; the shared path is 0 -> 1 -> ... -> p;
/// the second cycle closes the path with k - p further edges.
Multigraph glue_cycles_along_path(int n, int k, int p);

/// Closed form: Z/d x Z/((nk - p^2)/d) with d = gcd(n, k, p).
AbelianGroup glued_cycles_formula(int n, int k, int p);

/// C_n with every edge doubled (n >= 2).
Multigraph doubled_cycle(int n);
/// Closed form: (Z/2)^(n-2) x Z/2n.
AbelianGroup doubled_cycle_formula(int n);

/// Fan F_{m,n}: join of m isolated vertices (ids 0..m-1) with the path P_n.
Multigraph fan(int m, int n);
/// |Jac(F_{1,n})| by the recurrence x_1 = 1, x_2 = 3, x_i = 3 x_{i-1} - x_{i-2}.
Int fan_jacobian_order(int n);

/// C_n (vertices 0..n-1) plus chords (0, p1+p2+a) and (p1, p1+a): two runs of
/// p1 and p2 consecutive edges separated by a edges, tied by two chords.
Multigraph three_cycle_chords(int n, int p1, int p2, int a);
/// Cyclic order q(a) = n(p+1) - p^2 + a(n-p)(p+2) - (p+2)a^2 with p = p1+p2.
Int q_of_a(int n, int p1, int p2, int a);

/// C_n plus a triangle on vertices {0, a, a+b}, partitioning the cycle into
/// arcs of a, b, c edges (a + b + c = n, all arcs >= 2 so the triangle
/// vertices are independent).
Multigraph triangle_chords(int n, int a, int b, int c);
/// Closed form: Z/d x Z/(f/d), d = gcd(a+1, b+1, c+1).
AbelianGroup triangle_formula(int n, int a, int b, int c);

/// Chain of cycles C_{n_1}, ..., C_{n_k}, consecutive cycles glued along a
/// single edge (each n_i >= 3).
Multigraph chain_of_cycles(const std::vector<int>& lengths);
/// |Jac| by the recurrence x_1 = n_1, x_2 = n_1 n_2 - 1, x_i = n_i x_{i-1} - x_{i-2}.
Int chain_order(const std::vector<int>& lengths);

} // namespace graphjac
