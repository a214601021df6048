#include "graphjac/jacobian.hpp"

#include "graphjac/errors.hpp"

namespace graphjac {

IntMatrix laplacian(const Multigraph& g) {
    if (g.allows_loops()) throw input_error("laplacian: loop-mode graph");
    const int n = g.vertex_count();
    IntMatrix l(n, n);
    for (const Edge& e : g.edges()) {
        l.at(e.u, e.u) += 1;
        l.at(e.v, e.v) += 1;
        l.at(e.u, e.v) -= 1;
        l.at(e.v, e.u) -= 1;
    }
    return l;
}

LaplacianPair reduced_laplacian(const Multigraph& g, int removed) {
    if (removed < 0 || removed >= g.vertex_count())
        throw input_error("reduced_laplacian: invalid removed vertex");
    IntMatrix full = laplacian(g);
    IntMatrix red = full.minor_matrix(removed, removed);
    return {std::move(full), std::move(red), removed};
}

namespace {

Multigraph loopless_view(const Multigraph& g) {
    return g.allows_loops() ? g.without_loops() : g;
}

} // namespace

AbelianGroup jacobian(const Multigraph& g, std::optional<int> removed) {
    Multigraph h = loopless_view(g);
    if (!h.is_connected()) throw guard_error("jacobian: graph is not connected");
    int r = removed.value_or(0);
    AbelianGroup grp = cokernel_group(reduced_laplacian(h, r).reduced);
    // reduced Laplacian of a connected graph is nonsingular
    grp.free_rank = 0;
    return grp;
}

AbelianGroup picard(const Multigraph& g) {
    Multigraph h = loopless_view(g);
    if (!h.is_connected()) throw guard_error("picard: graph is not connected");
    return cokernel_group(laplacian(h));
}

Int spanning_tree_count(const Multigraph& g) {
    Multigraph h = loopless_view(g);
    if (!h.is_connected()) throw guard_error("spanning_tree_count: graph is not connected");
    return determinant(reduced_laplacian(h, 0).reduced);
}

} // namespace graphjac
