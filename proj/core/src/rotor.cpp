#include "graphjac/rotor.hpp"

#include <utility>

#include "graphjac/errors.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/tuttepoly.hpp"

namespace graphjac {

namespace {

// applies f to a vertex `times` times
int iterate(const std::vector<int>& f, int v, int times) {
    for (int i = 0; i < times; ++i) v = f[v];
    return v;
}

} // namespace

RotorCheck validate_rotor(const Rotor& r) {
    const int n = r.graph.vertex_count();
    if (static_cast<int>(r.automorphism.size()) != n)
        return {false, "automorphism must list an image for every vertex"};
    std::vector<int> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        const int w = r.automorphism[v];
        if (w < 0 || w >= n) return {false, "automorphism image out of range"};
        if (seen[w]++) return {false, "automorphism is not a bijection"};
    }
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (r.graph.multiplicity(u, v) !=
                r.graph.multiplicity(r.automorphism[u], r.automorphism[v]))
                return {false, "map does not preserve edge multiplicities"};
    if (r.order < 3) return {false, "rotor order must be at least 3"};
    if (r.base < 0 || r.base >= n) return {false, "base vertex out of range"};
    // exact order: f^order = id and f^d != id for proper divisors d
    for (int v = 0; v < n; ++v)
        if (iterate(r.automorphism, v, r.order) != v)
            return {false, "automorphism does not have the stated order"};
    for (int d = 1; d < r.order; ++d) {
        if (r.order % d != 0) continue;
        bool is_identity = true;
        for (int v = 0; v < n && is_identity; ++v)
            if (iterate(r.automorphism, v, d) != v) is_identity = false;
        if (is_identity)
            return {false, "automorphism order is smaller than stated"};
    }
    // base orbit must have exactly `order` elements
    std::vector<int> orbit;
    int v = r.base;
    do {
        orbit.push_back(v);
        v = r.automorphism[v];
    } while (v != r.base);
    if (static_cast<int>(orbit.size()) != r.order)
        return {false, "orbit of the base vertex does not match the order"};
    return {true, "ok"};
}

std::vector<int> rotor_orbit(const Rotor& r) {
    const RotorCheck c = validate_rotor(r);
    if (!c.ok) throw input_error("invalid rotor: " + c.message);
    std::vector<int> orbit;
    int v = r.base;
    do {
        orbit.push_back(v);
        v = r.automorphism[v];
    } while (v != r.base);
    return orbit;
}

Multigraph supergraph(const Rotor& r, const Attachment& a, int twist,
                      GlueMode mode) {
    const RotorCheck c = validate_rotor(r);
    if (!c.ok) throw input_error("invalid rotor: " + c.message);
    if (twist != 0 && twist != 1) throw input_error("twist must be 0 or 1");
    const int nr = r.graph.vertex_count();
    const int ns = a.back_graph.vertex_count();
    for (const auto& [s, w] : a.sites) {
        if (s < 0 || s >= ns)
            throw input_error("attachment names a vertex missing from the back graph");
        if (w < 0 || w >= nr)
            throw input_error("attachment site is not a rotor vertex");
    }
    auto site_of = [&](int s) {
        const int w = a.sites.at(s);
        return twist == 0 ? w : r.automorphism[w];
    };

    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : r.graph.edges()) edges.emplace_back(e.u, e.v);

    if (mode == GlueMode::identify) {
        // vertices of S that are attached disappear into their sites
        std::vector<int> image(ns, -1);
        int next = nr;
        for (int s = 0; s < ns; ++s) {
            auto it = a.sites.find(s);
            image[s] = (it != a.sites.end()) ? site_of(s) : next++;
        }
        for (const Edge& e : a.back_graph.edges()) {
            const int u = image[e.u];
            const int v = image[e.v];
            if (u == v)
                throw input_error("identification would create a loop");
            edges.emplace_back(u, v);
        }
        return Multigraph::build(next, edges);
    }

    // edge_join: S keeps all its vertices, shifted past the rotor's
    for (const Edge& e : a.back_graph.edges())
        edges.emplace_back(nr + e.u, nr + e.v);
    for (const auto& [s, w] : a.sites) {
        (void)w;
        edges.emplace_back(nr + s, site_of(s));
    }
    return Multigraph::build(nr + ns, edges);
}

Attachment reversed_attachment(const Rotor& r, const Attachment& a) {
    if (r.order != 3)
        throw input_error("reversal is defined for rotors of order 3");
    const std::vector<int> orbit = rotor_orbit(r);
    Attachment out{a.back_graph, {}};
    for (const auto& [s, w] : a.sites) {
        int image = w;
        if (w == orbit[1])
            image = orbit[2];
        else if (w == orbit[2])
            image = orbit[1];
        out.sites.emplace(s, image);
    }
    return out;
}

namespace {

RotorReport compare(const Multigraph& g, const Multigraph& h, bool with_tutte,
                    bool with_iso) {
    RotorReport rep;
    rep.jac_g = jacobian(g);
    rep.jac_h = jacobian(h);
    rep.groups_match = groups_isomorphic(rep.jac_g, rep.jac_h);
    if (with_tutte)
        rep.tutte_match = tutte_polynomial(g) == tutte_polynomial(h);
    if (with_iso) rep.graphs_isomorphic = are_isomorphic(g, h);
    return rep;
}

} // namespace

RotorReport verify_pair(const Rotor& r, const Attachment& a, GlueMode mode,
                        bool with_tutte, bool with_iso) {
    return compare(supergraph(r, a, 0, mode), supergraph(r, a, 1, mode),
                   with_tutte, with_iso);
}

RotorReport verify_reversal_pair(const Rotor& r, const Attachment& a,
                                 GlueMode mode, bool with_tutte,
                                 bool with_iso) {
    return compare(supergraph(r, a, 0, mode),
                   supergraph(r, reversed_attachment(r, a), 0, mode),
                   with_tutte, with_iso);
}

} // namespace graphjac
