#include "graphjac/gluing.hpp"

#include "graphjac/errors.hpp"

#include <numeric>
#include <string>

namespace graphjac {

namespace {

// Canonical two-factor torsion chain {gcd, lcm-ish}, dropping unit factors.
AbelianGroup two_factor_group(const Int& d1, const Int& d2) {
    Int g = gcd(d1, d2);
    Int l = d1 * d2 / g;
    AbelianGroup grp;
    if (g > 1) grp.torsion.push_back(g);
    if (l > 1) grp.torsion.push_back(l);
    return grp;
}

} // namespace

Multigraph cycle_graph(int n) {
    if (n < 2) throw input_error("cycle_graph: need n >= 2");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i < n; ++i) ep.emplace_back(i, (i + 1) % n);
    return Multigraph::build(n, ep);
}

Multigraph complete_graph(int n) {
    if (n < 1) throw input_error("complete_graph: need n >= 1");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ep.emplace_back(i, j);
    return Multigraph::build(n, ep);
}

Multigraph path_graph(int n) {
    if (n < 1) throw input_error("path_graph: need n >= 1");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i + 1 < n; ++i) ep.emplace_back(i, i + 1);
    return Multigraph::build(n, ep);
}

Multigraph glue_at_vertex(const Multigraph& g1, int v1, const Multigraph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.vertex_count() || v2 < 0 || v2 >= g2.vertex_count())
        throw input_error("glue_at_vertex: invalid glue vertex");
    if (g1.allows_loops() || g2.allows_loops())
        throw input_error("glue_at_vertex: loopless graphs required");
    const int n1 = g1.vertex_count();
    // g2 vertex w maps to v1 when w == v2, otherwise to n1 + (w, skipping v2)
    auto map2 = [&](int w) {
        if (w == v2) return v1;
        return n1 + (w > v2 ? w - 1 : w);
    };
    std::vector<std::pair<int, int>> ep;
    for (const Edge& e : g1.edges()) ep.emplace_back(e.u, e.v);
    for (const Edge& e : g2.edges()) ep.emplace_back(map2(e.u), map2(e.v));
    return Multigraph::build(n1 + g2.vertex_count() - 1, ep);
}

Multigraph glue_cycles_along_path(int n, int k, int p) {
    if (n < 2 || k < 2 || p < 1 || p >= std::min(n, k))
        throw input_error("glue_cycles_along_path: need n, k >= 2 and 1 <= p < min(n, k)");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i < n; ++i) ep.emplace_back(i, (i + 1) % n);
    // second cycle: shared path 0 -> 1 -> ... -> p, then k - p edges back to 0
    int prev = p;
    for (int j = 0; j < k - p - 1; ++j) {
        ep.emplace_back(prev, n + j);
        prev = n + j;
    }
    ep.emplace_back(prev, 0);
    return Multigraph::build(n + k - p - 1, ep);
}

AbelianGroup glued_cycles_formula(int n, int k, int p) {
    if (n < 2 || k < 2 || p < 1 || p >= std::min(n, k))
        throw input_error("glued_cycles_formula: need n, k >= 2 and 1 <= p < min(n, k)");
    Int d = std::gcd(std::gcd(n, k), p);
    Int order = Int(n) * k - Int(p) * p;
    return two_factor_group(d, order / d);
}

Multigraph doubled_cycle(int n) {
    if (n < 2) throw input_error("doubled_cycle: need n >= 2");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i < n; ++i) {
        ep.emplace_back(i, (i + 1) % n);
        ep.emplace_back(i, (i + 1) % n);
    }
    return Multigraph::build(n, ep);
}

AbelianGroup doubled_cycle_formula(int n) {
    if (n < 2) throw input_error("doubled_cycle_formula: need n >= 2");
    AbelianGroup grp;
    grp.torsion.assign(n - 2, Int(2));
    grp.torsion.push_back(Int(2 * n));
    return grp;
}

Multigraph fan(int m, int n) {
    if (m < 1 || n < 1) throw input_error("fan: need m >= 1 and n >= 1");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i + 1 < n; ++i) ep.emplace_back(m + i, m + i + 1);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i) ep.emplace_back(a, m + i);
    return Multigraph::build(m + n, ep);
}

Int fan_jacobian_order(int n) {
    if (n < 1) throw input_error("fan_jacobian_order: need n >= 1");
    Int x1 = 1, x2 = 3;
    if (n == 1) return x1;
    if (n == 2) return x2;
    for (int i = 3; i <= n; ++i) {
        Int next = 3 * x2 - x1;
        x1 = x2;
        x2 = next;
    }
    return x2;
}

Multigraph three_cycle_chords(int n, int p1, int p2, int a) {
    const int p = p1 + p2;
    if (p1 < 1 || p2 < 1) throw input_error("three_cycle_chords: need p1, p2 >= 1");
    if (a < 2) throw input_error("three_cycle_chords: chord (p1, p1+a) degenerates for a < 2");
    if (n - p - a < 2)
        throw input_error("three_cycle_chords: chord (0, p+a) degenerates, need n - p1 - p2 - a >= 2");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i < n; ++i) ep.emplace_back(i, (i + 1) % n);
    ep.emplace_back(0, p + a);
    ep.emplace_back(p1, p1 + a);
    return Multigraph::build(n, ep);
}

Int q_of_a(int n, int p1, int p2, int a) {
    const int p = p1 + p2;
    if (p1 < 1 || p2 < 1 || a < 2 || n - p - a < 2)
        throw input_error("q_of_a: parameters out of range");
    Int N = n, P = p, A = a;
    return N * (P + 1) - P * P + A * (N - P) * (P + 2) - (P + 2) * A * A;
}

Multigraph triangle_chords(int n, int a, int b, int c) {
    if (a + b + c != n) throw input_error("triangle_chords: need a + b + c = n");
    if (a < 2 || b < 2 || c < 2)
        throw input_error("triangle_chords: triangle vertices must be independent (arcs >= 2)");
    std::vector<std::pair<int, int>> ep;
    for (int i = 0; i < n; ++i) ep.emplace_back(i, (i + 1) % n);
    ep.emplace_back(0, a);
    ep.emplace_back(a, a + b);
    ep.emplace_back(a + b, 0);
    return Multigraph::build(n, ep);
}

AbelianGroup triangle_formula(int n, int a, int b, int c) {
    if (a + b + c != n || a < 2 || b < 2 || c < 2)
        throw input_error("triangle_formula: parameters out of range");
    Int A = a, B = b, C = c, N = n;
    Int f = N * (A + 1) * (B + 1) * (C + 1) -
            (A * A * (B + 1) * (C + 1) + B * B * (A + 1) * (C + 1) + C * C * (A + 1) * (B + 1));
    Int d = gcd(gcd(Int(a + 1), Int(b + 1)), Int(c + 1));
    return two_factor_group(d, f / d);
}

Multigraph chain_of_cycles(const std::vector<int>& lengths) {
    if (lengths.empty()) throw input_error("chain_of_cycles: need at least one cycle");
    for (int n : lengths)
        if (n < 3) throw input_error("chain_of_cycles: each cycle length must be >= 3");

    std::vector<std::pair<int, int>> ep;
    int vertex_count = lengths[0];
    for (int i = 0; i < lengths[0]; ++i) ep.emplace_back(i, (i + 1) % lengths[0]);
    int su = 0, sv = 1; // next cycle attaches along this edge
    for (size_t c = 1; c < lengths.size(); ++c) {
        int prev = su;
        for (int j = 0; j < lengths[c] - 2; ++j) {
            ep.emplace_back(prev, vertex_count);
            prev = vertex_count++;
        }
        ep.emplace_back(prev, sv);
        su = prev; // last new edge becomes the next shared edge
    }
    return Multigraph::build(vertex_count, ep);
}

Int chain_order(const std::vector<int>& lengths) {
    if (lengths.empty()) throw input_error("chain_order: need at least one cycle");
    for (int n : lengths)
        if (n < 3) throw input_error("chain_order: each cycle length must be >= 3");
    Int prev = 1, cur = lengths[0]; // x_0 = 1 makes x_2 = n1*n2 - 1 fall out
    for (size_t i = 1; i < lengths.size(); ++i) {
        Int next = Int(lengths[i]) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace graphjac
