#include "graphjac/divisor.hpp"

#include "graphjac/errors.hpp"
#include "graphjac/jacobian.hpp"

#include <algorithm>
#include <numeric>

namespace graphjac {

namespace {

void check_host(const Multigraph& g, const Divisor& d) {
    if (static_cast<int>(d.size()) != g.vertex_count())
        throw input_error("divisor length does not match vertex count");
    if (g.has_loop_edge() || g.allows_loops())
        throw input_error("chip-firing requires a loopless graph");
}

} // namespace

long long divisor_degree(const Divisor& d) {
    return std::accumulate(d.begin(), d.end(), 0LL);
}

Divisor lend(const Multigraph& g, Divisor d, int v) {
    check_host(g, d);
    d[v] -= g.degree(v);
    for (const Edge& e : g.edges()) {
        if (e.u == v) d[e.v] += 1;
        else if (e.v == v) d[e.u] += 1;
    }
    return d;
}

Divisor borrow(const Multigraph& g, Divisor d, int v) {
    check_host(g, d);
    d[v] += g.degree(v);
    for (const Edge& e : g.edges()) {
        if (e.u == v) d[e.v] -= 1;
        else if (e.v == v) d[e.u] -= 1;
    }
    return d;
}

bool linearly_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
    check_host(g, d1);
    check_host(g, d2);
    if (divisor_degree(d1) != divisor_degree(d2)) return false;
    std::vector<Int> diff(d1.size());
    for (size_t i = 0; i < d1.size(); ++i) diff[i] = Int(static_cast<long>(d1[i] - d2[i]));
    return in_image(laplacian(g), diff);
}

namespace {

// Burn from q: a vertex burns once its chips cannot cover its edges to the
// burnt region. Returns the unburnt set (empty iff d passes the Dhar test).
std::vector<int> dhar_unburnt(const Multigraph& g, const Divisor& d, int q) {
    const int n = g.vertex_count();
    std::vector<char> burnt(n, 0);
    burnt[q] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (burnt[v]) continue;
            long long to_burnt = 0;
            for (const Edge& e : g.edges()) {
                if (e.u == v && burnt[e.v]) ++to_burnt;
                else if (e.v == v && burnt[e.u]) ++to_burnt;
            }
            if (to_burnt > d[v]) {
                burnt[v] = 1;
                changed = true;
            }
        }
    }
    std::vector<int> unburnt;
    for (int v = 0; v < n; ++v)
        if (!burnt[v]) unburnt.push_back(v);
    return unburnt;
}

} // namespace

bool is_q_reduced(const Multigraph& g, const Divisor& d, int q) {
    check_host(g, d);
    if (q < 0 || q >= g.vertex_count()) throw input_error("invalid vertex id");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != q && d[v] < 0) return false;
    return dhar_unburnt(g, d, q).empty();
}

Divisor q_reduce(const Multigraph& g, Divisor d, int q) {
    check_host(g, d);
    if (q < 0 || q >= g.vertex_count()) throw input_error("invalid vertex id");
    if (!g.is_connected()) throw guard_error("q_reduce: graph is not connected");
    const int n = g.vertex_count();

    // Stage 1: bring every non-q vertex out of debt by borrowing at the most
    // negative vertex, ties to the smallest id.
    for (;;) {
        int worst = -1;
        for (int v = 0; v < n; ++v) {
            if (v == q || d[v] >= 0) continue;
            if (worst < 0 || d[v] < d[worst]) worst = v;
        }
        if (worst < 0) break;
        d = borrow(g, d, worst);
    }

    // Stage 2: fire maximal unburnable sets until the Dhar test passes.
    for (;;) {
        std::vector<int> unburnt = dhar_unburnt(g, d, q);
        if (unburnt.empty()) break;
        std::vector<char> in_set(n, 0);
        for (int v : unburnt) in_set[v] = 1;
        for (const Edge& e : g.edges()) {
            if (in_set[e.u] && !in_set[e.v]) {
                d[e.u] -= 1;
                d[e.v] += 1;
            } else if (in_set[e.v] && !in_set[e.u]) {
                d[e.v] -= 1;
                d[e.u] += 1;
            }
        }
    }
    return d;
}

bool is_winnable(const Multigraph& g, const Divisor& d) {
    check_host(g, d);
    if (divisor_degree(d) < 0) return false;
    Divisor r = q_reduce(g, d, 0);
    return r[0] >= 0;
}

} // namespace graphjac
