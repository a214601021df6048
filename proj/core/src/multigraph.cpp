#include "graphjac/multigraph.hpp"

#include "graphjac/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace graphjac {

Multigraph Multigraph::build(int vertex_count, const std::vector<std::pair<int, int>>& endpoints,
                             bool allows_loops) {
    if (vertex_count < 0) throw input_error("negative vertex count");
    Multigraph g;
    g.vertex_count_ = vertex_count;
    g.allows_loops_ = allows_loops;
    g.edges_.reserve(endpoints.size());
    int id = 0;
    for (auto [u, v] : endpoints) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")");
        if (u == v && !allows_loops)
            throw input_error("loop at vertex " + std::to_string(u) + " in loopless mode");
        g.edges_.push_back(Edge{id++, u, v});
    }
    return g;
}

const Edge& Multigraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) throw input_error("invalid edge id " + std::to_string(e));
    return edges_[e];
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_) throw input_error("invalid vertex id " + std::to_string(v));
}

int Multigraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int Multigraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    int c = 0;
    for (const Edge& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++c;
    return c;
}

std::vector<std::pair<int, int>> Multigraph::incident(int v) const {
    check_vertex(v);
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.emplace_back(e.id, e.v);
        if (e.v == v) out.emplace_back(e.id, e.u);
    }
    return out;
}

bool Multigraph::is_connected() const {
    if (vertex_count_ == 0) return false;
    std::vector<char> seen(vertex_count_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : edges_) {
            int w = -1;
            if (e.u == v) w = e.v;
            else if (e.v == v) w = e.u;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

bool Multigraph::has_loop_edge() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

int Multigraph::genus() const {
    if (!is_connected()) throw guard_error("genus: graph is not connected");
    return edge_count() - vertex_count_ + 1;
}

Multigraph Multigraph::with_loops_allowed() const {
    Multigraph g = *this;
    g.allows_loops_ = true;
    return g;
}

Multigraph Multigraph::without_loops() const {
    std::vector<std::pair<int, int>> kept;
    for (const Edge& e : edges_)
        if (!e.is_loop()) kept.emplace_back(e.u, e.v);
    return build(vertex_count_, kept, false);
}

DeletionResult delete_edge(const Multigraph& g, int e) {
    g.edge(e); // validates
    std::vector<std::pair<int, int>> endpoints;
    std::vector<int> edge_map(g.edge_count(), -1);
    for (const Edge& ed : g.edges()) {
        if (ed.id == e) continue;
        edge_map[ed.id] = static_cast<int>(endpoints.size());
        endpoints.emplace_back(ed.u, ed.v);
    }
    return {Multigraph::build(g.vertex_count(), endpoints, g.allows_loops()), std::move(edge_map)};
}

ContractionResult contract_edge(const Multigraph& g, int e) {
    const Edge& ce = g.edge(e);
    if (ce.is_loop()) throw input_error("cannot contract a loop");
    const int keep = std::min(ce.u, ce.v);
    const int drop = std::max(ce.u, ce.v);
    std::vector<int> vertex_map(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        vertex_map[v] = v == drop ? keep : (v > drop ? v - 1 : v);

    std::vector<std::pair<int, int>> endpoints;
    std::vector<int> edge_map(g.edge_count(), -1);
    for (const Edge& ed : g.edges()) {
        if (ed.id == e) continue;
        int u = vertex_map[ed.u], v = vertex_map[ed.v];
        if (u == v && !g.allows_loops())
            throw input_error("contraction would create a loop in loopless mode");
        edge_map[ed.id] = static_cast<int>(endpoints.size());
        endpoints.emplace_back(u, v);
    }
    return {Multigraph::build(g.vertex_count() - 1, endpoints, g.allows_loops()),
            std::move(vertex_map), std::move(edge_map)};
}

namespace {

// Adjacency multiplicity matrix including loops (diagonal counts loops once).
std::vector<std::vector<int>> adjacency(const Multigraph& g) {
    std::vector<std::vector<int>> a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) a[e.u][e.u] += 1;
        else {
            a[e.u][e.v] += 1;
            a[e.v][e.u] += 1;
        }
    }
    return a;
}

bool extend(const std::vector<std::vector<int>>& a1, const std::vector<std::vector<int>>& a2,
            const std::vector<int>& deg1, const std::vector<int>& deg2, std::vector<int>& map,
            std::vector<char>& used, size_t next) {
    const size_t n = a1.size();
    if (next == n) return true;
    for (size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || deg1[next] != deg2[cand]) continue;
        bool ok = a1[next][next] == a2[cand][cand];
        for (size_t prev = 0; ok && prev < next; ++prev)
            ok = a1[next][prev] == a2[cand][map[prev]];
        if (!ok) continue;
        map[next] = static_cast<int>(cand);
        used[cand] = 1;
        if (extend(a1, a2, deg1, deg2, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Multigraph& g1, const Multigraph& g2) {
    if (g1.vertex_count() > 12 || g2.vertex_count() > 12)
        throw guard_error("are_isomorphic: size guard exceeded (n <= 12)");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;

    const int n = g1.vertex_count();
    std::vector<int> deg1(n), deg2(n);
    for (int v = 0; v < n; ++v) {
        deg1[v] = g1.degree(v);
        deg2[v] = g2.degree(v);
    }
    std::vector<int> s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;

    auto a1 = adjacency(g1), a2 = adjacency(g2);
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    return extend(a1, a2, deg1, deg2, map, used, 0);
}

} // namespace graphjac
