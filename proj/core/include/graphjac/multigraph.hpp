#pragma once

#include <utility>
#include <vector>

namespace graphjac {

struct Edge {
    int id;
    int u;
    int v;

    bool is_loop() const { return u == v; }
    int other(int w) const { return w == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

/// Finite multigraph with dense vertex ids 0..n-1 and edge ids 0..m-1.
/// Parallel edges are always allowed; loops only when the loop flag is set.
/// Immutable value type; structural operations return new graphs.
class Multigraph {
public:
    static Multigraph build(int vertex_count, const std::vector<std::pair<int, int>>& endpoints,
                            bool allows_loops = false);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool allows_loops() const { return allows_loops_; }
    const Edge& edge(int e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const; // a loop counts twice
    /// Number of parallel edges between u and v (loops at u when u == v).
    int multiplicity(int u, int v) const;
    /// Incident (edge id, opposite endpoint) pairs; loops appear twice.
    std::vector<std::pair<int, int>> incident(int v) const;

    bool is_connected() const;
    bool has_loop_edge() const;
    /// Circuit rank m - n + 1; requires connectivity.
    int genus() const;

    /// Copy with the loop flag set (edges unchanged).
    Multigraph with_loops_allowed() const;
    /// Loopless copy with every loop edge dropped (edge ids re-densified).
    Multigraph without_loops() const;

    bool operator==(const Multigraph&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    bool allows_loops_ = false;

    void check_vertex(int v) const;
    friend struct MultigraphAccess;
};

struct DeletionResult {
    Multigraph graph;
    std::vector<int> edge_map; // old edge id -> new id, -1 for the deleted edge
};

struct ContractionResult {
    Multigraph graph;
    std::vector<int> vertex_map; // old vertex id -> new id
    std::vector<int> edge_map;   // old edge id -> new id, -1 when dropped
};

DeletionResult delete_edge(const Multigraph& g, int e);

/// Contracts edge e: the merged vertex takes the smaller of the two ids.
/// Loops created by contraction are kept in loop mode and are an error otherwise.
ContractionResult contract_edge(const Multigraph& g, int e);

/// Brute-force isomorphism with degree-sequence pruning; guarded to <= 12 vertices.
bool are_isomorphic(const Multigraph& g1, const Multigraph& g2);

} // namespace graphjac
