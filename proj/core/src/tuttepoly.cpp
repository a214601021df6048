#include "graphjac/tuttepoly.hpp"

#include "graphjac/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace graphjac {

long long TuttePolynomial::at(int i, int j) const {
    auto it = coeff.find({i, j});
    return it == coeff.end() ? 0 : it->second;
}

Int TuttePolynomial::eval_at_ones() const {
    Int s = 0;
    for (const auto& [_, c] : coeff) s += static_cast<long>(c);
    return s;
}

std::string TuttePolynomial::to_lines() const {
    std::ostringstream out;
    for (const auto& [ij, c] : coeff)
        if (c != 0) out << ij.first << ' ' << ij.second << ' ' << c << '\n';
    return out.str();
}

namespace {

TuttePolynomial monomial(int i, int j, long long c = 1) {
    TuttePolynomial p;
    if (c != 0) p.coeff[{i, j}] = c;
    return p;
}

TuttePolynomial add(const TuttePolynomial& a, const TuttePolynomial& b) {
    TuttePolynomial s = a;
    for (const auto& [ij, c] : b.coeff) {
        auto& slot = s.coeff[ij];
        slot += c;
        if (slot == 0) s.coeff.erase(ij);
    }
    return s;
}

TuttePolynomial shift(const TuttePolynomial& p, int di, int dj) {
    TuttePolynomial s;
    for (const auto& [ij, c] : p.coeff) s.coeff[{ij.first + di, ij.second + dj}] = c;
    return s;
}

bool is_bridge(const Multigraph& g, int e) {
    DeletionResult d = delete_edge(g, e);
    return !d.graph.is_connected();
}

// Cheap degree-refined invariant: sorted multiset of (deg(u), deg(v)) per
// edge plus loop count. Collisions are resolved by an isomorphism check.
std::string memo_key(const Multigraph& g) {
    std::vector<std::pair<int, int>> sig;
    int loops = 0;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            ++loops;
            continue;
        }
        int a = g.degree(e.u), b = g.degree(e.v);
        sig.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(sig.begin(), sig.end());
    std::ostringstream key;
    key << g.vertex_count() << '|' << loops;
    for (auto [a, b] : sig) key << '|' << a << ',' << b;
    return key.str();
}

struct Memo {
    std::multimap<std::string, std::pair<Multigraph, TuttePolynomial>> table;

    const TuttePolynomial* find(const std::string& key, const Multigraph& g) const {
        if (g.vertex_count() > 12) return nullptr;
        auto [lo, hi] = table.equal_range(key);
        for (auto it = lo; it != hi; ++it)
            if (are_isomorphic(it->second.first, g)) return &it->second.second;
        return nullptr;
    }
    void store(const std::string& key, const Multigraph& g, const TuttePolynomial& p) {
        if (g.vertex_count() > 12) return;
        table.emplace(key, std::make_pair(g, p));
    }
};

TuttePolynomial tutte_rec(const Multigraph& g, Memo& memo) {
    // factor out loops and bridges (checking one edge at a time), then
    // recurse on the first ordinary edge
    int loops = 0, bridges = 0;
    Multigraph cur = g;
    for (;;) {
        if (cur.edge_count() == 0) return monomial(bridges, loops);
        const Edge e = cur.edge(0);
        if (e.is_loop()) {
            ++loops;
            cur = delete_edge(cur, 0).graph;
        } else if (cur.multiplicity(e.u, e.v) == 1 && is_bridge(cur, 0)) {
            ++bridges;
            cur = contract_edge(cur, 0).graph;
        } else {
            break;
        }
    }
    const int ordinary = 0;

    std::string key = memo_key(cur);
    if (const TuttePolynomial* hit = memo.find(key, cur))
        return shift(*hit, bridges, loops);

    TuttePolynomial del = tutte_rec(delete_edge(cur, ordinary).graph, memo);
    TuttePolynomial con = tutte_rec(contract_edge(cur, ordinary).graph, memo);
    TuttePolynomial core = add(del, con);
    memo.store(key, cur, core);
    return shift(core, bridges, loops);
}

} // namespace

TuttePolynomial tutte_polynomial(const Multigraph& g) {
    if (g.edge_count() > 18) throw guard_error("tutte_polynomial: size guard exceeded (m <= 18)");
    if (!g.is_connected()) throw input_error("tutte_polynomial: graph is not connected");
    Multigraph loopy = g.with_loops_allowed(); // contractions create loops
    Memo memo;
    return tutte_rec(loopy, memo);
}

} // namespace graphjac
