#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphjac/intlinalg.hpp"
#include "graphjac/multigraph.hpp"

namespace graphjac {

// A rotor is a graph together with an automorphism f of finite order k >= 3
// and a base vertex v whose orbit under f has exactly k elements.
struct Rotor {
    Multigraph graph;
    std::vector<int> automorphism; // image of each vertex under f
    int base = 0;
    int order = 0;
};

struct RotorCheck {
    bool ok = false;
    std::string message;
};

// Verifies that the automorphism is a bijection preserving edge
// multiplicities, that it has the stated order, and that the orbit of the
// base vertex has exactly `order` elements.
RotorCheck validate_rotor(const Rotor& r);

// Orbit of the base vertex: base, f(base), f^2(base), ...
std::vector<int> rotor_orbit(const Rotor& r);

// How a fixed back graph S attaches to the rotor: each map entry sends a
// vertex of S to a vertex of the rotor (an orbit vertex, typically).
struct Attachment {
    Multigraph back_graph;
    std::map<int, int> sites; // vertex of S -> vertex of rotor
};

enum class GlueMode {
    identify,  // fuse each attached vertex of S with its site in the rotor
    edge_join, // keep both vertices and add a connecting edge
};

// Builds the glued graph. With twist = 0 the attachment map is used as
// given; with twist = 1 each site w is replaced by f(w). Rotor vertices
// keep their ids, vertices of S are shifted up by the rotor's vertex count
// (identified vertices of S are merged into their sites).
Multigraph supergraph(const Rotor& r, const Attachment& a, int twist,
                      GlueMode mode = GlueMode::identify);

// Attachment with the roles of two orbit vertices exchanged: sites at
// orbit[1] move to orbit[2] and vice versa, sites at orbit[0] stay put.
// Requires order exactly 3.
Attachment reversed_attachment(const Rotor& r, const Attachment& a);

struct RotorReport {
    AbelianGroup jac_g;
    AbelianGroup jac_h;
    bool groups_match = false;
    std::optional<bool> tutte_match;      // only computed on request
    std::optional<bool> graphs_isomorphic; // only computed on request
};

// Compares the supergraphs obtained with twist 0 and twist 1.
RotorReport verify_pair(const Rotor& r, const Attachment& a, GlueMode mode,
                        bool with_tutte, bool with_iso);

// Compares the supergraph of the attachment against the supergraph of the
// reversed attachment (both untwisted).
RotorReport verify_reversal_pair(const Rotor& r, const Attachment& a,
                                 GlueMode mode, bool with_tutte,
                                 bool with_iso);

} // namespace graphjac
