#pragma once

#include <string>

#include "graphjac/intlinalg.hpp"
#include "graphjac/multigraph.hpp"
#include "graphjac/planar.hpp"
#include "graphjac/divisor.hpp"
#include "graphjac/rotor.hpp"

namespace graphjac {

// Plain text formats. Lines starting with '#' (and trailing '#' comments)
// are ignored everywhere; malformed input raises input_error.
//
//   graph:      n <count>        then one  e <u> <v>  line per edge
//   matrix:     <rows> <cols>    then one row of integers per line
//   divisor:    whitespace separated integers, one per vertex
//   embedding:  graph lines, then  rot <v> <edge>:<end> ...  per vertex
//               (darts with origin v in cyclic order), optional  outer <face>
//   rotor:      graph lines, then  auto <img0> <img1> ...,  base <v>,  order <k>
//   attachment: graph lines for the back graph, then one
//               attach <back vertex> <rotor vertex>  line per glued site

Multigraph parse_graph(const std::string& text);
std::string emit_graph(const Multigraph& g);

IntMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const IntMatrix& m);

Divisor parse_divisor(const std::string& text);
std::string emit_divisor(const Divisor& d);

PlanarEmbedding parse_embedding(const std::string& text);
std::string emit_embedding(const PlanarEmbedding& emb);

Rotor parse_rotor(const std::string& text);
std::string emit_rotor(const Rotor& r);

Attachment parse_attachment(const std::string& text);
std::string emit_attachment(const Attachment& a);

std::string read_text_file(const std::string& path);

} // namespace graphjac
