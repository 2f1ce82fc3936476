#ifndef CROSSCOUNT_GRAPH_IO_HPP
#define CROSSCOUNT_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "crosscount/graph.hpp"

namespace crosscount {

// Text format (whitespace separated, lines starting with '#' ignored):
//   n m
//   x y        (n lines)
//   i j        (m lines, 0-based)
// Input whose first non-blank character is '{' is read as JSON:
//   {"points": [[x, y], ...], "edges": [[i, j], ...], "layers": [l0, l1, ...]}
// "layers" is optional.
GeometricGraph parse_graph(std::string_view text);
GeometricGraph read_graph(std::istream& in);

// Canonical text form: header, points in index order, edges sorted.
// Layer metadata is not representable and is dropped.
std::string serialize_graph(const GeometricGraph& g);

// JSON form with edges sorted; carries layers when present.
std::string serialize_graph_json(const GeometricGraph& g);

}  // namespace crosscount

#endif  // CROSSCOUNT_GRAPH_IO_HPP
