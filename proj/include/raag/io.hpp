#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "raag/theorem.hpp"

namespace raag::io {

using Json = nlohmann::ordered_json;

/// Plain format: first non-comment line lists the vertices, each further
/// non-empty line "u v" declares an edge. A DOT subset (`graph { a -- b; }`)
/// is accepted too. `#` starts a comment in the plain format.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

/// Tokens `a`, `a^-1`, `a^k`, or `A` for the inverse of `a` when `A` is not
/// itself a vertex. `1` or an empty string is the identity.
Word parse_word(const Graph& g, std::string_view text);
std::string format_word(const Graph& g, const Word& w);

/// Comma- and/or whitespace-separated labels; empty text is ∅.
VertexSet parse_vertex_list(const Graph& g, std::string_view text);
/// Comma-separated integers, one per vertex in declaration order.
IntegerVector parse_phi(const Graph& g, std::string_view text);

std::string read_file(const std::string& path);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json labels_json(const Graph& g, VertexSet s);

/// {"lambda": [...], "side1": [...], "side2": [...]}
Json to_json(const AmalgamSplitting& s);
AmalgamSplitting splitting_from_json(const Graph& g, const Json& j);

/// Map from source vertex to image word.
Json to_json(const RaagHom& h);
RaagHom hom_from_json(const Graph& source, const Graph& target, const Json& j);

Json to_json(const Graph& g, const Classification& c);
Json to_json(const TreeBall& ball);
Json to_json(const Graph& ambient, const TreeVertex& v);

/// {"case", "lambda", "witness_edge", "separated_pair", "passed", "certification"}
Json to_json(const Graph& source, const Graph& ambient, const TheoremReport& r);
Json to_json(const Graph& g, const AbelianReport& r);

}  // namespace raag::io
