#pragma once

#include <map>
#include <string>
#include <string_view>

#include "satnum/graph.hpp"

namespace satnum::io {

/// Decodes one graph6 record. An optional ">>graph6<<" header is accepted;
/// anything after the bit field (including a newline) is rejected.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 without header or trailing newline.
std::string emit_graph6(const Graph& g);

/// Undirected DOT source. Vertices present in `labels` get a label
/// attribute; the rest are labelled by index.
std::string to_dot(const Graph& g, const std::map<Vertex, std::string>& labels = {},
                   std::string_view name = "G");

/// Plain fixture format: "n m" on the first line, then one "u v" per edge.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace satnum::io
