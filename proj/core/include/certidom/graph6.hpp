#pragma once

#include <string>
#include <string_view>

#include "certidom/graph.hpp"

namespace certidom {

/// Decodes one graph6 line (header-free variant, order >= 1).
/// Accepts the single-byte order form and the three-byte form introduced by
/// the 126 marker; rejects orders above Graph::kMaxOrder, stray bytes outside
/// the 6-bit range, truncated adjacency bits, trailing bytes, and nonzero
/// padding. Throws ParseError.
Graph parse_graph6(std::string_view line);

/// Inverse of parse_graph6; emits the shortest valid encoding.
std::string encode_graph6(const Graph& g);

}  // namespace certidom
