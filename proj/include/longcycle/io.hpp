#pragma once

#include <string>
#include <variant>
#include <vector>

#include "longcycle/gadgets.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

/// DIMACS-style text: one `p edge n m` (undirected) or `p arc n m`
/// (directed) problem line, then exactly m `e u v` / `a u v` descriptor
/// lines; `c` lines and blank lines are skipped. Throws Errc::parse_error
/// with the offending line number, or the graph constructor's error for
/// out-of-range endpoints, self-loops and duplicates.
AnyGraph parse_graph(const std::string& text);

/// Canonical serialization: sorted descriptors, single spaces, trailing
/// newline. parse_graph(serialize_graph(g)) reproduces g byte-for-byte.
std::string serialize_graph(const UGraph& g);
std::string serialize_graph(const Digraph& d);
std::string serialize_graph(const AnyGraph& g);

/// Whitespace-separated vertex ids; the Error position of a bad token is
/// its 1-based index.
std::vector<Vertex> parse_vertex_sequence(const std::string& text);
std::string serialize_vertex_sequence(const std::vector<Vertex>& seq);

/// JSON sidecar carrying construction, parameters, threshold and the
/// per-vertex role table. Deterministic: keys sorted, two-space indent,
/// trailing newline.
std::string serialize_mapping(const ReductionInstance& r);

/// Rebuilds an instance from a directed graph file and its mapping. Field
/// ranges are validated; arithmetic consistency of the role table is not,
/// so a corrupted mapping loads fine and fails later in projection or in a
/// structural comparison.
ReductionInstance load_instance(const std::string& graph_text,
                                const std::string& mapping_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace longcycle
