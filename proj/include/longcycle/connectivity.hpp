#pragma once

#include <optional>
#include <utility>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Verdict of a 2-connectivity check together with a re-checkable
/// counterexample: either a cut vertex whose removal disconnects the graph,
/// or an ordered pair with its maximum number of internally vertex-disjoint
/// paths (< 2).
struct ConnectivityWitness {
  bool verdict = false;
  std::optional<Vertex> cut_vertex;
  std::optional<std::pair<Vertex, Vertex>> pair;
  std::optional<int> pair_paths;
};

/// True iff every ordered pair is connected by a directed path. n >= 1.
bool is_strongly_connected(const Digraph& d);

/// Strongly connected and still strongly connected after removing any single
/// vertex. Counterexamples report the smallest-id cut vertex. Throws
/// Errc::too_small for n < 3.
ConnectivityWitness is_2connected_digraph(const Digraph& d);

/// Connected with no articulation vertex (DFS low-point). Counterexamples
/// report the smallest-id articulation vertex, or an unreachable pair when
/// disconnected. Throws Errc::too_small for n < 3.
ConnectivityWitness is_2connected_undirected(const UGraph& g);

/// Maximum number of internally vertex-disjoint directed u->v paths, via
/// vertex-splitting unit-capacity max-flow. A direct arc (u,v) counts as one
/// path. Throws Errc::same_vertex for u = v.
int menger_count(const Digraph& d, Vertex u, Vertex v);

/// Early-stopping variant: true iff menger_count(d, u, v) >= k.
bool menger_at_least(const Digraph& d, Vertex u, Vertex v, int k);

}  // namespace longcycle
