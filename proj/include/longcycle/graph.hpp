#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "longcycle/error.hpp"

namespace longcycle {

using Vertex = int;  // dense 1-indexed ids

/// Immutable simple undirected graph. Edges are stored canonically with
/// u < v; adjacency lists are sorted ascending.
class UGraph {
public:
  UGraph() = default;

  static UGraph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool operator==(const UGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // sorted, u < v
  std::vector<std::vector<Vertex>> adj_;          // 1-indexed, slot 0 unused
};

class UGraphBuilder {
public:
  explicit UGraphBuilder(int n) : n_(n) {}
  UGraphBuilder& add_edge(Vertex u, Vertex v) {
    edges_.emplace_back(u, v);
    return *this;
  }
  UGraph build() { return UGraph::from_edges(n_, std::move(edges_)); }

private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Immutable simple directed graph. (u,v) and (v,u) may coexist.
class Digraph {
public:
  Digraph() = default;

  static Digraph from_arcs(int n, std::vector<std::pair<Vertex, Vertex>> arcs);

  /// Both arcs for every edge of g.
  static Digraph bidirected(const UGraph& g);

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  bool has_arc(Vertex u, Vertex v) const;
  int outdeg(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int indeg(Vertex v) const { return static_cast<int>(in_[v].size()); }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
  const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs_;  // sorted lexicographically
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

class DigraphBuilder {
public:
  explicit DigraphBuilder(int n) : n_(n) {}
  DigraphBuilder& add_arc(Vertex u, Vertex v) {
    arcs_.emplace_back(u, v);
    return *this;
  }
  Digraph build() { return Digraph::from_arcs(n_, std::move(arcs_)); }

private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> arcs_;
};

/// A validated simple cycle, stored as the vertex sequence in traversal
/// order without repeating the start. Only validate_cycle constructs these,
/// so holding a Cycle certifies it against its host graph.
class Cycle {
public:
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }

  bool operator==(const Cycle& other) const {
    return vertices_ == other.vertices_;
  }

private:
  explicit Cycle(std::vector<Vertex> vs) : vertices_(std::move(vs)) {}
  friend Cycle validate_cycle(const UGraph& host, const std::vector<Vertex>& seq);
  friend Cycle validate_cycle(const Digraph& host, const std::vector<Vertex>& seq);

  std::vector<Vertex> vertices_;
};

using AnyGraph = std::variant<UGraph, Digraph>;

/// min over v of deg(v). Throws Errc::empty_graph on n = 0.
int mindeg_undirected(const UGraph& g);

/// min over v of min(indeg(v), outdeg(v)). Throws Errc::empty_graph on n = 0.
int mindeg_directed(const Digraph& d);

/// Checks that seq is a simple cycle of the host: pairwise-distinct vertices,
/// every consecutive pair (including the wrap-around) an edge/arc. Undirected
/// hosts require length >= 3, directed hosts >= 2. Throws Errc::too_short,
/// Errc::repeated_vertex, Errc::missing_edge or Errc::invalid_vertex, each
/// carrying the offending 1-indexed position.
Cycle validate_cycle(const UGraph& host, const std::vector<Vertex>& seq);
Cycle validate_cycle(const Digraph& host, const std::vector<Vertex>& seq);

/// Equality of cycles as cyclic sequences. With allow_reversal, traversal
/// direction is ignored as well (undirected convention).
bool same_cycle(const Cycle& x, const Cycle& y, bool allow_reversal = false);

}  // namespace longcycle
