#include "longcycle/graph.hpp"

#include <algorithm>
#include <string>

namespace longcycle {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::repeated_vertex: return "RepeatedVertex";
    case Errc::missing_edge: return "MissingEdge";
    case Errc::too_short: return "TooShort";
    case Errc::too_small: return "TooSmall";
    case Errc::same_vertex: return "SameVertex";
    case Errc::not_two_connected: return "NotTwoConnected";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::bad_params: return "BadParams";
    case Errc::non_canonical_params: return "NonCanonicalParams";
    case Errc::not_hamiltonian: return "NotHamiltonian";
    case Errc::not_alternating: return "NotAlternating";
    case Errc::too_large: return "TooLarge";
    case Errc::mindeg_zero: return "MindegZero";
    case Errc::unknown_name: return "UnknownName";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

namespace {

void check_endpoint(Vertex v, int n) {
  if (v < 1 || v > n) {
    throw Error(Errc::invalid_vertex,
                "vertex " + std::to_string(v) + " outside [1, " +
                    std::to_string(n) + "]");
  }
}

}  // namespace

UGraph UGraph::from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw Error(Errc::invalid_vertex, "negative vertex count");
  for (auto& [u, v] : edges) {
    check_endpoint(u, n);
    check_endpoint(v, n);
    if (u == v) {
      throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(Errc::duplicate_edge,
                "duplicate edge " + std::to_string(dup->first) + " " +
                    std::to_string(dup->second));
  }
  UGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n + 1, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

bool UGraph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Digraph Digraph::from_arcs(int n, std::vector<std::pair<Vertex, Vertex>> arcs) {
  if (n < 0) throw Error(Errc::invalid_vertex, "negative vertex count");
  for (auto [u, v] : arcs) {
    check_endpoint(u, n);
    check_endpoint(v, n);
    if (u == v) {
      throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  auto dup = std::adjacent_find(arcs.begin(), arcs.end());
  if (dup != arcs.end()) {
    throw Error(Errc::duplicate_edge,
                "duplicate arc " + std::to_string(dup->first) + " " +
                    std::to_string(dup->second));
  }
  Digraph d;
  d.n_ = n;
  d.arcs_ = std::move(arcs);
  d.out_.assign(n + 1, {});
  d.in_.assign(n + 1, {});
  for (auto [u, v] : d.arcs_) {
    d.out_[u].push_back(v);
    d.in_[v].push_back(u);
  }
  for (auto& list : d.out_) std::sort(list.begin(), list.end());
  for (auto& list : d.in_) std::sort(list.begin(), list.end());
  return d;
}

Digraph Digraph::bidirected(const UGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(2 * g.edges().size());
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return from_arcs(g.n(), std::move(arcs));
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

int mindeg_undirected(const UGraph& g) {
  if (g.n() == 0) throw Error(Errc::empty_graph, "mindeg of empty graph");
  int best = g.degree(1);
  for (Vertex v = 2; v <= g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int mindeg_directed(const Digraph& d) {
  if (d.n() == 0) throw Error(Errc::empty_graph, "mindeg of empty graph");
  int best = std::min(d.indeg(1), d.outdeg(1));
  for (Vertex v = 2; v <= d.n(); ++v) {
    best = std::min(best, std::min(d.indeg(v), d.outdeg(v)));
  }
  return best;
}

namespace {

template <typename Host, typename EdgeCheck>
void validate_cycle_impl(const Host& host, const std::vector<Vertex>& seq,
                         int min_len, EdgeCheck has_link) {
  const int m = static_cast<int>(seq.size());
  if (m < min_len) {
    throw Error(Errc::too_short,
                "cycle of length " + std::to_string(m) + ", need at least " +
                    std::to_string(min_len),
                m);
  }
  for (int i = 0; i < m; ++i) {
    if (!host.has_vertex(seq[i])) {
      throw Error(Errc::invalid_vertex,
                  "vertex " + std::to_string(seq[i]) + " not in host graph",
                  i + 1);
    }
  }
  std::vector<char> seen(host.n() + 1, 0);
  for (int i = 0; i < m; ++i) {
    if (seen[seq[i]]) {
      throw Error(Errc::repeated_vertex,
                  "vertex " + std::to_string(seq[i]) + " repeated", i + 1);
    }
    seen[seq[i]] = 1;
  }
  for (int i = 0; i < m; ++i) {
    Vertex a = seq[i];
    Vertex b = seq[(i + 1) % m];
    if (!has_link(a, b)) {
      throw Error(Errc::missing_edge,
                  "no edge from " + std::to_string(a) + " to " +
                      std::to_string(b),
                  i + 1);
    }
  }
}

}  // namespace

Cycle validate_cycle(const UGraph& host, const std::vector<Vertex>& seq) {
  validate_cycle_impl(host, seq, 3, [&host](Vertex a, Vertex b) {
    return host.has_edge(a, b);
  });
  return Cycle(seq);
}

Cycle validate_cycle(const Digraph& host, const std::vector<Vertex>& seq) {
  validate_cycle_impl(host, seq, 2, [&host](Vertex a, Vertex b) {
    return host.has_arc(a, b);
  });
  return Cycle(seq);
}

namespace {

// Canonical rotation: start at the smallest vertex.
std::vector<Vertex> rotate_to_min(const std::vector<Vertex>& vs) {
  auto it = std::min_element(vs.begin(), vs.end());
  std::vector<Vertex> out(it, vs.end());
  out.insert(out.end(), vs.begin(), it);
  return out;
}

}  // namespace

bool same_cycle(const Cycle& x, const Cycle& y, bool allow_reversal) {
  if (x.length() != y.length()) return false;
  if (x.length() == 0) return true;
  auto a = rotate_to_min(x.vertices());
  auto b = rotate_to_min(y.vertices());
  if (a == b) return true;
  if (!allow_reversal) return false;
  std::reverse(b.begin() + 1, b.end());  // reverse traversal, same start
  return a == b;
}

}  // namespace longcycle
