#include "longcycle/connectivity.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace longcycle {

namespace {

// Vertices reachable from source, following out- or in-arcs, skipping one
// optional vertex. Returns the number reached and fills `seen`.
int closure(const Digraph& d, Vertex source, bool forward, Vertex skip,
            std::vector<char>& seen) {
  seen.assign(d.n() + 1, 0);
  if (source == skip) return 0;
  std::vector<Vertex> queue{source};
  seen[source] = 1;
  int reached = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : forward ? d.out(v) : d.in(v)) {
      if (w == skip || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached;
}

// Strong connectivity of d - skip (skip = 0 keeps all vertices).
bool strong_without(const Digraph& d, Vertex skip) {
  int active = d.n() - (skip >= 1 ? 1 : 0);
  if (active <= 1) return true;
  Vertex base = (skip == 1) ? 2 : 1;
  std::vector<char> seen;
  if (closure(d, base, true, skip, seen) != active) return false;
  return closure(d, base, false, skip, seen) == active;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  if (d.n() == 0) throw Error(Errc::empty_graph, "strong connectivity of empty graph");
  return strong_without(d, 0);
}

ConnectivityWitness is_2connected_digraph(const Digraph& d) {
  if (d.n() < 3) {
    throw Error(Errc::too_small,
                "digraph 2-connectivity needs n >= 3, got n = " +
                    std::to_string(d.n()));
  }
  ConnectivityWitness w;
  std::vector<char> seen;
  if (closure(d, 1, true, 0, seen) != d.n()) {
    Vertex missing = 1;
    while (seen[missing]) ++missing;
    w.pair = {1, missing};
    w.pair_paths = 0;
    return w;
  }
  if (closure(d, 1, false, 0, seen) != d.n()) {
    Vertex missing = 1;
    while (seen[missing]) ++missing;
    w.pair = {missing, 1};
    w.pair_paths = 0;
    return w;
  }
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (!strong_without(d, v)) {
      w.cut_vertex = v;
      return w;
    }
  }
  w.verdict = true;
  return w;
}

ConnectivityWitness is_2connected_undirected(const UGraph& g) {
  const int n = g.n();
  if (n < 3) {
    throw Error(Errc::too_small,
                "2-connectivity needs n >= 3, got n = " + std::to_string(n));
  }
  ConnectivityWitness w;

  std::vector<int> disc(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
  std::vector<char> artic(n + 1, 0);
  int timer = 0;
  int root_children = 0;

  // Iterative low-point DFS from vertex 1.
  struct Frame {
    Vertex v;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({1});
  disc[1] = low[1] = ++timer;
  int reached = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex u = nbrs[f.next++];
      if (disc[u] == 0) {
        parent[u] = f.v;
        if (f.v == 1) ++root_children;
        disc[u] = low[u] = ++timer;
        ++reached;
        stack.push_back({u});
      } else if (u != parent[f.v]) {
        low[f.v] = std::min(low[f.v], disc[u]);
      }
    } else {
      Vertex v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != 1 && low[v] >= disc[p]) artic[p] = 1;
      }
    }
  }
  if (reached != n) {
    Vertex missing = 1;
    while (disc[missing] != 0) ++missing;
    w.pair = {1, missing};
    w.pair_paths = 0;
    return w;
  }
  if (root_children > 1) artic[1] = 1;
  for (Vertex v = 1; v <= n; ++v) {
    if (artic[v]) {
      w.cut_vertex = v;
      return w;
    }
  }
  w.verdict = true;
  return w;
}

namespace {

// Unit-capacity max-flow on the vertex-split network. Node 2w is "w in",
// 2w+1 is "w out"; u contributes only its out node and v only its in node,
// so internal vertices of distinct paths cannot be shared.
struct SplitFlow {
  int num_nodes;
  std::vector<std::vector<int>> adj;  // edge indices
  std::vector<int> to;
  std::vector<int> cap;

  explicit SplitFlow(const Digraph& d) : num_nodes(2 * (d.n() + 1)) {
    adj.resize(num_nodes);
    for (Vertex w = 1; w <= d.n(); ++w) add(2 * w, 2 * w + 1, 1);
    for (auto [x, y] : d.arcs()) add(2 * x + 1, 2 * y, 1);
  }

  void add(int a, int b, int c) {
    adj[a].push_back(static_cast<int>(to.size()));
    to.push_back(b);
    cap.push_back(c);
    adj[b].push_back(static_cast<int>(to.size()));
    to.push_back(a);
    cap.push_back(0);
  }

  bool augment(int s, int t) {
    std::vector<int> via(num_nodes, -1);
    std::vector<int> queue{s};
    std::vector<char> seen(num_nodes, 0);
    seen[s] = 1;
    for (size_t head = 0; head < queue.size() && !seen[t]; ++head) {
      int v = queue[head];
      for (int e : adj[v]) {
        if (cap[e] <= 0 || seen[to[e]]) continue;
        seen[to[e]] = 1;
        via[to[e]] = e;
        queue.push_back(to[e]);
      }
    }
    if (!seen[t]) return false;
    for (int v = t; v != s;) {
      int e = via[v];
      --cap[e];
      ++cap[e ^ 1];
      v = to[e ^ 1];
    }
    return true;
  }
};

int menger_flow(const Digraph& d, Vertex u, Vertex v, int stop_at) {
  if (u == v) {
    throw Error(Errc::same_vertex,
                "menger_count needs distinct vertices, got " + std::to_string(u));
  }
  if (!d.has_vertex(u) || !d.has_vertex(v)) {
    throw Error(Errc::invalid_vertex, "vertex outside graph");
  }
  SplitFlow net(d);
  int flow = 0;
  while (flow < stop_at && net.augment(2 * u + 1, 2 * v)) ++flow;
  return flow;
}

}  // namespace

int menger_count(const Digraph& d, Vertex u, Vertex v) {
  return menger_flow(d, u, v, d.n());
}

bool menger_at_least(const Digraph& d, Vertex u, Vertex v, int k) {
  return menger_flow(d, u, v, k) >= k;
}

}  // namespace longcycle
