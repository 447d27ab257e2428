#pragma once

// Brute-force reference implementations, kept deliberately naive and
// independent of the library's search code. Only usable on tiny graphs.

#include <algorithm>
#include <numeric>
#include <vector>

#include "longcycle/graph.hpp"

namespace oracles {

using longcycle::Digraph;
using longcycle::UGraph;
using longcycle::Vertex;

// Every cyclic sequence starting at vertex 1, by permutation scan.
inline bool hamiltonian_by_permutations(const UGraph& g) {
  const int n = g.n();
  if (n < 3) return false;
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  do {
    bool ok = g.has_edge(1, rest.front()) && g.has_edge(rest.back(), 1);
    for (size_t i = 0; ok && i + 1 < rest.size(); ++i)
      ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

namespace detail {

template <typename HasLink>
int longest_cycle_scan(int n, int min_len, HasLink has_link) {
  // Enumerate subsets by their smallest member, then every ordering of the
  // rest: each cyclic sequence is generated at least once.
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < min_len || size <= best) continue;
    Vertex lead = 0;
    std::vector<Vertex> rest;
    for (int b = 0; b < n; ++b) {
      if (!(mask & (1u << b))) continue;
      if (lead == 0) lead = b + 1;
      else rest.push_back(b + 1);
    }
    std::sort(rest.begin(), rest.end());
    do {
      bool ok = has_link(lead, rest.front()) && has_link(rest.back(), lead);
      for (size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = has_link(rest[i], rest[i + 1]);
      if (ok) {
        best = size;
        break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return best;
}

}  // namespace detail

// Length of the longest simple cycle; 0 when acyclic. Directed cycles may
// have length 2, undirected ones need 3.
inline int longest_cycle_directed(const Digraph& d) {
  return detail::longest_cycle_scan(
      d.n(), 2, [&d](Vertex a, Vertex b) { return d.has_arc(a, b); });
}

inline int longest_cycle_undirected(const UGraph& g) {
  return detail::longest_cycle_scan(
      g.n(), 3, [&g](Vertex a, Vertex b) { return g.has_edge(a, b); });
}

// Reachability scan that ignores one vertex (0 = none).
inline int reach_count(const Digraph& d, Vertex from, Vertex skip) {
  std::vector<char> seen(d.n() + 1, 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : d.out(v)) {
      if (w == skip || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return count;
}

inline bool strongly_connected_without(const Digraph& d, Vertex skip) {
  const int n = d.n() - (skip ? 1 : 0);
  if (n <= 1) return true;
  Vertex root = skip == 1 ? 2 : 1;
  if (reach_count(d, root, skip) != n) return false;
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (v == skip || v == root) continue;
    std::vector<char> seen(d.n() + 1, 0);
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    bool hit = false;
    while (!stack.empty() && !hit) {
      Vertex x = stack.back();
      stack.pop_back();
      if (x == root) hit = true;
      for (Vertex w : d.out(x)) {
        if (w == skip || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    if (!hit) return false;
  }
  return true;
}

inline bool two_connected_digraph(const Digraph& d) {
  if (!strongly_connected_without(d, 0)) return false;
  for (Vertex v = 1; v <= d.n(); ++v)
    if (!strongly_connected_without(d, v)) return false;
  return true;
}

inline bool two_connected_undirected(const UGraph& g) {
  return two_connected_digraph(Digraph::bidirected(g));
}

// In/out degree recount straight from the arc list.
inline std::pair<std::vector<int>, std::vector<int>> recount_degrees(
    const Digraph& d) {
  std::vector<int> in(d.n() + 1, 0), out(d.n() + 1, 0);
  for (auto [u, v] : d.arcs()) {
    ++out[u];
    ++in[v];
  }
  return {in, out};
}

}  // namespace oracles
