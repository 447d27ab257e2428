#include "longcycle/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <string>
#include <vector>

namespace longcycle {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::not_found: return "notfound";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
  std::optional<std::uint64_t> node_limit;
  std::optional<Clock::time_point> deadline;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  explicit BudgetTracker(const SearchBudget& b) : node_limit(b.node_limit) {
    if (b.time_limit_seconds) {
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        *b.time_limit_seconds));
    }
  }

  // Counts one expanded node; false once a limit is exceeded.
  bool tick() {
    ++nodes;
    if (node_limit && nodes > *node_limit) exhausted = true;
    if (deadline && (nodes & 1023) == 0 && Clock::now() > *deadline) {
      exhausted = true;
    }
    return !exhausted;
  }

  // Work done inside pruning bounds scales with the host graph, so it is
  // charged too; otherwise the node limit would not bound wall time.
  void charge(std::uint64_t units) {
    nodes += units;
    if (node_limit && nodes > *node_limit) exhausted = true;
  }
};

// ---------------------------------------------------------------------------
// Hamiltonian cycle backtracking
// ---------------------------------------------------------------------------

struct HamiltonSearch {
  const UGraph& g;
  BudgetTracker bt;
  std::vector<Vertex> path;
  std::vector<char> onpath;
  std::vector<Vertex> queue;  // BFS scratch
  std::vector<char> seen;

  HamiltonSearch(const UGraph& graph, const SearchBudget& budget)
      : g(graph), bt(budget), onpath(graph.n() + 1, 0),
        seen(graph.n() + 1, 0) {}

  // Sound pruning: in any completion, every unvisited vertex keeps two cycle
  // neighbors among {unvisited, tail, 1}, and the unvisited region plus the
  // tail stays connected with vertex 1 adjacent to it.
  bool completable() {
    const int n = g.n();
    const Vertex tail = path.back();
    const int remaining = n - static_cast<int>(path.size());
    if (remaining == 0) return true;
    std::uint64_t scanned = static_cast<std::uint64_t>(n);
    for (Vertex v = 1; v <= n; ++v) {
      if (onpath[v]) continue;
      int avail = 0;
      scanned += g.neighbors(v).size();
      for (Vertex w : g.neighbors(v)) {
        if (!onpath[w] || w == tail || w == 1) ++avail;
      }
      if (avail < 2) {
        bt.charge(scanned);
        return false;
      }
    }
    bool start_has_exit = false;
    for (Vertex w : g.neighbors(1)) {
      if (!onpath[w]) {
        start_has_exit = true;
        break;
      }
    }
    if (!start_has_exit) {
      bt.charge(scanned);
      return false;
    }
    // unvisited region reachable from the tail
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(tail);
    seen[tail] = 1;
    int reached = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      scanned += g.neighbors(queue[head]).size();
      for (Vertex w : g.neighbors(queue[head])) {
        if (onpath[w] || seen[w]) continue;
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
    bt.charge(scanned);
    return reached == remaining;
  }

  bool dfs() {
    if (!bt.tick()) return false;
    const int n = g.n();
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(tail, 1);
    if (!completable() || bt.exhausted) return false;
    for (Vertex u : g.neighbors(tail)) {
      if (onpath[u]) continue;
      path.push_back(u);
      onpath[u] = 1;
      if (dfs()) return true;
      onpath[u] = 0;
      path.pop_back();
      if (bt.exhausted) return false;
    }
    return false;
  }
};

}  // namespace

SolveOutcome hamiltonian_cycle_exact(const UGraph& g,
                                     const SearchBudget& budget) {
  SolveOutcome out;
  if (g.n() < 3) {
    out.verdict = Verdict::not_found;
    return out;
  }
  HamiltonSearch search(g, budget);
  search.path.push_back(1);
  search.onpath[1] = 1;
  bool hit = search.dfs();
  out.nodes = search.bt.nodes;
  if (hit) {
    out.cycle = validate_cycle(g, search.path);
    out.verdict = Verdict::found;
  } else {
    out.verdict = search.bt.exhausted ? Verdict::unknown : Verdict::not_found;
  }
  return out;
}

SolveOutcome hamiltonian_cycle_heldkarp(const UGraph& g) {
  const int n = g.n();
  if (n > 20) {
    throw Error(Errc::too_large,
                "subset DP limited to n <= 20, got n = " + std::to_string(n));
  }
  SolveOutcome out;
  out.verdict = Verdict::not_found;
  if (n < 3) return out;

  std::vector<std::uint32_t> adj(n, 0);  // 0-based bitmasks
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v - 1] |= 1u << (w - 1);
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // dp[S] = endpoints reachable by a path that starts at vertex 1 and visits
  // exactly the vertex set S.
  std::vector<std::uint32_t> dp(static_cast<size_t>(full) + 1, 0);
  dp[1] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (!(s & 1u)) continue;
    std::uint32_t ends = dp[s];
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = adj[v] & ~s;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        dp[s | (1u << u)] |= 1u << u;
      }
    }
  }
  std::uint32_t closers = dp[full] & adj[0];
  if (!closers) return out;

  // Reconstruct backwards, smallest id at every step.
  std::vector<Vertex> rev;
  int cur = std::countr_zero(closers);
  std::uint32_t s = full;
  while (cur != 0) {
    rev.push_back(cur + 1);
    s &= ~(1u << cur);
    std::uint32_t prev = dp[s] & adj[cur];
    cur = std::countr_zero(prev);
  }
  std::vector<Vertex> seq{1};
  seq.insert(seq.end(), rev.rbegin(), rev.rend());
  out.cycle = validate_cycle(g, seq);
  out.verdict = Verdict::found;
  return out;
}

// ---------------------------------------------------------------------------
// Long directed cycle search
// ---------------------------------------------------------------------------

namespace {

// Enumerates simple cycles grouped by their smallest vertex s: paths start at
// s and may only use vertices > s, so every cycle is visited exactly once.
struct DirectedCycleSearch {
  const Digraph& d;
  BudgetTracker bt;
  bool longest_mode;
  int target;     // threshold mode: required length
  int floor_len;  // shortest cycle length admissible for the host
  std::vector<Vertex> path;
  std::vector<char> onpath;
  std::optional<std::vector<Vertex>> best;
  std::vector<Vertex> queue;
  std::vector<char> seen;

  DirectedCycleSearch(const Digraph& graph, const SearchBudget& budget,
                      bool longest, int len_target, int floor_length)
      : d(graph), bt(budget), longest_mode(longest), target(len_target),
        floor_len(floor_length), onpath(graph.n() + 1, 0),
        seen(graph.n() + 1, 0) {}

  int needed() const {
    if (!longest_mode) return std::max(target, floor_len);
    int beat = best ? static_cast<int>(best->size()) + 1 : floor_len;
    return std::max(beat, floor_len);
  }

  // From candidate u, count unused vertices reachable (> s, off the path)
  // and whether the start stays closable from that region.
  std::pair<int, bool> reach_bound(Vertex u, Vertex s) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(u);
    seen[u] = 1;
    int count = 1;
    bool closable = d.has_arc(u, s);
    std::uint64_t scanned = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      scanned += d.out(queue[head]).size();
      for (Vertex w : d.out(queue[head])) {
        if (w <= s || onpath[w] || seen[w]) continue;
        seen[w] = 1;
        ++count;
        closable = closable || d.has_arc(w, s);
        queue.push_back(w);
      }
    }
    bt.charge(scanned);
    return {count, closable};
  }

  // Returns true in threshold mode once a witness is recorded.
  bool dfs(Vertex s) {
    if (!bt.tick()) return false;
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) >= needed() && d.has_arc(tail, s)) {
      if (!longest_mode) {
        best = path;
        return true;
      }
      best = path;
    }
    for (Vertex u : d.out(tail)) {
      if (u <= s || onpath[u]) continue;
      auto [count, closable] = reach_bound(u, s);
      if (bt.exhausted) return false;
      if (!closable) continue;
      if (static_cast<int>(path.size()) + count < needed()) continue;
      path.push_back(u);
      onpath[u] = 1;
      bool done = dfs(s);
      onpath[u] = 0;
      path.pop_back();
      if (done) return true;
      if (bt.exhausted) return false;
    }
    return false;
  }

  SolveOutcome run() {
    SolveOutcome out;
    for (Vertex s = 1; s <= d.n() && !bt.exhausted; ++s) {
      path.assign(1, s);
      std::fill(onpath.begin(), onpath.end(), 0);
      onpath[s] = 1;
      if (dfs(s) && !longest_mode) break;
    }
    out.nodes = bt.nodes;
    if (bt.exhausted) {
      out.verdict = Verdict::unknown;
      return out;
    }
    if (best) {
      out.cycle = validate_cycle(d, *best);
      out.verdict = Verdict::found;
    } else {
      out.verdict = Verdict::not_found;
    }
    return out;
  }
};

SolveOutcome directed_cycle_search(const Digraph& d, bool longest, int target,
                                   int floor_len, const SearchBudget& budget) {
  DirectedCycleSearch search(d, budget, longest, target, floor_len);
  return search.run();
}

}  // namespace

SolveOutcome has_cycle_at_least(const Digraph& d, int min_len,
                                const SearchBudget& budget) {
  if (min_len < 2) {
    throw Error(Errc::bad_params,
                "cycle length bound must be >= 2, got " +
                    std::to_string(min_len));
  }
  return directed_cycle_search(d, false, min_len, 2, budget);
}

SolveOutcome longest_cycle_exact(const Digraph& d, const SearchBudget& budget) {
  return directed_cycle_search(d, true, 0, 2, budget);
}

SolveOutcome has_cycle_at_least_undirected(const UGraph& g, int min_len,
                                           const SearchBudget& budget) {
  if (min_len < 3) min_len = 3;
  auto out = directed_cycle_search(Digraph::bidirected(g), false, min_len, 3,
                                   budget);
  if (out.cycle) out.cycle = validate_cycle(g, out.cycle->vertices());
  return out;
}

SolveOutcome longest_cycle_exact_undirected(const UGraph& g,
                                            const SearchBudget& budget) {
  auto out = directed_cycle_search(Digraph::bidirected(g), true, 0, 3, budget);
  if (out.cycle) out.cycle = validate_cycle(g, out.cycle->vertices());
  return out;
}

Cycle mindeg_plus_one_cycle(const Digraph& d) {
  const int md = mindeg_directed(d);
  if (md < 1) {
    throw Error(Errc::mindeg_zero,
                "mindeg is 0, the length bound is vacuous and a cycle may "
                "not exist");
  }
  // pos[v]: 1-based position on the growing path, 0 if absent. The path only
  // grows, so each out-list is scanned at most once: O(n + m) overall.
  std::vector<int> pos(d.n() + 1, 0);
  std::vector<Vertex> path{1};
  pos[1] = 1;
  for (;;) {
    const Vertex tail = path.back();
    Vertex next = 0;
    for (Vertex w : d.out(tail)) {
      if (!pos[w]) {
        next = w;
        break;
      }
    }
    if (next != 0) {
      path.push_back(next);
      pos[next] = static_cast<int>(path.size());
      continue;
    }
    // Stuck: every out-neighbor of the tail lies on the path. Closing at the
    // earliest one yields a segment containing all outdeg(tail) of them plus
    // the tail itself, so length >= outdeg(tail) + 1 >= mindeg + 1.
    int earliest = INT_MAX;
    for (Vertex w : d.out(tail)) earliest = std::min(earliest, pos[w]);
    std::vector<Vertex> cyc(path.begin() + (earliest - 1), path.end());
    return validate_cycle(d, cyc);
  }
}

}  // namespace longcycle
