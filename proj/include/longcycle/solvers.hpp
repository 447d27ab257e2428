#pragma once

#include <cstdint>
#include <optional>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Limits for exhaustive search. node_limit caps deterministic work units
/// (expanded nodes plus pruning-bound steps), so equal limits give equal
/// verdicts on every platform. Exceeding either yields Verdict::unknown,
/// never a wrong verdict.
struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit_seconds;
};

enum class Verdict { found, not_found, unknown };

const char* verdict_name(Verdict v);

/// Outcome of an exact search. A found cycle has passed validate_cycle on
/// the queried graph and meets the queried length bound. `nodes` counts the
/// deterministic work units spent (see SearchBudget).
struct SolveOutcome {
  Verdict verdict = Verdict::unknown;
  std::optional<Cycle> cycle;
  std::uint64_t nodes = 0;

  bool found() const { return verdict == Verdict::found; }
  bool conclusive() const { return verdict != Verdict::unknown; }
};

/// Backtracking Hamiltonian cycle search with degree and unvisited-region
/// connectivity pruning. Smallest-id tie-breaking; the witness is
/// deterministic.
SolveOutcome hamiltonian_cycle_exact(const UGraph& g,
                                     const SearchBudget& budget = {});

/// Independent oracle: dynamic programming over (vertex subset, endpoint)
/// states. Throws Errc::too_large for n > 20.
SolveOutcome hamiltonian_cycle_heldkarp(const UGraph& g);

/// Exhaustive DFS over simple paths for a directed cycle of length >= min_len
/// (2-cycles u->v->u count). Prunes a branch when the path plus an optimistic
/// reachability bound cannot reach min_len. Throws Errc::bad_params for
/// min_len < 2.
SolveOutcome has_cycle_at_least(const Digraph& d, int min_len,
                                const SearchBudget& budget = {});

/// Maximum-length simple directed cycle by exhaustive search; NotFound iff
/// the digraph is acyclic. Intended for |V| up to ~30.
SolveOutcome longest_cycle_exact(const Digraph& d,
                                 const SearchBudget& budget = {});

/// Undirected counterparts used by the CLI: cycles of length >= 3 in the
/// bidirected view, which are exactly the simple cycles of g.
SolveOutcome has_cycle_at_least_undirected(const UGraph& g, int min_len,
                                           const SearchBudget& budget = {});
SolveOutcome longest_cycle_exact_undirected(const UGraph& g,
                                            const SearchBudget& budget = {});

/// Constructive greedy walk: grow a path by the smallest-id unvisited
/// out-neighbor; once stuck, close at the earliest out-neighbor on the path.
/// Returns a cycle of length >= mindeg_directed(d) + 1 in O(n + m). Throws
/// Errc::mindeg_zero when mindeg_directed(d) < 1.
Cycle mindeg_plus_one_cycle(const Digraph& d);

}  // namespace longcycle
