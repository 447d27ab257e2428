#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/gadgets.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/solvers.hpp"

namespace longcycle {

/// Catalog of named graphs: cycle_<n>, complete_<n>,
/// complete_bipartite_<p>_<q>, petersen, theta, prism, directed_cycle_<n>
/// and tournament_<n>_<seed>. Throws Errc::unknown_name for anything else
/// and Errc::bad_params for out-of-range sizes.
AnyGraph named_graph(const std::string& name);

/// Hamiltonian cycle 1..n plus chords, each kept with probability p.
/// Always 2-connected; deterministic in (n, p, seed) across platforms.
UGraph random_2connected_graph(int n, double p, uint32_t seed);

/// Plain G(n, p), no connectivity guarantee.
UGraph random_ugraph(int n, double p, uint32_t seed);

/// Each ordered pair becomes an arc with probability p.
Digraph random_digraph(int n, double p, uint32_t seed);

/// Exactly one arc per vertex pair, orientation chosen by coin flip.
Digraph random_tournament(int n, uint32_t seed);

struct RandomSpec {
  int count = 0;
  int n_min = 0, n_max = 0;
  double p_min = 0.0, p_max = 0.0;
  uint32_t seed = 0;
};

struct CorpusEntry {
  std::string id;
  AnyGraph graph;
  bool expect_reject = false;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::optional<RandomSpec> random_spec;
};

/// The named graphs small enough for exhaustive solving at any parameters.
Corpus named_small_corpus();

/// Appends spec.count random 2-connected graphs; sizes cycle through
/// [n_min, n_max], densities through the 0.1-step grid of [p_min, p_max],
/// seeds run consecutively from spec.seed.
void append_random_corpus(Corpus& corpus, const RandomSpec& spec);

struct InstanceRecord {
  std::string id;
  int n = 0, m = 0;
  bool expect_reject = false;
  bool rejected = false;
  std::string reject_reason;
  int h_vertices = 0;
  long long h_arcs = 0;
  int h_mindeg = 0;
  int threshold = 0;
  bool invariants_ok = false;
  bool h_two_connected = false;
  Verdict source_verdict = Verdict::unknown;  // Hamiltonian cycle in G
  Verdict target_verdict = Verdict::unknown;  // cycle >= threshold in H
  uint64_t source_nodes = 0, target_nodes = 0;
  bool lift_ok = true;      // vacuously true without a source witness
  bool project_ok = true;   // vacuously true without a target witness
  std::optional<bool> equivalent;  // unset when either verdict is unknown
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  GadgetParams params;
  std::optional<RandomSpec> random_spec;
  std::vector<InstanceRecord> instances;

  int conclusive() const;  // records with both verdicts decided
  int violations() const;  // records whose verdicts disagree
  bool all_pass() const;

  /// Both serializations are deterministic functions of the inputs: search
  /// node counts appear, wall-clock times never do.
  std::string to_tsv() const;
  std::string to_json() const;
};

/// Per corpus entry: build the reduction, check structural invariants and
/// 2-connectivity of H, solve both sides, transfer witnesses both ways, and
/// compare verdicts. Budget exhaustion makes an instance inconclusive,
/// never failed. Entries marked expect_reject pass exactly when the build
/// throws.
VerificationReport run_claim_roundtrip(const Corpus& corpus,
                                       const GadgetParams& params,
                                       const SearchBudget& budget);

}  // namespace longcycle
