#include "longcycle/harness.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "longcycle/connectivity.hpp"
#include "longcycle/error.hpp"

namespace longcycle {

namespace {

using nlohmann::json;

std::vector<std::string> split_name(const std::string& name) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(name);
  while (std::getline(in, part, '_')) parts.push_back(part);
  return parts;
}

long long parse_name_number(const std::string& name, const std::string& part) {
  try {
    size_t used = 0;
    const long long value = std::stoll(part, &used);
    if (used != part.size()) throw std::invalid_argument(part);
    return value;
  } catch (...) {
    throw Error(Errc::unknown_name, "unknown graph name " + name);
  }
}

int name_int(const std::string& name, const std::string& part, int lo, int hi) {
  const long long value = parse_name_number(name, part);
  if (value < lo || value > hi)
    throw Error(Errc::bad_params, name + ": size out of range");
  return static_cast<int>(value);
}

UGraph make_cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return UGraph::from_edges(n, edges);
}

UGraph make_complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return UGraph::from_edges(n, edges);
}

UGraph make_complete_bipartite(int p, int q) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= p; ++u)
    for (Vertex v = p + 1; v <= p + q; ++v) edges.emplace_back(u, v);
  return UGraph::from_edges(p + q, edges);
}

UGraph make_petersen() {
  return UGraph::from_edges(
      10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},       // outer pentagon
           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},      // spokes
           {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});   // inner pentagram
}

// Two hubs joined by three internally disjoint paths of lengths 2, 3, 3.
UGraph make_theta() {
  return UGraph::from_edges(7, {{1, 3}, {2, 3},
                                {1, 4}, {4, 5}, {2, 5},
                                {1, 6}, {6, 7}, {2, 7}});
}

UGraph make_prism() {
  return UGraph::from_edges(6, {{1, 2}, {1, 3}, {2, 3},
                                {4, 5}, {4, 6}, {5, 6},
                                {1, 4}, {2, 5}, {3, 6}});
}

Digraph make_directed_cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex v = 1; v < n; ++v) arcs.emplace_back(v, v + 1);
  arcs.emplace_back(n, 1);
  return Digraph::from_arcs(n, arcs);
}

// p scaled against the full 32-bit output range keeps draws identical on
// every platform, unlike std::bernoulli_distribution.
uint64_t coin_threshold(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(Errc::bad_params, "probability outside [0, 1]");
  return static_cast<uint64_t>(p * 4294967296.0);
}

std::string format_p(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

}  // namespace

AnyGraph named_graph(const std::string& name) {
  const auto parts = split_name(name);
  if (parts.size() == 1) {
    if (parts[0] == "petersen") return make_petersen();
    if (parts[0] == "theta") return make_theta();
    if (parts[0] == "prism") return make_prism();
  } else if (parts.size() == 2 && parts[0] == "cycle") {
    return make_cycle(name_int(name, parts[1], 3, 1000000));
  } else if (parts.size() == 2 && parts[0] == "complete") {
    return make_complete(name_int(name, parts[1], 1, 3000));
  } else if (parts.size() == 4 && parts[0] == "complete" &&
             parts[1] == "bipartite") {
    const int p = name_int(name, parts[2], 1, 3000);
    const int q = name_int(name, parts[3], 1, 3000);
    return make_complete_bipartite(p, q);
  } else if (parts.size() == 3 && parts[0] == "directed" &&
             parts[1] == "cycle") {
    return make_directed_cycle(name_int(name, parts[2], 2, 1000000));
  } else if (parts.size() == 3 && parts[0] == "tournament") {
    const int n = name_int(name, parts[1], 1, 3000);
    const long long seed = parse_name_number(name, parts[2]);
    if (seed < 0 || seed > 0xffffffffLL)
      throw Error(Errc::bad_params, name + ": seed out of range");
    return random_tournament(n, static_cast<uint32_t>(seed));
  }
  throw Error(Errc::unknown_name, "unknown graph name " + name);
}

UGraph random_2connected_graph(int n, double p, uint32_t seed) {
  if (n < 3) throw Error(Errc::too_small, "need at least 3 vertices");
  const uint64_t threshold = coin_threshold(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  std::mt19937 gen(seed);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      const bool on_base_cycle = v == u + 1 || (u == 1 && v == n);
      if (on_base_cycle) continue;
      if (gen() < threshold) edges.emplace_back(u, v);
    }
  return UGraph::from_edges(n, edges);
}

UGraph random_ugraph(int n, double p, uint32_t seed) {
  if (n < 1) throw Error(Errc::too_small, "need at least 1 vertex");
  const uint64_t threshold = coin_threshold(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::mt19937 gen(seed);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (gen() < threshold) edges.emplace_back(u, v);
  return UGraph::from_edges(n, edges);
}

Digraph random_digraph(int n, double p, uint32_t seed) {
  if (n < 1) throw Error(Errc::too_small, "need at least 1 vertex");
  const uint64_t threshold = coin_threshold(p);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::mt19937 gen(seed);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (gen() < threshold) arcs.emplace_back(u, v);
    }
  return Digraph::from_arcs(n, arcs);
}

Digraph random_tournament(int n, uint32_t seed) {
  if (n < 1) throw Error(Errc::too_small, "need at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::mt19937 gen(seed);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      if (gen() & 1u) arcs.emplace_back(u, v);
      else arcs.emplace_back(v, u);
    }
  return Digraph::from_arcs(n, arcs);
}

Corpus named_small_corpus() {
  Corpus corpus;
  for (const char* name :
       {"cycle_4", "cycle_5", "complete_4", "complete_5", "prism",
        "complete_bipartite_2_3", "theta", "petersen"})
    corpus.entries.push_back({name, named_graph(name), false});
  return corpus;
}

void append_random_corpus(Corpus& corpus, const RandomSpec& spec) {
  if (spec.count < 0 || spec.n_min < 3 || spec.n_max < spec.n_min ||
      spec.p_min < 0.0 || spec.p_max < spec.p_min || spec.p_max > 1.0)
    throw Error(Errc::bad_params, "malformed random corpus spec");
  corpus.random_spec = spec;
  const int p_steps =
      static_cast<int>(std::floor((spec.p_max - spec.p_min) / 0.1 + 1e-9)) + 1;
  const int n_span = spec.n_max - spec.n_min + 1;
  for (int k = 0; k < spec.count; ++k) {
    const int n = spec.n_min + k % n_span;
    const double p = spec.p_min + 0.1 * (k % p_steps);
    const uint32_t seed = spec.seed + static_cast<uint32_t>(k);
    std::ostringstream id;
    id << "random_" << k << "_n" << n;
    corpus.entries.push_back(
        {id.str(), random_2connected_graph(n, p, seed), false});
  }
}

VerificationReport run_claim_roundtrip(const Corpus& corpus,
                                       const GadgetParams& params,
                                       const SearchBudget& budget) {
  VerificationReport report;
  report.params = params;
  report.random_spec = corpus.random_spec;
  for (const CorpusEntry& entry : corpus.entries) {
    InstanceRecord rec;
    rec.id = entry.id;
    rec.expect_reject = entry.expect_reject;
    const UGraph* g = std::get_if<UGraph>(&entry.graph);
    if (!g)
      throw Error(Errc::bad_params,
                  "round trip needs undirected entries: " + entry.id);
    rec.n = g->n();
    rec.m = g->m();

    std::optional<ReductionInstance> r;
    try {
      r.emplace(build_edge_clique_reduction(*g, params));
    } catch (const Error& e) {
      rec.rejected = true;
      rec.reject_reason = errc_name(e.code());
      rec.pass = entry.expect_reject;
      if (!rec.pass) rec.note = e.what();
      report.instances.push_back(std::move(rec));
      continue;
    }
    if (entry.expect_reject) {
      rec.note = "expected rejection, but the build succeeded";
      report.instances.push_back(std::move(rec));
      continue;
    }

    const Digraph& h = r->h();
    rec.h_vertices = h.n();
    rec.h_arcs = static_cast<long long>(h.arcs().size());
    rec.h_mindeg = mindeg_directed(h);
    rec.threshold = r->threshold();
    if (auto broken = check_reduction_invariants(*r)) rec.note = *broken;
    else rec.invariants_ok = true;
    rec.h_two_connected = is_2connected_digraph(h).verdict;

    const SolveOutcome ham = hamiltonian_cycle_exact(*g, budget);
    rec.source_verdict = ham.verdict;
    rec.source_nodes = ham.nodes;
    const SolveOutcome sol = has_cycle_at_least(h, r->threshold(), budget);
    rec.target_verdict = sol.verdict;
    rec.target_nodes = sol.nodes;

    if (ham.found()) {
      try {
        const Cycle lifted = lift_hamiltonian_cycle(*r, *ham.cycle);
        const Cycle back = project_long_cycle(*r, lifted);
        rec.lift_ok =
            lifted.length() == 2 * g->n() && same_cycle(back, *ham.cycle);
        if (!rec.lift_ok) rec.note = "lift round trip mismatch";
      } catch (const Error& e) {
        rec.lift_ok = false;
        rec.note = e.what();
      }
    }
    if (sol.found()) {
      try {
        const Cycle projected = project_long_cycle(*r, *sol.cycle);
        rec.project_ok = projected.length() == g->n();
        if (!rec.project_ok) rec.note = "projection is not Hamiltonian";
      } catch (const Error& e) {
        rec.project_ok = false;
        rec.note = e.what();
      }
    }
    if (ham.conclusive() && sol.conclusive())
      rec.equivalent = ham.found() == sol.found();
    rec.pass = rec.invariants_ok && rec.h_two_connected && rec.lift_ok &&
               rec.project_ok && rec.equivalent.value_or(true);
    if (!rec.pass && rec.note.empty()) rec.note = "verdicts disagree";
    report.instances.push_back(std::move(rec));
  }
  return report;
}

int VerificationReport::conclusive() const {
  int count = 0;
  for (const auto& rec : instances)
    if (rec.equivalent.has_value()) ++count;
  return count;
}

int VerificationReport::violations() const {
  int count = 0;
  for (const auto& rec : instances)
    if (rec.equivalent && !*rec.equivalent) ++count;
  return count;
}

bool VerificationReport::all_pass() const {
  for (const auto& rec : instances)
    if (!rec.pass) return false;
  return true;
}

namespace {

std::string sanitize_note(const std::string& note) {
  if (note.empty()) return "-";
  std::string out = note;
  for (char& ch : out)
    if (ch == '\t' || ch == '\n') ch = ' ';
  return out;
}

const char* tsv_bool(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string VerificationReport::to_tsv() const {
  std::ostringstream out;
  out << "# roundtrip a=" << params.a << " clique_count=";
  if (params.clique_count) out << *params.clique_count;
  else out << "default";
  out << " clique_size=";
  if (params.clique_size) out << *params.clique_size;
  else out << "default";
  out << '\n';
  if (random_spec) {
    out << "# random count=" << random_spec->count << " n=["
        << random_spec->n_min << "," << random_spec->n_max << "] p=["
        << format_p(random_spec->p_min) << "," << format_p(random_spec->p_max)
        << "] seed=" << random_spec->seed << '\n';
  }
  out << "id\tn\tm\trejected\treason\th_vertices\th_arcs\th_mindeg\t"
         "threshold\tinvariants\th_2conn\tsource\ttarget\tsource_nodes\t"
         "target_nodes\tlift\tproject\tequivalent\tpass\tnote\n";
  for (const auto& rec : instances) {
    out << rec.id << '\t' << rec.n << '\t' << rec.m << '\t'
        << tsv_bool(rec.rejected) << '\t'
        << (rec.reject_reason.empty() ? "-" : rec.reject_reason) << '\t'
        << rec.h_vertices << '\t' << rec.h_arcs << '\t' << rec.h_mindeg
        << '\t' << rec.threshold << '\t' << tsv_bool(rec.invariants_ok)
        << '\t' << tsv_bool(rec.h_two_connected) << '\t'
        << verdict_name(rec.source_verdict) << '\t'
        << verdict_name(rec.target_verdict) << '\t' << rec.source_nodes
        << '\t' << rec.target_nodes << '\t' << tsv_bool(rec.lift_ok) << '\t'
        << tsv_bool(rec.project_ok) << '\t'
        << (rec.equivalent ? (*rec.equivalent ? "yes" : "no") : "-") << '\t'
        << tsv_bool(rec.pass) << '\t' << sanitize_note(rec.note) << '\n';
  }
  return out.str();
}

std::string VerificationReport::to_json() const {
  json j;
  j["params"]["a"] = params.a;
  j["params"]["clique_count"] =
      params.clique_count ? json(*params.clique_count) : json(nullptr);
  j["params"]["clique_size"] =
      params.clique_size ? json(*params.clique_size) : json(nullptr);
  if (random_spec) {
    j["random_spec"] = {{"count", random_spec->count},
                        {"n_min", random_spec->n_min},
                        {"n_max", random_spec->n_max},
                        {"p_min", random_spec->p_min},
                        {"p_max", random_spec->p_max},
                        {"seed", random_spec->seed}};
  } else {
    j["random_spec"] = nullptr;
  }
  json rows = json::array();
  for (const auto& rec : instances) {
    json row;
    row["id"] = rec.id;
    row["n"] = rec.n;
    row["m"] = rec.m;
    row["expect_reject"] = rec.expect_reject;
    row["rejected"] = rec.rejected;
    row["reject_reason"] = rec.reject_reason;
    row["h_vertices"] = rec.h_vertices;
    row["h_arcs"] = rec.h_arcs;
    row["h_mindeg"] = rec.h_mindeg;
    row["threshold"] = rec.threshold;
    row["invariants_ok"] = rec.invariants_ok;
    row["h_two_connected"] = rec.h_two_connected;
    row["source_verdict"] = verdict_name(rec.source_verdict);
    row["target_verdict"] = verdict_name(rec.target_verdict);
    row["source_nodes"] = rec.source_nodes;
    row["target_nodes"] = rec.target_nodes;
    row["lift_ok"] = rec.lift_ok;
    row["project_ok"] = rec.project_ok;
    row["equivalent"] = rec.equivalent ? json(*rec.equivalent) : json(nullptr);
    row["pass"] = rec.pass;
    row["note"] = rec.note;
    rows.push_back(std::move(row));
  }
  j["instances"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace longcycle
