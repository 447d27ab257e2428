#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "longcycle/connectivity.hpp"
#include "longcycle/error.hpp"
#include "longcycle/gadgets.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/harness.hpp"
#include "longcycle/io.hpp"
#include "longcycle/solvers.hpp"

namespace {

using namespace longcycle;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::empty_graph:
    case Errc::invalid_vertex:
    case Errc::self_loop:
    case Errc::duplicate_edge:
    case Errc::unknown_name:
      return 10;
    case Errc::not_two_connected:
      return 11;
    case Errc::too_few_vertices:
      return 12;
    case Errc::bad_params:
      return 13;
    case Errc::mindeg_zero:
      return 14;
    case Errc::too_small:
      return 15;
    case Errc::non_canonical_params:
      return 16;
    case Errc::too_large:
      return 17;
    default:
      return 18;  // cycle-shape errors: TooShort, RepeatedVertex, ...
  }
}

struct GraphSource {
  std::string input;
  std::string named;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--input,-i", input, "graph file to read");
    auto* nm = cmd->add_option("--named,-g", named,
                               "catalog graph name (cycle_<n>, complete_<n>, "
                               "complete_bipartite_<p>_<q>, petersen, theta, "
                               "prism, directed_cycle_<n>, "
                               "tournament_<n>_<seed>)");
    in->excludes(nm);
  }

  AnyGraph load() const {
    if (input.empty() == named.empty())
      throw Error(Errc::bad_params, "need exactly one of --input / --named");
    if (!named.empty()) return named_graph(named);
    return parse_graph(read_file(input));
  }
};

std::string describe_witness(const ConnectivityWitness& w) {
  if (w.verdict) return "two-connected";
  std::ostringstream out;
  out << "not two-connected";
  if (w.cut_vertex) out << " (cut vertex " << *w.cut_vertex << ")";
  if (w.pair)
    out << " (pair " << w.pair->first << " " << w.pair->second << " has "
        << w.pair_paths.value_or(0) << " disjoint paths)";
  return out.str();
}

int report_outcome(const SolveOutcome& outcome, const std::string& witness_path) {
  switch (outcome.verdict) {
    case Verdict::found:
      std::cout << "FOUND " << outcome.cycle->length() << "\n";
      if (!witness_path.empty())
        write_file(witness_path,
                   serialize_vertex_sequence(outcome.cycle->vertices()));
      return 0;
    case Verdict::not_found:
      std::cout << "NOTFOUND\n";
      return 1;
    case Verdict::unknown:
      std::cout << "UNKNOWN\n";
      return 2;
  }
  return 2;
}

struct ReduceArgs {
  GraphSource source;
  int a = 3;
  int clique_count = 0;
  int clique_size = 0;
  CLI::Option* count_opt = nullptr;
  CLI::Option* size_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  std::string output, mapping;
};

int run_reduce(const ReduceArgs& args) {
  AnyGraph g = args.source.load();
  std::optional<ReductionInstance> inst;
  if (auto* u = std::get_if<UGraph>(&g)) {
    GadgetParams params;
    params.a = args.a;
    if (args.count_opt->count()) params.clique_count = args.clique_count;
    if (args.size_opt->count()) params.clique_size = args.clique_size;
    inst.emplace(build_edge_clique_reduction(*u, params));
  } else {
    if (args.a_opt->count() || args.count_opt->count() || args.size_opt->count())
      throw Error(Errc::bad_params,
                  "directed input builds the vertex-clique construction, "
                  "which takes no parameters");
    inst.emplace(build_vertex_clique_construction(std::get<Digraph>(g)));
  }
  const Digraph& h = inst->h();
  std::cout << "threshold=" << inst->threshold()
            << " mindeg=" << mindeg_directed(h) << " |V|=" << h.n()
            << " |A|=" << h.arcs().size() << "\n";
  if (!args.output.empty()) write_file(args.output, serialize_graph(h));
  if (!args.mapping.empty()) write_file(args.mapping, serialize_mapping(*inst));
  return 0;
}

struct SolveArgs {
  GraphSource source;
  int threshold = 0;
  CLI::Option* threshold_opt = nullptr;
  bool longest = false;
  std::uint64_t node_limit = 0;
  CLI::Option* node_opt = nullptr;
  double time_limit = 0.0;
  CLI::Option* time_opt = nullptr;
  std::string witness;

  SearchBudget budget() const {
    SearchBudget b;
    if (node_opt->count()) b.node_limit = node_limit;
    if (time_opt->count()) b.time_limit_seconds = time_limit;
    return b;
  }
};

int run_solve(const SolveArgs& args) {
  AnyGraph g = args.source.load();
  if (args.longest == (args.threshold_opt->count() > 0))
    throw Error(Errc::bad_params, "need exactly one of --threshold / --longest");
  const SearchBudget budget = args.budget();
  SolveOutcome outcome;
  if (auto* u = std::get_if<UGraph>(&g)) {
    outcome = args.longest
                  ? longest_cycle_exact_undirected(*u, budget)
                  : has_cycle_at_least_undirected(*u, args.threshold, budget);
  } else {
    const Digraph& d = std::get<Digraph>(g);
    outcome = args.longest ? longest_cycle_exact(d, budget)
                           : has_cycle_at_least(d, args.threshold, budget);
  }
  return report_outcome(outcome, args.witness);
}

struct CheckArgs {
  GraphSource source;
  bool two_connected = false;
  bool mindeg = false;
  std::string cycle_file;
};

int run_check(const CheckArgs& args) {
  AnyGraph g = args.source.load();
  if (!args.two_connected && !args.mindeg && args.cycle_file.empty())
    throw Error(Errc::bad_params,
                "need at least one of --two-connected / --mindeg / "
                "--validate-cycle");
  bool all_ok = true;
  if (args.two_connected) {
    const ConnectivityWitness w =
        std::holds_alternative<UGraph>(g)
            ? is_2connected_undirected(std::get<UGraph>(g))
            : is_2connected_digraph(std::get<Digraph>(g));
    std::cout << describe_witness(w) << "\n";
    all_ok = all_ok && w.verdict;
  }
  if (args.mindeg) {
    const int d = std::holds_alternative<UGraph>(g)
                      ? mindeg_undirected(std::get<UGraph>(g))
                      : mindeg_directed(std::get<Digraph>(g));
    std::cout << "mindeg=" << d << "\n";
  }
  if (!args.cycle_file.empty()) {
    const auto seq = parse_vertex_sequence(read_file(args.cycle_file));
    try {
      const Cycle c = std::holds_alternative<UGraph>(g)
                          ? validate_cycle(std::get<UGraph>(g), seq)
                          : validate_cycle(std::get<Digraph>(g), seq);
      std::cout << "valid cycle length=" << c.length() << "\n";
    } catch (const Error& e) {
      std::cout << "invalid cycle: " << e.what();
      if (e.position()) std::cout << " (position " << *e.position() << ")";
      std::cout << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

struct MindegCycleArgs {
  GraphSource source;
  std::string witness;
};

int run_mindeg_cycle(const MindegCycleArgs& args) {
  AnyGraph g = args.source.load();
  auto* d = std::get_if<Digraph>(&g);
  if (!d) throw Error(Errc::bad_params, "needs a directed graph");
  const Cycle c = mindeg_plus_one_cycle(*d);
  std::cout << "FOUND " << c.length() << "\n";
  if (!args.witness.empty())
    write_file(args.witness, serialize_vertex_sequence(c.vertices()));
  return 0;
}

struct VerifyArgs {
  std::string corpus = "named";
  int count = 200;
  int n_min = 4, n_max = 8;
  double p_min = 0.1, p_max = 0.9;
  std::uint32_t seed = 1;
  int a = 3;
  int clique_count = 1;
  int clique_size = 3;
  bool canonical = false;
  bool degree_only = false;
  std::uint64_t node_limit = 20000000;
  double time_limit = 0.0;
  CLI::Option* time_opt = nullptr;
  std::string report_tsv, report_json;
  std::string graph_file, mapping_file;
  std::string dump_dir = ".";

  GadgetParams params() const {
    GadgetParams p;
    p.a = a;
    if (!canonical) {
      p.clique_count = clique_count;
      p.clique_size = clique_size;
    }
    return p;
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.node_limit = node_limit;
    if (time_opt->count()) b.time_limit_seconds = time_limit;
    return b;
  }
};

int run_verify_instance(const VerifyArgs& args) {
  const ReductionInstance inst =
      load_instance(read_file(args.graph_file), read_file(args.mapping_file));
  const Digraph& h = inst.h();
  std::cout << "instance: |V|=" << h.n() << " |A|=" << h.arcs().size()
            << " threshold=" << inst.threshold() << "\n";
  bool ok = true;
  if (auto broken = check_reduction_invariants(inst)) {
    std::cout << "invariants: " << *broken << "\n";
    ok = false;
  } else {
    std::cout << "invariants: ok\n";
  }
  const SolveOutcome sol =
      has_cycle_at_least(h, inst.threshold(), args.budget());
  switch (sol.verdict) {
    case Verdict::found: {
      std::cout << "solve: FOUND " << sol.cycle->length() << "\n";
      const Cycle projected = project_long_cycle(inst, *sol.cycle);
      const bool hamiltonian = projected.length() == inst.source_n();
      std::cout << "projection: cycle of length " << projected.length()
                << (hamiltonian ? " (Hamiltonian)" : " (NOT Hamiltonian)")
                << "\n";
      ok = ok && hamiltonian;
      break;
    }
    case Verdict::not_found:
      std::cout << "solve: NOTFOUND\n";
      break;
    case Verdict::unknown:
      std::cout << "solve: UNKNOWN\n";
      return 2;
  }
  return ok ? 0 : 1;
}

int run_verify_degrees(const Corpus& corpus, const VerifyArgs& args) {
  bool all_ok = true;
  for (const auto& entry : corpus.entries) {
    const UGraph& g = std::get<UGraph>(entry.graph);
    const ReductionInstance inst =
        build_edge_clique_reduction(g, args.params());
    const DegreeReport report = degree_report(inst);
    std::cout << entry.id;
    auto print_class = [](const char* label,
                          const std::optional<DegreeRange>& r) {
      std::cout << " " << label << "=";
      if (!r) {
        std::cout << "-";
        return;
      }
      std::cout << "in[" << r->min_in << "," << r->max_in << "]out["
                << r->min_out << "," << r->max_out << "]";
    };
    print_class("original", report.original);
    print_class("chosen", report.chosen);
    print_class("internal", report.internal);
    const auto broken = check_reduction_invariants(inst);
    std::cout << " mindeg=" << mindeg_directed(inst.h())
              << " threshold=" << inst.threshold()
              << (broken ? " FAIL" : " ok") << "\n";
    if (broken) {
      std::cout << "  " << *broken << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

int run_verify(const VerifyArgs& args) {
  if (!args.graph_file.empty() || !args.mapping_file.empty()) {
    if (args.graph_file.empty() || args.mapping_file.empty())
      throw Error(Errc::bad_params,
                  "instance mode needs both --graph and --mapping");
    return run_verify_instance(args);
  }

  Corpus corpus;
  if (args.corpus == "named" || args.corpus == "both")
    corpus = named_small_corpus();
  if (args.corpus == "random" || args.corpus == "both") {
    RandomSpec spec;
    spec.count = args.count;
    spec.n_min = args.n_min;
    spec.n_max = args.n_max;
    spec.p_min = args.p_min;
    spec.p_max = args.p_max;
    spec.seed = args.seed;
    append_random_corpus(corpus, spec);
  }
  if (corpus.entries.empty())
    throw Error(Errc::bad_params, "unknown corpus " + args.corpus);

  if (args.degree_only) return run_verify_degrees(corpus, args);

  const VerificationReport report =
      run_claim_roundtrip(corpus, args.params(), args.budget());
  if (!args.report_tsv.empty()) write_file(args.report_tsv, report.to_tsv());
  if (!args.report_json.empty())
    write_file(args.report_json, report.to_json());

  int failed = 0;
  for (size_t i = 0; i < report.instances.size(); ++i) {
    const InstanceRecord& rec = report.instances[i];
    if (rec.pass) continue;
    ++failed;
    std::cout << "FAIL " << rec.id << ": "
              << (rec.note.empty() ? "verdicts disagree" : rec.note) << "\n";
    const std::string dump = args.dump_dir + "/" + rec.id + ".gr";
    write_file(dump,
               serialize_graph(std::get<UGraph>(corpus.entries[i].graph)));
    std::cout << "  dumped to " << dump << "\n";
  }
  std::cout << "instances=" << report.instances.size()
            << " conclusive=" << report.conclusive()
            << " violations=" << report.violations() << " failed=" << failed
            << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduction toolkit for long directed cycles above mindeg"};
  app.require_subcommand(1);

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand(
      "reduce", "build the clique-gadget digraph H from a source graph");
  reduce_args.source.attach(reduce);
  reduce_args.a_opt =
      reduce->add_option("--a,-a", reduce_args.a, "offset above mindeg (>= 3)");
  reduce_args.count_opt = reduce->add_option(
      "--clique-count", reduce_args.clique_count,
      "cliques per edge (default: the canonical 2n)");
  reduce_args.size_opt = reduce->add_option(
      "--clique-size", reduce_args.clique_size,
      "vertices per clique (default: the canonical 2n-a+1)");
  reduce->add_option("--output,-o", reduce_args.output, "write H here");
  reduce->add_option("--mapping,-m", reduce_args.mapping,
                     "write the role mapping sidecar here");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "exact search for a long cycle (FOUND/NOTFOUND/UNKNOWN)");
  solve_args.source.attach(solve);
  solve_args.threshold_opt = solve->add_option(
      "--threshold,-L", solve_args.threshold, "look for a cycle of length >= L");
  solve->add_flag("--longest", solve_args.longest,
                  "report the longest cycle instead");
  solve_args.node_opt = solve->add_option("--node-limit", solve_args.node_limit,
                                          "search node budget");
  solve_args.time_opt = solve->add_option("--time-limit", solve_args.time_limit,
                                          "wall-clock budget in seconds");
  solve->add_option("--witness,-w", solve_args.witness,
                    "write the found cycle here");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "structural checks on a graph");
  check_args.source.attach(check);
  check->add_flag("--two-connected", check_args.two_connected,
                  "check 2-connectivity (exit 1 with a witness if it fails)");
  check->add_flag("--mindeg", check_args.mindeg, "print the minimum degree");
  check->add_option("--validate-cycle", check_args.cycle_file,
                    "validate a cycle file against the graph");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "round-trip the reduction over a corpus, or audit one instance");
  verify->add_option("--corpus", verify_args.corpus,
                     "named | random | both (default named)");
  verify->add_option("--count", verify_args.count, "random corpus size");
  verify->add_option("--n-min", verify_args.n_min, "smallest random order");
  verify->add_option("--n-max", verify_args.n_max, "largest random order");
  verify->add_option("--p-min", verify_args.p_min, "smallest chord density");
  verify->add_option("--p-max", verify_args.p_max, "largest chord density");
  verify->add_option("--seed", verify_args.seed, "random corpus seed");
  verify->add_option("--a,-a", verify_args.a, "offset above mindeg (>= 3)");
  verify->add_option("--clique-count", verify_args.clique_count,
                     "cliques per edge (default 1 to keep solving exact)");
  verify->add_option("--clique-size", verify_args.clique_size,
                     "vertices per clique (default 3)");
  verify->add_flag("--canonical", verify_args.canonical,
                   "use the canonical parameters instead");
  verify->add_flag("--degree-only", verify_args.degree_only,
                   "only verify the degree table, skip solving");
  verify->add_option("--node-limit", verify_args.node_limit,
                     "per-search node budget");
  verify_args.time_opt = verify->add_option(
      "--time-limit", verify_args.time_limit, "per-search seconds budget");
  verify->add_option("--report-tsv", verify_args.report_tsv,
                     "write the TSV report here");
  verify->add_option("--report-json", verify_args.report_json,
                     "write the JSON report here");
  verify->add_option("--graph", verify_args.graph_file,
                     "instance mode: the digraph file");
  verify->add_option("--mapping", verify_args.mapping_file,
                     "instance mode: its mapping sidecar");
  verify->add_option("--dump-dir", verify_args.dump_dir,
                     "where failing instances are dumped");

  MindegCycleArgs mindeg_args;
  auto* mindeg_cycle = app.add_subcommand(
      "mindeg-cycle", "construct a cycle of length >= mindeg+1 in a digraph");
  mindeg_args.source.attach(mindeg_cycle);
  mindeg_cycle->add_option("--witness,-w", mindeg_args.witness,
                           "write the cycle here");

  int rc = 0;
  reduce->callback([&]() { rc = run_reduce(reduce_args); });
  solve->callback([&]() { rc = run_solve(solve_args); });
  check->callback([&]() { rc = run_check(check_args); });
  verify->callback([&]() { rc = run_verify(verify_args); });
  mindeg_cycle->callback([&]() { rc = run_mindeg_cycle(mindeg_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 18;
  }
  return rc;
}
