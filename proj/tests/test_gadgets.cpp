#include <algorithm>
#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "doctest.h"
#include "longcycle/gadgets.hpp"
#include "longcycle/harness.hpp"
#include "longcycle/solvers.hpp"
#include "oracles.hpp"

using namespace longcycle;

namespace {

const UGraph& as_ugraph(const AnyGraph& g) { return std::get<UGraph>(g); }

UGraph square() { return as_ugraph(named_graph("cycle_4")); }

GadgetParams tiny_params() {
  return GadgetParams{.a = 3, .clique_count = 1, .clique_size = 3};
}

GadgetParams params_a(int a) {
  GadgetParams p;
  p.a = a;
  return p;
}

Errc code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::parse_error;
}

// min/max per vertex class recomputed from the raw arc list.
std::map<int, DegreeRange> class_ranges(const ReductionInstance& r) {
  auto [in, out] = oracles::recount_degrees(r.h());
  std::map<int, DegreeRange> by_class;
  for (Vertex v = 1; v <= r.h().n(); ++v) {
    int cls;
    const VertexRole& role = r.role_of(v);
    if (std::holds_alternative<OriginalRole>(role)) {
      cls = 0;
    } else if (auto* ec = std::get_if<EdgeCliqueRole>(&role)) {
      cls = ec->position <= 2 ? 1 : 2;
    } else {
      cls = 2;  // vertex-clique members count as internal
    }
    auto it = by_class.find(cls);
    if (it == by_class.end()) {
      by_class[cls] = DegreeRange{in[v], in[v], out[v], out[v]};
    } else {
      it->second.min_in = std::min(it->second.min_in, in[v]);
      it->second.max_in = std::max(it->second.max_in, in[v]);
      it->second.min_out = std::min(it->second.min_out, out[v]);
      it->second.max_out = std::max(it->second.max_out, out[v]);
    }
  }
  return by_class;
}

void check_report_exact(const ReductionInstance& r) {
  const DegreeReport report = degree_report(r);
  const auto expect = class_ranges(r);
  REQUIRE(report.original.has_value());
  CHECK(*report.original == expect.at(0));
  if (expect.count(1)) {
    REQUIRE(report.chosen.has_value());
    CHECK(*report.chosen == expect.at(1));
  } else {
    CHECK(!report.chosen.has_value());
  }
  if (expect.count(2)) {
    REQUIRE(report.internal.has_value());
    CHECK(*report.internal == expect.at(2));
  } else {
    CHECK(!report.internal.has_value());
  }
}

}  // namespace

TEST_CASE("canonical reduction of the 4-cycle") {
  const auto r = build_edge_clique_reduction(square(), GadgetParams{});
  CHECK(r.construction() == Construction::edge_clique);
  CHECK(r.source_n() == 4);
  CHECK(r.params().a == 3);
  CHECK(r.params().clique_count == 8);
  CHECK(r.params().clique_size == 6);
  CHECK(r.params().canonical);
  CHECK(r.h().n() == 196);
  CHECK(r.h().m() == 1088);
  CHECK(mindeg_directed(r.h()) == 5);
  CHECK(r.threshold() == 8);
  CHECK(decision_threshold(r) == 8);
  CHECK(r.threshold() == mindeg_directed(r.h()) + r.params().a);
  CHECK(check_reduction_invariants(r) == std::nullopt);
  CHECK(r.params().projection_bound_holds(r.source_n()));
  CHECK(r.source_graph() == square());
  CHECK_THROWS_AS(r.source_digraph(), Error);
}

TEST_CASE("small-parameter reduction of the 4-cycle") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  CHECK(!r.params().canonical);
  CHECK(r.h().n() == 16);
  CHECK(r.h().m() == 40);
  CHECK(mindeg_directed(r.h()) == 2);
  CHECK(r.threshold() == 8);  // threshold stays 2n regardless of tunables
  CHECK(check_reduction_invariants(r) == std::nullopt);
  CHECK(r.params().projection_bound_holds(4));
  CHECK(code_of([&] { decision_threshold(r); }) == Errc::non_canonical_params);
}

TEST_CASE("clique vertex ids follow the documented arithmetic") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  // Sorted edges of the square: {1,2} {1,4} {2,3} {3,4}.
  CHECK(r.edge_rank(1, 2) == 0);
  CHECK(r.edge_rank(2, 1) == 0);
  CHECK(r.edge_rank(1, 4) == 1);
  CHECK(r.edge_rank(2, 3) == 2);
  CHECK(r.edge_rank(3, 4) == 3);
  CHECK(r.edge_rank(1, 3) == -1);

  CHECK(r.clique_vertex_id(0, 1, 1) == 5);
  CHECK(r.clique_vertex_id(0, 1, 3) == 7);
  CHECK(r.clique_vertex_id(1, 1, 2) == 9);
  CHECK(r.clique_vertex_id(3, 1, 3) == 16);

  CHECK(r.role_of(1) == VertexRole{OriginalRole{1}});
  CHECK(r.role_of(5) == VertexRole{EdgeCliqueRole{1, 2, 1, 1}});
  CHECK(r.role_of(6) == VertexRole{EdgeCliqueRole{1, 2, 1, 2}});
  CHECK(r.role_of(7) == VertexRole{EdgeCliqueRole{1, 2, 1, 3}});
  CHECK(r.role_of(16) == VertexRole{EdgeCliqueRole{3, 4, 1, 3}});

  const auto canon = build_edge_clique_reduction(square(), GadgetParams{});
  CHECK(canon.clique_vertex_id(0, 1, 1) == 5);
  CHECK(canon.clique_vertex_id(2, 1, 1) == 101);
  CHECK(canon.clique_vertex_id(3, 1, 1) == 149);
  CHECK(canon.clique_vertex_id(1, 1, 2) == 54);
  CHECK(canon.role_of(196) == VertexRole{EdgeCliqueRole{3, 4, 8, 6}});
}

TEST_CASE("parameter and structure rejection") {
  CHECK(code_of([] {
          build_edge_clique_reduction(square(), params_a(2));
        }) == Errc::bad_params);
  CHECK(code_of([] {
          build_edge_clique_reduction(
              square(), GadgetParams{.a = 3, .clique_count = 0,
                              .clique_size = 3});
        }) == Errc::bad_params);
  CHECK(code_of([] {
          build_edge_clique_reduction(
              square(), GadgetParams{.a = 3, .clique_count = 1,
                              .clique_size = 1});
        }) == Errc::bad_params);
  CHECK(code_of([] {
          build_edge_clique_reduction(UGraph::from_edges(2, {{1, 2}}), {});
        }) == Errc::not_two_connected);
  CHECK(code_of([] {
          build_edge_clique_reduction(
              UGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}), {});
        }) == Errc::not_two_connected);
  CHECK(code_of([] {
          build_edge_clique_reduction(
              as_ugraph(named_graph("complete_3")), params_a(4));
        }) == Errc::too_few_vertices);

  // The cut vertex appears in the rejection message.
  try {
    build_edge_clique_reduction(
        UGraph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
        {});
    FAIL("expected NotTwoConnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_two_connected);
    CHECK(std::string(e.what()).find("cut vertex 3") != std::string::npos);
  }
}

TEST_CASE("lift alternates originals with chosen clique vertices") {
  const UGraph g = square();
  const Cycle ham = validate_cycle(g, {1, 2, 3, 4});

  const auto tiny = build_edge_clique_reduction(g, tiny_params());
  const Cycle lifted = lift_hamiltonian_cycle(tiny, ham);
  CHECK(lifted.vertices() == std::vector<Vertex>{1, 5, 2, 11, 3, 14, 4, 9});
  CHECK(lifted.length() == 2 * tiny.source_n());

  const auto canon = build_edge_clique_reduction(g, GadgetParams{});
  const Cycle big = lift_hamiltonian_cycle(canon, ham);
  CHECK(big.vertices() == std::vector<Vertex>{1, 5, 2, 101, 3, 149, 4, 54});
  CHECK(big.length() == canon.threshold());

  // Reversed traversal picks the other chosen vertex of every clique.
  const Cycle back = lift_hamiltonian_cycle(tiny, validate_cycle(g, {1, 4, 3, 2}));
  CHECK(back.vertices() == std::vector<Vertex>{1, 8, 4, 15, 3, 12, 2, 6});
}

TEST_CASE("lift rejects non-hamiltonian input") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  const UGraph k4 = as_ugraph(named_graph("complete_4"));
  CHECK(code_of([&] {
          lift_hamiltonian_cycle(r, validate_cycle(k4, {1, 2, 3}));
        }) == Errc::not_hamiltonian);
  CHECK(code_of([&] {
          lift_hamiltonian_cycle(r, validate_cycle(k4, {1, 3, 2, 4}));
        }) == Errc::not_hamiltonian);
}

TEST_CASE("projection inverts the lift") {
  for (const char* name : {"cycle_4", "cycle_6", "complete_4", "complete_5",
                           "prism"}) {
    const UGraph g = as_ugraph(named_graph(name));
    const auto r = build_edge_clique_reduction(g, tiny_params());
    const auto found = hamiltonian_cycle_exact(g);
    REQUIRE(found.found());
    const Cycle lifted = lift_hamiltonian_cycle(r, *found.cycle);
    const Cycle back = project_long_cycle(r, lifted);
    CHECK(back.length() == g.n());
    CHECK(same_cycle(back, *found.cycle));
  }
}

TEST_CASE("projection of solver-found long cycles is hamiltonian") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  const auto out = has_cycle_at_least(r.h(), r.threshold());
  REQUIRE(out.found());
  const Cycle back = project_long_cycle(r, *out.cycle);
  CHECK(back.length() == 4);
  CHECK(oracles::hamiltonian_by_permutations(square()));
}

TEST_CASE("projection rejects short cycles") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  // Valid 4-cycle through both chosen vertices of one clique: u p1 v p2.
  const Cycle petal = validate_cycle(r.h(), {1, 5, 2, 6});
  CHECK(code_of([&] { project_long_cycle(r, petal); }) == Errc::too_short);
}

TEST_CASE("projection flags corrupted role tables") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  const Cycle lifted =
      lift_hamiltonian_cycle(r, validate_cycle(square(), {1, 2, 3, 4}));

  // Relabel original vertex 3 as a clique member: the clique vertex next to
  // it is no longer flanked by originals.
  auto roles = r.roles();
  roles[2] = EdgeCliqueRole{1, 2, 1, 3};
  const auto corrupt = ReductionInstance::assemble(
      Construction::edge_clique, r.h(), r.source_graph(), r.params(),
      r.threshold(), roles);
  try {
    project_long_cycle(corrupt, lifted);
    FAIL("expected NotAlternating");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_alternating);
    CHECK(std::string(e.what()).find("not flanked") != std::string::npos);
  }

  // A vertex-clique role is foreign to this construction.
  roles = r.roles();
  roles[2] = VertexCliqueRole{1, 1};
  const auto foreign = ReductionInstance::assemble(
      Construction::edge_clique, r.h(), r.source_graph(), r.params(),
      r.threshold(), roles);
  CHECK(code_of([&] { project_long_cycle(foreign, lifted); }) ==
        Errc::not_alternating);
}

TEST_CASE("projection counts clique contributions") {
  // Synthetic instance: H is a directed 6-cycle whose role table sends two
  // of its vertices to the same clique, each flanked by originals.
  const Digraph h = Digraph::from_arcs(
      6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
  const UGraph triangle = UGraph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
  const ResolvedParams rp{.a = 3, .clique_count = 1, .clique_size = 2,
                          .canonical = false};
  std::vector<VertexRole> roles{OriginalRole{1}, EdgeCliqueRole{1, 2, 1, 1},
                                OriginalRole{2}, EdgeCliqueRole{1, 2, 1, 2},
                                OriginalRole{3}, EdgeCliqueRole{2, 3, 1, 1}};
  const auto doubled = ReductionInstance::assemble(
      Construction::edge_clique, h, triangle, rp, 6, roles);
  try {
    project_long_cycle(doubled, validate_cycle(h, {1, 2, 3, 4, 5, 6}));
    FAIL("expected NotAlternating");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_alternating);
    CHECK(std::string(e.what()).find("two or more") != std::string::npos);
    CHECK(e.position() == 4);
  }

  // Same skeleton, but the collapsed originals 3 and 1 are not adjacent in
  // the source.
  const UGraph path = UGraph::from_edges(3, {{1, 2}, {2, 3}});
  roles[3] = EdgeCliqueRole{2, 3, 1, 2};
  roles[5] = EdgeCliqueRole{1, 3, 1, 1};
  const auto nonedge = ReductionInstance::assemble(
      Construction::edge_clique, h, path, rp, 6, roles);
  try {
    project_long_cycle(nonedge, validate_cycle(h, {1, 2, 3, 4, 5, 6}));
    FAIL("expected NotAlternating");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_alternating);
    CHECK(std::string(e.what()).find("not adjacent") != std::string::npos);
  }
}

TEST_CASE("arc classification") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  CHECK(classify_arc(r, 1, 5) == ArcClass::enter_forward);
  CHECK(classify_arc(r, 5, 2) == ArcClass::exit_forward);
  CHECK(classify_arc(r, 2, 6) == ArcClass::enter_backward);
  CHECK(classify_arc(r, 6, 1) == ArcClass::exit_backward);
  CHECK(classify_arc(r, 5, 6) == ArcClass::intra_clique);
  CHECK(classify_arc(r, 7, 5) == ArcClass::intra_clique);
  CHECK(classify_arc(r, 1, 2) == std::nullopt);   // no original-original arcs
  CHECK(classify_arc(r, 5, 8) == std::nullopt);   // cross-clique
  CHECK(classify_arc(r, 1, 6) == std::nullopt);   // wrong chosen direction
  CHECK(classify_arc(r, 3, 5) == std::nullopt);   // non-endpoint original

  // Every arc of H classifies, with the expected class sizes.
  std::map<ArcClass, int> count;
  for (auto [x, y] : r.h().arcs()) {
    auto cls = classify_arc(r, x, y);
    REQUIRE(cls.has_value());
    ++count[*cls];
  }
  const int m = square().m();
  CHECK(count[ArcClass::intra_clique] == m * 1 * 3 * 2);
  CHECK(count[ArcClass::enter_forward] == m);
  CHECK(count[ArcClass::exit_forward] == m);
  CHECK(count[ArcClass::enter_backward] == m);
  CHECK(count[ArcClass::exit_backward] == m);
}

TEST_CASE("degree report matches a raw recount") {
  check_report_exact(build_edge_clique_reduction(square(), tiny_params()));
  check_report_exact(build_edge_clique_reduction(square(), GadgetParams{}));
  check_report_exact(build_edge_clique_reduction(
      as_ugraph(named_graph("petersen")), params_a(4)));
  check_report_exact(build_edge_clique_reduction(
      as_ugraph(named_graph("complete_5")),
      GadgetParams{.a = 3, .clique_count = 2, .clique_size = 4}));

  const auto canon = build_edge_clique_reduction(square(), GadgetParams{});
  const auto report = degree_report(canon);
  CHECK(*report.original == DegreeRange{16, 16, 16, 16});  // deg * count
  CHECK(*report.chosen == DegreeRange{6, 6, 6, 6});        // clique_size
  CHECK(*report.internal == DegreeRange{5, 5, 5, 5});      // clique_size - 1
}

TEST_CASE("internal class is vacuous at clique size 2") {
  const auto r = build_edge_clique_reduction(
      square(), GadgetParams{.a = 3, .clique_count = 1, .clique_size = 2});
  const auto report = degree_report(r);
  CHECK(report.original.has_value());
  CHECK(report.chosen.has_value());
  CHECK(!report.internal.has_value());
  CHECK(check_reduction_invariants(r) == std::nullopt);
  check_report_exact(r);
}

TEST_CASE("invariants hold across a parameter grid") {
  for (const char* name : {"cycle_5", "complete_4", "theta"}) {
    const UGraph g = as_ugraph(named_graph(name));
    for (int a : {3, 4}) {
      if (g.n() < a) continue;
      for (int count : {1, 2}) {
        for (int size : {2, 3, 5}) {
          const auto r = build_edge_clique_reduction(
              g, GadgetParams{.a = a, .clique_count = count,
                              .clique_size = size});
          CHECK(check_reduction_invariants(r) == std::nullopt);
        }
      }
    }
  }
  CHECK(check_reduction_invariants(build_edge_clique_reduction(
            as_ugraph(named_graph("petersen")), GadgetParams{})) ==
        std::nullopt);
}

TEST_CASE("invariant checker reports corrupted instances") {
  const auto r = build_edge_clique_reduction(square(), tiny_params());
  auto roles = r.roles();
  roles[2] = EdgeCliqueRole{1, 2, 1, 3};
  const auto corrupt = ReductionInstance::assemble(
      Construction::edge_clique, r.h(), r.source_graph(), r.params(),
      r.threshold(), roles);
  const auto failure = check_reduction_invariants(corrupt);
  REQUIRE(failure.has_value());
  CHECK(!failure->empty());
}

TEST_CASE("vertex-clique construction") {
  const Digraph d = std::get<Digraph>(named_graph("directed_cycle_4"));
  const auto r = build_vertex_clique_construction(d);
  CHECK(r.construction() == Construction::vertex_clique);
  CHECK(r.source_n() == 4);
  CHECK(r.h().n() == 12);
  CHECK(r.h().m() == 28);
  CHECK(r.threshold() == 4);
  CHECK(mindeg_directed(r.h()) == 2);  // n - 2
  CHECK(check_reduction_invariants(r) == std::nullopt);
  CHECK(r.source_digraph() == d);
  CHECK_THROWS_AS(r.source_graph(), Error);
  CHECK(code_of([&] { decision_threshold(r); }) == Errc::non_canonical_params);
  CHECK(code_of([&] { lift_hamiltonian_cycle(
                          r, validate_cycle(d, {1, 2, 3, 4})); }) ==
        Errc::bad_params);

  CHECK(r.role_of(4) == VertexRole{OriginalRole{4}});
  CHECK(r.role_of(5) == VertexRole{VertexCliqueRole{1, 1}});
  CHECK(r.role_of(12) == VertexRole{VertexCliqueRole{4, 2}});

  // Source arcs survive; clique arcs stay within their owner's clique.
  CHECK(classify_arc(r, 1, 2) == ArcClass::source_arc);
  CHECK(classify_arc(r, 2, 1) == std::nullopt);
  CHECK(classify_arc(r, 1, 5) == ArcClass::intra_clique);
  CHECK(classify_arc(r, 5, 6) == ArcClass::intra_clique);
  CHECK(classify_arc(r, 5, 7) == std::nullopt);  // different owners

  std::map<ArcClass, int> count;
  for (auto [x, y] : r.h().arcs()) {
    auto cls = classify_arc(r, x, y);
    REQUIRE(cls.has_value());
    ++count[*cls];
  }
  CHECK(count[ArcClass::source_arc] == 4);
  CHECK(count[ArcClass::intra_clique] == 24);  // n cliques on n-1 vertices

  check_report_exact(r);
  CHECK_THROWS_AS(
      build_vertex_clique_construction(Digraph::from_arcs(2, {{1, 2}})),
      Error);
}

TEST_CASE("vertex-clique equivalence on tiny digraphs") {
  // A cycle of length >= n in the construction exists exactly when the
  // source digraph has a Hamiltonian cycle.
  for (int t = 0; t < 10; ++t) {
    const Digraph d = random_digraph(4, 0.3 + 0.06 * t, 600u + t);
    if (d.n() < 3) continue;
    const auto r = build_vertex_clique_construction(d);
    const bool source_ham =
        oracles::longest_cycle_directed(d) == d.n();
    const auto out = has_cycle_at_least(r.h(), r.threshold());
    REQUIRE(out.conclusive());
    CHECK(out.found() == source_ham);
  }
}

TEST_CASE("projection bound") {
  const ResolvedParams small{.a = 3, .clique_count = 1, .clique_size = 3,
                             .canonical = false};
  CHECK(small.projection_bound_holds(4));
  CHECK(small.projection_bound_holds(3));
  CHECK(!small.projection_bound_holds(2));

  const ResolvedParams canon{.a = 3, .clique_count = 8, .clique_size = 6,
                             .canonical = true};
  CHECK(canon.projection_bound_holds(4));
}
