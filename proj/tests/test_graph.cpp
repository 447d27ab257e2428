#include <functional>
#include <vector>

#include "doctest.h"
#include "longcycle/graph.hpp"

using namespace longcycle;

namespace {

Errc code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::parse_error;
}

int position_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& e) {
    REQUIRE(e.position().has_value());
    return *e.position();
  }
  FAIL("expected an Error");
  return -1;
}

}  // namespace

TEST_CASE("undirected construction canonicalizes edges") {
  const UGraph g = UGraph::from_edges(4, {{3, 4}, {2, 1}, {4, 1}, {2, 3}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 4);
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{
                         {1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(g.neighbors(1) == std::vector<Vertex>{2, 4});
  CHECK(g.degree(3) == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(1, 3));
  CHECK(!g.has_edge(1, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 99));
  CHECK(g.has_vertex(4));
  CHECK(!g.has_vertex(5));
  CHECK(g == UGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(!(g == UGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("undirected construction rejects malformed input") {
  CHECK(code_of([] { UGraph::from_edges(3, {{1, 4}}); }) ==
        Errc::invalid_vertex);
  CHECK(code_of([] { UGraph::from_edges(3, {{0, 2}}); }) ==
        Errc::invalid_vertex);
  CHECK(code_of([] { UGraph::from_edges(3, {{2, 2}}); }) == Errc::self_loop);
  CHECK(code_of([] { UGraph::from_edges(3, {{1, 2}, {2, 1}}); }) ==
        Errc::duplicate_edge);
  CHECK(code_of([] { UGraph::from_edges(-1, {}); }) == Errc::invalid_vertex);
  CHECK_NOTHROW(UGraph::from_edges(0, {}));
  CHECK_NOTHROW(UGraph::from_edges(5, {}));
}

TEST_CASE("builders accumulate and delegate validation") {
  UGraphBuilder ub(3);
  ub.add_edge(1, 2).add_edge(2, 3);
  const UGraph g = ub.build();
  CHECK(g.m() == 2);

  DigraphBuilder db(3);
  db.add_arc(1, 2).add_arc(2, 1).add_arc(2, 3);
  const Digraph d = db.build();
  CHECK(d.m() == 3);
  CHECK(d.has_arc(2, 1));
  CHECK(!d.has_arc(3, 2));
}

TEST_CASE("directed construction keeps antiparallel arcs apart") {
  const Digraph d = Digraph::from_arcs(3, {{2, 1}, {1, 2}, {3, 1}});
  CHECK(d.n() == 3);
  CHECK(d.m() == 3);
  CHECK(d.arcs() == std::vector<std::pair<Vertex, Vertex>>{
                        {1, 2}, {2, 1}, {3, 1}});
  CHECK(d.has_arc(1, 2));
  CHECK(d.has_arc(2, 1));
  CHECK(!d.has_arc(1, 3));
  CHECK(d.outdeg(1) == 1);
  CHECK(d.indeg(1) == 2);
  CHECK(d.out(1) == std::vector<Vertex>{2});
  CHECK(d.in(1) == std::vector<Vertex>{2, 3});
  CHECK(code_of([] { Digraph::from_arcs(3, {{1, 2}, {1, 2}}); }) ==
        Errc::duplicate_edge);
  CHECK(code_of([] { Digraph::from_arcs(3, {{3, 3}}); }) == Errc::self_loop);
  CHECK(code_of([] { Digraph::from_arcs(2, {{1, 3}}); }) ==
        Errc::invalid_vertex);
}

TEST_CASE("bidirected view doubles every edge") {
  const UGraph g = UGraph::from_edges(3, {{1, 2}, {2, 3}});
  const Digraph d = Digraph::bidirected(g);
  CHECK(d.n() == 3);
  CHECK(d.m() == 4);
  for (auto [u, v] : g.edges()) {
    CHECK(d.has_arc(u, v));
    CHECK(d.has_arc(v, u));
  }
}

TEST_CASE("mindeg") {
  CHECK(mindeg_undirected(UGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4},
                                                 {1, 4}, {1, 3}})) == 2);
  CHECK(mindeg_undirected(UGraph::from_edges(3, {{1, 2}})) == 0);
  CHECK(code_of([] { mindeg_undirected(UGraph::from_edges(0, {})); }) ==
        Errc::empty_graph);

  const Digraph d = Digraph::from_arcs(3, {{1, 2}, {2, 3}, {3, 1}, {2, 1}});
  CHECK(mindeg_directed(d) == 1);
  CHECK(code_of([] { mindeg_directed(Digraph::from_arcs(0, {})); }) ==
        Errc::empty_graph);
}

TEST_CASE("cycle validation accepts simple cycles") {
  const UGraph g = UGraph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                                          {1, 5}, {1, 3}});
  const Cycle c = validate_cycle(g, {1, 2, 3});
  CHECK(c.length() == 3);
  CHECK(c.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK_NOTHROW(validate_cycle(g, {1, 2, 3, 4, 5}));
  CHECK_NOTHROW(validate_cycle(g, {3, 2, 1}));  // reversal is also a cycle

  const Digraph d = Digraph::from_arcs(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}});
  CHECK(validate_cycle(d, {1, 2}).length() == 2);  // directed 2-cycles count
  CHECK_NOTHROW(validate_cycle(d, {1, 2, 3}));
}

TEST_CASE("cycle validation rejects, with positions") {
  const UGraph g = UGraph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                                          {1, 5}, {1, 3}});
  CHECK(code_of([&] { validate_cycle(g, {1, 2}); }) == Errc::too_short);
  CHECK(position_of([&] { validate_cycle(g, {1, 2}); }) == 2);
  CHECK(code_of([&] { validate_cycle(g, {}); }) == Errc::too_short);

  CHECK(code_of([&] { validate_cycle(g, {1, 2, 9}); }) == Errc::invalid_vertex);
  CHECK(position_of([&] { validate_cycle(g, {1, 2, 9}); }) == 3);

  CHECK(code_of([&] { validate_cycle(g, {1, 2, 3, 2}); }) ==
        Errc::repeated_vertex);
  CHECK(position_of([&] { validate_cycle(g, {1, 2, 3, 2}); }) == 4);

  CHECK(code_of([&] { validate_cycle(g, {1, 2, 4}); }) == Errc::missing_edge);
  CHECK(position_of([&] { validate_cycle(g, {1, 2, 4}); }) == 2);
  // the wrap-around pair reports the last position
  CHECK(position_of([&] { validate_cycle(g, {2, 3, 4}); }) == 3);

  const Digraph d = Digraph::from_arcs(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(code_of([&] { validate_cycle(d, {1}); }) == Errc::too_short);
  CHECK(code_of([&] { validate_cycle(d, {1, 2}); }) == Errc::missing_edge);
  CHECK(code_of([&] { validate_cycle(d, {1, 3, 2}); }) == Errc::missing_edge);
  CHECK_NOTHROW(validate_cycle(d, {2, 3, 1}));
}

TEST_CASE("same_cycle compares cyclic sequences") {
  const UGraph g = UGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const Cycle a = validate_cycle(g, {1, 2, 3, 4});
  const Cycle b = validate_cycle(g, {3, 4, 1, 2});
  const Cycle r = validate_cycle(g, {1, 4, 3, 2});
  CHECK(same_cycle(a, b));
  CHECK(a == validate_cycle(g, {1, 2, 3, 4}));
  CHECK(!(a == b));
  CHECK(!same_cycle(a, r));
  CHECK(same_cycle(a, r, true));

  const UGraph h = UGraph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                                          {1, 5}, {1, 3}});
  CHECK(!same_cycle(validate_cycle(h, {1, 2, 3}),
                    validate_cycle(h, {1, 2, 3, 4, 5})));
  CHECK(!same_cycle(validate_cycle(h, {1, 2, 3}),
                    validate_cycle(h, {3, 4, 5, 1})));
}
