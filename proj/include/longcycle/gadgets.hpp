#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Tunables of the edge-clique reduction. Omitted values resolve to the
/// canonical ones at build time: 2n cliques per edge, each on 2n - a + 1
/// vertices.
struct GadgetParams {
  int a = 3;
  std::optional<int> clique_count;
  std::optional<int> clique_size;
};

struct ResolvedParams {
  int a = 0;
  int clique_count = 0;
  int clique_size = 0;
  bool canonical = false;  // both tunables equal their canonical values

  /// The projection's counting argument requires clique_size + 1 < 2n;
  /// only then does "long cycle in H" force the alternating shape.
  bool projection_bound_holds(int source_n) const {
    return clique_size + 1 < 2 * source_n;
  }

  bool operator==(const ResolvedParams&) const = default;
};

struct OriginalRole {
  Vertex g = 0;
  bool operator==(const OriginalRole&) const = default;
};

/// Member of clique `index` attached to edge {u, v}, u < v. Position 1 is
/// the chosen vertex entered from u and exiting to v; position 2 the one
/// entered from v and exiting to u; positions >= 3 are internal.
struct EdgeCliqueRole {
  Vertex u = 0, v = 0;
  int index = 0;
  int position = 0;
  bool operator==(const EdgeCliqueRole&) const = default;
};

/// Non-identified member of the clique attached to vertex `owner`.
struct VertexCliqueRole {
  Vertex owner = 0;
  int position = 0;
  bool operator==(const VertexCliqueRole&) const = default;
};

using VertexRole = std::variant<OriginalRole, EdgeCliqueRole, VertexCliqueRole>;

enum class Construction { edge_clique, vertex_clique };

enum class ArcClass {
  intra_clique,
  enter_forward,   // lower endpoint -> first chosen
  exit_forward,    // first chosen -> higher endpoint
  enter_backward,  // higher endpoint -> second chosen
  exit_backward,   // second chosen -> lower endpoint
  source_arc,      // vertex-clique construction: an arc of the source digraph
};

/// The constructed digraph H plus the vertex-role mapping back to the
/// source graph. Vertex numbering is deterministic: originals keep ids
/// 1..n, clique vertices follow in (edge, index, position) order (edge
/// construction) or (owner, position) order (vertex construction).
class ReductionInstance {
public:
  Construction construction() const { return construction_; }
  const Digraph& h() const { return h_; }
  int source_n() const { return source_n_; }
  const ResolvedParams& params() const { return params_; }
  int threshold() const { return threshold_; }

  const VertexRole& role_of(Vertex h_vertex) const {
    return roles_.at(static_cast<size_t>(h_vertex) - 1);
  }
  const std::vector<VertexRole>& roles() const { return roles_; }

  /// Source accessors; each is only meaningful for its construction.
  const UGraph& source_graph() const;
  const Digraph& source_digraph() const;

  /// Deterministic id arithmetic (edge construction); rank is the 0-based
  /// position of the edge in the sorted edge list.
  Vertex clique_vertex_id(int edge_rank, int index, int position) const;
  int edge_rank(Vertex u, Vertex v) const;  // -1 when absent

  /// Used by deserialization; builders call it with arithmetically
  /// generated role tables.
  static ReductionInstance assemble(Construction construction, Digraph h,
                                    std::variant<UGraph, Digraph> source,
                                    ResolvedParams params, int threshold,
                                    std::vector<VertexRole> roles);

private:
  ReductionInstance() = default;

  Construction construction_ = Construction::edge_clique;
  Digraph h_;
  std::variant<UGraph, Digraph> source_;
  ResolvedParams params_;
  int source_n_ = 0;
  int threshold_ = 0;
  std::vector<VertexRole> roles_;
};

/// Attaches clique_count directed cliques of clique_size vertices to every
/// edge of g, wired through the two chosen positions. Throws
/// Errc::bad_params, Errc::not_two_connected or Errc::too_few_vertices.
ReductionInstance build_edge_clique_reduction(const UGraph& g,
                                              const GadgetParams& params = {});

/// Attaches a bidirected clique on n - 1 vertices to every vertex of d,
/// identifying one clique vertex with it. The interesting threshold is n.
/// Throws Errc::too_small for n < 3.
ReductionInstance build_vertex_clique_construction(const Digraph& d);

struct DegreeRange {
  int min_in = 0, max_in = 0, min_out = 0, max_out = 0;
  bool operator==(const DegreeRange&) const = default;
};

/// Exact degree ranges per vertex class; a missing entry marks the class
/// empty (vacuous).
struct DegreeReport {
  std::optional<DegreeRange> original;
  std::optional<DegreeRange> chosen;
  std::optional<DegreeRange> internal;
};

DegreeReport degree_report(const ReductionInstance& r);

/// 2 * source_n for a canonical edge-clique instance, asserting it equals
/// mindeg(H) + a. Throws Errc::non_canonical_params otherwise.
int decision_threshold(const ReductionInstance& r);

/// Claim-style lift: alternate each vertex of a Hamiltonian cycle of G with
/// the matching chosen vertex of clique index 1, giving a cycle of length
/// exactly 2n in H. Throws Errc::not_hamiltonian.
Cycle lift_hamiltonian_cycle(const ReductionInstance& r, const Cycle& c);

/// Inverse direction: delete clique vertices from a cycle of length >=
/// 2 * source_n in H and join their original-vertex neighbors, yielding a
/// Hamiltonian cycle of G. Throws Errc::too_short when the cycle is below
/// threshold and Errc::not_alternating when the alternating shape is
/// violated (impossible for genuine instances when the projection bound
/// holds; signals corrupted input).
Cycle project_long_cycle(const ReductionInstance& r, const Cycle& c);

/// Classification of an arc of H; nullopt when the arc belongs to no class
/// (never happens for instances produced by the builders).
std::optional<ArcClass> classify_arc(const ReductionInstance& r, Vertex x,
                                     Vertex y);

/// Structural self-check: vertex/arc counts, exhaustive arc classification,
/// per-class degree accounting, mindeg and threshold relations. Returns a
/// failure description, or nullopt when all hold.
std::optional<std::string> check_reduction_invariants(const ReductionInstance& r);

}  // namespace longcycle
