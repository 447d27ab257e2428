#include "longcycle/gadgets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "longcycle/connectivity.hpp"
#include "longcycle/error.hpp"

namespace longcycle {

const UGraph& ReductionInstance::source_graph() const {
  if (construction_ != Construction::edge_clique)
    throw Error(Errc::bad_params, "instance has no undirected source");
  return std::get<UGraph>(source_);
}

const Digraph& ReductionInstance::source_digraph() const {
  if (construction_ != Construction::vertex_clique)
    throw Error(Errc::bad_params, "instance has no directed source");
  return std::get<Digraph>(source_);
}

Vertex ReductionInstance::clique_vertex_id(int edge_rank, int index,
                                           int position) const {
  return source_n_ +
         (edge_rank * params_.clique_count + (index - 1)) * params_.clique_size +
         position;
}

int ReductionInstance::edge_rank(Vertex u, Vertex v) const {
  const auto& es = source_graph().edges();
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
  if (it == es.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - es.begin());
}

ReductionInstance ReductionInstance::assemble(Construction construction,
                                              Digraph h,
                                              std::variant<UGraph, Digraph> source,
                                              ResolvedParams params,
                                              int threshold,
                                              std::vector<VertexRole> roles) {
  if (roles.size() != static_cast<size_t>(h.n()))
    throw Error(Errc::bad_params, "role table size does not match |V(H)|");
  ReductionInstance r;
  r.construction_ = construction;
  r.h_ = std::move(h);
  r.source_ = std::move(source);
  r.params_ = params;
  r.source_n_ = std::holds_alternative<UGraph>(r.source_)
                    ? std::get<UGraph>(r.source_).n()
                    : std::get<Digraph>(r.source_).n();
  r.threshold_ = threshold;
  r.roles_ = std::move(roles);
  return r;
}

ReductionInstance build_edge_clique_reduction(const UGraph& g,
                                              const GadgetParams& params) {
  const int n = g.n();
  if (params.a < 3)
    throw Error(Errc::bad_params, "a must be at least 3");
  ResolvedParams rp;
  rp.a = params.a;
  rp.clique_count = params.clique_count.value_or(2 * n);
  rp.clique_size = params.clique_size.value_or(2 * n - params.a + 1);
  if (rp.clique_count < 1)
    throw Error(Errc::bad_params, "clique_count must be positive");
  if (rp.clique_size < 2)
    throw Error(Errc::bad_params, "clique_size must be at least 2");
  rp.canonical =
      rp.clique_count == 2 * n && rp.clique_size == 2 * n - params.a + 1;

  if (n < 3)
    throw Error(Errc::not_two_connected,
                "source graph has fewer than 3 vertices");
  auto witness = is_2connected_undirected(g);
  if (!witness.verdict) {
    std::ostringstream msg;
    msg << "source graph is not 2-connected";
    if (witness.cut_vertex) msg << " (cut vertex " << *witness.cut_vertex << ")";
    throw Error(Errc::not_two_connected, msg.str());
  }
  if (n < params.a)
    throw Error(Errc::too_few_vertices, "need at least a vertices");

  const auto& edges = g.edges();
  const int m = g.m();
  const int c = rp.clique_count;
  const int s = rp.clique_size;
  const int total = n + m * c * s;

  std::vector<VertexRole> roles;
  roles.reserve(total);
  for (Vertex v = 1; v <= n; ++v) roles.push_back(OriginalRole{v});

  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(static_cast<size_t>(m) * c * (static_cast<size_t>(s) * (s - 1) + 4));
  Vertex next_id = n + 1;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[static_cast<size_t>(e)];
    for (int i = 1; i <= c; ++i) {
      const Vertex base = next_id;
      next_id += s;
      for (int p = 1; p <= s; ++p)
        roles.push_back(EdgeCliqueRole{u, v, i, p});
      for (Vertex x = base; x < base + s; ++x)
        for (Vertex y = base; y < base + s; ++y)
          if (x != y) arcs.emplace_back(x, y);
      arcs.emplace_back(u, base);      // enter forward
      arcs.emplace_back(base, v);      // exit forward
      arcs.emplace_back(v, base + 1);  // enter backward
      arcs.emplace_back(base + 1, u);  // exit backward
    }
  }

  return ReductionInstance::assemble(Construction::edge_clique,
                                     Digraph::from_arcs(total, arcs), g, rp,
                                     2 * n, std::move(roles));
}

ReductionInstance build_vertex_clique_construction(const Digraph& d) {
  const int n = d.n();
  if (n < 3)
    throw Error(Errc::too_small, "source digraph needs at least 3 vertices");

  const int total = n * (n - 1);
  std::vector<VertexRole> roles;
  roles.reserve(total);
  for (Vertex v = 1; v <= n; ++v) roles.push_back(OriginalRole{v});
  for (Vertex v = 1; v <= n; ++v)
    for (int p = 1; p <= n - 2; ++p) roles.push_back(VertexCliqueRole{v, p});

  std::vector<std::pair<Vertex, Vertex>> arcs = d.arcs();
  for (Vertex v = 1; v <= n; ++v) {
    std::vector<Vertex> members{v};
    for (int p = 1; p <= n - 2; ++p)
      members.push_back(n + (v - 1) * (n - 2) + p);
    for (Vertex x : members)
      for (Vertex y : members)
        if (x != y) arcs.emplace_back(x, y);
  }

  ResolvedParams rp;
  rp.a = 0;
  rp.clique_count = 1;
  rp.clique_size = n - 1;
  rp.canonical = false;
  return ReductionInstance::assemble(Construction::vertex_clique,
                                     Digraph::from_arcs(total, arcs), d, rp, n,
                                     std::move(roles));
}

namespace {

void fold_degree(std::optional<DegreeRange>& slot, int in, int out) {
  if (!slot) {
    slot = DegreeRange{in, in, out, out};
    return;
  }
  slot->min_in = std::min(slot->min_in, in);
  slot->max_in = std::max(slot->max_in, in);
  slot->min_out = std::min(slot->min_out, out);
  slot->max_out = std::max(slot->max_out, out);
}

}  // namespace

DegreeReport degree_report(const ReductionInstance& r) {
  DegreeReport report;
  const Digraph& h = r.h();
  for (Vertex v = 1; v <= h.n(); ++v) {
    const VertexRole& role = r.role_of(v);
    const int in = h.indeg(v);
    const int out = h.outdeg(v);
    if (std::holds_alternative<OriginalRole>(role)) {
      fold_degree(report.original, in, out);
    } else if (auto* ec = std::get_if<EdgeCliqueRole>(&role)) {
      fold_degree(ec->position <= 2 ? report.chosen : report.internal, in, out);
    } else {
      fold_degree(report.internal, in, out);
    }
  }
  return report;
}

int decision_threshold(const ReductionInstance& r) {
  if (r.construction() != Construction::edge_clique || !r.params().canonical)
    throw Error(Errc::non_canonical_params,
                "decision threshold is defined for canonical edge-clique "
                "instances only");
  const int threshold = 2 * r.source_n();
  if (threshold != mindeg_directed(r.h()) + r.params().a)
    throw Error(Errc::non_canonical_params,
                "threshold does not equal mindeg + a");
  return threshold;
}

Cycle lift_hamiltonian_cycle(const ReductionInstance& r, const Cycle& c) {
  if (r.construction() != Construction::edge_clique)
    throw Error(Errc::bad_params, "lift needs an edge-clique instance");
  const UGraph& g = r.source_graph();
  const int n = r.source_n();
  if (c.length() != n)
    throw Error(Errc::not_hamiltonian, "cycle does not span the source graph");
  try {
    validate_cycle(g, c.vertices());
  } catch (const Error&) {
    throw Error(Errc::not_hamiltonian, "cycle is not a cycle of the source graph");
  }

  const auto& vs = c.vertices();
  std::vector<Vertex> lifted;
  lifted.reserve(2 * static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Vertex x = vs[static_cast<size_t>(k)];
    const Vertex y = vs[static_cast<size_t>((k + 1) % n)];
    const int rank = r.edge_rank(x, y);
    const int position = x < y ? 1 : 2;
    lifted.push_back(x);
    lifted.push_back(r.clique_vertex_id(rank, 1, position));
  }
  return validate_cycle(r.h(), lifted);
}

Cycle project_long_cycle(const ReductionInstance& r, const Cycle& c) {
  if (r.construction() != Construction::edge_clique)
    throw Error(Errc::bad_params, "projection needs an edge-clique instance");
  validate_cycle(r.h(), c.vertices());
  const int n = r.source_n();
  if (c.length() < 2 * n)
    throw Error(Errc::too_short, "cycle is below the projection threshold");

  const auto& vs = c.vertices();
  const int len = c.length();
  std::map<std::tuple<Vertex, Vertex, int>, int> clique_hits;
  std::vector<Vertex> projected;
  projected.reserve(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) {
    const VertexRole& role = r.role_of(vs[static_cast<size_t>(k)]);
    if (auto* orig = std::get_if<OriginalRole>(&role)) {
      projected.push_back(orig->g);
      continue;
    }
    auto* ec = std::get_if<EdgeCliqueRole>(&role);
    if (!ec)
      throw Error(Errc::not_alternating, "unexpected vertex-clique role",
                  k + 1);
    if (++clique_hits[{ec->u, ec->v, ec->index}] > 1)
      throw Error(Errc::not_alternating,
                  "one clique contributes two or more vertices", k + 1);
    const Vertex prev = vs[static_cast<size_t>((k + len - 1) % len)];
    const Vertex next = vs[static_cast<size_t>((k + 1) % len)];
    if (!std::holds_alternative<OriginalRole>(r.role_of(prev)) ||
        !std::holds_alternative<OriginalRole>(r.role_of(next)))
      throw Error(Errc::not_alternating,
                  "clique vertex is not flanked by original vertices", k + 1);
  }

  const int pn = static_cast<int>(projected.size());
  for (int k = 0; k < pn; ++k) {
    const Vertex x = projected[static_cast<size_t>(k)];
    const Vertex y = projected[static_cast<size_t>((k + 1) % pn)];
    if (!r.source_graph().has_edge(x, y))
      throw Error(Errc::not_alternating,
                  "consecutive originals are not adjacent in the source",
                  k + 1);
  }
  return validate_cycle(r.source_graph(), projected);
}

std::optional<ArcClass> classify_arc(const ReductionInstance& r, Vertex x,
                                     Vertex y) {
  const VertexRole& rx = r.role_of(x);
  const VertexRole& ry = r.role_of(y);
  auto* ox = std::get_if<OriginalRole>(&rx);
  auto* oy = std::get_if<OriginalRole>(&ry);
  if (r.construction() == Construction::vertex_clique) {
    auto* cx = std::get_if<VertexCliqueRole>(&rx);
    auto* cy = std::get_if<VertexCliqueRole>(&ry);
    if (cx && cy)
      return cx->owner == cy->owner ? std::optional(ArcClass::intra_clique)
                                    : std::nullopt;
    if (cx && oy)
      return cx->owner == oy->g ? std::optional(ArcClass::intra_clique)
                                : std::nullopt;
    if (ox && cy)
      return cy->owner == ox->g ? std::optional(ArcClass::intra_clique)
                                : std::nullopt;
    if (ox && oy && r.source_digraph().has_arc(x, y))
      return ArcClass::source_arc;
    return std::nullopt;
  }

  auto* ex = std::get_if<EdgeCliqueRole>(&rx);
  auto* ey = std::get_if<EdgeCliqueRole>(&ry);
  if (ex && ey) {
    if (ex->u == ey->u && ex->v == ey->v && ex->index == ey->index)
      return ArcClass::intra_clique;
    return std::nullopt;
  }
  if (ox && ey) {
    if (ey->position == 1 && ox->g == ey->u) return ArcClass::enter_forward;
    if (ey->position == 2 && ox->g == ey->v) return ArcClass::enter_backward;
    return std::nullopt;
  }
  if (ex && oy) {
    if (ex->position == 1 && oy->g == ex->v) return ArcClass::exit_forward;
    if (ex->position == 2 && oy->g == ex->u) return ArcClass::exit_backward;
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> fail(const std::string& what) { return what; }

std::optional<std::string> check_edge_clique(const ReductionInstance& r) {
  const Digraph& h = r.h();
  const UGraph& g = r.source_graph();
  const int n = g.n(), m = g.m();
  const int c = r.params().clique_count, s = r.params().clique_size;

  if (h.n() != n + m * c * s) return fail("vertex count formula violated");
  const long long want_arcs =
      static_cast<long long>(m) * c * (static_cast<long long>(s) * (s - 1) + 4);
  if (static_cast<long long>(h.arcs().size()) != want_arcs)
    return fail("arc count formula violated");

  for (Vertex v = 1; v <= h.n(); ++v) {
    VertexRole want;
    if (v <= n) {
      want = OriginalRole{v};
    } else {
      const int off = v - n - 1;
      const int rank = off / (c * s);
      const int index = off % (c * s) / s + 1;
      const int position = off % s + 1;
      auto [eu, ev] = g.edges()[static_cast<size_t>(rank)];
      want = EdgeCliqueRole{eu, ev, index, position};
    }
    if (!(r.role_of(v) == want)) return fail("role table is not arithmetic");
  }

  long long intra = 0, attach[4] = {0, 0, 0, 0};
  for (auto [x, y] : h.arcs()) {
    auto cls = classify_arc(r, x, y);
    if (!cls) return fail("unclassifiable arc");
    switch (*cls) {
      case ArcClass::intra_clique: ++intra; break;
      case ArcClass::enter_forward: ++attach[0]; break;
      case ArcClass::exit_forward: ++attach[1]; break;
      case ArcClass::enter_backward: ++attach[2]; break;
      case ArcClass::exit_backward: ++attach[3]; break;
      case ArcClass::source_arc: return fail("source arc in edge construction");
    }
  }
  const long long cliques = static_cast<long long>(m) * c;
  if (intra != cliques * s * (s - 1)) return fail("intra-clique arc count");
  for (long long k : attach)
    if (k != cliques) return fail("attachment arc count");

  for (Vertex v = 1; v <= h.n(); ++v) {
    const VertexRole& role = r.role_of(v);
    int want_in, want_out;
    if (auto* orig = std::get_if<OriginalRole>(&role)) {
      want_in = want_out = g.degree(orig->g) * c;
    } else {
      const auto& ec = std::get<EdgeCliqueRole>(role);
      want_in = want_out = ec.position <= 2 ? s : s - 1;
    }
    if (h.indeg(v) != want_in || h.outdeg(v) != want_out)
      return fail("per-class degree accounting");
  }

  int want_mindeg = mindeg_undirected(g) * c;
  want_mindeg = std::min(want_mindeg, s);
  if (s >= 3) want_mindeg = std::min(want_mindeg, s - 1);
  if (mindeg_directed(h) != want_mindeg) return fail("mindeg relation");

  if (r.threshold() != 2 * n) return fail("threshold is not 2n");
  if (r.params().canonical && r.threshold() != mindeg_directed(h) + r.params().a)
    return fail("canonical threshold is not mindeg + a");
  return std::nullopt;
}

std::optional<std::string> check_vertex_clique(const ReductionInstance& r) {
  const Digraph& h = r.h();
  const Digraph& d = r.source_digraph();
  const int n = d.n();
  const long long md = static_cast<long long>(d.arcs().size());

  if (h.n() != n * (n - 1)) return fail("vertex count formula violated");
  if (static_cast<long long>(h.arcs().size()) !=
      md + static_cast<long long>(n) * (n - 1) * (n - 2))
    return fail("arc count formula violated");

  long long intra = 0, source = 0;
  for (auto [x, y] : h.arcs()) {
    auto cls = classify_arc(r, x, y);
    if (!cls) return fail("unclassifiable arc");
    if (*cls == ArcClass::intra_clique) ++intra;
    else ++source;
  }
  if (source != md) return fail("source arc count");
  if (intra != static_cast<long long>(n) * (n - 1) * (n - 2))
    return fail("intra-clique arc count");

  for (Vertex v = 1; v <= h.n(); ++v) {
    const VertexRole& role = r.role_of(v);
    int want_in, want_out;
    if (auto* orig = std::get_if<OriginalRole>(&role)) {
      want_in = d.indeg(orig->g) + n - 2;
      want_out = d.outdeg(orig->g) + n - 2;
    } else {
      want_in = want_out = n - 2;
    }
    if (h.indeg(v) != want_in || h.outdeg(v) != want_out)
      return fail("per-class degree accounting");
  }

  if (r.threshold() != n) return fail("threshold is not n");
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_reduction_invariants(const ReductionInstance& r) {
  return r.construction() == Construction::edge_clique ? check_edge_clique(r)
                                                       : check_vertex_clique(r);
}

}  // namespace longcycle
