#include "longcycle/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "longcycle/error.hpp"

namespace longcycle {

namespace {

using nlohmann::json;

int parse_int_token(const std::string& tok, int position) {
  try {
    size_t used = 0;
    const long long value = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (value < std::numeric_limits<int>::min() ||
        value > std::numeric_limits<int>::max())
      throw std::out_of_range(tok);
    return static_cast<int>(value);
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error(Errc::parse_error, "bad integer '" + tok + "'", position);
  }
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

AnyGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_problem = false;
  bool directed = false;
  int n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> ends;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_problem)
        throw Error(Errc::parse_error, "duplicate problem line", line_no);
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "arc"))
        throw Error(Errc::parse_error, "malformed problem line", line_no);
      directed = tokens[1] == "arc";
      n = parse_int_token(tokens[2], line_no);
      m = parse_int_token(tokens[3], line_no);
      if (m < 0)
        throw Error(Errc::parse_error, "negative descriptor count", line_no);
      ends.reserve(static_cast<size_t>(m));
      have_problem = true;
      continue;
    }
    if (!have_problem)
      throw Error(Errc::parse_error, "descriptor before problem line", line_no);
    const char* want = directed ? "a" : "e";
    if (tokens[0] != want || tokens.size() != 3)
      throw Error(Errc::parse_error, "malformed descriptor line", line_no);
    if (static_cast<int>(ends.size()) == m)
      throw Error(Errc::parse_error, "more descriptors than declared", line_no);
    ends.emplace_back(parse_int_token(tokens[1], line_no),
                      parse_int_token(tokens[2], line_no));
  }
  if (!have_problem) throw Error(Errc::parse_error, "missing problem line");
  if (static_cast<int>(ends.size()) != m)
    throw Error(Errc::parse_error, "descriptor count does not match declaration");
  if (directed) return Digraph::from_arcs(n, ends);
  return UGraph::from_edges(n, ends);
}

std::string serialize_graph(const UGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_graph(const Digraph& d) {
  std::ostringstream out;
  out << "p arc " << d.n() << ' ' << d.arcs().size() << '\n';
  for (auto [u, v] : d.arcs()) out << "a " << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_graph(const AnyGraph& g) {
  return std::visit([](const auto& inner) { return serialize_graph(inner); }, g);
}

std::vector<Vertex> parse_vertex_sequence(const std::string& text) {
  std::istringstream in(text);
  std::vector<Vertex> seq;
  std::string tok;
  while (in >> tok)
    seq.push_back(parse_int_token(tok, static_cast<int>(seq.size()) + 1));
  return seq;
}

std::string serialize_vertex_sequence(const std::vector<Vertex>& seq) {
  std::ostringstream out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out << ' ';
    out << seq[i];
  }
  out << '\n';
  return out.str();
}

std::string serialize_mapping(const ReductionInstance& r) {
  json j;
  j["construction"] = r.construction() == Construction::edge_clique
                          ? "edge_clique"
                          : "vertex_clique";
  j["source_n"] = r.source_n();
  j["a"] = r.params().a;
  j["clique_count"] = r.params().clique_count;
  j["clique_size"] = r.params().clique_size;
  j["canonical"] = r.params().canonical;
  j["threshold"] = r.threshold();
  json roles = json::array();
  for (Vertex v = 1; v <= r.h().n(); ++v) {
    json entry;
    entry["id"] = v;
    const VertexRole& role = r.role_of(v);
    if (std::holds_alternative<OriginalRole>(role)) {
      entry["kind"] = "original";
    } else if (auto* ec = std::get_if<EdgeCliqueRole>(&role)) {
      entry["kind"] = "clique";
      entry["edge"] = json::array({ec->u, ec->v});
      entry["index"] = ec->index;
      entry["position"] = ec->position;
    } else {
      const auto& vc = std::get<VertexCliqueRole>(role);
      entry["kind"] = "clique";
      entry["vertex"] = vc.owner;
      entry["position"] = vc.position;
    }
    roles.push_back(std::move(entry));
  }
  j["roles"] = std::move(roles);
  return j.dump(2) + "\n";
}

ReductionInstance load_instance(const std::string& graph_text,
                                const std::string& mapping_text) {
  AnyGraph parsed = parse_graph(graph_text);
  auto* hp = std::get_if<Digraph>(&parsed);
  if (!hp)
    throw Error(Errc::parse_error, "instance graph must be directed");
  Digraph h = std::move(*hp);

  json j;
  try {
    j = json::parse(mapping_text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("mapping: ") + e.what());
  }

  try {
    const std::string cons_name = j.at("construction").get<std::string>();
    Construction cons;
    if (cons_name == "edge_clique") {
      cons = Construction::edge_clique;
    } else if (cons_name == "vertex_clique") {
      cons = Construction::vertex_clique;
    } else {
      throw Error(Errc::parse_error, "unknown construction " + cons_name);
    }

    const int source_n = j.at("source_n").get<int>();
    if (source_n < 1 || source_n > h.n())
      throw Error(Errc::parse_error, "source_n out of range");
    const int a = j.at("a").get<int>();
    const int clique_count = j.at("clique_count").get<int>();
    const int clique_size = j.at("clique_size").get<int>();
    const int threshold = j.at("threshold").get<int>();
    if (cons == Construction::edge_clique) {
      if (a < 3 || clique_count < 1 || clique_size < 2)
        throw Error(Errc::parse_error, "parameters out of range");
      if (threshold != 2 * source_n)
        throw Error(Errc::parse_error, "threshold does not match source_n");
    } else {
      if (a != 0 || clique_count != 1 || clique_size != source_n - 1)
        throw Error(Errc::parse_error, "parameters out of range");
      if (threshold != source_n)
        throw Error(Errc::parse_error, "threshold does not match source_n");
    }

    const json& role_entries = j.at("roles");
    if (!role_entries.is_array() ||
        role_entries.size() != static_cast<size_t>(h.n()))
      throw Error(Errc::parse_error, "role table size does not match |V|");
    std::vector<std::optional<VertexRole>> slots(
        static_cast<size_t>(h.n()));
    for (const json& entry : role_entries) {
      const int id = entry.at("id").get<int>();
      if (id < 1 || id > h.n())
        throw Error(Errc::parse_error, "role id out of range");
      auto& slot = slots[static_cast<size_t>(id) - 1];
      if (slot) throw Error(Errc::parse_error, "duplicate role id");
      const std::string kind = entry.at("kind").get<std::string>();
      if (kind == "original") {
        if (id > source_n)
          throw Error(Errc::parse_error, "original role id out of range");
        slot = OriginalRole{id};
      } else if (kind == "clique" && cons == Construction::edge_clique) {
        const json& edge = entry.at("edge");
        if (!edge.is_array() || edge.size() != 2)
          throw Error(Errc::parse_error, "malformed edge in role");
        const int u = edge[0].get<int>();
        const int v = edge[1].get<int>();
        const int index = entry.at("index").get<int>();
        const int position = entry.at("position").get<int>();
        if (u < 1 || v <= u || v > source_n)
          throw Error(Errc::parse_error, "role edge out of range");
        if (index < 1 || index > clique_count)
          throw Error(Errc::parse_error, "role index out of range");
        if (position < 1 || position > clique_size)
          throw Error(Errc::parse_error, "role position out of range");
        slot = EdgeCliqueRole{u, v, index, position};
      } else if (kind == "clique") {
        const int owner = entry.at("vertex").get<int>();
        const int position = entry.at("position").get<int>();
        if (owner < 1 || owner > source_n)
          throw Error(Errc::parse_error, "role vertex out of range");
        if (position < 1 || position > clique_size)
          throw Error(Errc::parse_error, "role position out of range");
        slot = VertexCliqueRole{owner, position};
      } else {
        throw Error(Errc::parse_error, "unknown role kind " + kind);
      }
    }

    std::vector<VertexRole> roles;
    roles.reserve(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i])
        throw Error(Errc::parse_error, "missing role for a vertex",
                    static_cast<int>(i) + 1);
      roles.push_back(*slots[i]);
    }

    ResolvedParams rp;
    rp.a = a;
    rp.clique_count = clique_count;
    rp.clique_size = clique_size;
    rp.canonical = cons == Construction::edge_clique &&
                   clique_count == 2 * source_n &&
                   clique_size == 2 * source_n - a + 1;

    std::variant<UGraph, Digraph> source;
    if (cons == Construction::edge_clique) {
      std::set<std::pair<Vertex, Vertex>> edge_set;
      for (const VertexRole& role : roles)
        if (auto* ec = std::get_if<EdgeCliqueRole>(&role))
          edge_set.insert({ec->u, ec->v});
      source = UGraph::from_edges(
          source_n, std::vector<std::pair<Vertex, Vertex>>(edge_set.begin(),
                                                           edge_set.end()));
    } else {
      std::vector<std::pair<Vertex, Vertex>> inner;
      for (auto [x, y] : h.arcs())
        if (x <= source_n && y <= source_n) inner.emplace_back(x, y);
      source = Digraph::from_arcs(source_n, inner);
    }

    return ReductionInstance::assemble(cons, std::move(h), std::move(source),
                                       rp, threshold, std::move(roles));
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("mapping: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(Errc::parse_error, "write to " + path + " failed");
}

}  // namespace longcycle
