#include "symbreak/generators.hpp"

#include <algorithm>

#include "symbreak/error.hpp"

namespace symbreak::gen {

namespace {

// Accumulates disjoint parts, optionally identifying one vertex of the new
// part with an existing vertex.
class Assembler {
 public:
  struct Merge {
    Vertex own;
    Vertex target;
  };

  std::vector<Vertex> add(const Graph& g, const std::string& prefix, std::optional<Merge> merge = {}) {
    std::vector<Vertex> map(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      map[v] = (merge && merge->own == v) ? merge->target : static_cast<Vertex>(n_++);
    }
    for (auto [u, v] : g.edges()) edges_.emplace_back(map[u], map[v]);
    if (!prefix.empty()) {
      for (const auto& [name, v] : g.roles()) roles_[prefix + name] = map[v];
    }
    return map;
  }

  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void set_role(const std::string& name, Vertex v) { roles_[name] = v; }

  Graph finish() { return Graph::build(n_, edges_, std::move(roles_)); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  RoleMap roles_;
};

std::string part_prefix(std::size_t i) { return "p" + std::to_string(i) + "."; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParams, what);
}

void require_vertex(const Graph& g, Vertex v, ErrorCode code, const std::string& what) {
  if (v >= g.order()) {
    throw Error(code, what + " " + std::to_string(v) + " not in graph of order " +
                          std::to_string(g.order()));
  }
}

void require_count(std::span<const std::int64_t> params, std::size_t count, FamilyKind kind) {
  if (params.size() != count) {
    throw Error(ErrorCode::kBadParams, std::string(to_string(kind)) + " takes " +
                                           std::to_string(count) + " parameter(s), got " +
                                           std::to_string(params.size()));
  }
}

Vertex resolve_as(const Graph& g, const Selector& sel, ErrorCode code) {
  try {
    return resolve(g, sel);
  } catch (const Error& e) {
    throw Error(code, e.what());
  }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kComplete: return "complete";
    case FamilyKind::kCycle: return "cycle";
    case FamilyKind::kPath: return "path";
    case FamilyKind::kStar: return "star";
    case FamilyKind::kQGraph: return "q_graph";
    case FamilyKind::kDutch: return "dutch";
    case FamilyKind::kFriendship: return "friendship";
    case FamilyKind::kSpiro: return "spiro";
    case FamilyKind::kPoly: return "poly";
    case FamilyKind::kNanostar: return "nanostar";
    case FamilyKind::kBouquet: return "bouquet";
    case FamilyKind::kCircuit: return "circuit";
    case FamilyKind::kChain: return "chain";
    case FamilyKind::kLink: return "link";
    case FamilyKind::kPointAttach: return "point_attach";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "q") return FamilyKind::kQGraph;
  for (int i = 0; i <= static_cast<int>(FamilyKind::kPointAttach); ++i) {
    auto kind = static_cast<FamilyKind>(i);
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kUnknownFamily, "unknown family '" + std::string(name) + "'");
}

Vertex resolve(const Graph& g, const Selector& sel) {
  if (const auto* idx = std::get_if<Vertex>(&sel)) {
    require_vertex(g, *idx, ErrorCode::kIndexOutOfRange, "selector");
    return *idx;
  }
  const auto& name = std::get<std::string>(sel);
  auto v = g.role(name);
  if (!v) throw Error(ErrorCode::kBadRole, "no role '" + name + "'");
  return *v;
}

Graph with_roles(const Graph& g, RoleMap roles) {
  return Graph::build(g.order(), g.edges(), std::move(roles));
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph cycle(std::size_t k) {
  require(k >= 3, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
  return Graph::build(k, edges);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph star(std::size_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, edges, {{"center", 0}});
}

Graph make_base(FamilyKind kind, std::span<const std::int64_t> params) {
  require_count(params, 1, kind);
  const auto p = params[0];
  require(p >= 0, "negative parameter");
  switch (kind) {
    case FamilyKind::kComplete: return complete(static_cast<std::size_t>(p));
    case FamilyKind::kCycle: return cycle(static_cast<std::size_t>(p));
    case FamilyKind::kPath: return path(static_cast<std::size_t>(p));
    case FamilyKind::kStar: return star(static_cast<std::size_t>(p));
    default: break;
  }
  throw Error(ErrorCode::kBadParams, std::string(to_string(kind)) + " is not a base graph");
}

Graph point_attach(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  require_vertex(g1, v1, ErrorCode::kIndexOutOfRange, "attach vertex");
  require_vertex(g2, v2, ErrorCode::kIndexOutOfRange, "attach vertex");
  Assembler a;
  a.add(g1, part_prefix(0));
  a.add(g2, part_prefix(1), Assembler::Merge{v2, v1});
  return a.finish();
}

Graph bouquet(std::span<const RootedPart> parts) {
  require(parts.size() >= 2, "bouquet needs at least two parts");
  for (const auto& p : parts) require_vertex(p.graph, p.x, ErrorCode::kIndexOutOfRange, "root");
  Assembler a;
  Vertex root = a.add(parts[0].graph, part_prefix(0))[parts[0].x];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    a.add(parts[i].graph, part_prefix(i), Assembler::Merge{parts[i].x, root});
  }
  a.set_role("root", root);
  return a.finish();
}

Graph circuit(std::span<const RootedPart> parts) {
  require(parts.size() >= 3, "circuit needs k >= 3 parts");
  for (const auto& p : parts) require_vertex(p.graph, p.x, ErrorCode::kIndexOutOfRange, "x");
  Assembler a;
  std::vector<Vertex> ring;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ring.push_back(a.add(parts[i].graph, part_prefix(i))[parts[i].x]);
    a.set_role("cycle:" + std::to_string(i), ring.back());
  }
  for (std::size_t i = 0; i < ring.size(); ++i) a.add_edge(ring[i], ring[(i + 1) % ring.size()]);
  return a.finish();
}

Graph chain(std::span<const ContactPart> parts) {
  if (parts.empty()) throw Error(ErrorCode::kBadContacts, "chain needs at least one part");
  for (const auto& p : parts) {
    require_vertex(p.graph, p.x, ErrorCode::kBadContacts, "contact");
    require_vertex(p.graph, p.y, ErrorCode::kBadContacts, "contact");
    if (p.x == p.y) throw Error(ErrorCode::kBadContacts, "chain contacts must differ");
  }
  Assembler a;
  Vertex prev_y = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::optional<Assembler::Merge> merge;
    if (i > 0) merge = Assembler::Merge{parts[i].x, prev_y};
    auto map = a.add(parts[i].graph, part_prefix(i), merge);
    a.set_role("contact:" + std::to_string(i) + ":x", map[parts[i].x]);
    a.set_role("contact:" + std::to_string(i) + ":y", map[parts[i].y]);
    prev_y = map[parts[i].y];
  }
  return a.finish();
}

Graph link(std::span<const ContactPart> parts) {
  if (parts.empty()) throw Error(ErrorCode::kBadContacts, "link needs at least one part");
  for (const auto& p : parts) {
    require_vertex(p.graph, p.x, ErrorCode::kBadContacts, "contact");
    require_vertex(p.graph, p.y, ErrorCode::kBadContacts, "contact");
  }
  Assembler a;
  std::optional<Vertex> prev_y;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto map = a.add(parts[i].graph, part_prefix(i));
    a.set_role("contact:" + std::to_string(i) + ":x", map[parts[i].x]);
    a.set_role("contact:" + std::to_string(i) + ":y", map[parts[i].y]);
    if (prev_y) a.add_edge(*prev_y, map[parts[i].x]);
    prev_y = map[parts[i].y];
  }
  return a.finish();
}

Graph q_graph(std::int64_t m, std::int64_t n) {
  require(m >= 2 && n >= 2, "q_graph needs m >= 2 and n >= 2");
  const auto hubs = static_cast<Vertex>(m);
  const auto outer = static_cast<Vertex>(n - 1);
  std::vector<Edge> edges;
  RoleMap roles;
  for (Vertex i = 0; i < hubs; ++i) {
    roles["hub:" + std::to_string(i)] = i;
    for (Vertex j = i + 1; j < hubs; ++j) edges.emplace_back(i, j);
    // Blade clique on the hub and its outer vertices.
    std::vector<Vertex> blade{i};
    for (Vertex j = 0; j < outer; ++j) blade.push_back(hubs + i * outer + j);
    for (std::size_t a = 0; a < blade.size(); ++a)
      for (std::size_t b = a + 1; b < blade.size(); ++b) edges.emplace_back(blade[a], blade[b]);
  }
  return Graph::build(hubs + hubs * outer, edges, std::move(roles));
}

Graph dutch(std::int64_t n, std::int64_t k) {
  require(n >= 2 && k >= 3, "dutch windmill needs n >= 2 and k >= 3");
  const auto blades = static_cast<Vertex>(n);
  const auto len = static_cast<Vertex>(k - 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < blades; ++i) {
    const Vertex first = 1 + i * len;
    const Vertex last = first + len - 1;
    edges.emplace_back(0, first);
    for (Vertex v = first; v < last; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(last, 0);
  }
  return Graph::build(1 + blades * len, edges, {{"center", 0}});
}

Graph friendship(std::int64_t n) { return dutch(n, 3); }

namespace {

std::vector<ContactPart> cycle_parts(std::int64_t q, std::int64_t h, std::int64_t k) {
  require(q >= 3, "cycle length q must be >= 3");
  require(h >= 1 && h <= q / 2, "contact distance h must satisfy 1 <= h <= floor(q/2)");
  require(k >= 1, "number of cycles k must be >= 1");
  ContactPart part{cycle(static_cast<std::size_t>(q)), 0, static_cast<Vertex>(h)};
  return std::vector<ContactPart>(static_cast<std::size_t>(k), part);
}

}  // namespace

Graph spiro(std::int64_t q, std::int64_t h, std::int64_t k) {
  return chain(cycle_parts(q, h, k));
}

Graph poly(std::int64_t q, std::int64_t h, std::int64_t k) {
  return link(cycle_parts(q, h, k));
}

NanostarBases default_nanostar_bases() {
  std::vector<Edge> ring;
  for (Vertex i = 0; i < 6; ++i) ring.emplace_back(i, (i + 1) % 6);
  auto f_edges = ring;
  f_edges.emplace_back(0, 6);
  f_edges.emplace_back(3, 7);
  auto g_edges = ring;
  g_edges.emplace_back(0, 6);
  return {Graph::build(8, f_edges, {{"root", 6}, {"tip", 7}}), Graph::build(7, g_edges, {{"root", 6}})};
}

namespace {

Vertex nanostar_tip(const Graph& f, Vertex root) {
  if (auto tip = f.role("tip")) return *tip;
  std::optional<Vertex> tip;
  for (Vertex v = 0; v < f.order(); ++v) {
    if (v == root || f.degree(v) != 1) continue;
    if (tip) throw Error(ErrorCode::kBadParams, "nanostar F has several candidate tips; add a 'tip' role");
    tip = v;
  }
  if (!tip) throw Error(ErrorCode::kBadParams, "nanostar F has no leaf besides its root");
  return *tip;
}

Vertex role_or_throw(const Graph& g, const char* name, const char* what) {
  auto v = g.role(name);
  if (!v) throw Error(ErrorCode::kBadParams, std::string(what) + " lacks a '" + name + "' role");
  return *v;
}

}  // namespace

Graph nanostar(std::int64_t k, const NanostarBases& bases) {
  require(k >= 1, "nanostar needs k >= 1");
  const Vertex f_root = role_or_throw(bases.f, "root", "nanostar F");
  const Vertex f_tip = nanostar_tip(bases.f, f_root);
  Graph g = bases.g1;
  Vertex g_root = role_or_throw(bases.g1, "root", "nanostar G1");
  for (std::int64_t level = 2; level <= k; ++level) {
    Assembler a;
    Vertex root = a.add(g, "")[g_root];
    a.add(g, "", Assembler::Merge{g_root, root});
    auto f_map = a.add(bases.f, "", Assembler::Merge{f_root, root});
    g = a.finish();
    g_root = f_map[f_tip];
  }
  Assembler a;
  Vertex root = a.add(g, "")[g_root];
  a.add(g, "", Assembler::Merge{g_root, root});
  a.add(g, "", Assembler::Merge{g_root, root});
  a.set_role("root", root);
  return a.finish();
}

Graph family(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kComplete:
    case FamilyKind::kCycle:
    case FamilyKind::kPath:
    case FamilyKind::kStar:
      return make_base(spec.kind, p);
    case FamilyKind::kQGraph:
      require_count(p, 2, spec.kind);
      return q_graph(p[0], p[1]);
    case FamilyKind::kDutch:
      require_count(p, 2, spec.kind);
      return dutch(p[0], p[1]);
    case FamilyKind::kFriendship:
      require_count(p, 1, spec.kind);
      return friendship(p[0]);
    case FamilyKind::kSpiro:
      require_count(p, 3, spec.kind);
      return spiro(p[0], p[1], p[2]);
    case FamilyKind::kPoly:
      require_count(p, 3, spec.kind);
      return poly(p[0], p[1], p[2]);
    case FamilyKind::kNanostar:
      require_count(p, 1, spec.kind);
      return nanostar(p[0], spec.nanostar_bases ? *spec.nanostar_bases : default_nanostar_bases());
    case FamilyKind::kBouquet:
    case FamilyKind::kCircuit:
    case FamilyKind::kPointAttach: {
      if (spec.parts.empty()) throw Error(ErrorCode::kBadParams, "composition needs parts");
      std::vector<RootedPart> parts;
      for (const auto& part : spec.parts) {
        Graph g = family(part.spec);
        Vertex x = resolve_as(g, part.x, ErrorCode::kIndexOutOfRange);
        parts.push_back({std::move(g), x});
      }
      if (spec.kind == FamilyKind::kBouquet) return bouquet(parts);
      if (spec.kind == FamilyKind::kCircuit) return circuit(parts);
      if (parts.size() != 2) throw Error(ErrorCode::kBadParams, "point_attach takes exactly two parts");
      return point_attach(parts[0].graph, parts[0].x, parts[1].graph, parts[1].x);
    }
    case FamilyKind::kChain:
    case FamilyKind::kLink: {
      std::vector<ContactPart> parts;
      for (const auto& part : spec.parts) {
        Graph g = family(part.spec);
        if (!part.y) throw Error(ErrorCode::kBadContacts, "chain/link part needs a 'y' contact");
        Vertex x = resolve_as(g, part.x, ErrorCode::kBadContacts);
        Vertex y = resolve_as(g, *part.y, ErrorCode::kBadContacts);
        parts.push_back({std::move(g), x, y});
      }
      return spec.kind == FamilyKind::kChain ? chain(parts) : link(parts);
    }
  }
  throw Error(ErrorCode::kUnknownFamily, "unhandled family kind");
}

}  // namespace symbreak::gen
