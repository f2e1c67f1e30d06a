#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symbreak/graph.hpp"

// Vertex numbering conventions (stable across versions; witnesses depend on
// them):
//
//   complete(n)      0..n-1
//   cycle(k)         i ~ (i+1) mod k
//   path(n)          i ~ i+1
//   star(n)          center 0 ("center"), leaves 1..n
//   q_graph(m,n)     hubs 0..m-1 form K_m ("hub:i"); the n-1 outer vertices of
//                    hub i are m + i(n-1) + j, j = 0..n-2
//   dutch(n,k)       center 0 ("center"); blade i (0-based) is the path
//                    1+i(k-1) .. (i+1)(k-1), both ends adjacent to the center
//   spiro(q,h,k)     chain of k copies of cycle(q) with x = 0, y = h
//   poly(q,h,k)      link of k copies of cycle(q) with x = 0, y = h
//   nanostar(k)      bouquet of three copies of G_k at their roots ("root")
//
// Compositions concatenate parts in order. Part i keeps its internal order,
// shifted past everything added before it; a vertex identified with an
// earlier one takes the earlier index. Part roles survive as "p<i>.<name>";
// chain and link record "contact:<i>:x" / "contact:<i>:y" (0-based i), the
// bouquet records "root", the circuit records "cycle:<i>".

namespace symbreak::gen {

enum class FamilyKind {
  kComplete,
  kCycle,
  kPath,
  kStar,
  kQGraph,
  kDutch,
  kFriendship,
  kSpiro,
  kPoly,
  kNanostar,
  kBouquet,
  kCircuit,
  kChain,
  kLink,
  kPointAttach,
};

std::string_view to_string(FamilyKind kind);
/// Accepts the canonical names plus the alias "q" for q_graph.
FamilyKind parse_family_kind(std::string_view name);

/// Vertex index or role name inside a part.
using Selector = std::variant<Vertex, std::string>;

/// Replacement base graphs for the nanostar recursion. `f` needs a "root"
/// role; its "tip" role (default: the unique other leaf) becomes the root of
/// each G_k. `g1` needs a "root" role.
struct NanostarBases {
  Graph f;
  Graph g1;
};

struct FamilyPart;

struct FamilySpec {
  FamilyKind kind = FamilyKind::kComplete;
  std::vector<std::int64_t> params;
  std::vector<FamilyPart> parts;
  std::optional<NanostarBases> nanostar_bases;
};

struct FamilyPart {
  FamilySpec spec;
  Selector x = Vertex{0};
  std::optional<Selector> y;
};

struct RootedPart {
  Graph graph;
  Vertex x = 0;
};

struct ContactPart {
  Graph graph;
  Vertex x = 0;
  Vertex y = 0;
};

Graph complete(std::size_t n);
Graph cycle(std::size_t k);
Graph path(std::size_t n);
Graph star(std::size_t leaves);

/// `params` as in the FamilySpec for complete/cycle/path/star.
Graph make_base(FamilyKind kind, std::span<const std::int64_t> params);

Graph point_attach(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);
Graph bouquet(std::span<const RootedPart> parts);
Graph circuit(std::span<const RootedPart> parts);
Graph chain(std::span<const ContactPart> parts);
Graph link(std::span<const ContactPart> parts);

Graph q_graph(std::int64_t m, std::int64_t n);
Graph dutch(std::int64_t n, std::int64_t k);
Graph friendship(std::int64_t n);
Graph spiro(std::int64_t q, std::int64_t h, std::int64_t k);
Graph poly(std::int64_t q, std::int64_t h, std::int64_t k);

/// Default F: C6 with pendants at vertices 0 and 3; root = pendant of 0,
/// tip = pendant of 3. Default G_1: C6 with one pendant at 0, rooted there.
NanostarBases default_nanostar_bases();
Graph nanostar(std::int64_t k, const NanostarBases& bases = default_nanostar_bases());

Graph family(const FamilySpec& spec);

/// Same graph with a replaced role table.
Graph with_roles(const Graph& g, RoleMap roles);

Vertex resolve(const Graph& g, const Selector& sel);

}  // namespace symbreak::gen
