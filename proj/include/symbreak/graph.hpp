#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using RoleMap = std::map<std::string, Vertex>;

/// Immutable simple undirected graph.
///
/// Edges are stored as (min, max) pairs in lexicographic order; that order is
/// the canonical edge indexing used by edge labelings and induced edge
/// permutations. Roles attach names ("center", "root", "hub:3", ...) to
/// vertices and are carried through compositions.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Duplicate edges (in either orientation) are
  /// merged; loops, out-of-range endpoints and out-of-range roles throw.
  static Graph build(std::size_t n, std::span<const Edge> edges, RoleMap roles = {});
  static Graph build(std::size_t n, std::initializer_list<Edge> edges, RoleMap roles = {}) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(roles));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const RoleMap& roles() const { return roles_; }
  std::optional<Vertex> role(const std::string& name) const;

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Position of {u,v} in the canonical edge order, if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.roles_ == b.roles_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  RoleMap roles_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  // Dense adjacency bitmap, only kept for small graphs.
  std::vector<std::uint8_t> matrix_;
};

/// A bijection on {0..n-1}; `image()[v]` is the image of v.
class Permutation {
 public:
  Permutation() = default;
  /// Throws kBadParams if `image` is not a bijection.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator[](Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

/// (p ∘ q)(v) = p(q(v)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Permutation of canonical edge positions induced by the automorphism p.
/// Compatible with `compose`: edge_perm(p∘q) = edge_perm(p)∘edge_perm(q).
Permutation induced_edge_perm(const Graph& g, const Permutation& p);

using Label = std::uint32_t;

namespace detail {
struct VertexTag {};
struct EdgeTag {};
}  // namespace detail

/// Labels are 1-based; 0 is reserved for "unlabeled" inside searches and is
/// rejected here.
template <class Tag>
class Labeling {
 public:
  Labeling() = default;
  Labeling(std::vector<Label> labels, Label r);

  std::size_t size() const { return labels_.size(); }
  Label r() const { return r_; }
  Label operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Same labels declared with a different palette size.
  Labeling with_r(Label r) const { return Labeling(labels_, r); }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
  Label r_ = 0;
};

using VertexLabeling = Labeling<detail::VertexTag>;
using EdgeLabeling = Labeling<detail::EdgeTag>;

extern template class Labeling<detail::VertexTag>;
extern template class Labeling<detail::EdgeTag>;

}  // namespace symbreak
