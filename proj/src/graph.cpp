#include "symbreak/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

constexpr std::size_t kDenseLimit = 2048;

std::string edge_str(std::size_t u, std::size_t v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges, RoleMap roles) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + edge_str(u, v) + " in graph of order " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  for (const auto& [name, v] : roles) {
    if (v >= n) {
      throw Error(ErrorCode::kBadRole,
                  "role '" + name + "' -> " + std::to_string(v) + " in graph of order " +
                      std::to_string(n));
    }
  }
  g.roles_ = std::move(roles);

  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  // Neighbor lists are kept sorted.
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  if (n <= kDenseLimit) {
    g.matrix_.assign(n * n, 0);
    for (auto [u, v] : g.edges_) {
      g.matrix_[u * n + v] = 1;
      g.matrix_[v * n + u] = 1;
    }
  }
  return g;
}

std::optional<Vertex> Graph::role(const std::string& name) const {
  auto it = roles_.find(name);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!matrix_.empty()) return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n_;
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) {
      throw Error(ErrorCode::kBadParams, "image is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> img(n);
  std::iota(img.begin(), img.end(), Vertex{0});
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < image_.size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "compose of sizes " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  }
  std::vector<Vertex> img(p.size());
  for (std::size_t v = 0; v < img.size(); ++v) img[v] = p[q[static_cast<Vertex>(v)]];
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<Vertex> img(p.size());
  for (std::size_t v = 0; v < img.size(); ++v) img[p[static_cast<Vertex>(v)]] = static_cast<Vertex>(v);
  return Permutation(std::move(img));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "permutation of size " + std::to_string(p.size()) +
                                                " on graph of order " + std::to_string(g.order()));
  }
  // p is a bijection, so mapping every edge onto an edge is enough.
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

Permutation induced_edge_perm(const Graph& g, const Permutation& p) {
  if (!is_automorphism(g, p)) {
    throw Error(ErrorCode::kNotAutomorphism, "induced_edge_perm requires an automorphism");
  }
  std::vector<Vertex> img(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edges()[e];
    img[e] = static_cast<Vertex>(*g.edge_index(p[u], p[v]));
  }
  return Permutation(std::move(img));
}

template <class Tag>
Labeling<Tag>::Labeling(std::vector<Label> labels, Label r) : labels_(std::move(labels)), r_(r) {
  if (r_ == 0) throw Error(ErrorCode::kBadParams, "labeling palette must be nonempty");
  for (Label l : labels_) {
    if (l == 0 || l > r_) {
      throw Error(ErrorCode::kBadParams,
                  "label " + std::to_string(l) + " outside {1.." + std::to_string(r_) + "}");
    }
  }
}

template class Labeling<detail::VertexTag>;
template class Labeling<detail::EdgeTag>;

}  // namespace symbreak
