#include "symbreak/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

#include "symbreak/error.hpp"

namespace symbreak {

AutGroup::AutGroup(std::size_t degree, std::size_t order, std::vector<Image> images, bool capped)
    : degree_(degree), order_(order), images_(std::move(images)), capped_(capped) {
  if (images_.size() != degree_ * order_) {
    throw Error(ErrorCode::kLengthMismatch, "image storage does not match degree * order");
  }
}

Permutation AutGroup::element(std::size_t i) const {
  auto img = image(i);
  return Permutation(std::vector<Vertex>(img.begin(), img.end()));
}

namespace {

constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::uint64_t cap) : g_(g), n_(g.order()), cap_(cap) {
    classify();
    plan_order();
    image_.assign(n_, kUnset);
    preimage_.assign(n_, kUnset);
  }

  AutGroup run() {
    if (n_ == 0) return AutGroup(0, 1, {}, false);
    extend(0);
    // Move the identity to the front; it is always found.
    const std::size_t order = found_.size() / n_;
    for (std::size_t i = 0; i < order; ++i) {
      bool ident = true;
      for (std::size_t v = 0; v < n_ && ident; ++v) ident = found_[i * n_ + v] == v;
      if (ident) {
        std::rotate(found_.begin(), found_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                    found_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
        break;
      }
    }
    return AutGroup(n_, order, std::move(found_), capped_);
  }

 private:
  // Vertex invariant: (degree, sorted neighbor degrees), densely numbered.
  void classify() {
    std::map<std::vector<std::size_t>, std::uint32_t> ids;
    cls_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<std::size_t> key{g_.degree(v)};
      for (Vertex w : g_.neighbors(v)) key.push_back(g_.degree(w));
      std::sort(key.begin() + 1, key.end());
      cls_[v] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first->second;
    }
  }

  // BFS per component so that every non-root vertex has an assigned neighbor
  // whose image restricts the candidates.
  void plan_order() {
    std::vector<std::size_t> pos(n_, n_);
    parent_.assign(n_, kUnset);
    for (Vertex s = 0; s < n_; ++s) {
      if (pos[s] != n_) continue;
      std::queue<Vertex> q;
      q.push(s);
      pos[s] = order_.size();
      order_.push_back(s);
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g_.neighbors(v)) {
          if (pos[w] != n_) continue;
          pos[w] = order_.size();
          order_.push_back(w);
          parent_[w] = v;
          q.push(w);
        }
      }
    }
    earlier_nbrs_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Vertex v = order_[i];
      for (Vertex w : g_.neighbors(v)) {
        if (pos[w] < i) earlier_nbrs_[i].push_back(w);
      }
    }
  }

  bool consistent(std::size_t i, Vertex v, Vertex w) const {
    if (preimage_[w] != kUnset || cls_[v] != cls_[w]) return false;
    for (Vertex u : earlier_nbrs_[i]) {
      if (!g_.adjacent(image_[u], w)) return false;
    }
    std::size_t mapped = 0;
    for (Vertex x : g_.neighbors(w)) mapped += preimage_[x] != kUnset;
    return mapped == earlier_nbrs_[i].size();
  }

  void extend(std::size_t i) {
    if (capped_) return;
    if (i == n_) {
      if (found_.size() / n_ >= cap_) {
        capped_ = true;
        return;
      }
      for (Vertex v = 0; v < n_; ++v) found_.push_back(static_cast<AutGroup::Image>(image_[v]));
      return;
    }
    const Vertex v = order_[i];
    auto try_candidate = [&](Vertex w) {
      if (!consistent(i, v, w)) return;
      image_[v] = w;
      preimage_[w] = v;
      extend(i + 1);
      image_[v] = kUnset;
      preimage_[w] = kUnset;
    };
    if (parent_[v] != kUnset) {
      for (Vertex w : g_.neighbors(image_[parent_[v]])) {
        try_candidate(w);
        if (capped_) return;
      }
    } else {
      for (Vertex w = 0; w < n_; ++w) {
        try_candidate(w);
        if (capped_) return;
      }
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t cap_;
  std::vector<std::uint32_t> cls_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> earlier_nbrs_;
  std::vector<Vertex> image_;
  std::vector<Vertex> preimage_;
  std::vector<AutGroup::Image> found_;
  bool capped_ = false;
};

std::string key_of(std::span<const AutGroup::Image> img) {
  return {reinterpret_cast<const char*>(img.data()), img.size() * sizeof(AutGroup::Image)};
}

}  // namespace

AutGroup enumerate_automorphisms(const Graph& g, std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorCode::kBadParams, "automorphism cap must be >= 1");
  if (g.order() > std::numeric_limits<AutGroup::Image>::max()) {
    throw Error(ErrorCode::kBadParams, "graph too large for automorphism enumeration");
  }
  return AutomorphismSearch(g, cap).run();
}

std::vector<std::vector<Vertex>> orbits(const AutGroup& group) {
  if (group.capped()) throw Error(ErrorCode::kCappedGroup, "orbits need the complete group");
  const std::size_t n = group.degree();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto img = group.image(i);
    for (Vertex v = 0; v < n; ++v) {
      Vertex a = find(v);
      Vertex b = find(img[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find(v);
    if (slot[r] == n) {
      slot[r] = parts.size();
      parts.emplace_back();
    }
    parts[slot[r]].push_back(v);
  }
  return parts;
}

BigInt group_order_formula_dutch(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 3) throw Error(ErrorCode::kBadParams, "dutch windmill needs n >= 2 and k >= 3");
  BigInt order = 1;
  for (std::int64_t i = 2; i <= n; ++i) order *= i;
  return order << static_cast<unsigned>(n);
}

GroupAxioms check_group_axioms(const AutGroup& group) {
  GroupAxioms result;
  const std::size_t n = group.degree();
  const std::size_t order = group.order();
  std::unordered_set<std::string> members;
  members.reserve(order * 2);
  for (std::size_t i = 0; i < order; ++i) members.insert(key_of(group.image(i)));

  std::vector<AutGroup::Image> buf(n);
  for (Vertex v = 0; v < n; ++v) buf[v] = static_cast<AutGroup::Image>(v);
  result.identity_present = members.count(key_of(buf)) > 0;

  result.inverses = true;
  for (std::size_t i = 0; i < order && result.inverses; ++i) {
    auto p = group.image(i);
    for (Vertex v = 0; v < n; ++v) buf[p[v]] = static_cast<AutGroup::Image>(v);
    result.inverses = members.count(key_of(buf)) > 0;
  }

  result.closed = true;
  for (std::size_t i = 0; i < order && result.closed; ++i) {
    auto p = group.image(i);
    for (std::size_t j = 0; j < order && result.closed; ++j) {
      auto q = group.image(j);
      for (Vertex v = 0; v < n; ++v) buf[v] = p[q[v]];
      result.closed = members.count(key_of(buf)) > 0;
    }
  }
  return result;
}

}  // namespace symbreak
