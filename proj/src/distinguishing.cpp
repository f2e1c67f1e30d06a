#include "symbreak/distinguishing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

// Non-identity permutations of a point set, stored row-major.
struct PointAction {
  std::size_t points = 0;
  std::size_t count = 0;
  std::vector<std::uint16_t> rows;
  bool kernel_nontrivial = false;

  std::span<const std::uint16_t> row(std::size_t i) const { return {rows.data() + i * points, points}; }
};

void require_exact(const AutGroup& group) {
  if (group.capped()) {
    throw Error(ErrorCode::kCappedGroup, "automorphism enumeration was capped at " +
                                             std::to_string(group.order()) + " elements");
  }
}

PointAction vertex_action(const AutGroup& group) {
  PointAction a;
  a.points = group.degree();
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto img = group.image(i);
    bool ident = true;
    for (std::size_t v = 0; v < img.size() && ident; ++v) ident = img[v] == v;
    if (ident) continue;
    a.rows.insert(a.rows.end(), img.begin(), img.end());
    ++a.count;
  }
  return a;
}

PointAction edge_action(const Graph& g, const AutGroup& group) {
  PointAction a;
  a.points = g.size();
  if (a.points > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::kBadParams, "too many edges for the edge solver");
  }
  auto is_vertex_identity = [](std::span<const AutGroup::Image> img) {
    for (std::size_t v = 0; v < img.size(); ++v)
      if (img[v] != v) return false;
    return true;
  };
  // Elements differing by a kernel element act identically on edges, so
  // duplicates only need removing when the kernel is nontrivial.
  for (std::size_t i = 0; i < group.order() && !a.kernel_nontrivial; ++i) {
    auto img = group.image(i);
    if (is_vertex_identity(img)) continue;
    bool edge_ident = true;
    for (auto [u, v] : g.edges()) {
      auto lo = std::min(img[u], img[v]);
      auto hi = std::max(img[u], img[v]);
      if (lo != u || hi != v) {
        edge_ident = false;
        break;
      }
    }
    a.kernel_nontrivial = edge_ident;
  }
  std::unordered_set<std::string> seen;
  std::vector<std::uint16_t> buf(a.points);
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto img = group.image(i);
    if (is_vertex_identity(img)) continue;
    bool edge_ident = true;
    for (std::size_t e = 0; e < a.points; ++e) {
      auto [u, v] = g.edges()[e];
      auto idx = g.edge_index(img[u], img[v]);
      if (!idx) throw Error(ErrorCode::kNotAutomorphism, "group element is not an automorphism");
      buf[e] = static_cast<std::uint16_t>(*idx);
      edge_ident = edge_ident && *idx == e;
    }
    if (edge_ident) continue;
    if (a.kernel_nontrivial) {
      std::string key(reinterpret_cast<const char*>(buf.data()), buf.size() * sizeof(std::uint16_t));
      if (!seen.insert(std::move(key)).second) continue;
    }
    a.rows.insert(a.rows.end(), buf.begin(), buf.end());
    ++a.count;
  }
  return a;
}

template <class Labels>
bool breaks_all(const PointAction& a, const Labels& labels) {
  for (std::size_t i = 0; i < a.count; ++i) {
    auto p = a.row(i);
    bool broken = false;
    for (std::size_t x = 0; x < a.points && !broken; ++x) broken = labels[x] != labels[p[x]];
    if (!broken) return false;
  }
  return true;
}

// Depth-first labeling search over a point action; see distinguishing_number.
// P is the narrowest index type that holds every point.
template <class P>
class LabelSearch {
 public:
  LabelSearch(const PointAction& action, std::vector<std::size_t> order, const SearchLimits& limits)
      : n_(action.points), count_(action.count), order_(std::move(order)), limits_(limits) {
    fwd_.resize(count_ * n_);
    inv_.resize(count_ * n_);
    std::vector<std::size_t> pos(n_);
    for (std::size_t d = 0; d < n_; ++d) pos[order_[d]] = d;
    last_pos_.assign(count_, 0);
    for (std::size_t i = 0; i < count_; ++i) {
      auto row = action.row(i);
      for (std::size_t x = 0; x < n_; ++x) {
        fwd_[x * count_ + i] = static_cast<P>(row[x]);
        inv_[row[x] * count_ + i] = static_cast<P>(x);
        if (row[x] != x) last_pos_[i] = std::max(last_pos_[i], static_cast<std::uint32_t>(pos[x]));
      }
    }
    surviving_.resize(n_ + 1);
  }

  // Fills `out` with a distinguishing labeling using at most r labels.
  bool solve(Label r, std::vector<Label>& out) {
    r_ = r;
    labels_.assign(n_, 0);
    auto& root = surviving_[0];
    root.resize(count_);
    std::iota(root.begin(), root.end(), std::uint32_t{0});
    if (!descend(0, 0)) return false;
    out.assign(labels_.begin(), labels_.end());
    for (auto& l : out) l = l == 0 ? 1 : l;
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(std::size_t depth, Label used) {
    if (surviving_[depth].empty()) return true;
    if (depth == n_) return false;
    if ((++nodes_ & 0x3ff) == 0 && limits_.deadline &&
        std::chrono::steady_clock::now() > *limits_.deadline) {
      throw Error(ErrorCode::kTimeBudgetExceeded, "labeling search exceeded its time budget");
    }
    const std::size_t x = order_[depth];
    const Label top = std::min<Label>(used + 1, r_);
    for (Label c = 1; c <= top; ++c) {
      labels_[x] = c;
      if (filter(depth, x, c) && descend(depth + 1, std::max(used, c))) return true;
    }
    labels_[x] = 0;
    return false;
  }

  // Narrows the surviving set after labeling x with c. Returns false when a
  // survivor has its entire support labeled: it preserves every completion.
  bool filter(std::size_t depth, std::size_t x, Label c) {
    const auto& in = surviving_[depth];
    auto& out = surviving_[depth + 1];
    out.clear();
    for (std::uint32_t i : in) {
      const Label to = labels_[fwd_[x * count_ + i]];
      const Label from = labels_[inv_[x * count_ + i]];
      if ((to != 0 && to != c) || (from != 0 && from != c)) continue;
      if (last_pos_[i] <= depth) return false;
      out.push_back(i);
    }
    return true;
  }

  std::size_t n_;
  std::size_t count_;
  std::vector<std::size_t> order_;
  SearchLimits limits_;
  // Column-major: entry (x, i) at x * count_ + i, so a filter pass over
  // ascending survivors reads memory sequentially.
  std::vector<P> fwd_;
  std::vector<P> inv_;
  std::vector<std::uint32_t> last_pos_;
  std::vector<std::vector<std::uint32_t>> surviving_;
  std::vector<Label> labels_;
  Label r_ = 1;
  std::uint64_t nodes_ = 0;
};

template <class P>
DistResult run_search(PointAction action, std::vector<std::size_t> order, Label r_max,
                      const SearchLimits& limits) {
  LabelSearch<P> search(action, std::move(order), limits);
  std::vector<std::uint16_t>().swap(action.rows);
  DistResult result;
  result.kernel_nontrivial = action.kernel_nontrivial;
  for (Label r = 1; r <= r_max; ++r) {
    if (search.solve(r, result.witness)) {
      result.value = r;
      result.checked_r_below = true;
      result.nodes = search.nodes();
      return result;
    }
  }
  throw Error(ErrorCode::kRMaxExceeded,
              "no distinguishing labeling with at most " + std::to_string(r_max) + " labels");
}

DistResult solve(PointAction action, std::vector<std::size_t> order, Label r_max,
                 const SearchLimits& limits) {
  if (action.points <= std::numeric_limits<std::uint8_t>::max()) {
    return run_search<std::uint8_t>(std::move(action), std::move(order), r_max, limits);
  }
  return run_search<std::uint16_t>(std::move(action), std::move(order), r_max, limits);
}

}  // namespace

bool is_distinguishing_vertex(const Graph& g, const AutGroup& group, const VertexLabeling& labels) {
  require_exact(group);
  if (labels.size() != g.order() || group.degree() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "vertex labeling length differs from graph order");
  }
  return breaks_all(vertex_action(group), labels.labels());
}

bool is_distinguishing_edge(const Graph& g, const AutGroup& group, const EdgeLabeling& labels) {
  require_exact(group);
  if (labels.size() != g.size() || group.degree() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "edge labeling length differs from edge count");
  }
  return breaks_all(edge_action(g, group), labels.labels());
}

DistResult distinguishing_number(const Graph& g, const AutGroup& group, std::optional<Label> r_max,
                                 const SearchLimits& limits) {
  require_exact(group);
  if (group.degree() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "group degree differs from graph order");
  }
  std::vector<std::size_t> order(g.order());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(static_cast<Vertex>(a)) > g.degree(static_cast<Vertex>(b));
  });
  const Label limit = r_max.value_or(static_cast<Label>(std::max<std::size_t>(g.order(), 1)));
  return solve(vertex_action(group), std::move(order), limit, limits);
}

DistResult distinguishing_index(const Graph& g, const AutGroup& group, std::optional<Label> r_max,
                                const SearchLimits& limits) {
  require_exact(group);
  if (g.size() == 0) throw Error(ErrorCode::kNoEdges, "distinguishing index needs at least one edge");
  if (group.degree() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "group degree differs from graph order");
  }
  // Edges touching high-degree vertices first, then canonical order.
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto weight = [&](std::size_t e) {
    auto [u, v] = g.edges()[e];
    return g.degree(u) + g.degree(v);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });
  const Label limit = r_max.value_or(static_cast<Label>(g.size()));
  return solve(edge_action(g, group), std::move(order), limit, limits);
}

}  // namespace symbreak
