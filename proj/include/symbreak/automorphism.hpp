#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symbreak/bigint.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

inline constexpr std::uint64_t kDefaultAutCap = 1'000'000;

/// Explicit list of automorphisms, identity first.
///
/// Elements are stored row-major as 16-bit images, so groups of a few million
/// elements on desk-scale graphs stay in memory. A capped group holds only the
/// first `cap` elements found and must not be used where exactness matters.
class AutGroup {
 public:
  using Image = std::uint16_t;

  AutGroup() = default;
  AutGroup(std::size_t degree, std::size_t order, std::vector<Image> images, bool capped);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  bool capped() const { return capped_; }

  std::span<const Image> image(std::size_t i) const {
    return {images_.data() + i * degree_, degree_};
  }
  Permutation element(std::size_t i) const;

 private:
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Image> images_;
  bool capped_ = false;
};

/// Exhaustive backtracking: vertices are assigned in BFS order, candidate
/// images ascend by index and are pruned on degree, sorted neighbor-degree
/// multiset and adjacency with already-assigned vertices. Stops with
/// `capped() == true` once more than `cap` automorphisms exist.
AutGroup enumerate_automorphisms(const Graph& g, std::uint64_t cap = kDefaultAutCap);

/// Vertex orbits, each sorted, ordered by smallest member. Throws kCappedGroup.
std::vector<std::vector<Vertex>> orbits(const AutGroup& group);

/// n! * 2^n.
BigInt group_order_formula_dutch(std::int64_t n, std::int64_t k);

struct GroupAxioms {
  bool identity_present = false;
  bool closed = false;
  bool inverses = false;

  bool ok() const { return identity_present && closed && inverses; }
};

/// Quadratic in the order; intended for groups up to ~10^4 elements.
GroupAxioms check_group_axioms(const AutGroup& group);

}  // namespace symbreak
