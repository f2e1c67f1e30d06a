#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

struct DistResult {
  /// Least number of labels admitting a distinguishing labeling.
  Label value = 1;
  /// Labels over vertices (number) or canonical edge positions (index).
  std::vector<Label> witness;
  /// Exhaustive search at value - 1 found nothing (vacuous when value == 1).
  bool checked_r_below = false;
  /// Some nontrivial automorphism fixes every edge (e.g. the swap of K2); such
  /// automorphisms are outside the reach of edge labelings and are ignored.
  bool kernel_nontrivial = false;
  std::uint64_t nodes = 0;

  VertexLabeling vertex_witness() const { return {witness, value}; }
  EdgeLabeling edge_witness() const { return {witness, value}; }
};

struct SearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// True iff every non-identity element of `group` moves some vertex to one
/// with a different label. Throws kCappedGroup, kLengthMismatch.
bool is_distinguishing_vertex(const Graph& g, const AutGroup& group, const VertexLabeling& labels);

/// Edge analogue over the induced edge action. Automorphisms acting as the
/// identity on edges are skipped, so K2 with its single edge labeled 1 counts
/// as distinguished.
bool is_distinguishing_edge(const Graph& g, const AutGroup& group, const EdgeLabeling& labels);

/// D(G) by increasing r from 1. Each round is a depth-first labeling of the
/// vertices (descending degree, then ascending index) that keeps the set of
/// automorphisms still consistent with the partial labeling. A branch succeeds
/// as soon as that set is empty and fails as soon as a surviving automorphism
/// has its whole support labeled. New label values are introduced in
/// increasing order only.
///
/// `r_max` defaults to the order of g. Throws kCappedGroup, kRMaxExceeded,
/// kTimeBudgetExceeded.
DistResult distinguishing_number(const Graph& g, const AutGroup& group,
                                 std::optional<Label> r_max = std::nullopt,
                                 const SearchLimits& limits = {});

/// D'(G): the same search over the induced action on canonical edge
/// positions. `r_max` defaults to the edge count. Throws kNoEdges in addition.
DistResult distinguishing_index(const Graph& g, const AutGroup& group,
                                std::optional<Label> r_max = std::nullopt,
                                const SearchLimits& limits = {});

}  // namespace symbreak
