#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symbreak/generators.hpp"
#include "symbreak/graph.hpp"

using namespace symbreak;

namespace {

Permutation perm(std::vector<Vertex> v) { return Permutation(std::move(v)); }

Graph c4() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST(Graph, BuildPath) {
  auto g = Graph::build(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, SingleVertex) {
  auto g = Graph::build(1, std::span<const Edge>{});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.size(), 0u);
  EXPECT_TRUE(g.connected());
}

TEST(Graph, DuplicatesMerged) {
  auto g = Graph::build(4, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_FALSE(g.connected());
}

TEST(Graph, CanonicalOrder) {
  auto g = Graph::build(4, {{3, 2}, {1, 0}, {2, 0}});
  std::vector<Edge> want{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), want);
  EXPECT_EQ(g.edge_index(3, 2), 2u);
  EXPECT_FALSE(g.edge_index(1, 3).has_value());
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(Graph, Rejects) {
  EXPECT_CODE(Graph::build(3, {{0, 3}}), kIndexOutOfRange);
  EXPECT_CODE(Graph::build(3, {{1, 1}}), kSelfLoop);
  EXPECT_CODE(Graph::build(3, {{0, 1}}, {{"root", 5}}), kBadRole);
}

TEST(Graph, Roles) {
  auto g = Graph::build(3, {{0, 1}}, {{"root", 2}});
  EXPECT_EQ(g.role("root"), 2u);
  EXPECT_FALSE(g.role("tip").has_value());
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_CODE(perm({0, 0, 1}), kBadParams);
  EXPECT_CODE(perm({0, 3}), kBadParams);
}

TEST(Permutation, ComposeAndInverse) {
  auto p = perm({1, 2, 3, 0});
  EXPECT_EQ(compose(Permutation::identity(4), p), p);
  EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  EXPECT_EQ(compose(p, p), perm({2, 3, 0, 1}));
  // q first, then p.
  auto q = perm({1, 0, 2, 3});
  EXPECT_EQ(compose(p, q), perm({2, 1, 3, 0}));
}

TEST(Automorphism, Check) {
  auto p3 = Graph::build(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_automorphism(p3, perm({2, 1, 0})));
  EXPECT_FALSE(is_automorphism(p3, perm({1, 0, 2})));
  EXPECT_TRUE(is_automorphism(c4(), perm({1, 0, 3, 2})));
  EXPECT_CODE(is_automorphism(p3, perm({1, 0})), kLengthMismatch);
}

TEST(EdgePerm, Examples) {
  auto k2 = Graph::build(2, {{0, 1}});
  EXPECT_TRUE(induced_edge_perm(k2, perm({1, 0})).is_identity());

  auto p3 = Graph::build(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(induced_edge_perm(p3, perm({2, 1, 0})), perm({1, 0}));

  // C4 edges in canonical order: 01, 03, 12, 23.
  auto rot = induced_edge_perm(c4(), perm({1, 2, 3, 0}));
  EXPECT_EQ(rot, perm({2, 0, 3, 1}));
  auto rot2 = compose(rot, rot);
  EXPECT_FALSE(rot2.is_identity());
  EXPECT_TRUE(compose(rot2, rot2).is_identity());

  EXPECT_CODE(induced_edge_perm(p3, perm({1, 0, 2})), kNotAutomorphism);
}

TEST(EdgePerm, HomomorphismOverDutch) {
  auto h = gen::dutch(2, 4);
  auto auts = oracle::automorphisms(h);
  for (std::size_t i = 0; i < auts.size(); ++i) {
    for (std::size_t j = 0; j < auts.size(); ++j) {
      Permutation p(auts[i]), q(auts[j]);
      EXPECT_EQ(induced_edge_perm(h, compose(p, q)),
                compose(induced_edge_perm(h, p), induced_edge_perm(h, q)));
    }
  }
}

TEST(Automorphism, PerturbedAutomorphismsRejected) {
  std::mt19937 rng(11);
  for (auto g : {gen::cycle(6), gen::dutch(2, 5), gen::q_graph(3, 3)}) {
    for (const auto& a : oracle::automorphisms(g)) {
      std::vector<Vertex> img = a;
      std::uniform_int_distribution<std::size_t> pick(0, img.size() - 1);
      auto x = pick(rng), y = pick(rng);
      std::swap(img[x], img[y]);
      const bool expect = oracle::preserves(oracle::edge_set(g), img);
      EXPECT_EQ(is_automorphism(g, Permutation(img)), expect);
    }
  }
}

TEST(Labeling, Validation) {
  VertexLabeling l({1, 2, 2}, 2);
  EXPECT_EQ(l.r(), 2u);
  EXPECT_CODE(VertexLabeling({1, 3}, 2), kBadParams);
  EXPECT_CODE(EdgeLabeling({0, 1}, 2), kBadParams);
  EXPECT_CODE(l.with_r(1), kBadParams);
}
