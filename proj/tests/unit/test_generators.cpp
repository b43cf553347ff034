#include <gtest/gtest.h>

#include <set>

#include "hetperc/generators.hpp"

namespace hetperc {
namespace {

TEST(Generators, TwoRegionStructure) {
  const std::uint32_t L = 4;
  const Digraph d = two_region(L, 3, 2, 7);
  EXPECT_EQ(d.vertex_count(), 2u * L * L);
  EXPECT_TRUE(is_strongly_connected(d));
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const std::uint32_t ring = v / L;
    // Ring i sends D_i = d - 1 extra arcs per vertex; in-degree on ring i+1 is D_i + 1.
    const std::uint32_t out_extra = ring < L ? 2 : 1;
    const std::uint32_t prev = (ring + 2 * L - 1) % (2 * L);
    const std::uint32_t in_extra = prev < L ? 2 : 1;
    EXPECT_EQ(d.out_degree(v), 1 + out_extra) << v;
    EXPECT_EQ(d.in_degree(v), 1 + in_extra) << v;
  }
  const Digraph again = two_region(L, 3, 2, 7);
  EXPECT_TRUE(std::equal(d.arcs().begin(), d.arcs().end(), again.arcs().begin()));
  EXPECT_THROW(two_region(2, 3, 2, 1), std::invalid_argument);
}

TEST(Generators, RootedTree) {
  const Digraph t = rooted_tree(3, 2);
  EXPECT_EQ(t.vertex_count(), 13u);
  EXPECT_TRUE(t.is_symmetric());
  EXPECT_EQ(t.out_degree(0), 3u);
  EXPECT_EQ(t.out_degree(1), 4u);
  EXPECT_EQ(t.out_degree(12), 1u);
}

TEST(Generators, TreeClosedVariants) {
  const Digraph a = tree_closed(3, 4, TreeVariant::a, 1);
  EXPECT_EQ(a.vertex_count(), 1u + 3 + 6 + 12 + 24);
  const Digraph c = tree_closed(3, 4, TreeVariant::c, 1);
  EXPECT_EQ(c.vertex_count(), a.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) EXPECT_EQ(c.out_degree(v), 3u);
  EXPECT_TRUE(c.is_symmetric());
  const Digraph b = tree_closed(3, 4, TreeVariant::b, 1);
  EXPECT_EQ(b.vertex_count(), a.vertex_count() - 12);
  EXPECT_TRUE(b.is_symmetric());
}

TEST(Generators, LatticesCyclesAndComplete) {
  const Digraph t = torus({4, 5});
  EXPECT_EQ(t.vertex_count(), 20u);
  for (VertexId v = 0; v < 20; ++v) EXPECT_EQ(t.out_degree(v), 4u);
  EXPECT_THROW(torus({2, 5}), std::invalid_argument);
  EXPECT_EQ(cycle(5).arc_count(), 10u);
  EXPECT_EQ(oriented_cycle(5).arc_count(), 5u);
  EXPECT_FALSE(oriented_cycle(5).has_symmetric_bonds());
  EXPECT_EQ(complete(5).arc_count(), 20u);
}

TEST(Generators, RandomRegular) {
  const Digraph g = random_regular(20, 3, 11);
  for (VertexId v = 0; v < 20; ++v) EXPECT_EQ(g.out_degree(v), 3u);
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_THROW(random_regular(5, 3, 1), std::invalid_argument);
}

TEST(Generators, FamilyNamesRoundTrip) {
  for (Family f : {Family::two_region, Family::rooted_tree, Family::tree_closed, Family::torus,
                   Family::cycle, Family::oriented_cycle, Family::complete,
                   Family::random_regular}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_THROW(family_from_string("lattice"), std::invalid_argument);
  GeneratorSpec spec;
  spec.family = Family::two_region;
  spec.L = 4;
  spec.d1 = 3;
  spec.d2 = 2;
  spec.seed = 7;
  EXPECT_EQ(generate(spec).vertex_count(), 32u);
}

}  // namespace
}  // namespace hetperc
