#include <gtest/gtest.h>

#include <random>

#include "artin/invariants.hpp"
#include "artin/verify.hpp"

using namespace artin;

namespace {

TypeID T(Family f, int p) { return TypeID::make(f, p); }

InvariantVector V(int cd, int mf, int rkAb) { return {cd, mf, rkAb}; }

} // namespace

static_assert(table1::agrees_with_coxeter_numbers());
static_assert(mf(Family::E, 7) == 9 && mf(Family::H, 4) == 15);

TEST(Invariants, Cd) {
  EXPECT_EQ(cd(catalog_graph(T(Family::A, 3))), 3);
  EXPECT_EQ(cd(catalog_graph(T(Family::A, 1))), 1);
  EXPECT_EQ(cd(CoxeterGraph::parse("vertices a b c\nedge a b 3")), 3);
  EXPECT_THROW(cd(CoxeterGraph::parse("vertices a b\nedge a b inf")), NonSphericalError);
}

TEST(Invariants, MfTable) {
  for (int n = 2; n <= 9; ++n) {
    EXPECT_EQ(mf(T(Family::A, n)), n + 1);
    EXPECT_EQ(mf(T(Family::B, n)), n);
  }
  EXPECT_EQ(mf(T(Family::A, 1)), 1);
  EXPECT_EQ(mf(T(Family::D, 4)), 3);
  EXPECT_EQ(mf(T(Family::D, 5)), 8);
  EXPECT_EQ(mf(T(Family::D, 8)), 7);
  EXPECT_EQ(mf(T(Family::E, 6)), 12);
  EXPECT_EQ(mf(T(Family::E, 7)), 9);
  EXPECT_EQ(mf(T(Family::E, 8)), 15);
  EXPECT_EQ(mf(T(Family::F, 4)), 6);
  EXPECT_EQ(mf(T(Family::H, 3)), 5);
  EXPECT_EQ(mf(T(Family::H, 4)), 15);
  EXPECT_EQ(mf(T(Family::I2, 8)), 4);
  EXPECT_EQ(mf(T(Family::I2, 9)), 9);
}

TEST(Invariants, RkAbAndRkZ) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(rkAb(catalog_graph(T(Family::A, n))), 1);
  EXPECT_EQ(rkAb(catalog_graph(T(Family::B, 2))), 2);
  EXPECT_EQ(rkAb(catalog_graph(T(Family::F, 4))), 2);
  EXPECT_EQ(rkZ(catalog_graph(T(Family::E, 7))), 1);
  EXPECT_EQ(rkZ(CoxeterGraph::parse("vertices a b c\nedge a b 3")), 2);
  EXPECT_EQ(rkZ(CoxeterGraph::parse("vertices a b c d")), 4);
}

TEST(Invariants, ComponentProfiles) {
  auto b3 = component_profile(catalog_graph(T(Family::B, 3)));
  ASSERT_EQ(b3.size(), 1u);
  EXPECT_EQ(b3[0].type, T(Family::B, 3));
  EXPECT_EQ(b3[0].invariants, V(3, 3, 2));

  auto a2a1 = component_profile(CoxeterGraph::parse("vertices a b c\nedge a b 3"));
  ASSERT_EQ(a2a1.size(), 2u);
  EXPECT_EQ(a2a1[0].invariants, V(2, 3, 1));
  EXPECT_EQ(a2a1[0].vertices, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(a2a1[1].invariants, V(1, 1, 1));

  auto i5 = component_profile(catalog_graph(T(Family::I2, 5)));
  EXPECT_EQ(i5[0].invariants, V(2, 5, 1));

  try {
    component_profile(CoxeterGraph::parse("vertices a b c d\nedge b c 3\nedge c d 3\nedge b d 3"));
    ADD_FAILURE();
  } catch (const NonSphericalError &e) {
    EXPECT_EQ(e.vertices(), (std::vector<std::string>{"b", "c", "d"}));
  }
}

TEST(Invariants, DecideIsoExamples) {
  auto d = decide_iso(CoxeterGraph::parse("vertices a b c\nedge a b 3"),
                      CoxeterGraph::parse("vertices x y z\nedge y z 3"));
  EXPECT_TRUE(d.isomorphic);
  EXPECT_EQ(d.rkZ_left, 2);
  EXPECT_EQ(d.rkZ_right, 2);

  EXPECT_TRUE(decide_iso(CoxeterGraph::parse("vertices a b\nedge a b 4"), catalog_graph(T(Family::B, 2))).isomorphic);

  d = decide_iso(catalog_graph(T(Family::D, 4)), catalog_graph(T(Family::B, 4)));
  EXPECT_FALSE(d.isomorphic);
  EXPECT_NE(d.explanation.find("mf: 3 vs 4"), std::string::npos) << d.explanation;

  d = decide_iso(catalog_graph(T(Family::A, 3)), catalog_graph(T(Family::A, 4)));
  EXPECT_FALSE(d.isomorphic);
  EXPECT_NE(d.explanation.find("cd: 3 vs 4"), std::string::npos) << d.explanation;

  EXPECT_THROW(decide_iso(catalog_graph(T(Family::A, 2)), CoxeterGraph::parse("vertices a b\nedge a b inf")),
               NonSphericalError);
}

TEST(Invariants, DecideIsoReflexiveSymmetricRenamingInvariant) {
  std::mt19937_64 rng(31);
  const auto types = verify::small_connected_types(9);
  for (int trial = 0; trial < 60; ++trial) {
    auto t1 = types[rng() % types.size()], t2 = types[rng() % types.size()];
    auto g1 = verify::disjoint_union({catalog_graph(t1, "a"), catalog_graph(t2, "b")});
    auto g2 = verify::shuffled(g1, rng, "r");
    EXPECT_TRUE(decide_iso(g1, g1).isomorphic);
    EXPECT_TRUE(decide_iso(g1, g2).isomorphic);
    auto t3 = types[rng() % types.size()];
    auto g3 = catalog_graph(t3);
    EXPECT_EQ(decide_iso(g1, g3).isomorphic, decide_iso(g3, g1).isomorphic);
    EXPECT_EQ(decide_iso(g2, g3).isomorphic, decide_iso(g1, g3).isomorphic);
    EXPECT_EQ(decide_iso(g1, g3).isomorphic, graphs_equal(g1, g3));
  }
}

TEST(Invariants, Separation) {
  auto types = verify::small_connected_types(12);
  EXPECT_TRUE(separation_check(types));
  EXPECT_EQ(invariant_vector(T(Family::A, 3)), V(3, 4, 1));
  EXPECT_EQ(invariant_vector(T(Family::B, 3)), V(3, 3, 2));
  std::vector<TypeID> one{T(Family::A, 1)};
  EXPECT_TRUE(separation_check(one));
  // a repeated entry always collides
  std::vector<TypeID> dup{T(Family::A, 2), T(Family::A, 2)};
  EXPECT_FALSE(separation_check(dup));
}

TEST(Invariants, CoxeterNumberFromRootSystem) {
  for (const auto &t : verify::table1_grid()) {
    RootSystem rs(catalog_graph(t));
    EXPECT_EQ(t.coxeter_number() * rs.rank(), 2 * rs.length(rs.longest_element())) << t;
  }
}
