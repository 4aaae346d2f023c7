#include <gtest/gtest.h>

#include <random>

#include "artin/coxgroup.hpp"
#include "artin/verify.hpp"

using namespace artin;

namespace {

TypeID T(Family f, int p) { return TypeID::make(f, p); }

std::vector<int> random_gen_word(std::mt19937_64 &rng, int n, int len) {
  std::vector<int> w;
  for (int i = 0; i < len; ++i)
    w.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
  return w;
}

} // namespace

TEST(CoxGroup, RootCounts) {
  EXPECT_EQ(RootSystem(catalog_graph(T(Family::A, 2))).num_roots(), 6);
  EXPECT_EQ(RootSystem(catalog_graph(T(Family::I2, 5))).num_roots(), 10);
  RootSystem a1a1(CoxeterGraph({"a", "b"}));
  EXPECT_EQ(a1a1.num_roots(), 4);
  // orthogonal: each reflection fixes the other simple root
  EXPECT_EQ(a1a1.generator(0)[1], 1);
  for (const auto &t : {T(Family::A, 5), T(Family::B, 4), T(Family::D, 5), T(Family::E, 6), T(Family::E, 7),
                        T(Family::F, 4), T(Family::H, 3), T(Family::H, 4), T(Family::I2, 12)}) {
    RootSystem rs(catalog_graph(t));
    EXPECT_EQ(rs.num_roots(), t.root_count()) << t;
    EXPECT_EQ(rs.length(rs.longest_element()), rs.num_positive()) << t;
  }
}

TEST(CoxGroup, RootsAreDistinctAndPaired) {
  RootSystem rs(catalog_graph(T(Family::H, 3)));
  std::set<std::vector<AlgNum>> seen;
  for (int i = 0; i < rs.num_roots(); ++i) {
    EXPECT_TRUE(seen.insert(rs.root(i)).second);
    EXPECT_EQ(rs.negate(rs.negate(i)), i);
  }
  for (int s = 0; s < rs.rank(); ++s)
    for (int i = 0; i < rs.num_positive(); ++i)
      if (i != s) {
        EXPECT_TRUE(rs.is_positive(rs.generator(s)[i]));
      }
}

TEST(CoxGroup, RejectsNonSpherical) {
  auto tri = CoxeterGraph::parse("vertices a b c\nedge a b 3\nedge b c 3\nedge a c 3");
  EXPECT_THROW(RootSystem{tri}, NonSphericalError);
  auto inf = CoxeterGraph::parse("vertices a b\nedge a b inf");
  EXPECT_THROW(RootSystem{inf}, NonSphericalError);
}

TEST(CoxGroup, WordsAndLength) {
  RootSystem rs(catalog_graph(T(Family::A, 2)));
  EXPECT_EQ(rs.from_word(std::vector<int>{}), rs.identity());
  EXPECT_EQ(rs.from_word(std::vector<int>{0, 0}), rs.identity());
  EXPECT_EQ(rs.from_word(std::vector<int>{0, 1, 0}), rs.from_word(std::vector<int>{1, 0, 1}));
  EXPECT_EQ(rs.from_names({"s1", "s2"}), rs.from_word(std::vector<int>{0, 1}));
  EXPECT_THROW(rs.from_names({"q"}), DomainError);
  EXPECT_EQ(rs.length(rs.identity()), 0);
  EXPECT_EQ(rs.length(rs.generator(1)), 1);
  EXPECT_EQ(rs.length(rs.longest_element()), 3);
  EXPECT_EQ(rs.reduced_word(rs.longest_element()), (std::vector<int>{0, 1, 0}));
  EXPECT_TRUE(rs.reduced_word(rs.identity()).empty());
}

TEST(CoxGroup, Descents) {
  RootSystem rs(catalog_graph(T(Family::A, 2)));
  EXPECT_EQ(rs.left_descents(rs.identity()), 0u);
  EXPECT_EQ(rs.right_descents(rs.identity()), 0u);
  EXPECT_EQ(rs.left_descents(rs.generator(0)), gen_bit(0));
  EXPECT_EQ(rs.right_descents(rs.generator(0)), gen_bit(0));
  EXPECT_EQ(rs.left_descents(rs.longest_element()), rs.all_generators());
  EXPECT_EQ(rs.right_descents(rs.longest_element()), rs.all_generators());
  const WElem st = rs.from_word(std::vector<int>{0, 1});
  EXPECT_EQ(rs.left_descents(st), gen_bit(0));
  EXPECT_EQ(rs.right_descents(st), gen_bit(1));
}

TEST(CoxGroup, LongestElements) {
  RootSystem a1(CoxeterGraph({"s"}));
  EXPECT_EQ(a1.longest_element(), a1.generator(0));
  RootSystem b2(catalog_graph(T(Family::B, 2)));
  EXPECT_EQ(b2.longest_element(), b2.from_word(std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(b2.length(b2.longest_element()), 4);
}

TEST(CoxGroup, PrefixOrder) {
  RootSystem rs(catalog_graph(T(Family::A, 2)));
  const WElem s = rs.generator(0);
  EXPECT_TRUE(rs.prefix_le(s, rs.from_word(std::vector<int>{0, 1})));
  EXPECT_FALSE(rs.prefix_le(s, rs.from_word(std::vector<int>{1, 0})));
  EXPECT_TRUE(rs.suffix_le(s, rs.from_word(std::vector<int>{1, 0})));
  for (const auto &w : {rs.identity(), s, rs.longest_element()}) {
    EXPECT_TRUE(rs.prefix_le(rs.identity(), w));
    EXPECT_TRUE(rs.prefix_le(w, w));
  }
}

// Exhaustive facts checked against Cayley-graph enumeration.
TEST(CoxGroup, ExhaustiveAgainstEnumeration) {
  for (const auto &t : {T(Family::A, 1), T(Family::A, 2), T(Family::A, 3), T(Family::A, 4), T(Family::B, 2),
                        T(Family::B, 3), T(Family::B, 4), T(Family::D, 4), T(Family::H, 3), T(Family::I2, 5),
                        T(Family::I2, 12)}) {
    RootSystem rs(catalog_graph(t));
    auto tab = verify::oracle::enumerate_group(rs);
    int full_descent = 0;
    for (int x = 0; x < static_cast<int>(tab.elements.size()); ++x) {
      const WElem &w = tab.elements[static_cast<std::size_t>(x)];
      ASSERT_EQ(rs.length(w), tab.length(x)) << t;
      EXPECT_EQ(rs.length(rs.inverse(w)), rs.length(w));
      auto word = rs.reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), rs.length(w));
      EXPECT_EQ(rs.from_word(word), w);
      if (rs.right_descents(w) == rs.all_generators()) {
        ++full_descent;
        EXPECT_EQ(w, rs.longest_element());
      }
    }
    EXPECT_EQ(full_descent, 1) << t;
    EXPECT_EQ(tab.length(tab.index.at(rs.longest_element())), rs.num_positive());
    const WElem &w0 = rs.longest_element();
    EXPECT_EQ(rs.multiply(w0, w0), rs.identity());
    for (int s = 0; s < rs.rank(); ++s) {
      const WElem conj = rs.multiply(rs.multiply(w0, rs.generator(s)), w0);
      const int img = rs.simple_image(w0, s);
      ASSERT_GE(img, 0);
      EXPECT_EQ(conj, rs.generator(img));
    }
  }
}

TEST(CoxGroup, RelationsHoldInW) {
  std::mt19937_64 rng(29);
  for (const auto &t : {T(Family::B, 3), T(Family::H, 3), T(Family::D, 4), T(Family::F, 4)}) {
    const CoxeterGraph g = catalog_graph(t);
    RootSystem rs(g);
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_gen_word(rng, rs.rank(), 12);
      const WElem base = rs.from_word(w);
      // insert s s somewhere
      auto v = w;
      const int s = static_cast<int>(rng() % static_cast<std::uint64_t>(rs.rank()));
      const auto pos = static_cast<std::ptrdiff_t>(rng() % (v.size() + 1));
      v.insert(v.begin() + pos, {s, s});
      EXPECT_EQ(rs.from_word(v), base);
      // braid move
      auto u = verify::perturb(rng, g, to_artin(w), 3, true);
      EXPECT_EQ(rs.from_word(to_positive(u)), base);
      // reduced words are reduced and round-trip
      auto red = rs.reduced_word(base);
      EXPECT_EQ(rs.from_word(red), base);
      EXPECT_EQ(rs.reduced_word(rs.from_word(red)).size(), red.size());
    }
  }
}
