#include <gtest/gtest.h>

#include <random>

#include "artin/garside.hpp"
#include "artin/verify.hpp"

using namespace artin;

namespace {

TypeID T(Family f, int p) { return TypeID::make(f, p); }

CoxeterGraph named(const TypeID &t, std::vector<std::string> names) { return catalog_graph(t).renamed(names); }

struct A2 : ::testing::Test {
  CoxeterGraph g = named(T(Family::A, 2), {"s", "t"});
  Garside gs{g};
  ArtinWord w(const char *text) const { return parse_word(g, text); }
  PositiveWord p(const char *text) const { return to_positive(w(text)); }
  std::string spell(const NormalForm &nf) const { return format_word(g, gs.spelling(nf)); }
  WElem simple(const char *text) const { return gs.roots().from_word(p(text)); }
};

} // namespace

TEST(Words, RelationWord) {
  EXPECT_EQ(relation_word(0, 1, 3), (ArtinWord{{0, 1}, {1, 1}, {0, 1}}));
  EXPECT_EQ(relation_word(0, 1, 2), (ArtinWord{{0, 1}, {1, 1}}));
  EXPECT_EQ(relation_word(0, 1, 4).size(), 4u);
  EXPECT_THROW(relation_word(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(relation_word(0, 0, 3), std::invalid_argument);
}

TEST(Words, ParseAndFormat) {
  auto g = named(T(Family::A, 2), {"s", "t"});
  EXPECT_EQ(parse_word(g, "s t^-1 s^3"),
            (ArtinWord{{0, 1}, {1, -1}, {0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(parse_word(g, "  s^-2  "), (ArtinWord{{0, -1}, {0, -1}}));
  EXPECT_TRUE(parse_word(g, "s^0").empty());
  EXPECT_EQ(format_word(g, parse_word(g, "t s^-1")), "t s^-1");
  EXPECT_THROW(parse_word(g, "u"), DomainError);
  EXPECT_THROW(parse_word(g, "s^"), DomainError);
  EXPECT_THROW(parse_word(g, "s^x"), DomainError);
  EXPECT_EQ(degree(parse_word(g, "s s^-1")), 0);
  EXPECT_EQ(degree(parse_word(g, "s t s s t s")), 6);
}

TEST_F(A2, SimpleProduct) {
  EXPECT_EQ(gs.simple_product(gs.roots().identity(), simple("t")), simple("t"));
  EXPECT_EQ(gs.simple_product(simple("s"), simple("t")), simple("s t"));
  EXPECT_FALSE(gs.simple_product(simple("s"), simple("s")).has_value());
}

TEST_F(A2, LeftWeightedPairsExhaustive) {
  auto tab = verify::oracle::enumerate_group(gs.roots());
  const auto &rs = gs.roots();
  for (const auto &u : tab.elements)
    for (const auto &v : tab.elements) {
      auto [u2, v2] = gs.left_weighted_pair(u, v);
      EXPECT_TRUE(gs.is_left_weighted(u2, v2));
      EXPECT_EQ(rs.length(u2) + rs.length(v2), rs.length(u) + rs.length(v));
      // same monoid element: spelled products have the same normal form
      auto w1 = rs.reduced_word(u), w2 = rs.reduced_word(v);
      auto x1 = rs.reduced_word(u2), x2 = rs.reduced_word(v2);
      w1.insert(w1.end(), w2.begin(), w2.end());
      x1.insert(x1.end(), x2.begin(), x2.end());
      EXPECT_EQ(gs.normal_form(w1), gs.normal_form(x1));
      if (gs.is_left_weighted(u, v)) {
        EXPECT_EQ(std::make_pair(u2, v2), std::make_pair(u, v));
      }
    }
  const WElem u = simple("s");
  EXPECT_EQ(gs.left_weighted_pair(u, rs.identity()), std::make_pair(u, rs.identity()));
}

TEST_F(A2, NormalForms) {
  auto nf = gs.normal_form(p("s t s t"));
  EXPECT_EQ(nf.k, 1);
  ASSERT_EQ(nf.factors.size(), 1u);
  EXPECT_EQ(nf.factors[0], simple("t"));
  EXPECT_EQ(gs.normal_form(PositiveWord{}), NormalForm{});
  auto delta = gs.normal_form(p("s t s"));
  EXPECT_EQ(delta.k, 1);
  EXPECT_TRUE(delta.factors.empty());
  EXPECT_EQ(spell(gs.normal_form(p("t s t t"))), "s t s t");
}

TEST_F(A2, FundamentalElements) {
  EXPECT_EQ(gs.delta(), simple("s t s"));
  EXPECT_EQ(gs.roots().length(gs.delta()), 3);
  EXPECT_EQ(gs.fundamental_element(gen_bit(0)), simple("s"));
  Garside b2(named(T(Family::B, 2), {"s", "t"}));
  EXPECT_EQ(b2.roots().length(b2.delta()), 4);
  EXPECT_EQ(b2.delta(), b2.roots().from_word(std::vector<int>{0, 1, 0, 1}));
}

TEST_F(A2, Mu) {
  EXPECT_EQ(gs.mu(0), 1);
  EXPECT_EQ(gs.mu(1), 0);
  EXPECT_FALSE(gs.mu_is_identity());
  EXPECT_EQ(gs.mu_on_positive(p("s s t")), p("t t s"));
  Garside b2(catalog_graph(T(Family::B, 2)));
  EXPECT_TRUE(b2.mu_is_identity());
}

TEST(Garside, CenterExponent) {
  EXPECT_EQ(Garside(catalog_graph(T(Family::A, 1))).center_exponent(), 1);
  EXPECT_EQ(Garside(catalog_graph(T(Family::A, 2))).center_exponent(), 2);
  EXPECT_EQ(Garside(catalog_graph(T(Family::I2, 6))).center_exponent(), 1);
  EXPECT_THROW(Garside(CoxeterGraph({"a", "b"})).center_exponent(), std::invalid_argument);
}

TEST_F(A2, DeltaForms) {
  // positive input: no Delta^-1
  auto df = gs.delta_form(w("t s s"));
  EXPECT_EQ(df.k, 0);
  EXPECT_EQ(spell(df.p), "t s s");
  // s^-1 = Delta^-1 mu(t s) = Delta^-1 s t
  df = gs.delta_form(w("s^-1"));
  EXPECT_EQ(df.k, 1);
  EXPECT_EQ(spell(df.p), "s t");
  df = gs.delta_form(w("s s^-1"));
  EXPECT_EQ(df, DeltaForm{});
  EXPECT_TRUE(gs.equals(concat(inverse_word(gs.delta_word(1)), w("s t")), w("s^-1")));
}

TEST_F(A2, RightGcd) {
  EXPECT_TRUE(gs.right_gcd_positive(p("t s"), p("s t")).empty());
  EXPECT_EQ(gs.right_gcd_positive(p("s t"), p("t")), p("t"));
  EXPECT_EQ(gs.right_gcd_positive(p("s t s t"), p("s t s t")), gs.spelling(gs.normal_form(p("s t s t"))));
  // (s t s) and (t s): common right divisors are exactly t s
  EXPECT_EQ(format_word(g, gs.right_gcd_positive(p("s t s"), p("t s"))), "t s");
}

TEST(Garside, RightGcdAgainstDivisorEnumeration) {
  // Oracle: right divisors of small positive elements, listed by checking
  // every positive word x with x * d = p for all short d.
  const CoxeterGraph g = catalog_graph(T(Family::B, 2));
  Garside gs(g);
  std::mt19937_64 rng(41);
  const auto gens = verify::all_gens(g);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = to_positive(verify::random_word(rng, gens, 6, true));
    const auto b = to_positive(verify::random_word(rng, gens, 6, true));
    auto divides_right = [&](const PositiveWord &d, const PositiveWord &x) {
      // d right-divides x iff some positive y of length |x|-|d| has y d = x
      if (d.size() > x.size())
        return false;
      const std::size_t len = x.size() - d.size();
      std::size_t total = 1;
      for (std::size_t i = 0; i < len; ++i)
        total *= 2;
      const auto target = gs.normal_form(x);
      for (std::size_t code = 0; code < total; ++code) {
        PositiveWord y;
        for (std::size_t i = 0; i < len; ++i)
          y.push_back(static_cast<int>((code >> i) & 1));
        y.insert(y.end(), d.begin(), d.end());
        if (gs.normal_form(y) == target)
          return true;
      }
      return false;
    };
    const auto gcd = gs.right_gcd_positive(a, b);
    EXPECT_TRUE(divides_right(gcd, a));
    EXPECT_TRUE(divides_right(gcd, b));
    // no longer common divisor gcd' = s * gcd exists
    for (int s : gens) {
      PositiveWord longer{s};
      longer.insert(longer.end(), gcd.begin(), gcd.end());
      EXPECT_FALSE(divides_right(longer, a) && divides_right(longer, b));
    }
  }
}

TEST_F(A2, LatticeExamples) {
  const auto &rs = gs.roots();
  const WElem one = rs.identity();
  EXPECT_EQ(gs.join_simples(simple("s"), simple("t"), Side::Left), gs.delta());
  EXPECT_EQ(gs.join_simples(simple("s"), simple("t"), Side::Right), gs.delta());
  EXPECT_EQ(gs.meet_simples(simple("s t"), one, Side::Left), one);
  EXPECT_EQ(gs.meet_simples(simple("s t"), simple("s"), Side::Left), simple("s"));
  EXPECT_EQ(gs.meet_simples(simple("s t"), simple("t s"), Side::Left), one);
  for (int p = 5; p <= 9; ++p) {
    Garside i2(catalog_graph(T(Family::I2, p)));
    const auto lcm = i2.roots().from_word(to_positive(relation_word(0, 1, p)));
    EXPECT_EQ(i2.join_simples(i2.roots().generator(0), i2.roots().generator(1), Side::Left), lcm);
  }
}

TEST_F(A2, Charney) {
  auto cp = gs.charney(w("s^-1 t"));
  EXPECT_EQ(spell(cp.b), "t s");
  EXPECT_EQ(spell(cp.c), "s t");
  cp = gs.charney(w("s t^-1"));
  EXPECT_EQ(spell(cp.b), "s");
  EXPECT_EQ(spell(cp.c), "t");
  cp = gs.charney(w("t s s"));
  EXPECT_EQ(spell(cp.b), "t s s");
  EXPECT_TRUE(cp.c.factors.empty() && cp.c.k == 0);
}

TEST_F(A2, Equality) {
  EXPECT_TRUE(gs.equals(w("s t s"), w("t s t")));
  EXPECT_TRUE(gs.equals(power(w("s t"), 3), power(w("t s"), 3)));
  EXPECT_FALSE(gs.equals(w("s"), w("t")));
  EXPECT_TRUE(gs.equals(w("s s^-1 t"), w("t")));
  EXPECT_EQ(degree(gs.delta_word(1)), 3);
  EXPECT_EQ(degree(gs.delta_word(2)), 6);
}

TEST(Garside, DefiningRelationsInEveryRankTwoType) {
  for (int p = 2; p <= 12; ++p) {
    CoxeterGraph g({"s", "t"});
    if (p > 2)
      g.set_label(0, 1, p);
    Garside gs(g);
    EXPECT_TRUE(gs.equals(relation_word(0, 1, p), relation_word(1, 0, p))) << p;
    if (p > 2) {
      EXPECT_FALSE(gs.equals(relation_word(0, 1, p - 1), relation_word(1, 0, p - 1))) << p;
    }
  }
}

TEST(Garside, Support) {
  Garside a3(catalog_graph(T(Family::A, 3)));
  EXPECT_EQ(a3.support(a3.spelling(NormalForm{1, {}})), a3.roots().all_generators());
  EXPECT_EQ(a3.support(PositiveWord{1}), gen_bit(1));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto w = verify::random_word(rng, {0, 1}, 10, true);
    auto shuffled = verify::perturb(rng, a3.graph(), w, 8, true);
    const GenSet expected = a3.support(to_positive(w));
    EXPECT_EQ(a3.support(to_positive(shuffled)), expected);
    EXPECT_EQ(expected & ~(gen_bit(0) | gen_bit(1)), 0u);
  }
}

TEST(Garside, PowerCheckExamples) {
  Garside b2(catalog_graph(T(Family::B, 2)));
  EXPECT_TRUE(b2.power_check_coxeter_element(std::vector<int>{0, 1}));
  EXPECT_TRUE(b2.power_check_coxeter_element(std::vector<int>{1, 0}));
  Garside a2(catalog_graph(T(Family::A, 2)));
  EXPECT_TRUE(a2.power_check_coxeter_element(std::vector<int>{0, 1}));
  Garside h3(catalog_graph(T(Family::H, 3)));
  EXPECT_TRUE(h3.power_check_coxeter_element(std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(h3.equals(power(to_artin(std::vector<int>{0, 1, 2}), 5), h3.delta_word(1)));
  EXPECT_THROW(h3.power_check_coxeter_element(std::vector<int>{0, 0, 2}), std::invalid_argument);
  EXPECT_THROW(h3.power_check_coxeter_element(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(Garside, NormalFormInvariantsOnRandomWords) {
  std::mt19937_64 rng(13);
  for (const auto &t : {T(Family::A, 3), T(Family::B, 3), T(Family::H, 3), T(Family::D, 4)}) {
    Garside gs(catalog_graph(t));
    const auto gens = verify::all_gens(gs.graph());
    for (int i = 0; i < 100; ++i) {
      const auto w = to_positive(verify::random_word(rng, gens, 25, true));
      const auto nf = gs.normal_form(w);
      for (std::size_t j = 0; j < nf.factors.size(); ++j) {
        EXPECT_NE(nf.factors[j], gs.roots().identity());
        EXPECT_NE(nf.factors[j], gs.delta());
        if (j + 1 < nf.factors.size()) {
          EXPECT_TRUE(gs.is_left_weighted(nf.factors[j], nf.factors[j + 1]));
        }
      }
      const auto spelled = gs.spelling(nf);
      EXPECT_EQ(spelled.size(), w.size());
      EXPECT_EQ(gs.normal_form(spelled), nf);
      EXPECT_EQ(gs.roots().from_word(spelled), gs.roots().from_word(w));
    }
  }
}

TEST(Garside, CharneyDegreeAndReconstruction) {
  std::mt19937_64 rng(19);
  Garside gs(catalog_graph(T(Family::F, 4)));
  const auto gens = verify::all_gens(gs.graph());
  for (int i = 0; i < 100; ++i) {
    const ArtinWord w = verify::random_word(rng, gens, 15);
    const auto cp = gs.charney(w);
    const auto b = gs.spelling(cp.b), c = gs.spelling(cp.c);
    EXPECT_EQ(static_cast<int>(b.size()) - static_cast<int>(c.size()), degree(w));
    EXPECT_EQ(gs.right_divisor_letters(b) & gs.right_divisor_letters(c), 0u);
    EXPECT_TRUE(gs.equals_via_delta(gs.to_word(cp), w));
    EXPECT_EQ(gs.charney(gs.to_word(cp)), cp);
  }
}
