#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "semicayley/semicayley.hpp"

using namespace semicayley;

TEST(Translations, FormSemiregularSubgroup) {
  const auto spec = make_spec({3}, {{1}, {2}}, {{1}, {2}});
  const PermGroup rg = build_RG(spec);
  EXPECT_EQ(rg.order(), 3);
  EXPECT_EQ(rg.orbits().size(), 2u);
  EXPECT_TRUE(rg.is_semiregular());
  const Graph g = build_sc_graph(spec);
  for (const auto& e : spec.group().elements()) EXPECT_TRUE(g.is_automorphism(translation(spec, e)));
}

TEST(Lifts, XAndY) {
  // Z2^2 x Z4, R = two involutions, L = {±c} with o(c) = 4: element orders differ, so Y is empty.
  const auto spec = make_spec({2, 2, 4}, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 0, 3}});
  EXPECT_TRUE(compute_Y(spec).empty());
  std::size_t oracle_x = 0;
  for (const auto& map : oracle::brute_group_automorphisms({2, 2, 4})) {
    const auto& g = spec.group();
    auto fixes = [&](const std::vector<Element>& s) {
      std::vector<Element> img;
      for (const auto& e : s) img.push_back(g.element_at(map[g.index_of(e)]));
      std::sort(img.begin(), img.end());
      return img == s;
    };
    oracle_x += fixes(spec.right()) && fixes(spec.left());
  }
  EXPECT_EQ(compute_X(spec).size(), oracle_x);

  // Prisms: a -> ±a and the side swap, so |Aut(G;R,L)| = 4.
  for (int n : {5, 6, 7, 9}) {
    const auto prism = make_spec({n}, {{1}, {n - 1}}, {{1}, {n - 1}});
    EXPECT_EQ(aut_GRL(prism).order(), 4) << n;
    EXPECT_EQ(compute_X(prism).size(), 2u);
    EXPECT_EQ(compute_Y(prism).size(), 2u);
  }
}

TEST(Normality, Examples) {
  EXPECT_FALSE(is_normal_sc(make_spec({4}, {{1}, {3}}, {{1}, {3}})));
  EXPECT_TRUE(is_normal_sc(make_spec({5}, {{1}, {4}}, {{1}, {4}})));
  EXPECT_TRUE(is_normal_sc(make_spec({6}, {{1}, {5}}, {{3}})));
  EXPECT_EQ(evaluate(make_spec({6}, {{1}, {5}}, {{3}})).aut_order, 12);
  EXPECT_THROW(is_normal_sc(make_spec({4}, {{2}}, {})), PreconditionError);
}

TEST(Normality, MatchesConjugationOracleOnSmallGroups) {
  for (const auto& factors : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    const AbelianGroup g(factors);
    const auto subsets = oracle::inverse_closed_subsets(g);
    for (const auto& r : subsets) {
      for (const auto& l : subsets) {
        if (r.empty() && l.empty()) continue;
        const ConnectionSpec spec(g, r, l);
        if (!spec.is_connected()) continue;
        EXPECT_EQ(is_normal_sc(spec), oracle::brute_normal(spec)) << spec.to_string();
      }
    }
  }
}

TEST(Verdict, StructuralFields) {
  const Verdict v = evaluate(make_spec({5}, {{1}, {4}}, {{2}, {3}}));
  EXPECT_EQ(v.aut_order, 120);
  EXPECT_FALSE(v.normal);
  EXPECT_TRUE(v.arc_transitive);
  EXPECT_TRUE(v.lifts_in_aut);
  EXPECT_TRUE(v.order_identity);
  EXPECT_EQ(v.theorem_case(), 6);
  EXPECT_EQ(v.normalizer_order, BigInt(5) * (v.x_size + v.y_size));
  const auto j = to_json(v);
  EXPECT_EQ(j["aut_order"], 120);
  EXPECT_EQ(j["normal"], false);
}

TEST(ColourPreserving, SimpleMaps) {
  const AbelianGroup g({4, 2});
  const Element a{{1, 0}}, b{{1, 1}};
  std::vector<std::size_t> inv(g.order()), shift(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    inv[x] = g.neg_index(x);
    shift[x] = g.add_index(x, g.index_of(Element{{3, 1}}));
  }
  EXPECT_TRUE(is_color_preserving(g, a, b, shift));
  EXPECT_TRUE(is_color_preserving(g, a, b, inv));
  EXPECT_THROW(is_color_preserving(g, a, b, std::vector<std::size_t>(3, 0)), InvalidArgumentError);
}

TEST(ColourPreserving, ExhaustiveSearchOnZ4xZ2) {
  const AbelianGroup g({4, 2});
  const Element a{{1, 0}}, b{{1, 1}};
  std::vector<std::size_t> sigma(g.order());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t preserving = 0, non_automorphisms = 0;
  do {
    const bool got = is_color_preserving(g, a, b, sigma);
    ASSERT_EQ(got, oracle::colour_preserving(g, {a, b}, sigma));
    if (!got) continue;
    ++preserving;
    if (sigma[0] == 0 && !is_group_automorphism(g, sigma)) ++non_automorphisms;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  EXPECT_GT(preserving, 0u);
  EXPECT_GT(non_automorphisms, 0u);
}

TEST(GroupAutomorphismCheck, AgreesWithEnumeration) {
  const AbelianGroup g({4, 2});
  std::vector<std::size_t> sigma(g.order());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t count = 0;
  do count += is_group_automorphism(g, sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  EXPECT_EQ(count, oracle::brute_group_automorphisms({4, 2}).size());
}

TEST(Classifier, Examples) {
  EXPECT_EQ(classify_theorem1(make_spec({2}, {{1}}, {{1}})).lowest(), 1);
  EXPECT_EQ(classify_theorem1(make_spec({2, 2, 2}, {{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}})).lowest(), 2);
  EXPECT_EQ(classify_theorem1(make_spec({4}, {{1}, {3}}, {{1}, {3}})).lowest(), 3);
  EXPECT_EQ(classify_theorem1(make_spec({2, 2, 4}, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 0, 3}})).lowest(), 4);
  EXPECT_EQ(classify_theorem1(make_spec({4, 2}, {{1, 0}, {3, 0}}, {{0, 1}, {2, 1}})).lowest(), 5);
  EXPECT_EQ(classify_theorem1(make_spec({8}, {{1}, {7}}, {{3}, {5}})).lowest(), 6);
  EXPECT_EQ(classify_theorem1(make_spec({10, 2}, {{1, 0}, {9, 0}}, {{3, 1}, {7, 1}})).lowest(), 7);
  EXPECT_EQ(classify_theorem1(make_spec({4, 2}, {{1, 0}, {3, 0}}, {{1, 1}, {3, 1}})).lowest(), 8);
  EXPECT_FALSE(classify_theorem1(make_spec({6}, {{1}, {5}}, {{2}, {4}})).exceptional());
  // Orientation does not matter.
  const auto spec = make_spec({2, 2, 4}, {{0, 0, 1}, {0, 0, 3}}, {{1, 0, 0}, {0, 1, 0}});
  const auto c = classify_theorem1(spec);
  ASSERT_TRUE(c.exceptional());
  EXPECT_EQ(c.lowest(), 4);
  EXPECT_TRUE(c.matches.front().swapped);
}

TEST(Classifier, GeneratorSearchIsBasisIndependent) {
  // Family 6 over Z8 with a = 3: R = {±3}, L = {±1} = {±3·3}.
  EXPECT_EQ(classify_theorem1(make_spec({8}, {{3}, {5}}, {{1}, {7}})).lowest(), 6);
  // Family 7 written in another basis of Z10 x Z2.
  EXPECT_EQ(classify_theorem1(make_spec({10, 2}, {{3, 1}, {7, 1}}, {{1, 0}, {9, 0}})).lowest(), 7);
}
