#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semicayley/semicayley.hpp"

using namespace semicayley;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

/// Closure of a generating set by breadth-first multiplication.
std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = x.then(g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(Permutation, Basics) {
  const auto p = cyc(5, {{0, 3, 1}, {2, 4}});
  EXPECT_TRUE(p.then(p.inverse()).is_identity());
  EXPECT_EQ(Permutation::identity(4).images(), (std::vector<Point>{0, 1, 2, 3}));
  const auto c = cyc(4, {{0, 1, 2, 3}});
  EXPECT_EQ((c * c).to_cycle_string(), "(0 2)(1 3)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidArgumentError);
  // then(): apply left first.
  const auto a = cyc(3, {{0, 1}}), b = cyc(3, {{1, 2}});
  EXPECT_EQ(a.then(b)[0], 2u);
  EXPECT_EQ(a.conjugate_by(b), cyc(3, {{0, 2}}));
}

TEST(PermGroup, Orders) {
  EXPECT_EQ(PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}})}).order(), 5);
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<Point> full(n);
    std::iota(full.begin(), full.end(), Point{0});
    const PermGroup s(n, {cyc(n, {{0, 1}}), cyc(n, {full})});
    BigInt fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(s.order(), fact) << n;
  }
  EXPECT_EQ(PermGroup::trivial(4).order(), 1);
}

TEST(PermGroup, AutomorphismGroupsOfKnownGraphs) {
  const Graph c8 = build_sc_graph(golden_cases()[2].spec);  // the 8-cycle instance
  EXPECT_EQ(automorphism_group(c8).order(), 16);
  const Graph petersen = build_gp(5, 2);
  const PermGroup a(10, automorphism_group(petersen).generators());
  EXPECT_EQ(a.order(), 120);
  EXPECT_EQ(oracle::backtrack_aut_order(petersen), 120u);
}

TEST(PermGroup, Membership) {
  EXPECT_TRUE(PermGroup(2, {cyc(2, {{0, 1}})}).contains(cyc(2, {{0, 1}})));
  EXPECT_FALSE(PermGroup(3, {cyc(3, {{0, 1, 2}})}).contains(cyc(3, {{0, 1}})));
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const PermGroup aut = automorphism_group(c4);
  for (const auto& p : oracle::brute_automorphisms(c4)) {
    EXPECT_TRUE(aut.contains(Permutation(std::vector<Point>(p.begin(), p.end()))));
  }
  EXPECT_TRUE(aut.contains(cyc(4, {{0, 2}})));
  EXPECT_FALSE(aut.contains(cyc(4, {{0, 1}})));
  EXPECT_THROW(aut.contains(Permutation::identity(5)), InvalidArgumentError);
}

TEST(PermGroup, RandomSiftAgreesWithClosure) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + trial % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> im(n);
      std::iota(im.begin(), im.end(), Point{0});
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    const PermGroup g(n, gens);
    const auto elems = closure(n, gens);
    EXPECT_EQ(g.order(), elems.size());
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    do {
      const Permutation p(im);
      EXPECT_EQ(g.contains(p), elems.count(p) == 1);
    } while (std::next_permutation(im.begin(), im.end()));
  }
}

TEST(PermGroup, OrbitStabilizer) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> im(n);
      std::iota(im.begin(), im.end(), Point{0});
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    const PermGroup g(n, gens);
    for (Point a = 0; a < n; ++a) {
      const PermGroup st = g.point_stabilizer(a);
      EXPECT_EQ(st.order() * g.orbit(a).size(), g.order());
      for (const auto& s : st.generators()) EXPECT_EQ(s[a], a);
    }
  }
}

TEST(PermGroup, OrbitsAndSemiregularity) {
  EXPECT_EQ(PermGroup::trivial(3).orbits(), (std::vector<std::vector<Point>>{{0}, {1}, {2}}));
  const auto spec = make_spec({3}, {{1}, {2}}, {});
  const PermGroup rg = build_RG(spec);
  EXPECT_EQ(rg.orbits().size(), 2u);
  EXPECT_TRUE(rg.is_semiregular());
  EXPECT_EQ(rg.order(), 3);
  EXPECT_TRUE(PermGroup(4, {cyc(4, {{0, 1, 2, 3}})}).is_transitive());
  const Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(automorphism_group(p3).is_semiregular());
  EXPECT_FALSE(PermGroup(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}).is_semiregular());
  EXPECT_TRUE(PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}})}).point_stabilizer(2).order() == 1);
}

TEST(PermGroup, PrismStabilizerHasOrderTwo) {
  for (int k : {3, 5, 6, 7, 8}) {
    EXPECT_EQ(automorphism_group(build_gp(k, 1)).point_stabilizer(0).order(), 2) << k;
  }
}

TEST(PermGroup, Normality) {
  const PermGroup s3(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  EXPECT_TRUE(is_normal_subgroup(s3, s3));
  EXPECT_TRUE(is_normal_subgroup(PermGroup(3, {cyc(3, {{0, 1, 2}})}), s3));
  EXPECT_FALSE(is_normal_subgroup(PermGroup(3, {cyc(3, {{0, 1}})}), s3));
  EXPECT_THROW(is_normal_subgroup(PermGroup(4, {cyc(4, {{0, 3}})}), PermGroup(4, {cyc(4, {{0, 1}})})),
               PreconditionError);
  const auto spec = make_spec({2, 2}, {{1, 0}, {0, 1}}, {{1, 1}, {0, 1}});
  EXPECT_FALSE(is_normal_subgroup(build_RG(spec), automorphism_group(build_sc_graph(spec))));
}

TEST(PermGroup, NormalityMatchesExhaustiveConjugation) {
  // Every subgroup generated by one or two elements of S4, against direct conjugation.
  std::vector<Permutation> all;
  std::vector<Point> im{0, 1, 2, 3};
  do all.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  const PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); j += 5) {
      const auto h = closure(4, {all[i], all[j]});
      bool normal = true;
      for (const auto& g : all) {
        for (const auto& x : h) normal = normal && h.count(x.conjugate_by(g));
      }
      EXPECT_EQ(is_normal_subgroup(PermGroup(4, {all[i], all[j]}), s4), normal);
    }
  }
}

TEST(PermGroup, ElementsListing) {
  const PermGroup g(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  const auto e = g.elements();
  EXPECT_EQ(e.size(), 8u);
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  EXPECT_EQ(std::set<Permutation>(e.begin(), e.end()), closure(4, g.generators()));
}
