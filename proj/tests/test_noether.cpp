#include <catch_amalgamated.hpp>

#include "goodsg/noether.hpp"
#include "oracles.hpp"

using namespace goodsg;

namespace {

GoodSemigroup node() { return GoodSemigroup({1, 1}, {{0, 0}, {1, 1}}, "node"); }
GoodSemigroup tacnode() { return GoodSemigroup({2, 2}, {{0, 0}, {1, 1}, {2, 2}}, "tacnode"); }

std::vector<ValueVector> ints(std::initializer_list<Int> xs) {
  std::vector<ValueVector> out;
  for (Int x : xs) out.push_back(ValueVector{x});
  return out;
}

}  // namespace

TEST_CASE("K° + K°") {
  CHECK(sumset_k2(GoodSemigroup::from_generators({3, 4, 5})) == ints({0, 1, 2}));
  CHECK(sumset_k2(GoodSemigroup::from_generators({3, 5, 7})) == ints({0, 2, 3, 4, 5, 6}));
  CHECK(sumset_k2(node()) == std::vector<ValueVector>{{0, 0}});
}

TEST_CASE("A_l") {
  CHECK(a_l_set(GoodSemigroup::from_generators({3, 5, 7}), 1) == ints({2, 3}));
  CHECK(a_l_set(GoodSemigroup::from_generators({4, 9, 10, 11}), 1) == ints({4, 5, 6}));
  CHECK(a_l_set(tacnode(), 1) == std::vector<ValueVector>{{1, 1}});
  CHECK(a_l_set(tacnode(), 2) == std::vector<ValueVector>{{0, 0}});
}

TEST_CASE("chain for <3,5,7>") {
  const auto S = GoodSemigroup::from_generators({3, 5, 7});
  const auto c = dp_chain_search(S);
  REQUIRE(c.has_value());
  CHECK(c->points == ints({5, 6}));
  CHECK(c->witnesses[0] == Witness{{2}, {3}});
  CHECK(c->witnesses[1] == Witness{{3}, {3}});
  CHECK(verify_certificate(S, *c));
}

TEST_CASE("chain for <4,9,10,11>") {
  const auto S = GoodSemigroup::from_generators({4, 9, 10, 11});
  const auto c = dp_chain_search(S);
  REQUIRE(c.has_value());
  CHECK(c->points == ints({8, 9, 10, 11}));
  CHECK(c->witnesses == std::vector<Witness>{{{2}, {6}}, {{4}, {5}}, {{4}, {6}}, {{5}, {6}}});
  CHECK(verify_certificate(S, *c));

  const auto rep = noether_check(S);
  CHECK(rep.full_chain.has_value());
  CHECK(rep.target_length == 4);
  CHECK_FALSE(rep.recipe_applicable);
  CHECK_FALSE(rep.part1_chain.has_value());
  CHECK(rep.has_diagnostic("index-ranges-empty"));
}

TEST_CASE("empty chains") {
  for (const auto& S : {GoodSemigroup::from_generators({3, 4, 5}), node()}) {
    const auto c = dp_chain_search(S);
    REQUIRE(c.has_value());
    CHECK(c->points.empty());
    CHECK(verify_certificate(S, *c));
  }
  const auto rep = noether_check(node());
  CHECK(rep.full_chain.has_value());
  CHECK(rep.target_length == 0);
}

TEST_CASE("constructive recipe on <4,5>") {
  const auto S = GoodSemigroup::from_generators({4, 5});
  const auto built = constructive_part1(S);
  REQUIRE(built.chain.has_value());
  const auto& c = *built.chain;
  CHECK(c.mode == ChainMode::constructive);
  CHECK(c.points == ints({12, 13, 14, 15, 16, 17, 18, 19}));
  CHECK(c.witnesses == std::vector<Witness>{{{8}, {4}},
                                            {{9}, {4}},
                                            {{10}, {4}},
                                            {{10}, {5}},
                                            {{8}, {8}},
                                            {{9}, {8}},
                                            {{10}, {8}},
                                            {{10}, {9}}});
  CHECK(verify_certificate(S, c));

  const auto rep = noether_check(S);
  CHECK(rep.recipe_applicable);
  CHECK(rep.has_diagnostic("equaaa"));
  CHECK(rep.has_diagnostic("equddk"));
  CHECK(rep.has_diagnostic("cross-check"));
  CHECK_FALSE(rep.has_diagnostic("cross-check-failed"));
}

TEST_CASE("constructive recipe declines when m = 0") {
  const auto r = constructive_part1(GoodSemigroup::from_generators({3, 5, 7}));
  CHECK_FALSE(r.chain.has_value());
  REQUIRE_FALSE(r.diagnostics.empty());
  CHECK(r.diagnostics.front().code == "m-zero");
  CHECK_FALSE(noether_check(GoodSemigroup::from_generators({3, 5, 7})).recipe_applicable);
}

TEST_CASE("tacnode has no chain inside K° + K°") {
  const auto T = tacnode();
  CHECK_FALSE(dp_chain_search(T).has_value());
  const auto rep = noether_check(T);
  CHECK(rep.has_diagnostic("dp-failed"));
  CHECK(rep.has_diagnostic("index-ranges-empty"));
  CHECK(sumset_k2(T) == std::vector<ValueVector>{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("certificate tampering is caught") {
  const auto S = GoodSemigroup::from_generators({4, 9, 10, 11});
  const auto good = *dp_chain_search(S);
  REQUIRE(verify_certificate(S, good));

  auto bad_witness = good;
  bad_witness.witnesses[1] = {{3}, {6}};  // 3 ∉ K°
  CHECK_FALSE(verify_certificate(S, bad_witness));

  auto bad_sum = good;
  bad_sum.witnesses[1] = {{4}, {6}};
  CHECK_FALSE(verify_certificate(S, bad_sum));

  auto jump = good;
  jump.points[2] = ValueVector{11};
  jump.witnesses[2] = {{5}, {6}};
  CHECK_FALSE(verify_certificate(S, jump));

  auto short_chain = good;
  short_chain.points.pop_back();
  short_chain.witnesses.pop_back();
  CHECK_FALSE(verify_certificate(S, short_chain));

  auto wrong_start = good;
  wrong_start.points.front() = ValueVector{7};
  CHECK_FALSE(verify_certificate(S, wrong_start));

  auto wrong_dim = good;
  wrong_dim.points[0] = ValueVector{8, 0};
  CHECK_FALSE(verify_certificate(S, wrong_dim));
}

TEST_CASE("constructive certificate must stay below β + mα") {
  const auto S = GoodSemigroup::from_generators({4, 5});
  auto c = *constructive_part1(S).chain;
  c.points.back() = ValueVector{20};
  c.witnesses.back() = {{10}, {10}};
  CHECK_FALSE(verify_certificate(S, c));
}

TEST_CASE("DP search agrees with exhaustive search on random semigroups") {
  std::mt19937 rng(17);
  int found = 0, missing = 0;
  for (int t = 0; t < 70; ++t) {
    GoodSemigroup S;
    if (t % 2 == 0) {
      S = GoodSemigroup::from_generators(oracle::random_generators(rng, 12));
    } else {
      oracle::Join J;
      for (int i = 0; i < 2; ++i) J.parts.emplace_back(oracle::random_generators(rng, 5));
      S = J.semigroup();
    }
    for (Order mode : {Order::lt_neq, Order::lt_all}) {
      const auto k0 = k_small(S, mode);
      std::set<ValueVector> sums;
      for (const auto& x : k0)
        for (const auto& y : k0) sums.insert(x + y);
      const ValueVector beta = S.conductor();
      const ValueVector alpha = multiplicity(S);
      const Int len = weight(beta - alpha);
      const bool exists = oracle::unit_chain_exists(sums, beta, 2 * beta - alpha, len);

      const auto c = dp_chain_search(S, mode);
      CHECK(c.has_value() == exists);
      if (c) {
        ++found;
        CHECK(static_cast<Int>(c->points.size()) == len);
        CHECK(verify_certificate(S, *c));
        for (std::size_t i = 1; i < c->points.size(); ++i) CHECK(unit_step(c->points[i - 1], c->points[i]) >= 0);
      } else {
        ++missing;
      }
      const auto part1 = constructive_part1(S, mode);
      if (part1.chain) CHECK(verify_certificate(S, *part1.chain));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("numerical semigroups have a chain unless they are double points") {
  // With multiplicity 2, K° + K° holds only even values, too few for weight(β - α) points.
  std::mt19937 rng(23);
  int double_points = 0;
  for (int t = 0; t < 60; ++t) {
    const auto gens = oracle::random_generators(rng, 15);
    const auto S = GoodSemigroup::from_generators(gens);
    std::string label;
    for (Int g : gens) label += std::to_string(g) + " ";
    INFO(label);
    const Int a = multiplicity(S)[0];
    const Int b = S.conductor()[0];
    const auto rep = noether_check(S);
    CHECK(rep.full_chain.has_value() == (a >= 3 || b == a));
    if (a == 2 && b > a) {
      ++double_points;
      CHECK(rep.has_diagnostic("dp-failed"));
      std::set<ValueVector> sums;
      for (const auto& x : k_small(S))
        for (const auto& y : k_small(S)) sums.insert(x + y);
      CHECK_FALSE(oracle::unit_chain_exists(sums, S.conductor(), 2 * S.conductor() - multiplicity(S), b - a));
    }
    if (rep.full_chain) CHECK(verify_certificate(S, *rep.full_chain));
    if (rep.part1_chain) {
      CHECK(verify_certificate(S, *rep.part1_chain));
      CHECK(rep.has_diagnostic("cross-check"));
    }
    CHECK_FALSE(rep.has_diagnostic("equaaa-failed"));
    CHECK_FALSE(rep.has_diagnostic("equddk-failed"));
  }
  CHECK(double_points > 0);
}
