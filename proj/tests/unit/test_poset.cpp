#include <doctest.h>

#include "bqo/poset.hpp"
#include "support/oracles.hpp"

using namespace bqo;

TEST_CASE("validate_poset closes a chain edge list when asked") {
  RawRelation raw{3, {{0, 1}, {1, 2}}, {}, true};
  auto res = validate_poset(raw);
  REQUIRE(std::holds_alternative<Poset>(res));
  const Poset& p = std::get<Poset>(res);
  CHECK(p.same_relation(Poset::chain(3)));
}

TEST_CASE("validate_poset reports a 2-cycle") {
  RawRelation raw{2, {{0, 1}, {1, 0}}, {}, true};
  auto res = validate_poset(raw);
  REQUIRE(std::holds_alternative<PosetViolation>(res));
  const auto& v = std::get<PosetViolation>(res);
  CHECK(v.kind == PosetViolation::Kind::AntisymmetryViolation);
  CHECK(v.witness == std::vector<int>{0, 1});
}

TEST_CASE("validate_poset with empty relation and closure gives an antichain") {
  RawRelation raw{3, {}, {}, true};
  auto res = validate_poset(raw);
  REQUIRE(std::holds_alternative<Poset>(res));
  CHECK(std::get<Poset>(res).same_relation(Poset::antichain(3)));
}

TEST_CASE("validate_poset names the violated axiom without closure") {
  SUBCASE("missing reflexivity") {
    RawRelation raw{2, {{0, 1}}, {}, false};
    auto res = validate_poset(raw);
    REQUIRE(std::holds_alternative<PosetViolation>(res));
    CHECK(std::get<PosetViolation>(res).kind == PosetViolation::Kind::ReflexivityViolation);
  }
  SUBCASE("missing transitivity") {
    RawRelation raw{3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}, {}, false};
    auto res = validate_poset(raw);
    REQUIRE(std::holds_alternative<PosetViolation>(res));
    const auto& v = std::get<PosetViolation>(res);
    CHECK(v.kind == PosetViolation::Kind::TransitivityViolation);
    CHECK(v.witness == std::vector<int>{0, 1, 2});
  }
  SUBCASE("undeclared id") {
    RawRelation raw{2, {{0, 5}}, {}, false};
    auto res = validate_poset(raw);
    REQUIRE(std::holds_alternative<PosetViolation>(res));
    CHECK(std::get<PosetViolation>(res).kind == PosetViolation::Kind::MissingElement);
  }
}

TEST_CASE("builtin orders") {
  Poset opt = Poset::one_plus_two();
  CHECK(opt.size() == 3);
  int strict_pairs = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (opt.less(a, b)) ++strict_pairs;
  CHECK(strict_pairs == 1);
  CHECK(opt.less(0, 1));
  CHECK(opt.incomparable(2, 0));
  CHECK(opt.incomparable(2, 1));
  CHECK(opt.label(2) == "*");

  CHECK(Poset::antichain(1).same_relation(Poset::chain(1)));
  CHECK(Poset::chain(0).size() == 0);
}

TEST_CASE("sum_over_index") {
  SUBCASE("singleton summands reproduce the index") {
    SumSpec spec{Poset::antichain(2), {Poset::chain(1), Poset::chain(1)}};
    auto sum = sum_over_index(spec);
    CHECK(sum.combined.same_relation(Poset::antichain(2)));
  }
  SUBCASE("2bar copies over 2bar give 4bar") {
    SumSpec spec{Poset::antichain(2), {Poset::antichain(2), Poset::antichain(2)}};
    CHECK(sum_over_index(spec).combined.same_relation(Poset::antichain(4)));
  }
  SUBCASE("2bar copies over chain 2: all 16 comparisons") {
    SumSpec spec{Poset::chain(2), {Poset::antichain(2), Poset::antichain(2)}};
    auto sum = sum_over_index(spec);
    REQUIRE(sum.combined.size() == 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        auto [i, q] = sum.pair_of_id[a];
        auto [j, r] = sum.pair_of_id[b];
        bool expect = i < j || (i == j && q == r);
        CHECK(sum.combined.leq(a, b) == expect);
      }
  }
}

TEST_CASE("find_embedding examples") {
  Poset opt = Poset::one_plus_two();
  SUBCASE("one_plus_two does not embed into antichain 3") {
    CHECK(!find_embedding(opt, Poset::antichain(3)));
  }
  SUBCASE("2bar embeds into one_plus_two with least witness {0,*}") {
    auto m = find_embedding(Poset::antichain(2), opt);
    REQUIRE(m);
    CHECK(m->map == std::vector<int>{0, 2});
    CHECK(m->embedding);
  }
  SUBCASE("identity embedding of a chain") {
    auto m = find_embedding(Poset::chain(3), Poset::chain(3));
    REQUIRE(m);
    CHECK(m->map == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("find_order_reflecting examples") {
  Poset opt = Poset::one_plus_two();
  SUBCASE("one_plus_two reflects into antichain 3") {
    auto m = find_order_reflecting(opt, Poset::antichain(3));
    REQUIRE(m);
    CHECK(m->map == std::vector<int>{0, 1, 2});
    CHECK(!m->embedding);
  }
  SUBCASE("one_plus_two does not reflect into a chain") {
    CHECK(!find_order_reflecting(opt, Poset::chain(3)));
  }
  SUBCASE("a single point reflects anywhere") {
    CHECK(find_order_reflecting(Poset::antichain(1), opt));
  }
}

TEST_CASE("embedding implies the returned map is order reflecting") {
  // An embedding is in particular order reflecting, and the search for
  // reflecting maps must succeed whenever the embedding search does.
  for (int np = 1; np <= 3; ++np)
    for (const Poset& p : bqo::testing::all_posets(np))
      for (const Poset& q : bqo::testing::all_posets(3)) {
        auto emb = find_embedding(p, q);
        if (!emb) continue;
        for (int a = 0; a < p.size(); ++a)
          for (int b = 0; b < p.size(); ++b)
            CHECK(p.leq(a, b) == q.leq(emb->map[a], emb->map[b]));
        CHECK(find_order_reflecting(p, q));
      }
}

TEST_CASE("embedding biconditional holds on every pair for |P|,|Q| <= 4") {
  auto p3 = bqo::testing::all_posets(3);
  auto q4 = bqo::testing::all_posets(4);
  for (size_t pi = 0; pi < p3.size(); pi += 3)    // sampled stride; acceptance
    for (size_t qi = 0; qi < q4.size(); qi += 7)  // suite runs the full corpus
    {
      auto m = find_embedding(p3[pi], q4[qi]);
      if (!m) continue;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          CHECK(p3[pi].leq(a, b) == q4[qi].leq(m->map[a], m->map[b]));
    }
}

TEST_CASE("parallel search agrees with sequential and keeps the least witness") {
  SearchOptions par;
  par.workers = 4;
  for (const Poset& p : bqo::testing::all_posets(3)) {
    auto seq_m = find_embedding(p, Poset::one_plus_two());
    auto par_m = find_embedding(p, Poset::one_plus_two(), par);
    REQUIRE(seq_m.has_value() == par_m.has_value());
    if (seq_m) CHECK(seq_m->map == par_m->map);
  }
}

TEST_CASE("search budget is enforced") {
  SearchOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(find_embedding(Poset::chain(4), Poset::chain(4), tiny), budget_exceeded);
}

TEST_CASE("quotient_preorder") {
  SUBCASE("a 2-cycle collapses to the lower id") {
    RawRelation raw{2, {{0, 1}, {1, 0}}, {}, true};
    auto pre = std::get<Preorder>(validate_preorder(raw));
    auto q = quotient_preorder(pre);
    CHECK(q.quotient.size() == 1);
    CHECK(q.representative == std::vector<int>{0});
    CHECK(q.projection == std::vector<int>{0, 0});
  }
  SUBCASE("antisymmetric input projects by identity") {
    RawRelation raw{3, {{0, 1}, {1, 2}}, {}, true};
    auto pre = std::get<Preorder>(validate_preorder(raw));
    auto q = quotient_preorder(pre);
    CHECK(q.quotient.same_relation(Poset::chain(3)));
    CHECK(q.projection == std::vector<int>{0, 1, 2});
  }
  SUBCASE("4-element preorder with a 2-cycle in the middle gives a 3-chain") {
    // 0 < {1,2} < 3 with 1 and 2 mutually below each other.
    RawRelation raw{4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}, {}, true};
    auto pre = std::get<Preorder>(validate_preorder(raw));
    auto q = quotient_preorder(pre);
    CHECK(q.quotient.same_relation(Poset::chain(3)));
    CHECK(q.representative == std::vector<int>{0, 1, 3});
    CHECK(q.projection == std::vector<int>{0, 1, 1, 2});
  }
  SUBCASE("projection is monotone and reflects strictness between classes") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
      RawRelation raw;
      raw.n = 4;
      raw.closure = true;
      std::uniform_int_distribution<int> id(0, 3);
      for (int e = 0; e < 5; ++e) raw.pairs.emplace_back(id(rng), id(rng));
      auto pre = std::get<Preorder>(validate_preorder(raw));
      auto q = quotient_preorder(pre);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (pre.leq(a, b)) CHECK(q.quotient.leq(q.projection[a], q.projection[b]));
          if (q.quotient.less(q.projection[a], q.projection[b]))
            CHECK((pre.leq(a, b) && !pre.leq(b, a)));
        }
    }
  }
}
