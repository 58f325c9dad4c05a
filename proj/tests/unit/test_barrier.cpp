#include <doctest.h>

#include "bqo/barrier.hpp"
#include "support/oracles.hpp"

using namespace bqo;

namespace {

FinSeq seq(std::vector<int> v) { return FinSeq(std::move(v)); }

}  // namespace

TEST_CASE("FinSeq enforces strict increase") {
  CHECK_THROWS_AS(seq({1, 1}), domain_error);
  CHECK_THROWS_AS(seq({2, 1}), domain_error);
  CHECK_THROWS_AS(seq({-1}), domain_error);
  CHECK(seq({0, 3, 7}).size() == 3);
}

TEST_CASE("triangle relation on singletons is the natural order") {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(triangle_lt(seq({i}), seq({j})) == (i < j));
}

TEST_CASE("triangle relation examples") {
  CHECK(triangle_lt(seq({0, 1}), seq({1, 2})));
  CHECK(!triangle_lt(seq({0, 2}), seq({1, 3})));
  CHECK_THROWS_AS(triangle_lt(seq({}), seq({1})), domain_error);
  // s tri s would need s to prefix its own tail.
  CHECK(!triangle_lt(seq({0, 1}), seq({0, 1})));
}

TEST_CASE("triangle relation agrees with the existential oracle") {
  // Full range [0,7) runs in the acceptance suite; a slice here.
  std::vector<FinSeq> seqs;
  for (int bits = 1; bits < 32; ++bits) {
    std::vector<int> entries;
    for (int i = 0; i < 5; ++i)
      if (bits >> i & 1) entries.push_back(i);
    seqs.push_back(seq(entries));
  }
  for (const auto& s : seqs)
    for (const auto& t : seqs)
      CHECK(triangle_lt(s, t) == bqo::testing::triangle_oracle(s, t));
}

TEST_CASE("uniform fragments") {
  SUBCASE("[0,3)^1") {
    auto f = uniform_fragment(3, 1);
    CHECK(f.members() == std::vector<FinSeq>{seq({0}), seq({1}), seq({2})});
    CHECK(f.horizon() == 3);
    CHECK(!validate_fragment(f));
  }
  SUBCASE("[0,3)^2 has no subset pairs") {
    auto f = uniform_fragment(3, 2);
    CHECK(f.members().size() == 3);
    CHECK(!validate_fragment(f));
  }
  SUBCASE("[0,4)^2: triangle pairs are exactly ((a,b),(b,c))") {
    auto f = uniform_fragment(4, 2);
    CHECK(f.members().size() == 6);
    int count = 0;
    for (const auto& s : f.members())
      for (const auto& t : f.members()) {
        if (s == t) continue;
        bool expect = s.entries()[1] == t.entries()[0];
        CHECK(triangle_lt(s, t) == expect);
        if (expect) ++count;
      }
    CHECK(count == 4);  // (01,12) (01,13) (02,23) (12,23)
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(uniform_fragment(2, 3), domain_error);
    CHECK_THROWS_AS(uniform_fragment(2, 0), domain_error);
  }
}

TEST_CASE("validate_fragment violations") {
  SUBCASE("empty member") {
    Fragment f(FragmentKind::Block, {0, 1}, {seq({}), seq({0})});
    auto v = validate_fragment(f);
    REQUIRE(v);
    CHECK(v->kind == FragmentViolation::Kind::EmptyMember);
  }
  SUBCASE("prefix violation in a block") {
    Fragment f(FragmentKind::Block, {0, 1}, {seq({0}), seq({0, 1})});
    auto v = validate_fragment(f);
    REQUIRE(v);
    CHECK(v->kind == FragmentViolation::Kind::PrefixViolation);
    CHECK(v->seqs[0] == seq({0}));
    CHECK(v->seqs[1] == seq({0, 1}));
  }
  SUBCASE("subset violation only matters for barriers") {
    std::vector<FinSeq> members{seq({0, 1}), seq({0, 2}), seq({1})};
    Fragment block(FragmentKind::Block, {0, 1, 2}, members);
    CHECK(!validate_fragment(block));
    Fragment barrier(FragmentKind::Barrier, {0, 1, 2}, members);
    auto v = validate_fragment(barrier);
    REQUIRE(v);
    CHECK(v->kind == FragmentViolation::Kind::SubsetViolation);
  }
  SUBCASE("uncovered sequence at the horizon") {
    // (0,1) has no member prefix.
    Fragment f(FragmentKind::Block, {0, 1, 2}, {seq({0, 2}), seq({1})});
    auto v = validate_fragment(f);
    REQUIRE(v);
    CHECK(v->kind == FragmentViolation::Kind::Uncovered);
    CHECK(v->seqs[0] == seq({0, 1}));
  }
  SUBCASE("member outside the base") {
    Fragment f(FragmentKind::Block, {0, 1}, {seq({0, 2})});
    auto v = validate_fragment(f);
    REQUIRE(v);
    CHECK(v->kind == FragmentViolation::Kind::MemberOutsideBase);
  }
}

TEST_CASE("a complete mixed-rank block validates") {
  Fragment f(FragmentKind::Block, {0, 1, 2}, {seq({0, 1}), seq({0, 2}), seq({1})});
  CHECK(!validate_fragment(f));
}

TEST_CASE("sub_fragment_after") {
  SUBCASE("[0,5)^1 after (2)") {
    auto f = uniform_fragment(5, 1);
    auto sub = sub_fragment_after(f, seq({2}));
    CHECK(sub.members() == std::vector<FinSeq>{seq({3}), seq({4})});
    CHECK(sub.base() == std::vector<int>{3, 4});
  }
  SUBCASE("[0,5)^2 after (0,1) keeps all pairs from {2,3,4}") {
    auto sub = sub_fragment_after(uniform_fragment(5, 2), seq({0, 1}));
    CHECK(sub.members().size() == 3);
    for (const auto& m : sub.members()) CHECK(m.front() >= 2);
    CHECK(!validate_fragment(sub));
  }
  SUBCASE("cutting at the top leaves a degenerate fragment") {
    auto sub = sub_fragment_after(uniform_fragment(3, 1), seq({2}));
    CHECK(sub.degenerate());
  }
  SUBCASE("unknown member") {
    CHECK_THROWS_AS(sub_fragment_after(uniform_fragment(3, 1), seq({7})), domain_error);
  }
}

TEST_CASE("chain_intervals") {
  SUBCASE("singletons link directly: (0) tri (3)") {
    auto chain = chain_intervals(uniform_fragment(4, 1), seq({0}), seq({3}));
    CHECK(chain == std::vector<FinSeq>{seq({0}), seq({3})});
  }
  SUBCASE("pairs shift through (0,1,2,3)") {
    auto chain = chain_intervals(uniform_fragment(4, 2), seq({0, 1}), seq({2, 3}));
    CHECK(chain == std::vector<FinSeq>{seq({0, 1}), seq({1, 2}), seq({2, 3})});
  }
  SUBCASE("directly related members give a length-2 chain") {
    auto chain = chain_intervals(uniform_fragment(3, 2), seq({0, 1}), seq({1, 2}));
    CHECK(chain == std::vector<FinSeq>{seq({0, 1}), seq({1, 2})});
  }
  SUBCASE("consecutive links satisfy the triangle relation") {
    for (int n = 3; n <= 6; ++n)
      for (int k = 1; k <= 2; ++k) {
        auto f = uniform_fragment(n, k);
        for (const auto& s : f.members())
          for (const auto& t : f.members()) {
            if (t.front() <= s.back()) continue;
            auto chain = chain_intervals(f, s, t);
            REQUIRE(chain.size() >= 2);
            CHECK(chain.front() == s);
            CHECK(chain.back() == t);
            for (size_t i = 0; i + 1 < chain.size(); ++i)
              CHECK(triangle_lt(chain[i], chain[i + 1]));
          }
      }
  }
  SUBCASE("missing prefix is reported when the fragment is too small") {
    // Members (0,1) and (2,3) only: the shift (1,2,3) has no prefix.
    Fragment f(FragmentKind::Barrier, {0, 1, 2, 3}, {seq({0, 1}), seq({2, 3})});
    CHECK_THROWS_WITH_AS(chain_intervals(f, seq({0, 1}), seq({2, 3})),
                         doctest::Contains("MissingPrefix"), domain_error);
  }
}

TEST_CASE("block_to_barrier") {
  SUBCASE("barrier-kind input comes back unchanged") {
    auto f = uniform_fragment(4, 2);
    auto res = block_to_barrier(f);
    CHECK(res.barrier.members() == f.members());
    for (const auto& [ext, src] : res.refinement) CHECK(ext == src);
  }
  SUBCASE("the mixed block {(0,2),(1)} extends (1) to (1,2)") {
    Fragment f(FragmentKind::Block, {0, 1, 2}, {seq({0, 2}), seq({1})});
    auto res = block_to_barrier(f);
    CHECK(res.barrier.kind() == FragmentKind::Barrier);
    CHECK(res.barrier.members() == std::vector<FinSeq>{seq({0, 2}), seq({1, 2})});
    bool found = false;
    for (const auto& [ext, src] : res.refinement)
      if (ext == seq({1, 2})) {
        CHECK(src == seq({1}));
        found = true;
      }
    CHECK(found);
  }
  SUBCASE("a complete block refines to a complete barrier") {
    Fragment f(FragmentKind::Block, {0, 1, 2}, {seq({0, 1}), seq({0, 2}), seq({1})});
    REQUIRE(!validate_fragment(f));
    auto res = block_to_barrier(f);
    CHECK(!validate_fragment(res.barrier));
    CHECK(res.barrier.members() ==
          std::vector<FinSeq>{seq({0, 1}), seq({0, 2}), seq({1, 2})});
    // Every member has a refinement preimage it extends.
    for (const auto& m : res.barrier.members()) {
      bool found = false;
      for (const auto& [ext, src] : res.refinement)
        if (ext == m) {
          CHECK(src.prefix_of(m));
          found = true;
        }
      CHECK(found);
    }
  }
  SUBCASE("horizon exhaustion") {
    Fragment f(FragmentKind::Block, {0, 1}, {seq({0, 1}), seq({1})});
    CHECK_THROWS_WITH_AS(block_to_barrier(f), doctest::Contains("HorizonExhausted"),
                         domain_error);
  }
}
