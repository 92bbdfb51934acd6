#include <algorithm>

#include "doctest.h"
#include "impalg/stone.hpp"
#include "support/corpus.hpp"

using namespace impalg;

TEST_CASE("stone_base: frozen fixtures") {
  const auto ia2_base = stone_base(corpus::ia2());
  REQUIRE(ia2_base.size() == 1);
  CHECK(ia2_base[0].members == std::vector<int>{1});

  const auto b4_base = stone_base(corpus::b4());
  REQUIRE(b4_base.size() == 2);
  CHECK(b4_base[0].members == std::vector<int>{1, 3});
  CHECK(b4_base[1].members == std::vector<int>{2, 3});

  CHECK(stone_base(corpus::singleton_isg()).empty());
}

TEST_CASE("stone_represent: frozen fixtures") {
  const StoneRepresentation ia2 = stone_represent(corpus::ia2());
  CHECK(ia2.map[0].empty());              // a is in no prime filter
  CHECK(ia2.map[1] == std::vector<int>{0});

  const StoneRepresentation b4 = stone_represent(corpus::b4());
  CHECK(b4.map[0].empty());
  CHECK(b4.map[1] == std::vector<int>{0});
  CHECK(b4.map[2] == std::vector<int>{1});
  CHECK(b4.map[3] == std::vector<int>{0, 1});

  const StoneRepresentation single = stone_represent(corpus::singleton_isg());
  CHECK(single.base.empty());
  CHECK(single.map[0].empty());
}

TEST_CASE("stone_represent requires an implication algebra") {
  try {
    static_cast<void>(stone_represent(corpus::h3()));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::precondition);
  }
}

TEST_CASE("stone invariants hold on the ia corpus") {
  for (const FiniteAlgebra& alg : corpus::ia_corpus()) {
    const StoneRepresentation sr = stone_represent(alg);
    const int n = alg.size();
    const int k = static_cast<int>(sr.base.size());
    const DerivedOrder ord = derived_order(alg);

    // Base is exactly the prime filters and stays below 2^n - 1.
    CHECK(sr.base == enumerate_filters(alg, FilterKind::prime));
    CHECK(k <= (1 << n) - 1);

    std::vector<int> all(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i;
    CHECK(sr.map[static_cast<size_t>(ord.one)] == all);

    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        // injectivity and order reflection
        if (a != b) CHECK(sr.map[static_cast<size_t>(a)] != sr.map[static_cast<size_t>(b)]);
        CHECK(ord.le(a, b) == subset(sr.map[static_cast<size_t>(a)], sr.map[static_cast<size_t>(b)]));
        // arrow preservation over sets
        std::vector<int> complement, expect;
        std::set_difference(all.begin(), all.end(), sr.map[static_cast<size_t>(a)].begin(),
                            sr.map[static_cast<size_t>(a)].end(), std::back_inserter(complement));
        std::set_union(complement.begin(), complement.end(), sr.map[static_cast<size_t>(b)].begin(),
                       sr.map[static_cast<size_t>(b)].end(), std::back_inserter(expect));
        CHECK(sr.map[static_cast<size_t>(alg.arrow(a, b))] == expect);
        // join image is the union
        std::vector<int> join;
        std::set_union(sr.map[static_cast<size_t>(a)].begin(), sr.map[static_cast<size_t>(a)].end(),
                       sr.map[static_cast<size_t>(b)].begin(), sr.map[static_cast<size_t>(b)].end(),
                       std::back_inserter(join));
        CHECK(sr.map[static_cast<size_t>(alg.arrow(alg.arrow(a, b), b))] == join);
      }
  }
}

TEST_CASE("relationalize: frozen B4 liftings") {
  const FiniteAlgebra b4 = corpus::b4();
  const StoneRepresentation sr = stone_represent(b4);

  const Representation rel = relationalize(b4, sr, RepMode::relative);
  CHECK(rel.context.top == PairSet{{0, 0}, {1, 1}});
  CHECK(rel.map[1] == PairSet{{0, 0}});  // h({p}) over the diagonal
  CHECK(rel.map[3] == PairSet{{0, 0}, {1, 1}});
  CHECK(verify_representation(b4, rel).ok);

  const Representation abs = relationalize(b4, sr, RepMode::absolute);
  CHECK(abs.context.top == full_relation(2));
  CHECK(abs.map[1] == PairSet{{0, 0}, {0, 1}});  // row cylinder
  CHECK(verify_representation(b4, abs).ok);
}

TEST_CASE("relationalize: empty base is the empty representation") {
  const FiniteAlgebra s = corpus::singleton_isg();
  const Representation rel = relationalize(s, stone_represent(s), RepMode::relative);
  CHECK(rel.context.base_size == 0);
  CHECK(rel.context.top.empty());
  CHECK(rel.map[0].empty());
  CHECK(verify_representation(s, rel).ok);
}

TEST_CASE("both relationalize modes verify on the ia corpus") {
  for (const FiniteAlgebra& alg : corpus::ia_corpus()) {
    const StoneRepresentation sr = stone_represent(alg);
    CHECK(verify_representation(alg, relationalize(alg, sr, RepMode::relative)).ok);
    CHECK(verify_representation(alg, relationalize(alg, sr, RepMode::absolute)).ok);
  }
}
