#include <set>

#include "doctest.h"
#include "impalg/algebra.hpp"
#include "support/corpus.hpp"

using namespace impalg;

namespace {

// Independent evaluation of the three implication-algebra axioms, used as
// the oracle for the frozen check_class verdicts.
bool brute_ia(const FiniteAlgebra& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.arrow(a.arrow(x, y), x) != x) return false;
      if (a.arrow(a.arrow(x, y), y) != a.arrow(a.arrow(y, x), x)) return false;
      for (int z = 0; z < n; ++z)
        if (a.arrow(x, a.arrow(y, z)) != a.arrow(y, a.arrow(x, z))) return false;
    }
  return true;
}

bool contraction_holds(const FiniteAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.arrow(a.arrow(x, y), x) != x) return false;
  return true;
}

}  // namespace

TEST_CASE("check_class: frozen fixture verdicts") {
  CHECK(brute_ia(corpus::ia2()));
  CHECK(check_class(corpus::ia2(), ClassId::ia).passed);
  CHECK(check_class(corpus::ia2(), ClassId::positive_ia).passed);

  CHECK_FALSE(brute_ia(corpus::h3()));
  const ClassReport h3_ia = check_class(corpus::h3(), ClassId::ia);
  CHECK_FALSE(h3_ia.passed);
  REQUIRE(!h3_ia.violations.empty());
  CHECK(h3_ia.violations[0].axiom == "Contraction");
  CHECK(h3_ia.violations[0].witness == std::vector<int>{1, 0});  // (b, a)
  CHECK(h3_ia.violations[0].count == 1);
  // The chain also breaks quasi-commutativity, first at (a, b).
  REQUIRE(h3_ia.violations.size() == 2);
  CHECK(h3_ia.violations[1].axiom == "Quasi-commutativity");
  CHECK(h3_ia.violations[1].witness == std::vector<int>{0, 1});
  CHECK(h3_ia.violations[1].count == 2);
  CHECK(check_class(corpus::h3(), ClassId::positive_ia).passed);

  CHECK(check_class(corpus::singleton_isg(), ClassId::isg).passed);
  CHECK(check_class(corpus::b4(), ClassId::ia).passed);
  CHECK(check_class(corpus::s2(), ClassId::isg).passed);
  CHECK(check_class(corpus::s2(), ClassId::bsg).passed);
  CHECK(check_class(corpus::q2(), ClassId::imonoid).passed);
}

TEST_CASE("check_class: every reported violation genuinely falsifies its axiom") {
  const ClassReport rep = check_class(corpus::h3(), ClassId::ia);
  const FiniteAlgebra a = corpus::h3();
  for (const Violation& v : rep.violations) {
    if (v.axiom == "Contraction") {
      const int x = v.witness[0], y = v.witness[1];
      CHECK(a.arrow(a.arrow(x, y), x) != x);
    } else if (v.axiom == "Quasi-commutativity") {
      const int x = v.witness[0], y = v.witness[1];
      CHECK(a.arrow(a.arrow(x, y), y) != a.arrow(a.arrow(y, x), x));
    }
  }
}

TEST_CASE("check_class: positive-ia reports a non-constant diagonal") {
  const ClassReport rep = check_class(corpus::m2(), ClassId::positive_ia);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].axiom == "One-constant");
  CHECK(rep.violations[0].witness == std::vector<int>{0, 1});
}

TEST_CASE("check_class: designated one must match the diagonal") {
  const FiniteAlgebra bad({"a", "1"}, {1, 1, 0, 1}, std::nullopt, 0);  // one = a
  const ClassReport rep = check_class(bad, ClassId::ia);
  CHECK_FALSE(rep.passed);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].axiom == "One-designation");
}

TEST_CASE("check_class: missing tables and constants are errors") {
  try {
    static_cast<void>(check_class(corpus::ia2(), ClassId::isg));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::missing_table);
  }
  const FiniteAlgebra no_id({"0", "e"}, {1, 1, 0, 1}, std::vector<int>{0, 0, 0, 1});
  try {
    static_cast<void>(check_class(no_id, ClassId::imonoid));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::missing_constant);
  }
  try {
    static_cast<void>(check_class(no_id, ClassId::bsg));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::missing_constant);
  }
}

TEST_CASE("derived_one: fixtures and error paths") {
  CHECK(derived_one(corpus::ia2()) == 1);
  CHECK(derived_one(corpus::h3()) == 2);
  CHECK(derived_one(corpus::b4()) == 3);
  try {
    static_cast<void>(derived_one(corpus::m2()));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_constant);
  }
  // Constant diagonal but failing 1 -> b = b: b -> 1 = 1 and 1 -> b = 1.
  const FiniteAlgebra law_breaker({"a", "1"}, {1, 1, 1, 1});
  try {
    static_cast<void>(derived_one(law_breaker));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::law_violation);
  }
}

TEST_CASE("derived_order: IA2 and B4") {
  const DerivedOrder ord = derived_order(corpus::ia2());
  CHECK(ord.one == 1);
  CHECK(ord.le(0, 1));
  CHECK_FALSE(ord.le(1, 0));
  CHECK(ord.plus(0, 1) == 1);  // (a -> 1) -> 1 = 1

  // B4's order is subset inclusion, its join is union.  Element i carries
  // the two-atom mask i: 0 = {}, p = {p}, q = {q}, 1 = {p, q}.
  const DerivedOrder b4 = derived_order(corpus::b4());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(b4.le(a, b) == ((a & ~b) == 0));
      CHECK(b4.plus(a, b) == (a | b));
    }
}

TEST_CASE("derived_order: reflexive on the ia corpus") {
  for (const FiniteAlgebra& alg : corpus::ia_corpus()) {
    const DerivedOrder ord = derived_order(alg);
    for (int a = 0; a < alg.size(); ++a) CHECK(ord.le(a, a));
  }
}

TEST_CASE("derived join is commutative, associative, idempotent on the ia corpus") {
  for (const FiniteAlgebra& alg : corpus::ia_corpus()) {
    const DerivedOrder ord = derived_order(alg);
    const int n = alg.size();
    for (int a = 0; a < n; ++a) {
      CHECK(ord.plus(a, a) == a);
      for (int b = 0; b < n; ++b) {
        CHECK(ord.plus(a, b) == ord.plus(b, a));
        for (int c = 0; c < n; ++c)
          CHECK(ord.plus(ord.plus(a, b), c) == ord.plus(a, ord.plus(b, c)));
      }
    }
  }
}

TEST_CASE("reduct: projections and derived constants") {
  // The two-element Boolean semigroup of relations over a one-pair top.
  const FiniteAlgebra bsg2 = corpus::s2();
  REQUIRE(check_class(bsg2, ClassId::bsg).passed);
  const FiniteAlgebra red = reduct(bsg2, ClassId::isg);
  CHECK(red.arrow_table() == bsg2.arrow_table());
  CHECK(*red.compose_table() == *bsg2.compose_table());
  CHECK_FALSE(red.one().has_value());
  CHECK_FALSE(red.zero().has_value());
  CHECK(check_class(red, ClassId::isg).passed);

  // In the reduct: join via (0 -> 1) -> 1 and top via 0 -> 0.
  CHECK(red.arrow(red.arrow(0, 1), 1) == 1);
  CHECK(red.arrow(0, 0) == 1);

  const FiniteAlgebra pos = reduct(corpus::b4(), ClassId::positive_ia);
  CHECK(pos.one() == 3);
  CHECK_FALSE(pos.has_compose());

  try {
    static_cast<void>(reduct(corpus::ia2(), ClassId::isg));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_definable);
  }
  try {
    static_cast<void>(reduct(corpus::m2(), ClassId::positive_ia));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_constant);
  }
  // Projection exists but the result fails the target class.
  try {
    static_cast<void>(reduct(corpus::m2(), ClassId::ia));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::precondition);
  }
}

TEST_CASE("class inclusion and contraction characterization, carriers <= 3") {
  long long candidates = 0;
  for (int n = 1; n <= 3; ++n)
    corpus::for_all_arrow_tables(n, [&](const FiniteAlgebra& alg) {
      ++candidates;
      const bool ia = check_class(alg, ClassId::ia).passed;
      const bool pos = check_class(alg, ClassId::positive_ia).passed;
      if (ia) CHECK(pos);
      CHECK((pos && contraction_holds(alg)) == ia);
    });
  CHECK(candidates == 19683 + 16 + 1);
}

TEST_CASE("class inclusion and contraction characterization, carrier 4 (pruned)") {
  long long seen = 0;
  corpus::for_class_tables(4, ClassId::positive_ia, [&](const FiniteAlgebra& alg) {
    ++seen;
    const bool ia = check_class(alg, ClassId::ia).passed;
    CHECK(ia == contraction_holds(alg));
  });
  CHECK(seen > 0);
  corpus::for_class_tables(4, ClassId::ia, [&](const FiniteAlgebra& alg) {
    CHECK(check_class(alg, ClassId::positive_ia).passed);
  });
}

TEST_CASE("positive-ia corpus satisfies the derived laws") {
  for (const FiniteAlgebra& a : corpus::positive_corpus()) {
    const int n = a.size();
    const int one = a.one() ? *a.one() : a.arrow(0, 0);
    auto le = [&](int x, int y) { return a.arrow(x, y) == one; };
    for (int x = 0; x < n; ++x) {
      CHECK(a.arrow(one, x) == x);  // 1 -> a = a
      for (int y = 0; y < n; ++y) {
        CHECK(le(x, a.arrow(a.arrow(x, y), y)));  // a <= (a -> b) -> b
        // modus ponens closure
        if (a.arrow(x, y) == one && x == one) CHECK(y == one);
        if (x == one) CHECK(a.arrow(y, x) == one);
        for (int z = 0; z < n; ++z) {
          // distributivity
          CHECK(a.arrow(x, a.arrow(y, z)) == a.arrow(a.arrow(x, y), a.arrow(x, z)));
          // exchange law
          CHECK(a.arrow(x, a.arrow(y, z)) == a.arrow(y, a.arrow(x, z)));
          // monotonicity in both arguments
          if (le(x, a.arrow(y, z))) CHECK(le(y, a.arrow(x, z)));
          if (le(y, z)) CHECK(le(a.arrow(x, y), a.arrow(x, z)));
          if (le(x, y)) CHECK(le(a.arrow(y, z), a.arrow(x, z)));
        }
      }
    }
  }
}

TEST_CASE("FiniteAlgebra construction rejects malformed input") {
  CHECK_THROWS_AS(FiniteAlgebra({"a", "a"}, {1, 1, 0, 1}), Error);
  CHECK_THROWS_AS(FiniteAlgebra({"a", "1"}, {1, 1, 0, 2}), Error);
  CHECK_THROWS_AS(FiniteAlgebra({"a", "1"}, {1, 1, 0}), Error);
  CHECK_THROWS_AS(FiniteAlgebra({"a b", "1"}, {1, 1, 0, 1}), Error);
  CHECK_THROWS_AS(FiniteAlgebra({}, {}), Error);
  CHECK_THROWS_AS(FiniteAlgebra({"a", "1"}, {1, 1, 0, 1}, std::nullopt, 5), Error);
}

TEST_CASE("class tokens round-trip") {
  for (ClassId cls : {ClassId::ia, ClassId::positive_ia, ClassId::isg, ClassId::imonoid, ClassId::bsg})
    CHECK(class_from_string(to_string(cls)) == cls);
  CHECK_FALSE(class_from_string("boolean").has_value());
}
