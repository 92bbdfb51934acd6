#include "doctest.h"
#include "impalg/algebra_io.hpp"
#include "impalg/relmodel_io.hpp"
#include "support/corpus.hpp"

using namespace impalg;

namespace {

void expect_parse_error(const std::string& text) {
  try {
    static_cast<void>(parse_algebra_text(text));
    CHECK_MESSAGE(false, "expected parse error for:\n" << text);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
  }
}

}  // namespace

TEST_CASE("algebra format: round trip through text") {
  for (const FiniteAlgebra& alg : {corpus::ia2(), corpus::h3(), corpus::b4(), corpus::s2(),
                                   corpus::q2(), corpus::singleton_isg()}) {
    const std::string text = format_algebra(alg);
    const FiniteAlgebra back = parse_algebra_text(text);
    CHECK(back.elements() == alg.elements());
    CHECK(back.arrow_table() == alg.arrow_table());
    CHECK(back.has_compose() == alg.has_compose());
    if (alg.has_compose()) CHECK(*back.compose_table() == *alg.compose_table());
    CHECK(back.one() == alg.one());
    CHECK(back.id() == alg.id());
    CHECK(back.zero() == alg.zero());
    CHECK(format_algebra(back) == text);
  }
}

TEST_CASE("algebra format: comments and blank lines are ignored") {
  const FiniteAlgebra alg = parse_algebra_text(
      "# a comment\n"
      "elements a 1   # trailing comment\n"
      "\n"
      "arrow\n"
      "a: 1 1\n"
      "1: a 1\n");
  CHECK(alg.size() == 2);
  CHECK(alg.arrow(1, 0) == 0);
}

TEST_CASE("algebra format: strict parse errors") {
  expect_parse_error("arrow\na: 1 1\n");                                       // no elements
  expect_parse_error("elements a 1\n");                                        // no arrow
  expect_parse_error("elements a a\narrow\na: a a\na: a a\n");                 // dup name
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a\n");                   // short row
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a 1 1\n");               // long row
  expect_parse_error("elements a 1\narrow\n1: a 1\na: 1 1\n");                 // out of order
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a b\n");                 // unknown name
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a 1\narrow\na: 1 1\n1: a 1\n");  // dup section
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a 1\nconst one 1\nconst one 1\n");
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a 1\nconst top 1\n");    // unknown const
  expect_parse_error("elements a 1\narrow\na: 1 1\n1: a 1\nbogus\n");          // unknown directive
  expect_parse_error("elements a 1\narrow\na: 1 1\n");                         // missing row
}

TEST_CASE("representation format: round trip and defaults") {
  const FiniteAlgebra s2 = corpus::s2();
  const std::string text =
      "base 2\n"
      "top (0,0) (1,1)\n"
      "map 0 = (0,0)\n"
      "map 1 = (0,0) (1,1)\n"
      "mode relative\n"
      "profile arrow,compose\n";
  const Representation rep = parse_representation_text(text, s2);
  CHECK(rep.context.base_size == 2);
  CHECK(rep.context.top == PairSet{{0, 0}, {1, 1}});
  CHECK(rep.mode == RepMode::relative);
  CHECK(rep.profile == Profile{true, true, false, false});
  CHECK(format_representation(s2, rep) == text);

  // mode and profile default to relative / arrow
  const Representation bare = parse_representation_text(
      "base 1\ntop (0,0)\nmap 0 =\nmap 1 = (0,0)\n", s2);
  CHECK(bare.mode == RepMode::relative);
  CHECK(bare.profile == Profile{true, false, false, false});
}

TEST_CASE("representation format: strict parse errors") {
  const FiniteAlgebra s2 = corpus::s2();
  auto expect_rep_error = [&](const std::string& text) {
    try {
      static_cast<void>(parse_representation_text(text, s2));
      CHECK_MESSAGE(false, "expected parse error for:\n" << text);
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse);
    }
  };
  expect_rep_error("top (0,0)\nmap 0 =\nmap 1 =\n");                       // no base
  expect_rep_error("base 1\nmap 0 =\nmap 1 =\n");                          // no top
  expect_rep_error("base 1\ntop (0,0)\nmap 0 =\n");                        // missing map
  expect_rep_error("base 1\ntop (0,0)\nmap 0 =\nmap 0 =\nmap 1 =\n");      // dup map
  expect_rep_error("base 1\ntop (0,0)\nmap 0 =\nmap x =\n");               // unknown element
  expect_rep_error("base 1\ntop (0,0) (1,1)\nmap 0 =\nmap 1 =\n");         // pair out of range
  expect_rep_error("base 1\ntop (0,0)\nmap 0 =\nmap 1 = (0;0)\n");         // bad pair token
  expect_rep_error("base 1\ntop (0,0)\ntop (0,0)\nmap 0 =\nmap 1 =\n");    // dup top
  expect_rep_error("base 1\ntop (0,0)\nmap 0 =\nmap 1 =\nmode odd\n");     // bad mode
  expect_rep_error("base 1\ntop (0,0)\nmap 0 =\nmap 1 =\nprofile joins\n");  // bad profile
}

TEST_CASE("poset format: implied reflexive pairs and validation") {
  const Poset chain = parse_poset_text("base 2\nleq (0,1)\n");
  CHECK(chain.le(0, 0));
  CHECK(chain.le(1, 1));
  CHECK(chain.le(0, 1));
  CHECK_FALSE(chain.le(1, 0));

  const Poset antichain = parse_poset_text("base 3\n");
  CHECK(antichain.le(2, 2));
  CHECK_FALSE(antichain.le(0, 1));

  try {
    static_cast<void>(parse_poset_text("base 2\nleq (0,1) (1,0)\n"));  // not antisymmetric
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
  }
  try {
    static_cast<void>(parse_poset_text("base 3\nleq (0,1) (1,2)\n"));  // not transitive
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("pair list parsing") {
  CHECK(parse_pair_list("") == PairSet{});
  CHECK(parse_pair_list("  ") == PairSet{});
  CHECK(parse_pair_list("(1,0) (0,1) (0,1)") == PairSet{{0, 1}, {1, 0}});
  CHECK(format_pair_list({{0, 1}, {1, 0}}) == "(0,1) (1,0)");
  try {
    static_cast<void>(parse_pair_list("(1 0)"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
  }
}
