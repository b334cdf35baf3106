#include "heaptl/coxeter.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace heaptl;

namespace {

// Independent bipartiteness oracle: try all 2-colorings.
bool bipartite_brute_force(const CoxeterGraph& g) {
  const int n = g.rank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      for (int t = s + 1; t < n && ok; ++t)
        if (g.adjacent(s, t) && (((mask >> s) ^ (mask >> t)) & 1u) == 0) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("family builders match their conventions") {
  auto b4 = CoxeterGraph::b_line(4);
  CHECK(b4.rank() == 4);
  CHECK(b4.bond(0, 1) == 4);
  CHECK(b4.bond(1, 2) == 3);
  CHECK(b4.bond(2, 3) == 3);
  CHECK(b4.bond(0, 2) == 2);

  auto a1 = CoxeterGraph::a_line(1);
  CHECK(a1.rank() == 1);

  auto c7 = CoxeterGraph::c_affine_odd(7);
  CHECK(c7.rank() == 8);
  CHECK(c7.bond(0, 1) == 4);
  CHECK(c7.bond(6, 7) == 4);
  for (int i = 1; i < 6; ++i) CHECK(c7.bond(i, i + 1) == 3);

  auto h3 = CoxeterGraph::h_line(3);
  CHECK(h3.bond(0, 1) == 5);
  auto f5 = CoxeterGraph::f_line(5);
  CHECK(f5.bond(1, 2) == 4);
  CHECK(f5.bond(0, 1) == 3);

  auto k44 = CoxeterGraph::complete(4, 4);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      if (s != t) CHECK(k44.bond(s, t) == 4);

  CHECK_THROWS_AS(CoxeterGraph::c_affine_odd(4), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::a_line(0), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::b_line(1), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::f_line(2), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::complete(3, 2), std::invalid_argument);
}

TEST_CASE("builders satisfy the graph invariants") {
  for (const auto& g :
       {CoxeterGraph::a_line(5), CoxeterGraph::b_line(4), CoxeterGraph::h_line(4),
        CoxeterGraph::f_line(5), CoxeterGraph::c_affine_odd(5), CoxeterGraph::complete(4, 4)}) {
    for (int s = 0; s < g.rank(); ++s) {
      CHECK(g.bond(s, s) == 1);
      for (int t = 0; t < g.rank(); ++t) {
        if (s == t) continue;
        CHECK(g.bond(s, t) == g.bond(t, s));
        CHECK(g.bond(s, t) >= 2);
        CHECK(g.adjacent(s, t) == (g.bond(s, t) >= 3));
      }
    }
  }
}

TEST_CASE("bipartite and simply laced predicates") {
  CHECK(CoxeterGraph::a_line(5).is_bipartite());
  CHECK(CoxeterGraph::c_affine_odd(7).is_bipartite());
  CHECK_FALSE(CoxeterGraph::complete(3, 3).is_bipartite());
  CHECK(CoxeterGraph::complete(2, 5).is_bipartite());

  CHECK(CoxeterGraph::a_line(5).is_simply_laced());
  CHECK(CoxeterGraph::complete(4, 3).is_simply_laced());
  CHECK_FALSE(CoxeterGraph::b_line(4).is_simply_laced());
  CHECK_FALSE(CoxeterGraph::h_line(3).is_simply_laced());
}

TEST_CASE("bipartiteness agrees with the exhaustive 2-coloring oracle") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    CoxeterGraph g(n);
    std::uniform_int_distribution<int> flip(0, 3);
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t)
        if (flip(rng) == 0) g.set_bond(s, t, 3);
    CHECK(g.is_bipartite() == bipartite_brute_force(g));
  }
}

TEST_CASE("graph file round trip") {
  std::istringstream in(
      "# comment line\n"
      "rank 4\n"
      "bond 1 2 4\n"
      "bond 2 3 3\n"
      "\n"
      "bond 3 4 inf\n");
  auto g = CoxeterGraph::parse(in);
  CHECK(g.rank() == 4);
  CHECK(g.bond(0, 1) == 4);
  CHECK(g.bond(1, 2) == 3);
  CHECK(g.bond(2, 3) == infinite_bond);
  CHECK(g.bond(0, 3) == 2);

  std::istringstream again(g.to_text());
  auto g2 = CoxeterGraph::parse(again);
  CHECK(g2 == g);
}

TEST_CASE("graph file errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return CoxeterGraph::parse(in);
  };
  CHECK_THROWS(parse("bond 1 2 3\n"));
  CHECK_THROWS(parse("rank 2\nbond 1 1 3\n"));
  CHECK_THROWS(parse("rank 2\nbond 1 3 3\n"));
  CHECK_THROWS(parse("rank 2\nbond 1 2 2\n"));
  CHECK_THROWS(parse("rank 2\nbond 1 2 3\nbond 2 1 4\n"));
  CHECK_THROWS(parse("rank 2\nnonsense\n"));
  CHECK_THROWS(parse(""));
}

TEST_CASE("family specs") {
  auto g = parse_family_spec("B_line(4)");
  REQUIRE(g.has_value());
  CHECK(*g == CoxeterGraph::b_line(4));
  auto k = parse_family_spec("complete(3,3)");
  REQUIRE(k.has_value());
  CHECK(*k == CoxeterGraph::complete(3, 3));
  CHECK(parse_family_spec("c_affine_odd(5)").has_value());
  CHECK_FALSE(parse_family_spec("no_such(1)").has_value());
  CHECK_FALSE(parse_family_spec("B_line").has_value());
  CHECK_THROWS(parse_family_spec("B_line(0)"));
}

TEST_CASE("word parsing") {
  auto w = parse_word_string(8, "s1 s3 s5 s2 s4 s6 s1 s3 s5 s7");
  CHECK(w == Word{0, 2, 4, 1, 3, 5, 0, 2, 4, 6});
  CHECK(parse_word_string(3, "1, 2 3") == Word{0, 1, 2});
  CHECK(parse_word_string(3, "") == Word{});
  CHECK_THROWS_AS(parse_word_string(3, "s4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_string(3, "s0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_string(3, "x1"), std::invalid_argument);
  CHECK(word_str(Word{0, 2}) == "s1 s3");
  CHECK(word_str(Word{}) == "e");
}
