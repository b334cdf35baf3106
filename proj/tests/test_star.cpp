#include "heaptl/star.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace heaptl;

namespace {

GraphPtr make(CoxeterGraph g) { return std::make_shared<const CoxeterGraph>(std::move(g)); }

const GraphPtr b4 = make(CoxeterGraph::b_line(4));

FCElement fc(const GraphPtr& g, const Word& w) {
  auto e = FCElement::from_word(g, w);
  REQUIRE(e.has_value());
  return *e;
}

}  // namespace

TEST_CASE("star operations in the rank-4 line with one strong bond") {
  // m(s1,s2) = 4; w = s2 s1
  FCElement w = fc(b4, {1, 0});

  auto down_left = star_down_left(w, 0, 1);
  REQUIRE(down_left.has_value());
  CHECK(down_left->word() == Word{0});

  auto up_left = star_up_left(w, 0, 1);
  REQUIRE(up_left.has_value());
  CHECK(up_left->word() == Word{0, 1, 0});

  auto down_right = star_down_right(w, 0, 1);
  REQUIRE(down_right.has_value());
  CHECK(down_right->word() == Word{1});

  auto up_right = star_up_right(w, 0, 1);
  REQUIRE(up_right.has_value());
  CHECK(up_right->word() == Word{1, 0, 1});

  // x = s1 s2 s1 tops out the string
  FCElement x = fc(b4, {0, 1, 0});
  CHECK_FALSE(star_up_left(x, 0, 1).has_value());
  CHECK_FALSE(star_up_right(x, 0, 1).has_value());
  CHECK(star_down_left(x, 0, 1).has_value());
  CHECK(star_down_right(x, 0, 1).has_value());

  // x = s2 sits at the bottom of its string
  FCElement y = fc(b4, {1});
  CHECK_FALSE(star_down_left(y, 0, 1).has_value());
  CHECK_FALSE(star_down_right(y, 0, 1).has_value());

  CHECK_THROWS_AS(star_up_left(w, 0, 2), std::invalid_argument);  // commuting pair
}

TEST_CASE("coset decompositions") {
  // w = s2 s1 with I = {s1, s2}: the whole word is the prefix
  FCElement w = fc(b4, {1, 0});
  auto dec = coset_decompose_left(w, 0, 1);
  CHECK(dec.prefix == Word{1, 0});
  CHECK(dec.rest.length() == 0);

  // no descent in I: trivial prefix
  FCElement z = fc(b4, {2});
  auto dec2 = coset_decompose_left(z, 0, 1);
  CHECK(dec2.prefix.empty());
  CHECK(dec2.rest == z);

  // commuting tail splits off: w = s1 s3 with I = {s1, s2}
  auto a3 = make(CoxeterGraph::a_line(3));
  FCElement u = fc(a3, {0, 2});
  auto dec3 = coset_decompose_left(u, 0, 1);
  CHECK(dec3.prefix == Word{0});
  CHECK(dec3.rest.word() == Word{2});

  // length is always additive
  for (const auto& elt : enumerate_fc(b4, 6)) {
    for (int s = 0; s < 4; ++s)
      for (int t = s + 1; t < 4; ++t) {
        if (!b4->adjacent(s, t)) continue;
        auto d = coset_decompose_left(elt, s, t);
        CHECK(static_cast<int>(d.prefix.size()) + d.rest.length() == elt.length());
        // the rest has no descent in the pair
        for (int label : d.rest.heap().left_descents()) CHECK((label != s && label != t));
        auto dr = coset_decompose_right(elt, s, t);
        CHECK(static_cast<int>(dr.prefix.size()) + dr.rest.length() == elt.length());
        for (int label : dr.rest.heap().right_descents()) CHECK((label != s && label != t));
      }
  }
}

TEST_CASE("star up and star down are mutually inverse") {
  for (const auto& elt : enumerate_fc(b4, 8)) {
    for (int s = 0; s < 4; ++s)
      for (int t = s + 1; t < 4; ++t) {
        if (!b4->adjacent(s, t)) continue;
        auto up = star_up_left(elt, s, t);
        if (up) {
          auto back = star_down_left(*up, s, t);
          REQUIRE(back.has_value());
          CHECK(*back == elt);
        }
        auto down = star_down_left(elt, s, t);
        if (down) {
          auto back = star_up_left(*down, s, t);
          REQUIRE(back.has_value());
          CHECK(*back == elt);
        }
        auto upr = star_up_right(elt, s, t);
        if (upr) {
          auto back = star_down_right(*upr, s, t);
          REQUIRE(back.has_value());
          CHECK(*back == elt);
        }
        auto downr = star_down_right(elt, s, t);
        if (downr) {
          auto back = star_up_right(*downr, s, t);
          REQUIRE(back.has_value());
          CHECK(*back == elt);
        }
      }
  }
}

TEST_CASE("star reduction reaches a product of commuting generators") {
  // commuting products reduce by the empty trace
  auto a3 = make(CoxeterGraph::a_line(3));
  auto trivial = star_reduce_to_commuting(fc(a3, {0, 2}));
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());

  // the dihedral string element reduces to a single generator
  auto trace = star_reduce_to_commuting(fc(b4, {0, 1, 0}));
  REQUIRE(trace.has_value());
  CHECK(trace->size() == 2);

  // every FC element over star reducible builders reduces; replay each trace
  for (const auto& graph : {CoxeterGraph::b_line(3), CoxeterGraph::h_line(3),
                            CoxeterGraph::c_affine_odd(3)}) {
    auto g = make(graph);
    for (const auto& elt : enumerate_fc(g, 7)) {
      auto moves = star_reduce_to_commuting(elt);
      REQUIRE(moves.has_value());
      FCElement cur = elt;
      for (const auto& mv : *moves) {
        auto next = mv.left ? star_down_left(cur, mv.s, mv.t)
                            : star_down_right(cur, mv.s, mv.t);
        REQUIRE(next.has_value());
        CHECK(next->length() == cur.length() - 1);
        cur = *next;
      }
      CHECK(cur.heap().is_trivial());
    }
  }
}

TEST_CASE("enumeration of tiny groups") {
  auto a1 = make(CoxeterGraph::a_line(1));
  auto elems = enumerate_fc(a1, 5);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0].word() == Word{});
  CHECK(elems[1].word() == Word{0});

  // rank-2 with bond 4: all seven proper dihedral elements
  auto b2 = make(CoxeterGraph::complete(2, 4));
  auto d = enumerate_fc(b2, 10);
  std::set<Word> words;
  for (const auto& e : d) words.insert(e.word());
  CHECK(words == std::set<Word>{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("enumeration matches the permutation-model oracle") {
  CHECK(oracles::count_fc_symmetric(3) == 14);  // out of 24 group elements
  auto a3 = make(CoxeterGraph::a_line(3));
  CHECK(enumerate_fc(a3, 10).size() == 14);

  CHECK(static_cast<int>(enumerate_fc(make(CoxeterGraph::a_line(4)), 12).size()) ==
        oracles::count_fc_symmetric(4));
  CHECK(static_cast<int>(enumerate_fc(make(CoxeterGraph::a_line(2)), 6).size()) ==
        oracles::count_fc_symmetric(2));
}

TEST_CASE("enumeration matches the dihedral oracle") {
  for (int m : {3, 4, 5, 7}) {
    oracles::Dihedral dih{m};
    auto g = make(CoxeterGraph::complete(2, m));
    CHECK(static_cast<int>(enumerate_fc(g, 2 * m).size()) == dih.count_fc());
  }
}

TEST_CASE("enumeration emits each element once with verified heaps") {
  auto f4 = make(CoxeterGraph::f_line(4));
  std::set<Word> seen;
  enumerate_fc(f4, 8, [&](const FCElement& w) {
    CHECK(seen.insert(w.word()).second);
    CHECK(w.heap().is_fc());
    CHECK(static_cast<int>(w.word().size()) == w.length());
  });
  CHECK(seen.size() > 50);
  // stable across runs
  std::set<Word> again;
  enumerate_fc(f4, 8, [&](const FCElement& w) { again.insert(w.word()); });
  CHECK(seen == again);
}

TEST_CASE("identity-only enumeration at bound zero") {
  auto elems = enumerate_fc(b4, 0);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].length() == 0);
  CHECK_THROWS_AS(enumerate_fc(b4, -1), std::invalid_argument);
}

TEST_CASE("infinite-bond strings") {
  CoxeterGraph gi(2);
  gi.set_bond(0, 1, infinite_bond);
  auto g = make(std::move(gi));
  FCElement w = fc(g, {0, 1, 0, 1});
  auto up = star_up_left(w, 0, 1);
  REQUIRE(up.has_value());
  CHECK(up->length() == 5);
  auto down = star_down_left(w, 0, 1);
  REQUIRE(down.has_value());
  CHECK(down->length() == 3);
  // reduction walks all the way down
  auto moves = star_reduce_to_commuting(w);
  REQUIRE(moves.has_value());
  CHECK(moves->size() == 3);
}
