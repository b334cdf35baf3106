#include "dihedral_hecke.hpp"

#include "heaptl/tl.hpp"

#include <doctest.h>

using namespace heaptl;

namespace {

GraphPtr make(CoxeterGraph g) { return std::make_shared<const CoxeterGraph>(std::move(g)); }

// full comparison of the reduction engine against the Hecke-quotient oracle
void compare_all_products(int m) {
  oracles::DihedralHecke oracle{m};
  auto g = make(CoxeterGraph::complete(2, m));
  TLAlgebra alg(g);
  for (const auto& x : oracle.group.all_elements()) {
    for (const auto& y : oracle.group.all_elements()) {
      Word concat = oracle.group.reduced_word(x);
      Word wy = oracle.group.reduced_word(y);
      concat.insert(concat.end(), wy.begin(), wy.end());
      TLElement engine = alg.eval_word(concat);
      auto expected = oracle.tl_product(x, y);
      // canonical words of dihedral FC elements are the alternating words
      TLElement want;
      for (const auto& [w, p] : expected) want.add(w, p);
      CHECK(engine == want);
    }
  }
}

}  // namespace

TEST_CASE("oracle sanity: quadratic relation and ideal membership") {
  oracles::DihedralHecke oracle{3};
  // T_s^2 = (q-1) T_s + q T_1
  auto sq = oracle.mult({0, 1}, {0, 1});
  CHECK(sq[{0, 1}] == Laurent::v(2) - Laurent(1));
  CHECK(sq[{0, 0}] == Laurent::v(2));
  // the ideal generator reduces to zero
  oracles::DihedralHecke::HeckeElt z;
  for (const auto& e : oracle.group.all_elements())
    oracles::DihedralHecke::add_term(z, e, Laurent(1));
  CHECK(oracle.reduce_mod_ideal(z).empty());
}

TEST_CASE("engine equals the Hecke quotient oracle for bond 3") { compare_all_products(3); }

TEST_CASE("engine equals the Hecke quotient oracle for bond 4") { compare_all_products(4); }

TEST_CASE("engine equals the Hecke quotient oracle for bond 5") { compare_all_products(5); }

TEST_CASE("longest-word image golden value for bond 3") {
  // the image of the longest dihedral word: minus the weighted sum of the
  // five shorter elements
  auto g = make(CoxeterGraph::complete(2, 3));
  TLAlgebra alg(g);
  TLElement got = alg.eval_word({0, 1, 0});
  TLElement want;
  want.add(Word{}, -Laurent::v(-3));
  want.add(Word{0}, -Laurent::v(-2));
  want.add(Word{1}, -Laurent::v(-2));
  want.add(Word{0, 1}, -Laurent::v(-1));
  want.add(Word{1, 0}, -Laurent::v(-1));
  CHECK(got == want);
  // both reduced words of the longest element agree
  CHECK(alg.eval_word({1, 0, 1}) == got);
}
