#pragma once

// Test-only oracle: the Hecke algebra of a rank-2 (dihedral) Coxeter system
// in the T-basis over Z[v, v^-1], with reduction modulo the two-sided ideal
// generated by the sum of all T_w. Entirely independent of the TL engine.

#include "heaptl/laurent.hpp"
#include "oracles.hpp"

#include <map>

namespace oracles {

struct DihedralHecke {
  int m;
  Dihedral group{m};

  using Elt = Dihedral::Elt;
  using HeckeElt = std::map<Elt, heaptl::Laurent>;

  static void add_term(HeckeElt& x, const Elt& e, const heaptl::Laurent& p) {
    if (p.is_zero()) return;
    auto it = x.find(e);
    if (it == x.end()) {
      x.emplace(e, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) x.erase(it);
    }
  }

  HeckeElt basis(const Elt& e) const { return HeckeElt{{e, heaptl::Laurent(1)}}; }

  // T_s * T_w = T_{sw} when sw is longer, else q T_{sw} + (q-1) T_w
  HeckeElt gen_mult(int s, const HeckeElt& x) const {
    const heaptl::Laurent q = heaptl::Laurent::v(2);
    const heaptl::Laurent q_minus_1 = q - heaptl::Laurent(1);
    HeckeElt out;
    for (const auto& [e, p] : x) {
      Elt se = group.left_mult(s, e);
      if (!group.left_descent(e, s)) {
        add_term(out, se, p);
      } else {
        add_term(out, se, p * q);
        add_term(out, e, p * q_minus_1);
      }
    }
    return out;
  }

  HeckeElt mult(const Elt& a, const Elt& b) const {
    HeckeElt acc = basis(b);
    heaptl::Word wa = group.reduced_word(a);
    for (auto it = wa.rbegin(); it != wa.rend(); ++it) acc = gen_mult(*it, acc);
    return acc;
  }

  // subtract coeff(longest) * sum of all T_w, the ideal generator
  HeckeElt reduce_mod_ideal(HeckeElt x) const {
    const Elt longest{0, m};
    auto it = x.find(longest);
    if (it == x.end()) return x;
    heaptl::Laurent c = it->second;
    for (const Elt& e : group.all_elements()) add_term(x, e, -c);
    return x;
  }

  // rescale to the t-basis: T_u = v^{l(u)} t_u; keys become reduced words
  std::map<heaptl::Word, heaptl::Laurent> to_scaled_basis(const HeckeElt& x) const {
    std::map<heaptl::Word, heaptl::Laurent> out;
    for (const auto& [e, p] : x) {
      heaptl::Laurent scaled = p.shifted(e.second);
      if (!scaled.is_zero()) out.emplace(group.reduced_word(e), scaled);
    }
    return out;
  }

  // t_x * t_y reduced into the quotient, expressed over reduced words of the
  // proper (FC) dihedral elements
  std::map<heaptl::Word, heaptl::Laurent> tl_product(const Elt& x, const Elt& y) const {
    HeckeElt prod = reduce_mod_ideal(mult(x, y));
    std::map<heaptl::Word, heaptl::Laurent> out;
    for (auto& [w, p] : to_scaled_basis(prod))
      out.emplace(w, p.shifted(-x.second - y.second));
    return out;
  }
};

}  // namespace oracles
