#pragma once

#include "heaptl/heap.hpp"
#include "heaptl/laurent.hpp"
#include "heaptl/star.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace heaptl {

/// Ordering used everywhere a deterministic element order is needed:
/// shorter words first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the generalized Temperley-Lieb algebra in the scaled t-basis:
/// a finitely supported map from FC elements (canonical words) to Laurent
/// polynomials. Zero coefficients are never stored.
class TLElement {
 public:
  using Map = std::map<Word, Laurent, WordOrder>;

  TLElement() = default;
  static TLElement basis(Word canonical_word) {
    TLElement x;
    x.terms_.emplace(std::move(canonical_word), Laurent(1));
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  Laurent coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add(const Word& w, const Laurent& p);
  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  TLElement scaled(const Laurent& p) const;

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TLElement& a, const TLElement& b) { return !(a == b); }

  bool in_lattice() const;        // all coefficients in Z[v^-1]
  bool in_v_inv_lattice() const;  // all coefficients in v^-1 Z[v^-1]

  /// One "coeff * t[...]" line per term, ordered by (length, word).
  std::string str() const;

 private:
  Map terms_;
};

/// Multiplication, monomial basis and canonical basis of TL(X) over one
/// Coxeter graph. Products of basis elements are computed by folding
/// generator multiplications; a product that leaves the FC regime is
/// rewritten through the defining relation of the quotient, which replaces
/// the longest dihedral element by a combination of the shorter ones.
/// Internal memo tables make the instance single-thread only.
class TLAlgebra {
 public:
  explicit TLAlgebra(GraphPtr g);

  const CoxeterGraph& graph() const { return *g_; }
  const GraphPtr& graph_ptr() const { return g_; }

  TLElement unit() const { return TLElement::basis(Word{}); }
  TLElement basis(const FCElement& w) const { return TLElement::basis(w.word()); }

  TLElement mult_gen_left(int s, const TLElement& x) const;
  TLElement mult_gen_right(const TLElement& x, int s) const;
  /// TL image of the product of the scaled generator elements along `w`
  /// (any word, reduced or not).
  TLElement eval_word(const Word& w) const;
  TLElement mult(const TLElement& x, const TLElement& y) const;

  /// Monomial basis element b_w (product of b_s over a reduced word), and
  /// the product b_{s1}...b_{sr} of an arbitrary word.
  TLElement b_element(const FCElement& w) const { return b_product(w.word()); }
  TLElement b_product(const Word& letters) const;

  /// Canonical basis element: leading coefficient 1, all lower coefficients
  /// in v^-1 Z[v^-1]. Throws CBasisError when the computed element violates
  /// that contract.
  TLElement c_element(const FCElement& w) const;
  TLElement c_element(const Word& canonical_word) const;

  struct CBasisError : std::runtime_error {
    CBasisError(const std::string& msg, Word key, Laurent coeff);
    Word key;
    Laurent coeff;
  };

  /// Membership in the free Z[v^-1]-module with basis
  /// {t_w : descent} u {v^-1 t_w : otherwise} on the requested side.
  bool in_sub_lattice(const TLElement& x, int s, bool left) const;

  /// Expansions in the monomial and canonical bases (both unitriangular
  /// over the t-basis).
  TLElement::Map expand_in_b(TLElement x) const;
  TLElement::Map expand_in_c(TLElement x) const;

  /// dim ker of the boundary map of the heap of the word.
  int h_function(const Word& u) const;

  const Heap& heap_of(const Word& canonical_word) const;

 private:
  TLElement gen_times_basis(int s, const Word& w) const;
  TLElement basis_times_gen(const Word& w, int s) const;
  TLElement reduce_complex(const Heap& extended, const std::vector<int>& window) const;

  GraphPtr g_;
  mutable std::map<Word, Heap> heaps_;
  mutable std::map<std::pair<int, Word>, TLElement> left_memo_;
  mutable std::map<std::pair<Word, int>, TLElement> right_memo_;
  mutable std::map<Word, TLElement> c_cache_;
};

struct PropertyWFailure {
  Word element;   // canonical word of w
  int generator;  // s with sw weakly complex
  TLElement image;
};
struct PropertyWReport {
  long elements = 0;        // FC elements visited
  long extensions = 0;      // weakly complex extensions checked
  std::vector<PropertyWFailure> failures;
};
/// For every FC w up to max_len and every s with sw weakly complex, checks
/// that the TL image of the word s.w lies in v^-1 L.
PropertyWReport check_property_w(const TLAlgebra& alg, int max_len);

struct StructureConstants {
  using Key = std::pair<Word, Word>;
  std::map<Key, std::vector<std::pair<Word, Laurent>>> products;
};
/// c_x * c_y expanded in the c-basis for all FC pairs with
/// len(x) + len(y) <= total_len.
StructureConstants structure_constants_c(const TLAlgebra& alg, int total_len);

struct NegativeConstant {
  Word x, y, z;
  Laurent coeff;
};
std::vector<NegativeConstant> check_nonnegativity(const StructureConstants& table);

}  // namespace heaptl
