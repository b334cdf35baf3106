#pragma once

// Test-only brute-force oracles, independent of the heap machinery.

#include "heaptl/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracles {

using heaptl::Word;

// ---------------------------------------------------------------------------
// Symmetric group model for the line graph with all bonds 3 (rank n means
// permutations of n+1 points; generator i swaps points i, i+1).
// ---------------------------------------------------------------------------

struct SymmetricGroup {
  int rank;  // number of generators

  using Perm = std::vector<int>;

  Perm identity() const {
    Perm p(rank + 1);
    for (int i = 0; i <= rank; ++i) p[i] = i;
    return p;
  }

  Perm left_mult(int s, const Perm& p) const {  // s * p
    Perm q = p;
    for (int& x : q)
      if (x == s)
        x = s + 1;
      else if (x == s + 1)
        x = s;
    return q;
  }

  int length(const Perm& p) const {  // inversions
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    return inv;
  }

  std::vector<Perm> all_elements() const {
    Perm p = identity();
    std::vector<Perm> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // all reduced words, by peeling left descents
  std::set<Word> reduced_words(const Perm& p) const {
    if (length(p) == 0) return {Word{}};
    std::set<Word> out;
    for (int s = 0; s < rank; ++s) {
      Perm q = left_mult(s, p);
      if (length(q) < length(p)) {
        for (const Word& rest : reduced_words(q)) {
          Word w{s};
          w.insert(w.end(), rest.begin(), rest.end());
          out.insert(w);
        }
      }
    }
    return out;
  }
};

// Commutation closure of a word: all words reachable by swapping adjacent
// letters whose generators commute.
inline std::set<Word> commutation_class(const heaptl::CoxeterGraph& g, const Word& start) {
  std::set<Word> seen{start};
  std::vector<Word> stack{start};
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1] || g.adjacent(w[i], w[i + 1])) continue;
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      if (seen.insert(swapped).second) stack.push_back(swapped);
    }
  }
  return seen;
}

// Fully commutative by the defining property: one commutation class holds
// every reduced word.
inline bool fc_by_word_closure(const heaptl::CoxeterGraph& g, const std::set<Word>& reduced) {
  if (reduced.empty()) return true;
  return commutation_class(g, *reduced.begin()) == reduced;
}

// Number of FC elements in the symmetric-group model.
inline int count_fc_symmetric(int rank) {
  SymmetricGroup group{rank};
  heaptl::CoxeterGraph g = heaptl::CoxeterGraph::a_line(rank);
  int count = 0;
  for (const auto& p : group.all_elements())
    if (fc_by_word_closure(g, group.reduced_words(p))) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Dihedral model: element = (first letter, length), length 0..m; both
// alternating words of length m are the same element.
// ---------------------------------------------------------------------------

struct Dihedral {
  int m;

  using Elt = std::pair<int, int>;  // (start, len), canonical start 0 for len 0 or m

  Elt make(int start, int len) const {
    if (len == 0 || len == m) return {0, len};
    return {start, len};
  }

  std::vector<Elt> all_elements() const {
    std::vector<Elt> out{{0, 0}};
    for (int len = 1; len < m; ++len) {
      out.push_back({0, len});
      out.push_back({1, len});
    }
    out.push_back({0, m});
    return out;
  }

  Word reduced_word(const Elt& e) const {
    Word w;
    for (int i = 0; i < e.second; ++i) w.push_back((e.first + i) % 2);
    return w;
  }

  bool left_descent(const Elt& e, int s) const {
    if (e.second == 0) return false;
    if (e.second == m) return true;
    return e.first == s;
  }

  Elt left_mult(int s, const Elt& e) const {
    if (left_descent(e, s)) {
      // strip the left letter: for the longest element both strippings agree
      int new_start = (e.second == m) ? (s + 1) % 2 : (e.first + 1) % 2;
      return make(new_start, e.second - 1);
    }
    return make(s, e.second + 1);
  }

  int count_fc() const { return 2 * m - 1; }  // everything except the longest
};

}  // namespace oracles
