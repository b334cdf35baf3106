#pragma once

#include "heaptl/heap.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace heaptl {

/// A fully commutative element, identified with its canonical heap.
class FCElement {
 public:
  static FCElement identity(GraphPtr g) { return FCElement(Heap(std::move(g))); }
  static std::optional<FCElement> from_word(GraphPtr g, const Word& w);
  static FCElement from_heap(Heap e);  // throws when the heap is not FC

  const Heap& heap() const { return heap_; }
  const Word& word() const { return heap_.canonical_word(); }
  int length() const { return heap_.size(); }

  friend bool operator==(const FCElement& a, const FCElement& b) {
    return a.heap_.same_heap_as(b.heap_);
  }
  friend bool operator<(const FCElement& a, const FCElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  }

 private:
  explicit FCElement(Heap e) : heap_(std::move(e)) {}
  Heap heap_;
};

/// w = prefix * rest with additive lengths; prefix alternates in {s,t} and
/// rest has no left (resp. right) descent in {s,t}.
struct CosetDecomposition {
  Word prefix;  // for the right-handed version this is a suffix
  FCElement rest;
};

CosetDecomposition coset_decompose_left(const FCElement& w, int s, int t);
CosetDecomposition coset_decompose_right(const FCElement& w, int s, int t);

// Star operations with respect to the pair {s,t} (m(s,t) >= 3 required).
// Defined exactly when w sits in an {s,t}-string with room to move in the
// requested direction; the result is returned when it is again FC.
std::optional<FCElement> star_up_left(const FCElement& w, int s, int t);
std::optional<FCElement> star_down_left(const FCElement& w, int s, int t);
std::optional<FCElement> star_up_right(const FCElement& w, int s, int t);
std::optional<FCElement> star_down_right(const FCElement& w, int s, int t);

struct StarMove {
  bool left;   // side of the operation
  int s, t;    // the pair, s < t
};

/// Shortest sequence of length-decreasing star operations ending at a
/// product of commuting generators (a trivial heap), or nullopt when no
/// such sequence exists. The empty sequence is returned when w is already
/// a product of commuting generators.
std::optional<std::vector<StarMove>> star_reduce_to_commuting(const FCElement& w);

/// Every FC element of length <= max_len, each exactly once, ordered by
/// (length, canonical word). Enumeration is BFS by left multiplication and
/// stops early once some length level is empty.
std::vector<FCElement> enumerate_fc(const GraphPtr& g, int max_len);
void enumerate_fc(const GraphPtr& g, int max_len,
                  const std::function<void(const FCElement&)>& visit);

}  // namespace heaptl
