#pragma once

#include "heaptl/coxeter.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace heaptl {

/// Hard cap on heap size: the order relation is stored as 64-bit
/// reachability masks.
inline constexpr int max_heap_size = 64;

/// A chain v1 < v2 < ... < vr of heap vertices, listed in increasing order.
/// Balanced means the end labels agree.
struct ChainSpec {
  std::vector<int> vertices;
};

enum class MultStatus { descent, still_fc, weakly_complex };

struct LeftMultResult;

/// A heap of pieces over a Coxeter graph: a labelled poset in which
/// concurrent labels are comparable and the order is generated by the
/// concurrent pairs. Vertex ids 0..size-1 are always compatible with the
/// order (id(a) < id(b) whenever a < b). Immutable.
class Heap {
 public:
  explicit Heap(GraphPtr graph);  // the empty heap
  static Heap of_word(GraphPtr graph, const Word& word);

  const CoxeterGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int label(int v) const { return labels_[check(v)]; }
  const std::vector<int>& labels() const { return labels_; }

  bool less(int a, int b) const { return (above_[check(a)] >> check(b)) & 1u; }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  uint64_t above_mask(int v) const { return above_[check(v)]; }
  uint64_t below_mask(int v) const { return below_[check(v)]; }
  uint64_t between_mask(int a, int b) const {
    return above_[check(a)] & below_[check(b)];
  }
  std::vector<int> between(int a, int b) const;

  bool covers(int a, int b) const {  // b covers a
    return less(a, b) && between_mask(a, b) == 0;
  }
  std::vector<std::pair<int, int>> cover_pairs() const;
  bool is_trivial() const;

  std::vector<int> minimal_vertices() const;
  std::vector<int> maximal_vertices() const;
  // Vertices labelled s, in increasing order (they always form a chain).
  std::vector<int> label_chain(int s) const;
  // Height of v: length of the longest chain strictly below it.
  int level(int v) const;

  // Subheap per the defining construction: induced labels, order the
  // transitive closure of the concurrent pairs that remain. The subset
  // need not be convex.
  Heap subheap(const std::vector<int>& keep) const;
  Heap subheap_mask(uint64_t keep) const;
  Heap erase_vertex(int v) const;

  // Superposition of this heap over `upper`: this heap sits below.
  Heap superpose(const Heap& upper) const;

  // Convexity of a vertex subset: x <= z <= y with x,y inside forces z inside.
  bool is_convex(uint64_t subset) const;
  bool is_convex(const std::vector<int>& subset) const;

  bool chain_increasing(const ChainSpec& c) const;
  bool chain_convex(const ChainSpec& c) const;
  bool chain_balanced(const ChainSpec& c) const;

  // Contraction along a balanced convex chain: drops every chain vertex
  // except the bottom one. Throws when the chain is not increasing, not
  // convex, or not balanced.
  Heap contract(const ChainSpec& c) const;

  struct FcViolation {
    bool equal_label_cover;
    int s, t;                 // labels involved (t = -1 for a cover violation)
    std::vector<int> chain;   // offending cover pair or alternating chain
  };
  // Full-commutativity test: no convex alternating chain of length m(s,t)
  // for adjacent s,t with finite bond, and no cover between equal labels.
  bool is_fc() const;
  std::optional<FcViolation> fc_violation() const;

  // Labels of minimal/maximal vertices. Requires an FC heap (these are the
  // descent sets only in that case).
  std::vector<int> left_descents() const;
  std::vector<int> right_descents() const;

  LeftMultResult left_multiply_status(int s) const;
  LeftMultResult right_multiply_status(int s) const;

  // Dismantlability: a full peeling sequence of extremal vertices exists,
  // each step leaving a newly extremal vertex with a different label.
  // Trivial heaps qualify vacuously. Exponential-time memoized search.
  bool is_dismantlable() const;
  // Optionally returns one legal removal order (first removed first).
  std::optional<std::vector<int>> dismantling_order() const;

  // No convex chain x < z or x < y < z with equal end labels.
  bool has_property_p2() const;

  // Lexicographically least linear extension word; the canonical form.
  // Two heaps of words are isomorphic as labelled posets iff their
  // canonical words agree (assuming a shared graph).
  const Word& canonical_word() const { return canon_; }
  // Vertex ids in canonical-word order: canonical_order()[j] is the vertex
  // emitting letter j of canonical_word().
  const std::vector<int>& canonical_order() const { return canon_perm_; }
  bool same_heap_as(const Heap& other) const {
    return labels_.size() == other.labels_.size() && canon_ == other.canon_;
  }

  // The order-reversed heap (the heap of the inverse element for FC heaps).
  Heap reversed() const;

  // All linear extensions as words; throws when more than `cap` exist.
  std::vector<Word> linear_extensions(size_t cap = 5'000'000) const;

  // Checks the two heap axioms and the chain property for equal labels.
  bool validate() const;

 private:
  int check(int v) const;
  void finish();  // derive below_ from above_, compute canonical word

  GraphPtr graph_;
  std::vector<int> labels_;
  std::vector<uint64_t> above_;  // strict
  std::vector<uint64_t> below_;  // strict
  Word canon_;
  std::vector<int> canon_perm_;
};

/// Outcome of multiplying a fully commutative heap by a generator.
/// For weakly_complex, `partner` is the unique non-commuting generator t
/// and the two chains are the alternating convex witness: `chain` lives in
/// the input heap (m-1 vertices); `extended_chain` lives in `extended`
/// (m vertices, starting or ending with the new vertex depending on side).
struct LeftMultResult {
  MultStatus status;
  std::optional<Heap> extended;  // heap of s·w (still_fc and weakly_complex)
  int partner = -1;
  ChainSpec chain;
  ChainSpec extended_chain;
};

std::string heap_to_dot(const Heap& e);

}  // namespace heaptl
