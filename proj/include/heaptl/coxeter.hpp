#pragma once

#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heaptl {

/// A word in the generators; letters are 0-based generator indices.
/// All user-facing I/O is 1-based (s1, s2, ...).
using Word = std::vector<int>;

inline constexpr int infinite_bond = std::numeric_limits<int>::max();

/// Coxeter graph: a generator set 0..rank-1 together with the symmetric
/// bond matrix m(s,t). Off-diagonal entries are >= 2 or infinite_bond;
/// m(s,s) = 1. Generators s, t are adjacent (concurrent when distinct)
/// exactly when m(s,t) >= 3. Immutable once built.
class CoxeterGraph {
 public:
  explicit CoxeterGraph(int rank);

  int rank() const { return rank_; }
  int bond(int s, int t) const;
  void set_bond(int s, int t, int m);  // setup only; m >= 3 or infinite_bond

  bool adjacent(int s, int t) const { return s != t && bond(s, t) >= 3; }
  bool concurrent(int s, int t) const { return s == t || adjacent(s, t); }
  std::vector<int> neighbours(int s) const;

  bool is_simply_laced() const;
  bool is_bipartite() const;
  // Two-coloring of the concurrency graph, or nullopt when an odd cycle
  // exists. Color values are 0/1.
  std::optional<std::vector<int>> bipartition() const;
  // True when the adjacency is exactly the path s1-s2-...-sn.
  bool is_line() const;
  bool is_connected() const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.rank_ == b.rank_ && a.bonds_ == b.bonds_;
  }

  // Family builders. Line families have consecutive bonds 3 except where
  // noted; generator numbering matches s1..sn.
  static CoxeterGraph a_line(int n);
  static CoxeterGraph b_line(int n);         // m(s1,s2) = 4
  static CoxeterGraph h_line(int n);         // m(s1,s2) = 5
  static CoxeterGraph f_line(int n);         // m(s2,s3) = 4
  static CoxeterGraph c_affine_odd(int n);   // n odd; n+1 vertices, both end bonds 4
  static CoxeterGraph complete(int n, int m);

  // Text format: first line "rank N", then lines "bond i j m" with 1-based
  // generator indices and m >= 3 or the token "inf". Unlisted pairs are 2.
  // Lines starting with '#' and blank lines are ignored.
  static CoxeterGraph parse(std::istream& in);
  static CoxeterGraph from_file(const std::string& path);
  std::string to_text() const;

 private:
  int rank_;
  std::vector<int> bonds_;  // rank x rank, row-major
};

using GraphPtr = std::shared_ptr<const CoxeterGraph>;

// "A_line(6)", "complete(4,4)", ... (case-insensitive family names).
std::optional<CoxeterGraph> parse_family_spec(const std::string& spec);

// Graph source for the CLI: either "family:<spec>" or a file path.
CoxeterGraph load_graph_arg(const std::string& arg);

// Word I/O. Tokens are "3" or "s3" (1-based); throws on malformed or
// out-of-range letters.
Word parse_word(int rank, const std::vector<std::string>& tokens);
Word parse_word_string(int rank, const std::string& text);
std::string word_str(const Word& w);  // "s1 s3 s5"; "e" for the empty word

}  // namespace heaptl
