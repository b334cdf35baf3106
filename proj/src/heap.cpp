#include "heaptl/heap.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace heaptl {

namespace {

int popcount(uint64_t m) { return __builtin_popcountll(m); }

// Order masks of the subheap on `mask`: the transitive closure of the
// concurrent pairs of `parent` that survive the restriction. Keyed by
// parent vertex ids; entries outside `mask` stay zero.
std::vector<uint64_t> restricted_below(const Heap& parent, uint64_t mask) {
  std::vector<uint64_t> below(parent.size(), 0);
  for (int j = 0; j < parent.size(); ++j) {
    if (!((mask >> j) & 1u)) continue;
    uint64_t preds = parent.below_mask(j) & mask;
    uint64_t acc = 0;
    for (int i = 0; i < j; ++i) {
      if (!((preds >> i) & 1u)) continue;
      if (parent.graph().concurrent(parent.label(i), parent.label(j)))
        acc |= (uint64_t{1} << i) | below[i];
    }
    below[j] = acc;
  }
  return below;
}

std::vector<uint64_t> above_from_below(const std::vector<uint64_t>& below) {
  std::vector<uint64_t> above(below.size(), 0);
  for (size_t j = 0; j < below.size(); ++j)
    for (size_t i = 0; i < j; ++i)
      if ((below[j] >> i) & 1u) above[i] |= uint64_t{1} << j;
  return above;
}

}  // namespace

int Heap::check(int v) const {
  if (v < 0 || v >= size()) throw std::out_of_range("heap vertex out of range");
  return v;
}

Heap::Heap(GraphPtr graph) : graph_(std::move(graph)) {
  if (!graph_) throw std::invalid_argument("heap requires a graph");
}

Heap Heap::of_word(GraphPtr graph, const Word& word) {
  Heap e(std::move(graph));
  const int n = static_cast<int>(word.size());
  if (n > max_heap_size) throw std::invalid_argument("word too long for heap storage");
  for (int letter : word)
    if (letter < 0 || letter >= e.graph().rank())
      throw std::invalid_argument("word letter out of range");
  e.labels_ = word;
  e.below_.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    uint64_t acc = 0;
    for (int i = 0; i < j; ++i)
      if (e.graph().concurrent(word[i], word[j])) acc |= (uint64_t{1} << i) | e.below_[i];
    e.below_[j] = acc;
  }
  e.above_ = above_from_below(e.below_);
  e.finish();
  return e;
}

void Heap::finish() {
  // canonical word: repeatedly take the smallest-labelled minimal vertex
  const int n = size();
  canon_.clear();
  canon_.reserve(n);
  canon_perm_.clear();
  canon_perm_.reserve(n);
  uint64_t remaining = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!((remaining >> v) & 1u)) continue;
      if (below_[v] & remaining) continue;  // not minimal
      if (best == -1 || labels_[v] < labels_[best]) best = v;
    }
    canon_.push_back(labels_[best]);
    canon_perm_.push_back(best);
    remaining &= ~(uint64_t{1} << best);
  }
}

std::vector<int> Heap::between(int a, int b) const {
  std::vector<int> out;
  uint64_t m = between_mask(a, b);
  for (int v = 0; v < size(); ++v)
    if ((m >> v) & 1u) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Heap::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  return out;
}

bool Heap::is_trivial() const {
  for (int v = 0; v < size(); ++v)
    if (above_[v]) return false;
  return true;
}

std::vector<int> Heap::minimal_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (!below_[v]) out.push_back(v);
  return out;
}

std::vector<int> Heap::maximal_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (!above_[v]) out.push_back(v);
  return out;
}

std::vector<int> Heap::label_chain(int s) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (labels_[v] == s) out.push_back(v);
  return out;
}

int Heap::level(int v) const {
  check(v);
  std::vector<int> lev(size(), 0);
  for (int j = 0; j <= v; ++j) {
    int best = 0;
    for (int i = 0; i < j; ++i)
      if ((below_[j] >> i) & 1u) best = std::max(best, lev[i] + 1);
    lev[j] = best;
  }
  return lev[v];
}

Heap Heap::subheap_mask(uint64_t keep) const {
  const int n = size();
  if (n < 64 && (keep >> n)) throw std::out_of_range("subheap mask out of range");
  auto below = restricted_below(*this, keep);
  Heap sub(graph_);
  std::vector<int> newid(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!((keep >> v) & 1u)) continue;
    newid[v] = static_cast<int>(sub.labels_.size());
    sub.labels_.push_back(labels_[v]);
  }
  sub.below_.assign(sub.labels_.size(), 0);
  for (int v = 0; v < n; ++v) {
    if (newid[v] < 0) continue;
    uint64_t m = 0;
    for (int u = 0; u < v; ++u)
      if (((below[v] >> u) & 1u)) m |= uint64_t{1} << newid[u];
    sub.below_[newid[v]] = m;
  }
  sub.above_ = above_from_below(sub.below_);
  sub.finish();
  return sub;
}

Heap Heap::subheap(const std::vector<int>& keep) const {
  uint64_t mask = 0;
  for (int v : keep) mask |= uint64_t{1} << check(v);
  return subheap_mask(mask);
}

Heap Heap::erase_vertex(int v) const {
  check(v);
  uint64_t all = size() == 64 ? ~uint64_t{0} : (uint64_t{1} << size()) - 1;
  return subheap_mask(all & ~(uint64_t{1} << v));
}

Heap Heap::superpose(const Heap& upper) const {
  if (!(graph() == upper.graph()))
    throw std::invalid_argument("superpose: graphs do not match");
  const int n1 = size(), n2 = upper.size();
  if (n1 + n2 > max_heap_size) throw std::invalid_argument("superposition too large");
  Heap out(graph_);
  out.labels_ = labels_;
  out.labels_.insert(out.labels_.end(), upper.labels_.begin(), upper.labels_.end());
  out.below_.assign(n1 + n2, 0);
  for (int v = 0; v < n1; ++v) out.below_[v] = below_[v];
  for (int j = 0; j < n2; ++j) {
    uint64_t acc = upper.below_[j] << n1;
    for (int i = 0; i < n1; ++i)
      if (graph().concurrent(labels_[i], upper.labels_[j]))
        acc |= (uint64_t{1} << i) | below_[i];
    // close over the upper part's direct predecessors
    for (int i = 0; i < j; ++i)
      if ((upper.below_[j] >> i) & 1u) acc |= out.below_[n1 + i];
    out.below_[n1 + j] = acc;
  }
  out.above_ = above_from_below(out.below_);
  out.finish();
  return out;
}

bool Heap::is_convex(uint64_t subset) const {
  for (int z = 0; z < size(); ++z) {
    if ((subset >> z) & 1u) continue;
    if ((below_[z] & subset) && (above_[z] & subset)) return false;
  }
  return true;
}

bool Heap::is_convex(const std::vector<int>& subset) const {
  uint64_t mask = 0;
  for (int v : subset) mask |= uint64_t{1} << check(v);
  return is_convex(mask);
}

bool Heap::chain_increasing(const ChainSpec& c) const {
  for (size_t i = 0; i + 1 < c.vertices.size(); ++i)
    if (!less(c.vertices[i], c.vertices[i + 1])) return false;
  return true;
}

bool Heap::chain_convex(const ChainSpec& c) const {
  return is_convex(c.vertices);
}

bool Heap::chain_balanced(const ChainSpec& c) const {
  if (c.vertices.empty()) return false;
  return label(c.vertices.front()) == label(c.vertices.back());
}

Heap Heap::contract(const ChainSpec& c) const {
  if (c.vertices.empty()) throw std::invalid_argument("contract: empty chain");
  if (!chain_increasing(c)) throw std::invalid_argument("contract: not an increasing chain");
  if (!chain_convex(c)) throw std::invalid_argument("contract: chain is not convex");
  if (!chain_balanced(c)) throw std::invalid_argument("contract: chain is not balanced");
  uint64_t keep = size() == 64 ? ~uint64_t{0} : (uint64_t{1} << size()) - 1;
  for (size_t i = 1; i < c.vertices.size(); ++i) keep &= ~(uint64_t{1} << c.vertices[i]);
  return subheap_mask(keep);
}

std::optional<Heap::FcViolation> Heap::fc_violation() const {
  // (b) no cover between equal labels: only chain-consecutive pairs can cover
  for (int s = 0; s < graph().rank(); ++s) {
    auto chain = label_chain(s);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      if (covers(chain[i], chain[i + 1]))
        return FcViolation{true, s, -1, {chain[i], chain[i + 1]}};
  }
  // (a) no convex alternating chain of length m(s,t)
  for (int s = 0; s < graph().rank(); ++s) {
    for (int t = s + 1; t < graph().rank(); ++t) {
      if (!graph().adjacent(s, t)) continue;
      const int m = graph().bond(s, t);
      if (m == infinite_bond) continue;
      std::vector<int> merged;
      for (int v = 0; v < size(); ++v)
        if (labels_[v] == s || labels_[v] == t) merged.push_back(v);
      if (static_cast<int>(merged.size()) < m) continue;
      for (size_t lo = 0; lo + m <= merged.size(); ++lo) {
        bool alternating = true;
        uint64_t winmask = uint64_t{1} << merged[lo];
        for (int k = 1; k < m; ++k) {
          if (labels_[merged[lo + k]] == labels_[merged[lo + k - 1]]) {
            alternating = false;
            break;
          }
          winmask |= uint64_t{1} << merged[lo + k];
        }
        if (!alternating) continue;
        if ((between_mask(merged[lo], merged[lo + m - 1]) & ~winmask) == 0) {
          std::vector<int> chain(merged.begin() + lo, merged.begin() + lo + m);
          return FcViolation{false, labels_[chain[0]], labels_[chain[1]], chain};
        }
      }
    }
  }
  return std::nullopt;
}

bool Heap::is_fc() const { return !fc_violation().has_value(); }

std::vector<int> Heap::left_descents() const {
  if (!is_fc()) throw std::invalid_argument("left_descents: heap is not fully commutative");
  std::vector<int> out;
  for (int v : minimal_vertices()) out.push_back(labels_[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> Heap::right_descents() const {
  if (!is_fc()) throw std::invalid_argument("right_descents: heap is not fully commutative");
  std::vector<int> out;
  for (int v : maximal_vertices()) out.push_back(labels_[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Find a forbidden alternating window through a designated vertex (the
// newly added letter) in a non-FC extension heap.
std::optional<std::vector<int>> violation_window_through(const Heap& e, int pivot) {
  const auto& g = e.graph();
  const int s = e.label(pivot);
  for (int t = 0; t < g.rank(); ++t) {
    if (!g.adjacent(s, t)) continue;
    const int m = g.bond(s, t);
    if (m == infinite_bond) continue;
    std::vector<int> merged;
    for (int v = 0; v < e.size(); ++v)
      if (e.label(v) == s || e.label(v) == t) merged.push_back(v);
    if (static_cast<int>(merged.size()) < m) continue;
    for (size_t lo = 0; lo + m <= merged.size(); ++lo) {
      bool has_pivot = false;
      bool alternating = true;
      uint64_t winmask = 0;
      for (int k = 0; k < m; ++k) {
        int v = merged[lo + k];
        if (v == pivot) has_pivot = true;
        if (k > 0 && e.label(v) == e.label(merged[lo + k - 1])) {
          alternating = false;
          break;
        }
        winmask |= uint64_t{1} << v;
      }
      if (!alternating || !has_pivot) continue;
      if ((e.between_mask(merged[lo], merged[lo + m - 1]) & ~winmask) == 0)
        return std::vector<int>(merged.begin() + lo, merged.begin() + lo + m);
    }
  }
  return std::nullopt;
}

}  // namespace

LeftMultResult Heap::left_multiply_status(int s) const {
  if (s < 0 || s >= graph().rank()) throw std::out_of_range("generator out of range");
  auto mins = left_descents();
  if (std::find(mins.begin(), mins.end(), s) != mins.end())
    return LeftMultResult{MultStatus::descent, std::nullopt, -1, {}, {}};
  Word w;
  w.reserve(canon_.size() + 1);
  w.push_back(s);
  w.insert(w.end(), canon_.begin(), canon_.end());
  Heap ext = of_word(graph_, w);
  if (ext.is_fc())
    return LeftMultResult{MultStatus::still_fc, std::move(ext), -1, {}, {}};
  auto window = violation_window_through(ext, 0);
  if (!window || window->front() != 0)
    throw std::logic_error("left_multiply_status: missing alternating witness");
  LeftMultResult res;
  res.status = MultStatus::weakly_complex;
  res.partner = ext.label((*window)[1]);
  res.extended_chain.vertices = *window;
  // ext vertex j+1 holds letter j of the canonical word: map back to the
  // vertex ids of this heap
  for (size_t i = 1; i < window->size(); ++i)
    res.chain.vertices.push_back(canon_perm_[(*window)[i] - 1]);
  std::sort(res.chain.vertices.begin(), res.chain.vertices.end());
  res.extended = std::move(ext);
  return res;
}

LeftMultResult Heap::right_multiply_status(int s) const {
  if (s < 0 || s >= graph().rank()) throw std::out_of_range("generator out of range");
  auto maxs = right_descents();
  if (std::find(maxs.begin(), maxs.end(), s) != maxs.end())
    return LeftMultResult{MultStatus::descent, std::nullopt, -1, {}, {}};
  Word w = canon_;
  w.push_back(s);
  Heap ext = of_word(graph_, w);
  if (ext.is_fc())
    return LeftMultResult{MultStatus::still_fc, std::move(ext), -1, {}, {}};
  const int pivot = ext.size() - 1;
  auto window = violation_window_through(ext, pivot);
  if (!window || window->back() != pivot)
    throw std::logic_error("right_multiply_status: missing alternating witness");
  LeftMultResult res;
  res.status = MultStatus::weakly_complex;
  res.partner = ext.label((*window)[window->size() - 2]);
  res.extended_chain.vertices = *window;
  for (size_t i = 0; i + 1 < window->size(); ++i)
    res.chain.vertices.push_back(canon_perm_[(*window)[i]]);
  std::sort(res.chain.vertices.begin(), res.chain.vertices.end());
  res.extended = std::move(ext);
  return res;
}

namespace {

struct DismantleSearch {
  const Heap& e;
  std::map<uint64_t, bool> memo;

  bool trivial(const std::vector<uint64_t>& below, uint64_t mask) const {
    for (int v = 0; v < e.size(); ++v)
      if (((mask >> v) & 1u) && below[v]) return false;
    return true;
  }

  bool run(uint64_t mask, std::vector<int>* order) {
    auto it = memo.find(mask);
    if (it != memo.end()) {
      if (!it->second) return false;
      if (!order) return true;
      // reconstructing a witness: re-search known-true states
    }
    auto below = restricted_below(e, mask);
    auto above = above_from_below(below);
    if (trivial(below, mask)) {
      memo[mask] = true;
      return true;
    }
    for (int a = 0; a < e.size(); ++a) {
      if (!((mask >> a) & 1u)) continue;
      const bool a_max = ((mask >> a) & 1u) && (above[a] & mask) == 0;
      const bool a_min = (below[a] & mask) == 0;
      if (!a_max && !a_min) continue;
      uint64_t rest = mask & ~(uint64_t{1} << a);
      auto below2 = restricted_below(e, rest);
      auto above2 = above_from_below(below2);
      bool legal = false;
      for (int b = 0; b < e.size() && !legal; ++b) {
        if (!((rest >> b) & 1u) || e.label(b) == e.label(a)) continue;
        if (a_max && (above2[b] & rest) == 0 && (above[b] & mask) != 0) legal = true;
        if (a_min && (below2[b] & rest) == 0 && (below[b] & mask) != 0) legal = true;
      }
      if (!legal) continue;
      if (run(rest, order)) {
        memo[mask] = true;
        if (order) order->push_back(a);
        return true;
      }
    }
    memo[mask] = false;
    return false;
  }
};

}  // namespace

bool Heap::is_dismantlable() const {
  uint64_t all = size() == 64 ? ~uint64_t{0} : (uint64_t{1} << size()) - 1;
  DismantleSearch search{*this, {}};
  return search.run(all, nullptr);
}

std::optional<std::vector<int>> Heap::dismantling_order() const {
  uint64_t all = size() == 64 ? ~uint64_t{0} : (uint64_t{1} << size()) - 1;
  DismantleSearch search{*this, {}};
  std::vector<int> order;
  if (!search.run(all, &order)) return std::nullopt;
  // run() appends on unwind: reverse to get first-removed first
  std::reverse(order.begin(), order.end());
  return order;
}

bool Heap::has_property_p2() const {
  for (int s = 0; s < graph().rank(); ++s) {
    auto chain = label_chain(s);
    for (size_t i = 0; i < chain.size(); ++i)
      for (size_t j = i + 1; j < chain.size(); ++j)
        if (popcount(between_mask(chain[i], chain[j])) <= 1) return false;
  }
  return true;
}

Heap Heap::reversed() const {
  const int n = size();
  Heap out(graph_);
  out.labels_.resize(n);
  out.below_.assign(n, 0);
  for (int v = 0; v < n; ++v) out.labels_[v] = labels_[n - 1 - v];
  for (int v = 0; v < n; ++v) {
    uint64_t m = 0;
    for (int u = 0; u < n; ++u)
      if ((above_[n - 1 - v] >> (n - 1 - u)) & 1u) m |= uint64_t{1} << u;
    out.below_[v] = m;
  }
  out.above_ = above_from_below(out.below_);
  out.finish();
  return out;
}

namespace {

void extensions_rec(const Heap& e, uint64_t remaining, Word& prefix,
                    std::vector<Word>& out, size_t cap) {
  if (!remaining) {
    if (out.size() >= cap) throw std::runtime_error("too many linear extensions");
    out.push_back(prefix);
    return;
  }
  for (int v = 0; v < e.size(); ++v) {
    if (!((remaining >> v) & 1u)) continue;
    if (e.below_mask(v) & remaining) continue;
    prefix.push_back(e.label(v));
    extensions_rec(e, remaining & ~(uint64_t{1} << v), prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> Heap::linear_extensions(size_t cap) const {
  std::vector<Word> out;
  Word prefix;
  uint64_t all = size() == 64 ? ~uint64_t{0} : (uint64_t{1} << size()) - 1;
  extensions_rec(*this, all, prefix, out, cap);
  return out;
}

bool Heap::validate() const {
  const int n = size();
  for (int v = 0; v < n; ++v) {
    if (above_[v] & ((uint64_t{1} << (v + 1)) - 1)) return false;  // id order respected
    if ((above_[v] >> v) & 1u) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool rel = less(a, b) || less(b, a);
      if (graph().concurrent(labels_[a], labels_[b]) && !rel) return false;
    }
  // order must equal the closure of its concurrent pairs
  std::vector<uint64_t> closure(n, 0);
  for (int j = 0; j < n; ++j) {
    uint64_t acc = 0;
    for (int i = 0; i < j; ++i)
      if (less(i, j) && graph().concurrent(labels_[i], labels_[j]))
        acc |= (uint64_t{1} << i) | closure[i];
    closure[j] = acc;
  }
  return closure == below_;
}

std::string heap_to_dot(const Heap& e) {
  std::ostringstream out;
  out << "digraph heap {\n";
  out << "  node [shape=plaintext];\n";
  for (int v = 0; v < e.size(); ++v) {
    int s = e.label(v);
    int k = 0;
    for (int u : e.label_chain(s)) {
      ++k;
      if (u == v) break;
    }
    out << "  v" << v << " [label=\"s" << (s + 1) << "^(" << k << ")\", pos=\""
        << s << "," << e.level(v) << "!\"];\n";
  }
  for (auto [a, b] : e.cover_pairs()) out << "  v" << a << " -> v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace heaptl
