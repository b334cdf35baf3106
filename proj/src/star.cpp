#include "heaptl/star.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace heaptl {

std::optional<FCElement> FCElement::from_word(GraphPtr g, const Word& w) {
  Heap e = Heap::of_word(std::move(g), w);
  if (!e.is_fc()) return std::nullopt;
  return FCElement(std::move(e));
}

FCElement FCElement::from_heap(Heap e) {
  if (!e.is_fc()) throw std::invalid_argument("not the heap of a fully commutative element");
  return FCElement(std::move(e));
}

namespace {

void require_adjacent(const CoxeterGraph& g, int s, int t) {
  if (!g.adjacent(s, t))
    throw std::invalid_argument("star operations need a non-commuting pair");
}

int minimal_vertex_with_label(const Heap& e, int a) {
  for (int v : e.minimal_vertices())
    if (e.label(v) == a) return v;
  return -1;
}

int maximal_vertex_with_label(const Heap& e, int a) {
  for (int v : e.maximal_vertices())
    if (e.label(v) == a) return v;
  return -1;
}

}  // namespace

CosetDecomposition coset_decompose_left(const FCElement& w, int s, int t) {
  require_adjacent(w.heap().graph(), s, t);
  Heap h = w.heap();
  Word prefix;
  for (;;) {
    int v = minimal_vertex_with_label(h, s);
    if (v < 0) v = minimal_vertex_with_label(h, t);
    if (v < 0) break;
    prefix.push_back(h.label(v));
    h = h.erase_vertex(v);
  }
  return CosetDecomposition{std::move(prefix), FCElement::from_heap(std::move(h))};
}

CosetDecomposition coset_decompose_right(const FCElement& w, int s, int t) {
  require_adjacent(w.heap().graph(), s, t);
  Heap h = w.heap();
  Word peeled;
  for (;;) {
    int v = maximal_vertex_with_label(h, s);
    if (v < 0) v = maximal_vertex_with_label(h, t);
    if (v < 0) break;
    peeled.push_back(h.label(v));
    h = h.erase_vertex(v);
  }
  std::reverse(peeled.begin(), peeled.end());
  return CosetDecomposition{std::move(peeled), FCElement::from_heap(std::move(h))};
}

namespace {

// Shared core for the four star maps. `left` picks the side, `up` the
// direction.
std::optional<FCElement> star_op(const FCElement& w, int s, int t, bool left, bool up) {
  const auto& g = w.heap().graph();
  require_adjacent(g, s, t);
  const int m = g.bond(s, t);
  CosetDecomposition dec = left ? coset_decompose_left(w, s, t)
                                : coset_decompose_right(w, s, t);
  const int k = static_cast<int>(dec.prefix.size());
  if (k < 1) return std::nullopt;                        // not in a string
  if (m != infinite_bond && k > m - 1) return std::nullopt;
  if (up) {
    if (m != infinite_bond && k + 1 > m - 1) return std::nullopt;
    const int boundary_letter = left ? dec.prefix.front() : dec.prefix.back();
    const int other = boundary_letter == s ? t : s;
    Word word;
    if (left) {
      word.reserve(w.length() + 1);
      word.push_back(other);
      word.insert(word.end(), w.word().begin(), w.word().end());
    } else {
      word = w.word();
      word.push_back(other);
    }
    return FCElement::from_word(w.heap().graph_ptr(), word);
  }
  if (k < 2) return std::nullopt;  // the shorter neighbor leaves the string
  const int drop_label = left ? dec.prefix.front() : dec.prefix.back();
  const int v = left ? minimal_vertex_with_label(w.heap(), drop_label)
                     : maximal_vertex_with_label(w.heap(), drop_label);
  return FCElement::from_heap(w.heap().erase_vertex(v));
}

}  // namespace

std::optional<FCElement> star_up_left(const FCElement& w, int s, int t) {
  return star_op(w, s, t, true, true);
}
std::optional<FCElement> star_down_left(const FCElement& w, int s, int t) {
  return star_op(w, s, t, true, false);
}
std::optional<FCElement> star_up_right(const FCElement& w, int s, int t) {
  return star_op(w, s, t, false, true);
}
std::optional<FCElement> star_down_right(const FCElement& w, int s, int t) {
  return star_op(w, s, t, false, false);
}

std::optional<std::vector<StarMove>> star_reduce_to_commuting(const FCElement& w) {
  if (w.heap().is_trivial()) return std::vector<StarMove>{};
  const auto& g = w.heap().graph();
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < g.rank(); ++s)
    for (int t = s + 1; t < g.rank(); ++t)
      if (g.adjacent(s, t)) pairs.emplace_back(s, t);

  struct Parent {
    Word from;
    StarMove move;
  };
  std::map<Word, Parent> parent;
  std::deque<FCElement> queue{w};
  parent.emplace(w.word(), Parent{});
  while (!queue.empty()) {
    FCElement cur = std::move(queue.front());
    queue.pop_front();
    for (auto [s, t] : pairs) {
      for (bool left : {true, false}) {
        auto next = left ? star_down_left(cur, s, t) : star_down_right(cur, s, t);
        if (!next) continue;
        if (parent.count(next->word())) continue;
        parent.emplace(next->word(), Parent{cur.word(), StarMove{left, s, t}});
        if (next->heap().is_trivial()) {
          std::vector<StarMove> trace;
          Word at = next->word();
          while (at != w.word()) {
            const Parent& p = parent.at(at);
            trace.push_back(p.move);
            at = p.from;
          }
          std::reverse(trace.begin(), trace.end());
          return trace;
        }
        queue.push_back(*next);
      }
    }
  }
  return std::nullopt;
}

void enumerate_fc(const GraphPtr& g, int max_len,
                  const std::function<void(const FCElement&)>& visit) {
  if (max_len < 0) throw std::invalid_argument("enumerate_fc: negative bound");
  std::vector<FCElement> level{FCElement::identity(g)};
  visit(level[0]);
  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    std::map<Word, FCElement> next;
    for (const FCElement& w : level) {
      for (int s = 0; s < g->rank(); ++s) {
        auto res = w.heap().left_multiply_status(s);
        if (res.status != MultStatus::still_fc) continue;
        FCElement ext = FCElement::from_heap(std::move(*res.extended));
        next.try_emplace(ext.word(), std::move(ext));
      }
    }
    level.clear();
    for (auto& [word, elt] : next) {
      visit(elt);
      level.push_back(std::move(elt));
    }
  }
}

std::vector<FCElement> enumerate_fc(const GraphPtr& g, int max_len) {
  std::vector<FCElement> out;
  enumerate_fc(g, max_len, [&](const FCElement& w) { out.push_back(w); });
  return out;
}

}  // namespace heaptl
