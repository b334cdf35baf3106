#include "heaptl/tl.hpp"

#include "heaptl/boundary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heaptl {

void TLElement::add(const Word& w, const Laurent& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& other) {
  for (const auto& [w, p] : other.terms_) add(w, p);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  for (const auto& [w, p] : other.terms_) add(w, -p);
  return *this;
}

TLElement TLElement::scaled(const Laurent& p) const {
  TLElement out;
  if (p.is_zero()) return out;
  for (const auto& [w, q] : terms_) out.terms_.emplace(w, q * p);
  return out;
}

bool TLElement::in_lattice() const {
  for (const auto& [w, p] : terms_)
    if (!p.in_neg()) return false;
  return true;
}

bool TLElement::in_v_inv_lattice() const {
  for (const auto& [w, p] : terms_)
    if (!p.in_strict_neg()) return false;
  return true;
}

std::string TLElement::str() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [w, p] : terms_)
    out << "(" << p.str() << ") * t[" << word_str(w) << "]\n";
  return out.str();
}

TLAlgebra::TLAlgebra(GraphPtr g) : g_(std::move(g)) {
  if (!g_) throw std::invalid_argument("TL algebra requires a graph");
}

const Heap& TLAlgebra::heap_of(const Word& canonical_word) const {
  auto it = heaps_.find(canonical_word);
  if (it != heaps_.end()) return it->second;
  Heap e = Heap::of_word(g_, canonical_word);
  return heaps_.emplace(canonical_word, std::move(e)).first->second;
}

TLElement TLAlgebra::mult_gen_left(int s, const TLElement& x) const {
  TLElement out;
  for (const auto& [w, p] : x.terms()) out += gen_times_basis(s, w).scaled(p);
  return out;
}

TLElement TLAlgebra::mult_gen_right(const TLElement& x, int s) const {
  TLElement out;
  for (const auto& [w, p] : x.terms()) out += basis_times_gen(w, s).scaled(p);
  return out;
}

TLElement TLAlgebra::eval_word(const Word& w) const {
  TLElement r = unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = mult_gen_left(*it, r);
  return r;
}

TLElement TLAlgebra::mult(const TLElement& x, const TLElement& y) const {
  TLElement out;
  for (const auto& [w, p] : x.terms()) {
    TLElement acc = y;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = mult_gen_left(*it, acc);
    out += acc.scaled(p);
  }
  return out;
}

namespace {

// Alternating word s t s t ... of the requested length.
Word alternating(int first, int second, int len) {
  Word w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : second);
  return w;
}

}  // namespace

TLElement TLAlgebra::reduce_complex(const Heap& extended,
                                    const std::vector<int>& window) const {
  const int m = static_cast<int>(window.size());
  const int s = extended.label(window[0]);
  const int t = extended.label(window[1]);
  uint64_t window_mask = 0;
  for (int v : window) window_mask |= uint64_t{1} << v;
  uint64_t low_mask = 0;
  for (int v = 0; v < extended.size(); ++v) {
    if ((window_mask >> v) & 1u) continue;
    if (extended.above_mask(v) & window_mask) low_mask |= uint64_t{1} << v;
  }
  uint64_t all = extended.size() == 64 ? ~uint64_t{0}
                                       : (uint64_t{1} << extended.size()) - 1;
  uint64_t high_mask = all & ~window_mask & ~low_mask;
  const Word lower = extended.subheap_mask(low_mask).canonical_word();
  const Word upper = extended.subheap_mask(high_mask).canonical_word();

  // image of the longest dihedral element: minus the v^(l(u)-m)-weighted sum
  // of the shorter alternating elements
  TLElement out;
  for (int len = 0; len < m; ++len) {
    std::vector<Word> mids;
    if (len == 0) {
      mids.push_back(Word{});
    } else {
      mids.push_back(alternating(s, t, len));
      mids.push_back(alternating(t, s, len));
    }
    for (const Word& mid : mids) {
      Word word;
      word.reserve(lower.size() + mid.size() + upper.size());
      word.insert(word.end(), lower.begin(), lower.end());
      word.insert(word.end(), mid.begin(), mid.end());
      word.insert(word.end(), upper.begin(), upper.end());
      out += eval_word(word).scaled(-Laurent::v(len - m));
    }
  }
  return out;
}

TLElement TLAlgebra::gen_times_basis(int s, const Word& w) const {
  const auto key = std::make_pair(s, w);
  auto memo = left_memo_.find(key);
  if (memo != left_memo_.end()) return memo->second;

  const Heap& e = heap_of(w);
  TLElement out;
  int descent_vertex = -1;
  for (int v : e.minimal_vertices())
    if (e.label(v) == s) {
      descent_vertex = v;
      break;
    }
  if (descent_vertex >= 0) {
    // t_s t_w = t_{sw} + (v - v^-1) t_w
    out = TLElement::basis(e.erase_vertex(descent_vertex).canonical_word());
    out.add(w, Laurent::v(1) - Laurent::v(-1));
  } else {
    Word sw;
    sw.reserve(w.size() + 1);
    sw.push_back(s);
    sw.insert(sw.end(), w.begin(), w.end());
    Heap ext = Heap::of_word(g_, sw);
    if (ext.is_fc()) {
      out = TLElement::basis(ext.canonical_word());
    } else {
      auto res = e.left_multiply_status(s);
      if (res.status != MultStatus::weakly_complex)
        throw std::logic_error("gen_times_basis: inconsistent status");
      out = reduce_complex(*res.extended, res.extended_chain.vertices);
    }
  }
  left_memo_.emplace(key, out);
  return out;
}

TLElement TLAlgebra::basis_times_gen(const Word& w, int s) const {
  const auto key = std::make_pair(w, s);
  auto memo = right_memo_.find(key);
  if (memo != right_memo_.end()) return memo->second;

  const Heap& e = heap_of(w);
  TLElement out;
  int descent_vertex = -1;
  for (int v : e.maximal_vertices())
    if (e.label(v) == s) {
      descent_vertex = v;
      break;
    }
  if (descent_vertex >= 0) {
    out = TLElement::basis(e.erase_vertex(descent_vertex).canonical_word());
    out.add(w, Laurent::v(1) - Laurent::v(-1));
  } else {
    Word ws = w;
    ws.push_back(s);
    Heap ext = Heap::of_word(g_, ws);
    if (ext.is_fc()) {
      out = TLElement::basis(ext.canonical_word());
    } else {
      auto res = e.right_multiply_status(s);
      if (res.status != MultStatus::weakly_complex)
        throw std::logic_error("basis_times_gen: inconsistent status");
      out = reduce_complex(*res.extended, res.extended_chain.vertices);
    }
  }
  right_memo_.emplace(key, out);
  return out;
}

TLElement TLAlgebra::b_product(const Word& letters) const {
  TLElement r = unit();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r = mult_gen_left(*it, r) + r.scaled(Laurent::v(-1));
  return r;
}

TLAlgebra::CBasisError::CBasisError(const std::string& msg, Word k, Laurent c)
    : std::runtime_error(msg), key(std::move(k)), coeff(std::move(c)) {}

TLElement TLAlgebra::c_element(const Word& canonical_word) const {
  auto cached = c_cache_.find(canonical_word);
  if (cached != c_cache_.end()) return cached->second;

  TLElement result;
  if (canonical_word.empty()) {
    result = unit();
  } else {
    const Heap& e = heap_of(canonical_word);
    // the first canonical letter is a left descent
    const int s = canonical_word.front();
    int v = -1;
    for (int u : e.minimal_vertices())
      if (e.label(u) == s) {
        v = u;
        break;
      }
    if (v < 0) throw std::logic_error("c_element: canonical word without its descent");
    const Word shorter = e.erase_vertex(v).canonical_word();
    const TLElement c_shorter = c_element(shorter);
    // c_s * c_{shorter}
    TLElement xi = mult_gen_left(s, c_shorter) + c_shorter.scaled(Laurent::v(-1));
    // strip mu * c_y for lower keys y with s in L(y), longest first
    for (int len = static_cast<int>(canonical_word.size()) - 1; len >= 0; --len) {
      std::vector<Word> keys;
      for (const auto& [y, p] : xi.terms())
        if (static_cast<int>(y.size()) == len) keys.push_back(y);
      for (const Word& y : keys) {
        const Laurent p = xi.coeff(y);
        if (p.is_zero()) continue;
        const Int mu = p.coeff(0);
        if (mu == 0) continue;
        const Heap& ye = heap_of(y);
        bool descent = false;
        for (int u : ye.minimal_vertices())
          if (ye.label(u) == s) {
            descent = true;
            break;
          }
        if (!descent) continue;
        xi -= c_element(y).scaled(Laurent(mu));
      }
    }
    result = std::move(xi);
  }

  // contract: unit leading coefficient, lower coefficients in v^-1 Z[v^-1]
  for (const auto& [y, p] : result.terms()) {
    if (y == canonical_word) {
      if (!p.is_one())
        throw CBasisError("canonical basis element has a non-unit leading coefficient", y, p);
    } else if (!p.in_strict_neg()) {
      throw CBasisError("canonical basis element has a non-negative lower coefficient", y, p);
    }
  }
  if (result.coeff(canonical_word).is_zero())
    throw CBasisError("canonical basis element lost its leading term", canonical_word, Laurent());

  c_cache_.emplace(canonical_word, result);
  return result;
}

TLElement TLAlgebra::c_element(const FCElement& w) const { return c_element(w.word()); }

bool TLAlgebra::in_sub_lattice(const TLElement& x, int s, bool left) const {
  for (const auto& [w, p] : x.terms()) {
    const Heap& e = heap_of(w);
    bool descent = false;
    for (int v : left ? e.minimal_vertices() : e.maximal_vertices())
      if (e.label(v) == s) {
        descent = true;
        break;
      }
    if (descent ? !p.in_neg() : !p.in_strict_neg()) return false;
  }
  return true;
}

TLElement::Map TLAlgebra::expand_in_b(TLElement x) const {
  TLElement::Map out;
  while (!x.is_zero()) {
    const auto& [z, p] = *x.terms().rbegin();
    Word key = z;
    Laurent coeff = p;
    x -= b_product(key).scaled(coeff);
    out.emplace(std::move(key), std::move(coeff));
  }
  return out;
}

TLElement::Map TLAlgebra::expand_in_c(TLElement x) const {
  TLElement::Map out;
  while (!x.is_zero()) {
    const auto& [z, p] = *x.terms().rbegin();
    Word key = z;
    Laurent coeff = p;
    x -= c_element(key).scaled(coeff);
    out.emplace(std::move(key), std::move(coeff));
  }
  return out;
}

int TLAlgebra::h_function(const Word& u) const { return boundary_kernel_dim(g_, u); }

PropertyWReport check_property_w(const TLAlgebra& alg, int max_len) {
  PropertyWReport report;
  enumerate_fc(alg.graph_ptr(), max_len, [&](const FCElement& w) {
    ++report.elements;
    for (int s = 0; s < alg.graph().rank(); ++s) {
      auto res = w.heap().left_multiply_status(s);
      if (res.status != MultStatus::weakly_complex) continue;
      ++report.extensions;
      Word sw;
      sw.reserve(w.word().size() + 1);
      sw.push_back(s);
      sw.insert(sw.end(), w.word().begin(), w.word().end());
      TLElement image = alg.eval_word(sw);
      if (!image.in_v_inv_lattice())
        report.failures.push_back(PropertyWFailure{w.word(), s, std::move(image)});
    }
  });
  return report;
}

StructureConstants structure_constants_c(const TLAlgebra& alg, int total_len) {
  StructureConstants table;
  auto elements = enumerate_fc(alg.graph_ptr(), total_len);
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      if (x.length() + y.length() > total_len) continue;
      TLElement prod = alg.mult(alg.c_element(x), alg.c_element(y));
      auto expansion = alg.expand_in_c(std::move(prod));
      std::vector<std::pair<Word, Laurent>> row(expansion.begin(), expansion.end());
      table.products.emplace(std::make_pair(x.word(), y.word()), std::move(row));
    }
  }
  return table;
}

std::vector<NegativeConstant> check_nonnegativity(const StructureConstants& table) {
  std::vector<NegativeConstant> bad;
  for (const auto& [key, row] : table.products)
    for (const auto& [z, coeff] : row)
      if (!coeff.coeffs_nonnegative())
        bad.push_back(NegativeConstant{key.first, key.second, z, coeff});
  return bad;
}

}  // namespace heaptl
