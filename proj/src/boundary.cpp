#include "heaptl/boundary.hpp"

#include "heaptl/union_find.hpp"

#include <algorithm>
#include <stdexcept>

namespace heaptl {

BoundaryComplex::BoundaryComplex(Heap e) : heap_(std::move(e)) {
  const auto& g = heap_.graph();
  for (int s = 0; s < g.rank(); ++s) {
    auto chain = heap_.label_chain(s);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      edges_.push_back(Edge{chain[i], chain[i + 1]});
  }
  columns_.reserve(edges_.size());
  for (const auto& [lo, hi] : edges_) {
    std::vector<int> col;
    const int s = heap_.label(lo);
    for (int w : heap_.between(lo, hi))
      if (g.adjacent(heap_.label(w), s)) col.push_back(w);
    columns_.push_back(std::move(col));
  }
  RationalMatrix m(heap_.size(), static_cast<int>(edges_.size()));
  for (size_t k = 0; k < columns_.size(); ++k)
    for (int v : columns_[k]) m.at(v, static_cast<int>(k)) = 1;
  solver_ = std::make_shared<RationalSolver>(m);
}

bool BoundaryComplex::is_boundary_vertex(int v) const {
  if (v < 0 || v >= heap_.size()) throw std::out_of_range("vertex out of range");
  std::vector<Rat> rhs(heap_.size());
  rhs[v] = 1;
  return solver_->solvable(rhs);
}

std::vector<int> BoundaryComplex::boundary_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < heap_.size(); ++v)
    if (is_boundary_vertex(v)) out.push_back(v);
  return out;
}

std::vector<int> BoundaryComplex::effective_boundary_vertices() const {
  std::vector<int> out;
  for (const auto& col : columns_)
    if (col.size() == 1) out.push_back(col[0]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> BoundaryComplex::linear_equivalence_classes() const {
  UnionFind uf(heap_.size());
  for (const auto& col : columns_)
    if (col.size() == 2) uf.unite(col[0], col[1]);
  return uf.classes();
}

BoundaryComplex::Verdict BoundaryComplex::verify_main_theorem() const {
  if (!heap_.is_fc())
    throw std::invalid_argument("verify_main_theorem: heap is not fully commutative");
  auto effective = effective_boundary_vertices();
  UnionFind uf(heap_.size());
  for (const auto& col : columns_)
    if (col.size() == 2) uf.unite(col[0], col[1]);
  std::vector<bool> class_has_effective(heap_.size(), false);
  for (int v : effective) class_has_effective[uf.find(v)] = true;
  for (int v = 0; v < heap_.size(); ++v) {
    if (!is_boundary_vertex(v)) continue;
    if (!class_has_effective[uf.find(v)]) return Verdict{false, v};
  }
  return Verdict{true, -1};
}

bool is_strongly_acyclic(const Heap& e) {
  if (!BoundaryComplex(e).is_acyclic()) return false;
  for (int v = 0; v < e.size(); ++v)
    if (!BoundaryComplex(e.erase_vertex(v)).is_acyclic()) return false;
  return true;
}

int boundary_kernel_dim(const GraphPtr& g, const Word& w) {
  return BoundaryComplex(Heap::of_word(g, w)).kernel_dim();
}

}  // namespace heaptl
