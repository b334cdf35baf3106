#pragma once

#include <numeric>
#include <vector>

namespace heaptl {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the least element as representative
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  // Partition as sorted classes of sorted members, singletons included.
  std::vector<std::vector<int>> classes() {
    std::vector<std::vector<int>> by_root(parent_.size());
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v)
      by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : by_root)
      if (!c.empty()) out.push_back(std::move(c));
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace heaptl
