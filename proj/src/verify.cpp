#include "heaptl/verify.hpp"

#include "heaptl/union_find.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace heaptl {

namespace {

std::string pattern_word(const std::vector<int>& letters) {
  return word_str(Word(letters.begin(), letters.end()));
}

bool line_bonds_all_three(const CoxeterGraph& g, int from, int to) {
  for (int j = from; j <= to; ++j)
    if (g.bond(j, j + 1) != 3) return false;
  return true;
}

std::vector<int> strong_line_bonds(const CoxeterGraph& g) {
  std::vector<int> out;
  for (int j = 0; j + 1 < g.rank(); ++j)
    if (g.bond(j, j + 1) > 3) out.push_back(j);
  return out;
}

void push_nested_triple_patterns(const CoxeterGraph& g, std::vector<TracePattern>& out) {
  // two occurrences of s_i s_{i+2} s_{i+1} folding back with nothing from
  // further right between them
  for (int i = 0; i + 2 < g.rank(); ++i) {
    TracePattern p;
    std::ostringstream name;
    name << "nested_triple(i=" << (i + 1) << ")";
    p.name = name.str();
    p.block1 = {i, i + 2, i + 1};
    p.block2 = {i + 1, i + 2, i};
    p.excluded = {i + 2};
    if (i + 3 < g.rank()) p.excluded.push_back(i + 3);
    out.push_back(std::move(p));
  }
}

}  // namespace

std::vector<TracePattern> applicable_patterns(const CoxeterGraph& g) {
  std::vector<TracePattern> out;
  if (!g.is_line()) return out;
  const auto strong = strong_line_bonds(g);
  const int n = g.rank();

  // one interior strong bond at s2-s3: the F-line patterns
  if (strong.size() == 1 && strong[0] == 1 && g.bond(1, 2) == 4 && n >= 4) {
    auto add = [&](const char* name, std::vector<int> b1, std::vector<int> b2,
                   std::vector<int> excl) {
      std::vector<int> filtered;
      for (int letter : excl)
        if (letter < n) filtered.push_back(letter);
      out.push_back(TracePattern{name, std::move(b1), std::move(b2), std::move(filtered)});
    };
    add("strong_bond_block(ii)", {0, 1}, {2, 1, 0, 2}, {2, 3});
    add("strong_bond_block(iii)", {3, 2}, {1, 2, 1, 3}, {3, 4});
    add("strong_bond_block(iv)", {2, 0, 1, 2}, {1, 0}, {2, 3});
    add("strong_bond_block(v)", {3, 1, 2, 1}, {2, 3}, {3, 4});
    push_nested_triple_patterns(g, out);
  }

  // one strong bond of 5 at the left end: the H-line pattern
  if (strong.size() == 1 && strong[0] == 0 && g.bond(0, 1) == 5)
    push_nested_triple_patterns(g, out);

  // strong bonds of 4 at both ends with an even vertex count: affine C
  if (strong.size() == 2 && strong[0] == 0 && strong[1] == n - 2 &&
      g.bond(0, 1) == 4 && g.bond(n - 2, n - 1) == 4 && n % 2 == 0) {
    for (int i = 0; i + 2 < n; ++i) {
      auto add = [&](const char* variant, std::vector<int> b1, std::vector<int> b2,
                     std::vector<int> excl) {
        std::vector<int> filtered;
        for (int letter : excl)
          if (letter >= 0 && letter < n) filtered.push_back(letter);
        std::ostringstream name;
        name << "affine_end(" << variant << ",i=" << (i + 1) << ")";
        out.push_back(
            TracePattern{name.str(), std::move(b1), std::move(b2), std::move(filtered)});
      };
      add("i", {i + 2, i, i + 1}, {i + 1, i}, {i, i - 1});
      add("ii", {i, i + 1}, {i + 1, i, i + 2}, {i, i - 1});
      add("iii", {i + 2, i + 1}, {i + 1, i + 2, i}, {i + 2, i + 3});
      add("iv", {i, i + 2, i + 1}, {i + 1, i + 2}, {i + 2, i + 3});
    }
  }
  return out;
}

bool word_matches_pattern(const Word& w, const TracePattern& p) {
  const int n = static_cast<int>(w.size());
  const int len1 = static_cast<int>(p.block1.size());
  const int len2 = static_cast<int>(p.block2.size());
  auto block_at = [&](const std::vector<int>& block, int pos) {
    for (size_t k = 0; k < block.size(); ++k)
      if (w[pos + k] != block[k]) return false;
    return true;
  };
  for (int a = 0; a + len1 + len2 <= n; ++a) {
    if (!block_at(p.block1, a)) continue;
    for (int b = a + len1; b + len2 <= n; ++b) {
      if (!block_at(p.block2, b)) continue;
      bool clean = true;
      for (int k = a + len1; k < b && clean; ++k)
        for (int excl : p.excluded)
          if (w[k] == excl) {
            clean = false;
            break;
          }
      if (clean) return true;
    }
  }
  return false;
}

namespace {

// Two occurrences of `letter` with no `separator` strictly between them.
// separator == -1 means no separator exists, so any repeat matches.
bool has_unseparated_repeat(const Word& w, int letter, int separator) {
  int last = -1;
  bool separated = true;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i] == letter) {
      if (last >= 0 && !separated) return true;
      last = i;
      separated = false;
    } else if (w[i] == separator) {
      separated = true;
    }
  }
  return false;
}

}  // namespace

std::vector<CheckViolation> forbidden_scan_element(const FCElement& w) {
  std::vector<CheckViolation> out;
  const auto& g = w.heap().graph();
  std::set<std::string> reported;
  auto report = [&](const std::string& check, const std::string& detail) {
    if (reported.insert(check).second)
      out.push_back(CheckViolation{check, w.word(), detail});
  };

  // occurrence bound in the rank-3 line with one strong end bond
  if (g.rank() == 3 && g.is_line() && g.bond(0, 1) == 4 && g.bond(1, 2) == 3) {
    for (int letter : {1, 2}) {
      long count = std::count(w.word().begin(), w.word().end(), letter);
      if (count > 3) {
        std::ostringstream detail;
        detail << "s" << (letter + 1) << " occurs " << count << " times";
        report("occurrence_bound", detail.str());
      }
    }
  }

  const auto patterns = applicable_patterns(g);
  const bool line = g.is_line();
  const bool f_unique_separator =
      line && g.rank() >= 4 && strong_line_bonds(g) == std::vector<int>{1} && g.bond(1, 2) == 4;

  for (const Word& word : w.heap().linear_extensions()) {
    for (const auto& p : patterns)
      if (word_matches_pattern(word, p)) report(p.name, "trace " + word_str(word));
    if (line) {
      for (int letter = 0; letter < g.rank(); ++letter) {
        if (line_bonds_all_three(g, letter, g.rank() - 2)) {
          int sep = letter - 1;  // -1: no separator exists
          if (has_unseparated_repeat(word, letter, sep))
            report("repeat_separation_left(s" + std::to_string(letter + 1) + ")",
                   "trace " + word_str(word));
        }
        if (line_bonds_all_three(g, 0, std::min(letter, g.rank() - 2))) {
          int sep = letter + 1 < g.rank() ? letter + 1 : -1;
          if (has_unseparated_repeat(word, letter, sep))
            report("repeat_separation_right(s" + std::to_string(letter + 1) + ")",
                   "trace " + word_str(word));
        }
      }
    }
    if (f_unique_separator) {
      // between consecutive occurrences of s3 with no s4, exactly one s2
      const int target = 2, blocker = 3, sep = 1;
      int last = -1, seps = 0;
      bool blocked = false;
      for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (word[i] == target) {
          if (last >= 0 && !blocked && seps != 1)
            report("strong_bond_unique_separator", "trace " + word_str(word));
          last = i;
          seps = 0;
          blocked = false;
        } else if (word[i] == blocker) {
          blocked = true;
        } else if (word[i] == sep) {
          ++seps;
        }
      }
    }
  }
  return out;
}

ForbiddenScanReport forbidden_scan(const GraphPtr& g, int max_len) {
  ForbiddenScanReport report;
  report.family_recognized =
      g->rank() >= 3 && g->is_line() && !strong_line_bonds(*g).empty();
  enumerate_fc(g, max_len, [&](const FCElement& w) {
    ++report.elements;
    auto v = forbidden_scan_element(w);
    report.matches.insert(report.matches.end(), v.begin(), v.end());
  });
  return report;
}

// ---------------------------------------------------------------------------
// Lemma battery
// ---------------------------------------------------------------------------

namespace {

struct Battery {
  const GraphPtr& g;
  const BatteryOptions& opt;
  BatteryReport& report;
  std::mt19937 rng;
  TLAlgebra alg;

  Battery(const GraphPtr& graph, const BatteryOptions& options, BatteryReport& rep)
      : g(graph), opt(options), report(rep), rng(options.seed), alg(graph) {}

  void count(const char* check) { ++report.assertions[check]; }

  void fail(const char* check, const Word& element, const std::string& detail) {
    report.violations.push_back(CheckViolation{check, element, detail});
  }

  uint64_t full_mask(const Heap& e) const {
    return e.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << e.size()) - 1;
  }

  // Random convex subset via extremal peeling in the induced order.
  uint64_t random_convex_subset(const Heap& e) {
    uint64_t mask = full_mask(e);
    if (e.size() == 0) return mask;
    int removals = std::uniform_int_distribution<int>(0, e.size())(rng);
    for (int step = 0; step < removals; ++step) {
      std::vector<int> extremal;
      for (int v = 0; v < e.size(); ++v) {
        if (!((mask >> v) & 1u)) continue;
        if ((e.above_mask(v) & mask) == 0 || (e.below_mask(v) & mask) == 0)
          extremal.push_back(v);
      }
      if (extremal.empty()) break;
      int pick = extremal[std::uniform_int_distribution<size_t>(0, extremal.size() - 1)(rng)];
      mask &= ~(uint64_t{1} << pick);
    }
    return mask;
  }

  Word random_word(int max_len, int min_len = 1) {
    int len = std::uniform_int_distribution<int>(min_len, std::max(min_len, max_len))(rng);
    Word w(len);
    std::uniform_int_distribution<int> letter(0, g->rank() - 1);
    for (int& x : w) x = letter(rng);
    return w;
  }

  void convex_subheap_checks(const FCElement& elt, const BoundaryComplex& parent) {
    const Heap& e = elt.heap();
    std::set<std::pair<int, int>> parent_edges;
    std::map<std::pair<int, int>, std::vector<int>> parent_columns;
    for (size_t k = 0; k < parent.edges().size(); ++k) {
      auto key = std::make_pair(parent.edges()[k].lo, parent.edges()[k].hi);
      parent_edges.insert(key);
      parent_columns.emplace(key, parent.columns()[k]);
    }
    UnionFind parent_uf(e.size());
    for (const auto& col : parent.columns())
      if (col.size() == 2) parent_uf.unite(col[0], col[1]);
    std::set<int> parent_effective;
    for (int v : parent.effective_boundary_vertices()) parent_effective.insert(v);
    std::vector<bool> parent_boundary(e.size());
    for (int v = 0; v < e.size(); ++v) parent_boundary[v] = parent.is_boundary_vertex(v);

    for (int sample = 0; sample < opt.samples_per_heap; ++sample) {
      uint64_t mask = random_convex_subset(e);
      std::vector<int> ids;
      for (int v = 0; v < e.size(); ++v)
        if ((mask >> v) & 1u) ids.push_back(v);
      Heap sub = e.subheap_mask(mask);
      BoundaryComplex subc(sub);

      // interval restriction
      for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b) {
          if (!sub.less(static_cast<int>(a), static_cast<int>(b)) &&
              !e.less(ids[a], ids[b]))
            continue;
          count("convex_interval_restriction");
          std::vector<int> inner;
          for (int z : sub.between(static_cast<int>(a), static_cast<int>(b)))
            inner.push_back(ids[z]);
          if (inner != e.between(ids[a], ids[b]) ||
              sub.less(static_cast<int>(a), static_cast<int>(b)) !=
                  e.less(ids[a], ids[b]))
            fail("convex_interval_restriction", elt.word(),
                 "interval differs at (" + std::to_string(ids[a] + 1) + "," +
                     std::to_string(ids[b] + 1) + ")");
        }

      for (size_t k = 0; k < subc.edges().size(); ++k) {
        const auto& edge = subc.edges()[k];
        auto key = std::make_pair(ids[edge.lo], ids[edge.hi]);
        count("convex_edge_persistence");
        if (!parent_edges.count(key)) {
          fail("convex_edge_persistence", elt.word(),
               "edge (" + std::to_string(key.first + 1) + "," +
                   std::to_string(key.second + 1) + ") vanishes upstairs");
          continue;
        }
        count("convex_boundary_locality");
        std::vector<int> mapped;
        for (int z : subc.columns()[k]) mapped.push_back(ids[z]);
        if (mapped != parent_columns.at(key))
          fail("convex_boundary_locality", elt.word(),
               "column of (" + std::to_string(key.first + 1) + "," +
                   std::to_string(key.second + 1) + ") differs");
        if (subc.columns()[k].size() == 2) {
          count("convex_equivalence_transport");
          if (!parent_uf.same(mapped[0], mapped[1]))
            fail("convex_equivalence_transport", elt.word(), "pair not equivalent upstairs");
        }
        if (subc.columns()[k].size() == 1) {
          count("convex_equivalence_transport");
          if (!parent_effective.count(mapped[0]))
            fail("convex_equivalence_transport", elt.word(), "effective vertex lost upstairs");
        }
      }

      for (int v : subc.boundary_vertices()) {
        count("convex_boundary_monotonicity");
        if (!parent_boundary[ids[v]])
          fail("convex_boundary_monotonicity", elt.word(),
               "boundary vertex " + std::to_string(ids[v] + 1) + " not boundary upstairs");
      }
    }
  }

  void equivalence_boundary_check(const Word& element, const BoundaryComplex& c) {
    for (const auto& cls : c.linear_equivalence_classes()) {
      if (cls.size() < 2) continue;
      count("equivalence_preserves_boundary");
      bool first = c.is_boundary_vertex(cls[0]);
      for (int v : cls)
        if (c.is_boundary_vertex(v) != first) {
          fail("equivalence_preserves_boundary", element, "mixed class");
          break;
        }
    }
  }

  void bipartite_checks(const Heap& e, const Word& element, bool fc_heap) {
    auto coloring = e.graph().bipartition();
    if (!coloring || !e.graph().is_simply_laced()) return;
    BoundaryComplex c(e);
    for (size_t k = 0; k < c.edges().size(); ++k) {
      count("bipartite_column_split");
      int side = (*coloring)[e.label(c.edges()[k].lo)];
      for (int v : c.columns()[k])
        if ((*coloring)[e.label(v)] == side) {
          fail("bipartite_column_split", element, "column crosses the bipartition");
          break;
        }
    }
    if (c.is_acyclic()) {
      for (int v : c.boundary_vertices()) {
        count("bipartite_acyclic_deletion");
        if (BoundaryComplex(e.erase_vertex(v)).is_acyclic())
          fail("bipartite_acyclic_deletion", element,
               "deletion of " + std::to_string(v + 1) + " stays acyclic");
      }
    }
    if (fc_heap) {
      count("bipartite_no_boundary");
      if (!c.boundary_vertices().empty())
        fail("bipartite_no_boundary", element, "boundary vertex in an FC heap");
    }
  }

  void deletion_bound_check(const Heap& e, const Word& element) {
    const int base = BoundaryComplex(e).kernel_dim();
    for (int v = 0; v < e.size(); ++v) {
      count("deletion_kernel_bound");
      int sub = BoundaryComplex(e.erase_vertex(v)).kernel_dim();
      if (std::abs(base - sub) > 1)
        fail("deletion_kernel_bound", element,
             "kernel jumps by " + std::to_string(std::abs(base - sub)));
    }
  }

  void contraction_checks(const Heap& e, const Word& element) {
    const int base = BoundaryComplex(e).kernel_dim();
    for (int s = 0; s < e.graph().rank(); ++s) {
      auto chain = e.label_chain(s);
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int x = chain[i], z = chain[i + 1];
        auto inner = e.between(x, z);
        if (inner.empty()) {
          ChainSpec c{{x, z}};
          count("contraction_kernel_laws");
          int after = BoundaryComplex(e.contract(c)).kernel_dim();
          if (after != base - 1)
            fail("contraction_kernel_laws", element, "pair contraction changes kernel wrongly");
          count("contraction_keep_top");
          Heap keep_top = e.subheap_mask(full_mask(e) & ~(uint64_t{1} << x));
          if (!e.contract(c).same_heap_as(keep_top))
            fail("contraction_keep_top", element, "keeping the other end differs");
        } else if (inner.size() == 1 && e.label(inner[0]) != s) {
          ChainSpec c{{x, inner[0], z}};
          if (!e.is_convex(c.vertices)) continue;
          count("contraction_kernel_laws");
          int after = BoundaryComplex(e.contract(c)).kernel_dim();
          if (after != base)
            fail("contraction_kernel_laws", element, "triple contraction changes kernel");
          count("contraction_keep_top");
          Heap keep_top =
              e.subheap_mask(full_mask(e) & ~(uint64_t{1} << x) & ~(uint64_t{1} << inner[0]));
          if (!e.contract(c).same_heap_as(keep_top))
            fail("contraction_keep_top", element, "keeping the other end differs");
        }
      }
    }
  }

  void weakly_complex_checks(const FCElement& elt) {
    const Heap& e = elt.heap();
    for (int s = 0; s < g->rank(); ++s) {
      auto res = e.left_multiply_status(s);
      if (res.status != MultStatus::weakly_complex) continue;
      BoundaryComplex extc(*res.extended);
      if (extc.is_acyclic()) continue;

      // equivalence chains in the base heap may repeat a label only at the
      // final step
      BoundaryComplex basec(e);
      std::vector<std::vector<int>> nbr(e.size());
      for (const auto& col : basec.columns())
        if (col.size() == 2) {
          nbr[col[0]].push_back(col[1]);
          nbr[col[1]].push_back(col[0]);
        }
      count("equivalence_chain_alternation");
      bool bad = false;
      std::vector<int> path;
      auto dfs = [&](auto&& self, int v, uint64_t visited, bool last_equal) -> void {
        if (bad) return;
        for (int u : nbr[v]) {
          if ((visited >> u) & 1u) continue;
          if (last_equal) {  // an equal-label step was not final
            bad = true;
            return;
          }
          self(self, u, visited | (uint64_t{1} << u), e.label(u) == e.label(v));
        }
      };
      for (int v : basec.effective_boundary_vertices()) {
        if (bad) break;
        dfs(dfs, v, uint64_t{1} << v, false);
      }
      if (bad)
        fail("equivalence_chain_alternation", elt.word(),
             "repeated label inside an equivalence chain, s=s" + std::to_string(s + 1));

      // dropping the top of the alternating witness chain must restore
      // acyclicity
      count("truncated_chain_acyclic");
      Heap truncated = res.extended->erase_vertex(res.extended_chain.vertices.back());
      if (BoundaryComplex(truncated).kernel_dim() != 0)
        fail("truncated_chain_acyclic", elt.word(),
             "truncated extension not acyclic, s=s" + std::to_string(s + 1));
    }
  }

  void algebra_checks() {
    const Laurent delta = Laurent::v(1) + Laurent::v(-1);
    for (int i = 0; i < opt.random_words; ++i) {
      Word u = random_word(opt.tl_word_len);
      const int h = alg.h_function(u);
      Laurent den(1);
      for (int k = 0; k < h; ++k) den *= delta;
      auto expansion = alg.expand_in_b(alg.b_product(u));
      count("monomial_kernel_divisibility");
      for (const auto& [w, coeff] : expansion) {
        Laurent q;
        if (!Laurent::divide(coeff, den, q) || !q.is_constant()) {
          fail("monomial_kernel_divisibility", u,
               "coefficient " + coeff.str() + " at t[" + word_str(w) + "], h=" +
                   std::to_string(h));
          break;
        }
      }
      if (h == 0) {
        // replacing letters by -v^-1 keeps the product in the lattice
        count("acyclic_replacement_lattice");
        std::uniform_int_distribution<int> flip(0, 1);
        std::vector<bool> replace(u.size());
        for (size_t k = 0; k < u.size(); ++k) replace[k] = flip(rng) == 1;
        TLElement r = TLElement::basis(Word{});
        for (int k = static_cast<int>(u.size()) - 1; k >= 0; --k)
          r = replace[k] ? r.scaled(-Laurent::v(-1)) : alg.mult_gen_left(u[k], r);
        if (!r.in_lattice())
          fail("acyclic_replacement_lattice", u, "replaced product leaves the lattice");
      }
    }
  }

  void run() {
    enumerate_fc(g, opt.max_len, [&](const FCElement& elt) {
      ++report.elements;
      BoundaryComplex c(elt.heap());
      convex_subheap_checks(elt, c);
      equivalence_boundary_check(elt.word(), c);
      bipartite_checks(elt.heap(), elt.word(), true);
      deletion_bound_check(elt.heap(), elt.word());
      weakly_complex_checks(elt);
    });
    for (int i = 0; i < opt.random_words; ++i) {
      Word u = random_word(opt.max_len, 2);
      Heap e = Heap::of_word(g, u);
      bipartite_checks(e, u, e.is_fc());
      deletion_bound_check(e, u);
      contraction_checks(e, u);
      equivalence_boundary_check(u, BoundaryComplex(e));
    }
    if (opt.include_algebra) algebra_checks();
  }
};

}  // namespace

BatteryReport lemma_battery(const GraphPtr& g, const BatteryOptions& opt) {
  BatteryReport report;
  Battery battery(g, opt, report);
  battery.run();
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

// ---------------------------------------------------------------------------
// Campaign driver
// ---------------------------------------------------------------------------

const std::vector<std::string>& campaign_check_names() {
  static const std::vector<std::string> names = {
      "main_theorem", "property_w", "structure_constants", "forbidden_configs",
      "lemma_invariants"};
  return names;
}

CampaignResult run_campaign(const GraphPtr& g, const CampaignConfig& cfg) {
  if (cfg.max_len < 0) throw std::invalid_argument("campaign: negative length bound");
  if (cfg.checks.empty()) throw std::invalid_argument("campaign: no checks selected");
  for (const auto& c : cfg.checks) {
    const auto& known = campaign_check_names();
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("campaign: unknown check '" + c + "'");
  }
  auto selected = [&](const char* name) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
  };

  CampaignResult result;
  result.by_length.assign(cfg.max_len + 1, 0);
  auto elements = enumerate_fc(g, cfg.max_len);
  result.elements = static_cast<long>(elements.size());
  for (const auto& e : elements) ++result.by_length[e.length()];

  const bool want_main = selected("main_theorem");
  const bool want_w = selected("property_w");
  const bool want_forbidden = selected("forbidden_configs");

  if (want_main || want_w || want_forbidden) {
    const int jobs = std::max(1, cfg.jobs);
    std::vector<std::vector<CheckViolation>> per_element(elements.size());
    std::vector<std::map<std::string, long>> per_worker_counts(jobs);
    auto work = [&](int worker) {
      TLAlgebra alg(g);
      auto& counts = per_worker_counts[worker];
      for (size_t i = worker; i < elements.size(); i += jobs) {
        const FCElement& w = elements[i];
        auto& out = per_element[i];
        if (want_main) {
          ++counts["main_theorem"];
          auto verdict = BoundaryComplex(w.heap()).verify_main_theorem();
          if (!verdict.holds)
            out.push_back(CheckViolation{
                "main_theorem", w.word(),
                "boundary vertex " + std::to_string(verdict.violation + 1) +
                    " has no effective vertex in its class"});
        }
        if (want_w) {
          for (int s = 0; s < g->rank(); ++s) {
            auto res = w.heap().left_multiply_status(s);
            if (res.status != MultStatus::weakly_complex) continue;
            ++counts["property_w"];
            Word sw;
            sw.reserve(w.word().size() + 1);
            sw.push_back(s);
            sw.insert(sw.end(), w.word().begin(), w.word().end());
            if (!alg.eval_word(sw).in_v_inv_lattice())
              out.push_back(CheckViolation{"property_w", w.word(),
                                           "image of s" + std::to_string(s + 1) +
                                               "·w outside v^-1 L"});
          }
        }
        if (want_forbidden) {
          ++counts["forbidden_configs"];
          auto v = forbidden_scan_element(w);
          out.insert(out.end(), v.begin(), v.end());
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (auto& counts : per_worker_counts)
      for (const auto& [k, v] : counts) result.assertions[k] += v;
    for (auto& v : per_element)
      result.violations.insert(result.violations.end(), v.begin(), v.end());
  }

  if (selected("lemma_invariants")) {
    BatteryOptions opt;
    opt.max_len = cfg.max_len;
    opt.tl_word_len = std::min(cfg.max_len, 8);
    BatteryReport battery = lemma_battery(g, opt);
    for (const auto& [k, v] : battery.assertions) result.assertions[k] += v;
    result.violations.insert(result.violations.end(), battery.violations.begin(),
                             battery.violations.end());
  }

  if (selected("structure_constants")) {
    TLAlgebra alg(g);
    auto table = structure_constants_c(alg, cfg.max_len);
    result.assertions["structure_constants"] +=
        static_cast<long>(table.products.size());
    for (const auto& bad : check_nonnegativity(table))
      result.violations.push_back(
          CheckViolation{"structure_constants", bad.x,
                         "negative coefficient (" + bad.coeff.str() + ") at t[" +
                             word_str(bad.z) + "] in product with " + word_str(bad.y)});
  }

  return result;
}

}  // namespace heaptl
