#include "heaptl/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace heaptl {

CoxeterGraph::CoxeterGraph(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("graph rank must be >= 1");
  bonds_.assign(static_cast<size_t>(rank) * rank, 2);
  for (int s = 0; s < rank; ++s) bonds_[static_cast<size_t>(s) * rank + s] = 1;
}

int CoxeterGraph::bond(int s, int t) const {
  if (s < 0 || t < 0 || s >= rank_ || t >= rank_)
    throw std::out_of_range("generator index out of range");
  return bonds_[static_cast<size_t>(s) * rank_ + t];
}

void CoxeterGraph::set_bond(int s, int t, int m) {
  if (s < 0 || t < 0 || s >= rank_ || t >= rank_)
    throw std::out_of_range("generator index out of range");
  if (s == t) throw std::invalid_argument("cannot set a diagonal bond");
  if (m < 2) throw std::invalid_argument("bond value must be >= 2");
  bonds_[static_cast<size_t>(s) * rank_ + t] = m;
  bonds_[static_cast<size_t>(t) * rank_ + s] = m;
}

std::vector<int> CoxeterGraph::neighbours(int s) const {
  std::vector<int> out;
  for (int t = 0; t < rank_; ++t)
    if (adjacent(s, t)) out.push_back(t);
  return out;
}

bool CoxeterGraph::is_simply_laced() const {
  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t)
      if (bond(s, t) > 3) return false;
  return true;
}

std::optional<std::vector<int>> CoxeterGraph::bipartition() const {
  std::vector<int> color(rank_, -1);
  for (int start = 0; start < rank_; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int t : neighbours(s)) {
        if (color[t] == -1) {
          color[t] = 1 - color[s];
          queue.push_back(t);
        } else if (color[t] == color[s]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool CoxeterGraph::is_bipartite() const { return bipartition().has_value(); }

bool CoxeterGraph::is_line() const {
  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t)
      if (adjacent(s, t) != (t == s + 1)) return false;
  return true;
}

bool CoxeterGraph::is_connected() const {
  std::vector<bool> seen(rank_, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : neighbours(s))
      if (!seen[t]) {
        seen[t] = true;
        ++count;
        queue.push_back(t);
      }
  }
  return count == rank_;
}

CoxeterGraph CoxeterGraph::a_line(int n) {
  if (n < 1) throw std::invalid_argument("a_line: n must be >= 1");
  CoxeterGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_bond(i, i + 1, 3);
  return g;
}

CoxeterGraph CoxeterGraph::b_line(int n) {
  if (n < 2) throw std::invalid_argument("b_line: n must be >= 2");
  CoxeterGraph g = a_line(n);
  g.set_bond(0, 1, 4);
  return g;
}

CoxeterGraph CoxeterGraph::h_line(int n) {
  if (n < 2) throw std::invalid_argument("h_line: n must be >= 2");
  CoxeterGraph g = a_line(n);
  g.set_bond(0, 1, 5);
  return g;
}

CoxeterGraph CoxeterGraph::f_line(int n) {
  if (n < 3) throw std::invalid_argument("f_line: n must be >= 3");
  CoxeterGraph g = a_line(n);
  g.set_bond(1, 2, 4);
  return g;
}

CoxeterGraph CoxeterGraph::c_affine_odd(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("c_affine_odd: n must be odd and >= 1");
  CoxeterGraph g = a_line(n + 1);
  g.set_bond(0, 1, 4);
  g.set_bond(n - 1, n, 4);
  return g;
}

CoxeterGraph CoxeterGraph::complete(int n, int m) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  if (m < 3 && m != infinite_bond)
    throw std::invalid_argument("complete: bond must be >= 3");
  CoxeterGraph g(n);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) g.set_bond(s, t, m);
  return g;
}

CoxeterGraph CoxeterGraph::parse(std::istream& in) {
  std::string line;
  int rank = -1;
  std::optional<CoxeterGraph> graph;
  std::vector<bool> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "rank") {
      if (graph) throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate rank line");
      if (!(ls >> rank) || rank < 1)
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad rank");
      graph.emplace(rank);
      seen.assign(static_cast<size_t>(rank) * rank, false);
    } else if (key == "bond") {
      if (!graph) throw std::runtime_error("line " + std::to_string(lineno) + ": bond before rank");
      int i, j;
      std::string mtok;
      if (!(ls >> i >> j >> mtok))
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad bond line");
      if (i < 1 || j < 1 || i > rank || j > rank || i == j)
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad generator pair");
      int m;
      if (mtok == "inf") {
        m = infinite_bond;
      } else {
        try {
          m = std::stoi(mtok);
        } catch (const std::exception&) {
          throw std::runtime_error("line " + std::to_string(lineno) + ": bad bond value");
        }
        if (m < 3)
          throw std::runtime_error("line " + std::to_string(lineno) + ": bond value must be >= 3 or inf");
      }
      size_t idx = static_cast<size_t>(i - 1) * rank + (j - 1);
      if (seen[idx])
        throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate bond");
      seen[idx] = seen[static_cast<size_t>(j - 1) * rank + (i - 1)] = true;
      graph->set_bond(i - 1, j - 1, m);
    } else {
      throw std::runtime_error("line " + std::to_string(lineno) + ": unknown directive '" + key + "'");
    }
  }
  if (!graph) throw std::runtime_error("graph file has no rank line");
  return *graph;
}

CoxeterGraph CoxeterGraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse(in);
}

std::string CoxeterGraph::to_text() const {
  std::ostringstream out;
  out << "rank " << rank_ << "\n";
  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t) {
      int m = bond(s, t);
      if (m < 3) continue;
      out << "bond " << (s + 1) << " " << (t + 1) << " ";
      if (m == infinite_bond)
        out << "inf";
      else
        out << m;
      out << "\n";
    }
  return out.str();
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::optional<CoxeterGraph> parse_family_spec(const std::string& spec) {
  auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') return std::nullopt;
  std::string name = lower(spec.substr(0, open));
  std::string args = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<int> nums;
  std::istringstream as(args);
  std::string tok;
  while (std::getline(as, tok, ',')) {
    try {
      nums.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  try {
    if (name == "a_line" && nums.size() == 1) return CoxeterGraph::a_line(nums[0]);
    if (name == "b_line" && nums.size() == 1) return CoxeterGraph::b_line(nums[0]);
    if (name == "h_line" && nums.size() == 1) return CoxeterGraph::h_line(nums[0]);
    if (name == "f_line" && nums.size() == 1) return CoxeterGraph::f_line(nums[0]);
    if (name == "c_affine_odd" && nums.size() == 1)
      return CoxeterGraph::c_affine_odd(nums[0]);
    if (name == "complete" && nums.size() == 2)
      return CoxeterGraph::complete(nums[0], nums[1]);
  } catch (const std::invalid_argument&) {
    throw;
  }
  return std::nullopt;
}

CoxeterGraph load_graph_arg(const std::string& arg) {
  if (arg.rfind("family:", 0) == 0) {
    auto g = parse_family_spec(arg.substr(7));
    if (!g) throw std::runtime_error("unrecognized family spec: " + arg);
    return *g;
  }
  return CoxeterGraph::from_file(arg);
}

Word parse_word(int rank, const std::vector<std::string>& tokens) {
  Word w;
  w.reserve(tokens.size());
  for (const auto& tok : tokens) {
    std::string body = tok;
    if (!body.empty() && (body[0] == 's' || body[0] == 'S')) body = body.substr(1);
    int k;
    size_t used = 0;
    try {
      k = std::stoi(body, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter '" + tok + "'");
    }
    if (used != body.size()) throw std::invalid_argument("bad letter '" + tok + "'");
    if (k < 1 || k > rank)
      throw std::invalid_argument("letter '" + tok + "' out of range 1.." + std::to_string(rank));
    w.push_back(k - 1);
  }
  return w;
}

Word parse_word_string(int rank, const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return parse_word(rank, tokens);
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << " ";
    out << "s" << (w[i] + 1);
  }
  return out.str();
}

}  // namespace heaptl
