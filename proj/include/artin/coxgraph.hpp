#pragma once

// Coxeter graphs: parsing, components, the odd-label graph, and
// classification against the catalog of connected finite-type graphs
// (A_n, B_n, D_n, E_6..8, F_4, H_3, H_4, I_2(p)).

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/error.hpp"

namespace artin {

using Label = int;
inline constexpr Label kInfinity = std::numeric_limits<Label>::max();

inline std::string label_to_string(Label m) {
  return m == kInfinity ? std::string("inf") : std::to_string(m);
}

class CoxeterGraph {
public:
  CoxeterGraph() = default;

  explicit CoxeterGraph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    labels_.assign(n * n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      labels_[i * n + i] = 1;
      if (!index_.emplace(vertices_[i], static_cast<int>(i)).second)
        throw DomainError("duplicate vertex '" + vertices_[i] + "'");
    }
  }

  /// Parses the line-oriented graph format:
  ///   # comment
  ///   vertices a b c
  ///   edge a b 3
  ///   edge b c inf
  static CoxeterGraph parse(std::string_view text);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string> &vertices() const noexcept { return vertices_; }
  const std::string &name(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  Label label(int i, int j) const {
    return labels_[static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j)];
  }

  void set_label(int i, int j, Label m) {
    if (i == j)
      throw std::invalid_argument("set_label: diagonal entries are fixed at 1");
    if (m < 2)
      throw std::invalid_argument("set_label: off-diagonal labels must be >= 2");
    labels_[static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j)] = m;
    labels_[static_cast<std::size_t>(j) * size() + static_cast<std::size_t>(i)] = m;
  }

  void set_label(std::string_view s, std::string_view t, Label m) {
    auto i = index_of(s), j = index_of(t);
    if (!i || !j)
      throw std::invalid_argument("set_label: unknown vertex");
    set_label(*i, *j, m);
  }

  bool adjacent(int i, int j) const { return i != j && label(i, j) >= 3; }

  /// Full subgraph on the given vertex indices, in the given order.
  CoxeterGraph subgraph(const std::vector<int> &idx) const {
    std::vector<std::string> names;
    names.reserve(idx.size());
    for (int i : idx)
      names.push_back(name(i));
    CoxeterGraph sub(std::move(names));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (label(idx[a], idx[b]) != 2)
          sub.set_label(static_cast<int>(a), static_cast<int>(b), label(idx[a], idx[b]));
    return sub;
  }

  /// Same graph with vertices renamed position-wise.
  CoxeterGraph renamed(const std::vector<std::string> &names) const {
    if (names.size() != size())
      throw std::invalid_argument("renamed: wrong number of names");
    CoxeterGraph g(names);
    g.labels_ = labels_;
    return g;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "vertices";
    for (const auto &v : vertices_)
      os << ' ' << v;
    os << '\n';
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (label(int(i), int(j)) != 2)
          os << "edge " << vertices_[i] << ' ' << vertices_[j] << ' '
             << label_to_string(label(int(i), int(j))) << '\n';
    return os.str();
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Label> labels_;
  std::map<std::string, int> index_;
};

namespace detail {

inline bool valid_name(std::string_view s) {
  if (s.empty())
    return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0]))
    return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

struct Token {
  std::string_view text;
  int column; // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

} // namespace detail

inline CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  std::optional<CoxeterGraph> graph;
  std::set<std::pair<int, int>> declared;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = detail::tokenize_line(line);
    if (tokens.empty() || tokens[0].text[0] == '#')
      continue;

    const auto &kw = tokens[0];
    if (kw.text == "vertices") {
      if (graph)
        throw ParseError("'vertices' declared more than once", line_no, kw.column);
      if (tokens.size() < 2)
        throw ParseError("'vertices' needs at least one name", line_no,
                         kw.column + static_cast<int>(kw.text.size()));
      std::vector<std::string> names;
      std::set<std::string_view> seen;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (!detail::valid_name(tokens[k].text))
          throw ParseError("invalid vertex name '" + std::string(tokens[k].text) + "'", line_no,
                           tokens[k].column);
        if (!seen.insert(tokens[k].text).second)
          throw ParseError("duplicate vertex '" + std::string(tokens[k].text) + "'", line_no,
                           tokens[k].column);
        names.emplace_back(tokens[k].text);
      }
      graph.emplace(std::move(names));
    } else if (kw.text == "edge") {
      if (!graph)
        throw ParseError("'edge' before 'vertices'", line_no, kw.column);
      if (tokens.size() != 4)
        throw ParseError("expected 'edge <name> <name> <label>'", line_no, kw.column);
      auto s = graph->index_of(tokens[1].text);
      if (!s)
        throw ParseError("unknown vertex '" + std::string(tokens[1].text) + "'", line_no,
                         tokens[1].column);
      auto t = graph->index_of(tokens[2].text);
      if (!t)
        throw ParseError("unknown vertex '" + std::string(tokens[2].text) + "'", line_no,
                         tokens[2].column);
      if (*s == *t)
        throw ParseError("edge from a vertex to itself", line_no, tokens[2].column);
      const std::pair<int, int> key{std::min(*s, *t), std::max(*s, *t)};
      if (!declared.insert(key).second)
        throw ParseError("duplicate edge " + std::string(tokens[1].text) + " " +
                             std::string(tokens[2].text),
                         line_no, kw.column);
      const auto lab = tokens[3];
      Label m = 0;
      if (lab.text == "inf") {
        m = kInfinity;
      } else {
        auto [ptr, ec] = std::from_chars(lab.text.data(), lab.text.data() + lab.text.size(), m);
        if (ec != std::errc() || ptr != lab.text.data() + lab.text.size() || m == kInfinity)
          throw ParseError("invalid label '" + std::string(lab.text) + "'", line_no, lab.column);
        if (m < 3)
          throw ParseError("edge label must be >= 3 or 'inf' (label 2 is expressed by omitting the edge)",
                           line_no, lab.column);
      }
      graph->set_label(*s, *t, m);
    } else {
      throw ParseError("unknown directive '" + std::string(kw.text) + "'", line_no, kw.column);
    }
  }
  if (!graph)
    throw ParseError("missing 'vertices' line", line_no, 1);
  return *graph;
}

/// Connected components (edges are pairs with m_st >= 3), each returned as a
/// list of vertex indices in the parent's order. Components are sorted by
/// their lexicographically smallest vertex name.
inline std::vector<std::vector<int>> component_indices(const CoxeterGraph &g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members;
    std::vector<int> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u = 0; u < n; ++u)
        if (comp[u] < 0 && g.adjacent(v, u)) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  auto smallest = [&](const std::vector<int> &c) {
    return *std::min_element(c.begin(), c.end(),
                             [&](int a, int b) { return g.name(a) < g.name(b); });
  };
  std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) {
    return g.name(smallest(a)) < g.name(smallest(b));
  });
  return out;
}

inline std::vector<CoxeterGraph> components(const CoxeterGraph &g) {
  std::vector<CoxeterGraph> out;
  for (const auto &c : component_indices(g))
    out.push_back(g.subgraph(c));
  return out;
}

inline bool is_connected(const CoxeterGraph &g) { return component_indices(g).size() == 1; }

/// Number of connected components of the graph on the same vertices with an
/// edge wherever m_st is odd (and finite).
inline int odd_component_count(const CoxeterGraph &g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int count = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Label m = g.label(i, j);
      if (m != kInfinity && m % 2 == 1) {
        int a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --count;
        }
      }
    }
  return count;
}

// ---------------------------------------------------------------------------
// Type catalog

enum class Family { A, B, D, E, F, H, I2 };

inline std::string family_name(Family f) {
  switch (f) {
  case Family::A: return "A";
  case Family::B: return "B";
  case Family::D: return "D";
  case Family::E: return "E";
  case Family::F: return "F";
  case Family::H: return "H";
  case Family::I2: return "I2";
  }
  return "?";
}

/// Coxeter number of a connected finite type.
constexpr int coxeter_number(Family f, int param) {
  switch (f) {
  case Family::A: return param + 1;
  case Family::B: return 2 * param;
  case Family::D: return 2 * param - 2;
  case Family::E: return param == 6 ? 12 : param == 7 ? 18 : 30;
  case Family::F: return 12;
  case Family::H: return param == 3 ? 10 : 30;
  case Family::I2: return param;
  }
  return 0;
}

/// Whether the diagram involution induced by conjugation with the longest
/// element is trivial. It is nontrivial exactly for A_n (n >= 2), D_n (n odd),
/// E_6 and I_2(p) (p odd).
constexpr bool mu_is_identity(Family f, int param) {
  switch (f) {
  case Family::A: return param == 1;
  case Family::D: return param % 2 == 0;
  case Family::E: return param != 6;
  case Family::I2: return param % 2 == 0;
  default: return true;
  }
}

constexpr bool valid_type(Family f, int param) {
  switch (f) {
  case Family::A: return param >= 1;
  case Family::B: return param >= 2;
  case Family::D: return param >= 4;
  case Family::E: return param >= 6 && param <= 8;
  case Family::F: return param == 4;
  case Family::H: return param == 3 || param == 4;
  case Family::I2: return param >= 5;
  }
  return false;
}

struct TypeID {
  Family family = Family::A;
  int param = 1;

  /// Validates and canonicalizes (I2(3) -> A2, I2(4) -> B2).
  static TypeID make(Family f, int param) {
    if (f == Family::I2 && param == 3)
      return {Family::A, 2};
    if (f == Family::I2 && param == 4)
      return {Family::B, 2};
    if (!valid_type(f, param))
      throw std::invalid_argument("invalid Coxeter type " + family_name(f) + "(" +
                                  std::to_string(param) + ")");
    return {f, param};
  }

  int rank() const {
    switch (family) {
    case Family::F: return 4;
    case Family::I2: return 2;
    default: return param;
    }
  }

  int coxeter_number() const { return artin::coxeter_number(family, param); }
  bool mu_is_identity() const { return artin::mu_is_identity(family, param); }

  /// Number of roots (positive and negative).
  int root_count() const {
    switch (family) {
    case Family::A: return param * (param + 1);
    case Family::B: return 2 * param * param;
    case Family::D: return 2 * param * (param - 1);
    case Family::E: return param == 6 ? 72 : param == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::H: return param == 3 ? 30 : 120;
    case Family::I2: return 2 * param;
    }
    return 0;
  }

  std::string name() const {
    if (family == Family::I2)
      return "I2(" + std::to_string(param) + ")";
    return family_name(family) + std::to_string(param);
  }

  friend auto operator<=>(const TypeID &, const TypeID &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const TypeID &t) { return os << t.name(); }

/// Standard labeled graph of a type, with vertices `prefix1 .. prefixN`.
inline CoxeterGraph catalog_graph(const TypeID &t, const std::string &prefix = "s") {
  const int n = t.rank();
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    names.push_back(prefix + std::to_string(i));
  CoxeterGraph g(names);
  auto path = [&](int from, int to) {
    for (int i = from; i < to; ++i)
      g.set_label(i, i + 1, 3);
  };
  switch (t.family) {
  case Family::A:
    path(0, n - 1);
    break;
  case Family::B:
    path(0, n - 1);
    g.set_label(n - 2, n - 1, 4);
    break;
  case Family::D:
    path(0, n - 2);
    g.set_label(n - 3, n - 1, 3);
    break;
  case Family::E:
    // 1 - 3 - 4 - 5 - 6 (- 7 (- 8)), with 2 attached to 4
    g.set_label(0, 2, 3);
    path(2, n - 1);
    g.set_label(1, 3, 3);
    break;
  case Family::F:
    path(0, 3);
    g.set_label(1, 2, 4);
    break;
  case Family::H:
    path(0, n - 1);
    g.set_label(0, 1, 5);
    break;
  case Family::I2:
    g.set_label(0, 1, t.param);
    break;
  }
  return g;
}

namespace detail {

/// Canonical string of a labeled tree rooted at `root` (AHU encoding with
/// edge labels).
inline std::string rooted_code(const CoxeterGraph &g, int root, int parent) {
  std::vector<std::string> children;
  for (int u = 0; u < static_cast<int>(g.size()); ++u)
    if (u != parent && g.adjacent(root, u))
      children.push_back(label_to_string(g.label(root, u)) + rooted_code(g, u, root));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto &c : children)
    out += c;
  return out + ")";
}

/// Canonical form of a labeled tree, or nullopt if g is not a tree.
inline std::optional<std::string> tree_code(const CoxeterGraph &g) {
  const int n = static_cast<int>(g.size());
  int edges = 0;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) {
        ++edges;
        ++degree[i];
        ++degree[j];
      }
  if (edges != n - 1 || !is_connected(g))
    return std::nullopt;
  // Peel leaves to find the center (one vertex or one edge).
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  int remaining = n;
  for (int i = 0; i < n; ++i)
    if (degree[i] <= 1)
      layer.push_back(i);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u = 0; u < n; ++u)
        if (!removed[u] && g.adjacent(u, v) && --degree[u] == 1)
          next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int i = 0; i < n; ++i)
    if (!removed[i])
      centers.push_back(i);
  if (centers.size() == 1)
    return "V" + rooted_code(g, centers[0], -1);
  // Root at the central edge: encode both halves.
  const int a = centers[0], b = centers[1];
  std::string ca = rooted_code(g, a, b), cb = rooted_code(g, b, a);
  if (cb < ca)
    std::swap(ca, cb);
  return "E" + label_to_string(g.label(a, b)) + ca + cb;
}

} // namespace detail

/// Classifies a connected graph against the finite-type catalog. Returns
/// nullopt when the graph is not spherical. Throws std::invalid_argument on a
/// disconnected graph.
inline std::optional<TypeID> classify(const CoxeterGraph &g) {
  if (g.size() == 0 || !is_connected(g))
    throw std::invalid_argument("classify: graph is not connected");
  const int n = static_cast<int>(g.size());
  if (n == 1)
    return TypeID::make(Family::A, 1);
  if (n == 2) {
    const Label m = g.label(0, 1);
    if (m == kInfinity)
      return std::nullopt;
    return TypeID::make(Family::I2, m);
  }
  auto code = detail::tree_code(g);
  if (!code)
    return std::nullopt;
  std::vector<TypeID> candidates;
  for (Family f : {Family::A, Family::B, Family::D, Family::E, Family::F, Family::H})
    if (valid_type(f, n))
      candidates.push_back(TypeID::make(f, n));
  for (const auto &t : candidates)
    if (detail::tree_code(catalog_graph(t)) == code)
      return t;
  return std::nullopt;
}

struct ClassifiedComponent {
  std::vector<int> indices; // vertex indices in the parent graph
  CoxeterGraph graph;
  TypeID type;
};

/// Classifies every component; throws NonSphericalError naming the first
/// offending component.
inline std::vector<ClassifiedComponent> classify_components(const CoxeterGraph &g) {
  std::vector<ClassifiedComponent> out;
  for (auto &idx : component_indices(g)) {
    CoxeterGraph sub = g.subgraph(idx);
    auto t = classify(sub);
    if (!t)
      throw NonSphericalError(sub.vertices());
    out.push_back({idx, std::move(sub), *t});
  }
  return out;
}

inline bool is_spherical(const CoxeterGraph &g) {
  for (auto &idx : component_indices(g))
    if (!classify(g.subgraph(idx)))
      return false;
  return true;
}

inline std::vector<TypeID> type_multiset(const CoxeterGraph &g) {
  std::vector<TypeID> types;
  for (const auto &c : classify_components(g))
    types.push_back(c.type);
  std::sort(types.begin(), types.end());
  return types;
}

/// Labeled-graph isomorphism for spherical graphs.
inline bool graphs_equal(const CoxeterGraph &g1, const CoxeterGraph &g2) {
  return type_multiset(g1) == type_multiset(g2);
}

} // namespace artin
