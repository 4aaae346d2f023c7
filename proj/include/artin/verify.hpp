#pragma once

// Verification suites and the brute-force oracles they compare against.
//
// The oracles deliberately avoid the Garside and root-system shortcuts they
// check: word classes come from exhaustive rewriting with the defining
// relations, weak order from breadth-first distances in the Cayley graph of
// W, and graph isomorphism from backtracking over vertex bijections.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "artin/coxgraph.hpp"
#include "artin/coxgroup.hpp"
#include "artin/garside.hpp"
#include "artin/invariants.hpp"

namespace artin::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

using Rng = std::mt19937_64;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail; // counterexample or note; empty when nothing to add
};

struct Report {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void append(const Report &other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  std::string to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (seed " << seed << ")\n";
    int ok = 0;
    for (const auto &c : checks) {
      os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty())
        os << " -- " << c.detail;
      os << '\n';
      ok += c.passed;
    }
    os << "summary: " << ok << "/" << checks.size() << " passed\n";
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Oracles

namespace oracle {

/// W enumerated by breadth-first search from the identity, with all-pairs
/// distances in the right Cayley graph (x -> xs) and the left Cayley graph
/// (x -> sx).
struct CayleyTables {
  std::vector<WElem> elements;
  std::map<WElem, int> index;
  std::vector<std::vector<int>> right_dist; // right_dist[x][y] = l(x^-1 y)
  std::vector<std::vector<int>> left_dist;  // left_dist[x][y] = l(y x^-1)

  int length(int x) const { return right_dist[0][static_cast<std::size_t>(x)]; }

  /// x <= y in the prefix order: some geodesic from 1 to y passes through x.
  bool prefix_le(int x, int y) const {
    return length(x) + right_dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == length(y);
  }
  bool suffix_le(int x, int y) const {
    return length(x) + left_dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == length(y);
  }
};

inline CayleyTables enumerate_group(const RootSystem &rs, std::size_t limit = 20000) {
  CayleyTables t;
  std::vector<std::vector<int>> right_nb, left_nb;
  std::queue<int> q;
  auto visit = [&](WElem w) -> int {
    auto [it, fresh] = t.index.emplace(w, static_cast<int>(t.elements.size()));
    if (fresh) {
      if (t.elements.size() >= limit)
        throw std::runtime_error("enumerate_group: group too large");
      t.elements.push_back(std::move(w));
      q.push(it->second);
    }
    return it->second;
  };
  visit(rs.identity());
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int s = 0; s < rs.rank(); ++s)
      visit(rs.times_gen(t.elements[static_cast<std::size_t>(x)], s));
  }
  const std::size_t n = t.elements.size();
  right_nb.assign(n, {});
  left_nb.assign(n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (int s = 0; s < rs.rank(); ++s) {
      right_nb[x].push_back(t.index.at(rs.times_gen(t.elements[x], s)));
      left_nb[x].push_back(t.index.at(rs.gen_times(s, t.elements[x])));
    }
  auto all_pairs = [&](const std::vector<std::vector<int>> &nb) {
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (std::size_t src = 0; src < n; ++src) {
      std::queue<int> bfs;
      d[src][src] = 0;
      bfs.push(static_cast<int>(src));
      while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int y : nb[static_cast<std::size_t>(x)])
          if (d[src][static_cast<std::size_t>(y)] < 0) {
            d[src][static_cast<std::size_t>(y)] = d[src][static_cast<std::size_t>(x)] + 1;
            bfs.push(y);
          }
      }
    }
    return d;
  };
  t.right_dist = all_pairs(right_nb);
  t.left_dist = all_pairs(left_nb);
  return t;
}

/// Greatest lower bound (meet) or least upper bound (join) of x and y in a
/// finite poset given by `le`, or -1 if it does not exist.
inline int lattice_bound(int n, int x, int y, const std::function<bool(int, int)> &le, bool meet) {
  std::vector<int> bounds;
  for (int z = 0; z < n; ++z)
    if (meet ? (le(z, x) && le(z, y)) : (le(x, z) && le(y, z)))
      bounds.push_back(z);
  for (int b : bounds) {
    bool extreme = std::all_of(bounds.begin(), bounds.end(),
                               [&](int z) { return meet ? le(z, b) : le(b, z); });
    if (extreme)
      return b;
  }
  return -1;
}

/// Partition of all positive words of the given length into classes of the
/// congruence generated by the braid relations. Returns the class id of each
/// word; words are indexed in base-n with the first letter most significant.
inline std::vector<int> rewriting_classes(const CoxeterGraph &g, int length) {
  const int n = static_cast<int>(g.size());
  std::size_t total = 1;
  for (int i = 0; i < length; ++i)
    total *= static_cast<std::size_t>(n);
  auto decode = [&](std::size_t code) {
    std::vector<int> w(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(n));
      code /= static_cast<std::size_t>(n);
    }
    return w;
  };
  auto encode = [&](const std::vector<int> &w) {
    std::size_t code = 0;
    for (int s : w)
      code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(s);
    return code;
  };
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t code = 0; code < total; ++code) {
    auto w = decode(code);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t)
          continue;
        const Label m = g.label(s, t);
        if (m == kInfinity || m > length)
          continue;
        for (int pos = 0; pos + m <= length; ++pos) {
          bool match = true;
          for (int i = 0; i < m && match; ++i)
            match = w[static_cast<std::size_t>(pos + i)] == (i % 2 == 0 ? s : t);
          if (!match)
            continue;
          auto v = w;
          for (int i = 0; i < m; ++i)
            v[static_cast<std::size_t>(pos + i)] = i % 2 == 0 ? t : s;
          parent[find(code)] = find(encode(v));
        }
      }
  }
  std::vector<int> cls(total);
  std::map<std::size_t, int> ids;
  for (std::size_t code = 0; code < total; ++code)
    cls[code] = ids.emplace(find(code), static_cast<int>(ids.size())).first->second;
  return cls;
}

/// Labeled-graph isomorphism by backtracking over vertex bijections.
inline bool labeled_isomorphic(const CoxeterGraph &g1, const CoxeterGraph &g2) {
  const int n = static_cast<int>(g1.size());
  if (n != static_cast<int>(g2.size()))
    return false;
  auto signature = [](const CoxeterGraph &g, int v) {
    std::vector<Label> row;
    for (int u = 0; u < static_cast<int>(g.size()); ++u)
      if (u != v)
        row.push_back(g.label(v, u));
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n)
      return true;
    for (int u = 0; u < n; ++u) {
      if (used[static_cast<std::size_t>(u)] || signature(g1, v) != signature(g2, u))
        continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w)
        ok = g1.label(v, w) == g2.label(u, image[static_cast<std::size_t>(w)]);
      if (!ok)
        continue;
      image[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      if (extend(v + 1))
        return true;
      used[static_cast<std::size_t>(u)] = false;
    }
    return false;
  };
  return extend(0);
}

} // namespace oracle

// ---------------------------------------------------------------------------
// Generators and helpers

inline int uniform(Rng &rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline ArtinWord random_word(Rng &rng, const std::vector<int> &gens, int max_len, bool positive = false) {
  ArtinWord w;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i)
    w.push_back({gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(gens.size()) - 1))],
                 positive || uniform(rng, 0, 1) ? 1 : -1});
  return w;
}

inline std::vector<int> all_gens(const CoxeterGraph &g) {
  std::vector<int> v(g.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

/// Applies random relation moves that preserve the group element: insertion
/// of x x^-1, free cancellation, and braid relations on positive or negative
/// alternating runs. With `braid_only` the word stays positive if it was.
inline ArtinWord perturb(Rng &rng, const CoxeterGraph &g, ArtinWord w, int moves, bool braid_only = false) {
  const int n = static_cast<int>(g.size());
  for (int step = 0; step < moves; ++step) {
    const int kind = braid_only ? 2 : uniform(rng, 0, 2);
    if (kind == 0) {
      const auto pos = static_cast<std::ptrdiff_t>(uniform(rng, 0, static_cast<int>(w.size())));
      const int s = uniform(rng, 0, n - 1);
      const int e = uniform(rng, 0, 1) ? 1 : -1;
      w.insert(w.begin() + pos, {Letter{s, e}, Letter{s, -e}});
    } else if (kind == 1) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].gen == w[i + 1].gen && w[i].exp == -w[i + 1].exp) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
          break;
        }
    } else {
      // Collect every alternating run matching a relation and rewrite one.
      std::vector<std::pair<std::size_t, int>> sites; // (position, m)
      for (std::size_t i = 0; i < w.size(); ++i)
        for (int t = 0; t < n; ++t) {
          const int s = w[i].gen;
          if (s == t || g.label(s, t) == kInfinity)
            continue;
          const int m = g.label(s, t);
          if (i + static_cast<std::size_t>(m) > w.size())
            continue;
          bool match = true;
          for (int k = 0; k < m && match; ++k) {
            const Letter &l = w[i + static_cast<std::size_t>(k)];
            match = l.exp == w[i].exp && l.gen == (k % 2 == 0 ? s : t);
          }
          if (match)
            sites.emplace_back(i, t);
        }
      if (sites.empty())
        continue;
      auto [i, t] = sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))];
      const int s = w[i].gen;
      const int m = g.label(s, t);
      for (int k = 0; k < m; ++k)
        w[i + static_cast<std::size_t>(k)].gen = k % 2 == 0 ? t : s;
    }
  }
  return w;
}

/// Image of a word under the homomorphism sending generator i to images[i].
inline ArtinWord substitute(const ArtinWord &w, const std::vector<ArtinWord> &images) {
  ArtinWord out;
  for (const auto &l : w) {
    const ArtinWord &img = images.at(static_cast<std::size_t>(l.gen));
    if (l.exp > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      auto inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

inline std::string show(const CoxeterGraph &g, const ArtinWord &w) {
  return w.empty() ? std::string("<empty>") : format_word(g, w);
}

/// Types used by the mf grid.
inline std::vector<TypeID> table1_grid() {
  std::vector<TypeID> grid;
  for (int n = 1; n <= 6; ++n)
    grid.push_back(TypeID::make(Family::A, n));
  for (int n = 2; n <= 6; ++n)
    grid.push_back(TypeID::make(Family::B, n));
  for (int n = 4; n <= 7; ++n)
    grid.push_back(TypeID::make(Family::D, n));
  for (int n = 6; n <= 8; ++n)
    grid.push_back(TypeID::make(Family::E, n));
  grid.push_back(TypeID::make(Family::F, 4));
  grid.push_back(TypeID::make(Family::H, 3));
  grid.push_back(TypeID::make(Family::H, 4));
  for (int p = 5; p <= 10; ++p)
    grid.push_back(TypeID::make(Family::I2, p));
  return grid;
}

/// Connected types of rank <= 4 plus I2(p) for 5 <= p <= max_p.
inline std::vector<TypeID> small_connected_types(int max_p) {
  std::vector<TypeID> out;
  for (int n = 1; n <= 4; ++n)
    out.push_back(TypeID::make(Family::A, n));
  for (int n = 2; n <= 4; ++n)
    out.push_back(TypeID::make(Family::B, n));
  out.push_back(TypeID::make(Family::D, 4));
  out.push_back(TypeID::make(Family::F, 4));
  out.push_back(TypeID::make(Family::H, 3));
  out.push_back(TypeID::make(Family::H, 4));
  for (int p = 5; p <= max_p; ++p)
    out.push_back(TypeID::make(Family::I2, p));
  return out;
}

/// Disjoint union, vertices renamed with the given prefixes.
inline CoxeterGraph disjoint_union(const std::vector<CoxeterGraph> &parts) {
  std::vector<std::string> names;
  for (const auto &p : parts)
    names.insert(names.end(), p.vertices().begin(), p.vertices().end());
  CoxeterGraph g(names);
  int offset = 0;
  for (const auto &p : parts) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(p.size()); ++j)
        if (p.label(i, j) != 2)
          g.set_label(offset + i, offset + j, p.label(i, j));
    offset += static_cast<int>(p.size());
  }
  return g;
}

/// Random relabeling and reordering of the vertices.
inline CoxeterGraph shuffled(const CoxeterGraph &g, Rng &rng, const std::string &prefix) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(uniform(rng, 0, i))]);
  CoxeterGraph sub = g.subgraph(order);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(prefix + std::to_string(i));
  return sub.renamed(names);
}

// ---------------------------------------------------------------------------
// Suites

/// mf via (mu, h) against the published table; h against the root system.
inline Report run_table1() {
  Report r{"table1", kDefaultSeed, {}};
  for (const TypeID &t : table1_grid()) {
    const int formula = mf(t);
    const int published = table1::published_mf(t.family, t.param);
    r.add("mf(" + t.name() + ") = " + std::to_string(published), formula == published,
          formula == published ? "" : "computed " + std::to_string(formula));

    RootSystem rs(catalog_graph(t));
    const int n = rs.rank();
    const int lw0 = rs.length(rs.longest_element());
    const int h = t.coxeter_number();
    r.add("n*h/2 = l(w0) for " + t.name(), n * h == 2 * lw0,
          "n=" + std::to_string(n) + " h=" + std::to_string(h) + " l(w0)=" + std::to_string(lw0));
    r.add("root count of " + t.name(), rs.num_roots() == t.root_count() && rs.num_positive() == lw0,
          std::to_string(rs.num_roots()) + " roots");

    Garside gs(catalog_graph(t));
    const int h_roots = 2 * lw0 / n;
    const int mf_roots = gs.mu_is_identity() ? h_roots / 2 : h_roots;
    r.add("mf(" + t.name() + ") from root system", mf_roots == published && gs.mu_is_identity() == t.mu_is_identity(),
          "mu " + std::string(gs.mu_is_identity() ? "= Id" : "!= Id") + ", mf " + std::to_string(mf_roots));
  }
  return r;
}

/// Coxeter element powers: pi^(h/2) = Delta when mu = Id, pi^h = Delta^2
/// otherwise, under several orderings of the generators.
inline Report run_coxeter_power() {
  Report r{"coxeter-power", kDefaultSeed, {}};
  const std::vector<TypeID> types{
      TypeID::make(Family::B, 2),  TypeID::make(Family::B, 3),  TypeID::make(Family::B, 4),
      TypeID::make(Family::D, 4),  TypeID::make(Family::F, 4),  TypeID::make(Family::H, 3),
      TypeID::make(Family::I2, 6), TypeID::make(Family::I2, 8), TypeID::make(Family::A, 2),
      TypeID::make(Family::A, 3),  TypeID::make(Family::A, 4),  TypeID::make(Family::D, 5),
      TypeID::make(Family::I2, 5), TypeID::make(Family::I2, 7)};
  for (const auto &t : types) {
    Garside gs(catalog_graph(t));
    const int n = gs.rank();
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<int>> orderings{identity};
    auto reversed = identity;
    std::reverse(reversed.begin(), reversed.end());
    orderings.push_back(reversed);
    if (n >= 3) {
      // alternate: even-indexed generators first, then odd-indexed
      std::vector<int> bipartite;
      for (int i = 0; i < n; i += 2)
        bipartite.push_back(i);
      for (int i = 1; i < n; i += 2)
        bipartite.push_back(i);
      orderings.push_back(bipartite);
    }
    for (const auto &ord : orderings) {
      const bool ok = gs.power_check_coxeter_element(ord);
      const int h = t.coxeter_number();
      const std::string claim = gs.mu_is_identity() ? "pi^" + std::to_string(h / 2) + " = Delta"
                                                    : "pi^" + std::to_string(h) + " = Delta^2";
      r.add(t.name() + ": " + claim + " for pi = " + format_word(gs.graph(), ord), ok);
    }
  }
  return r;
}

/// Normal forms against rewriting classes, lattice operations on simples
/// against Cayley-graph weak order, and cancellativity.
inline Report run_monoid(std::uint64_t seed = kDefaultSeed) {
  Report r{"monoid", seed, {}};
  Rng rng(seed);
  const std::vector<TypeID> dihedral{TypeID::make(Family::A, 2), TypeID::make(Family::B, 2),
                                     TypeID::make(Family::I2, 5)};
  std::vector<TypeID> nf_types = dihedral;
  nf_types.push_back(TypeID::make(Family::A, 3));

  for (const auto &t : nf_types) {
    const CoxeterGraph g = catalog_graph(t);
    Garside gs(g);
    const int n = static_cast<int>(g.size());
    for (int len = 0; len <= 6; ++len) {
      auto cls = oracle::rewriting_classes(g, len);
      std::map<int, std::vector<int>> rep_nf_spelling; // closure class -> spelling
      std::map<std::vector<int>, int> nf_class;        // spelling -> closure class
      bool ok = true;
      std::string detail;
      for (std::size_t code = 0; code < cls.size() && ok; ++code) {
        std::vector<int> w(static_cast<std::size_t>(len));
        std::size_t c = code;
        for (int i = len - 1; i >= 0; --i) {
          w[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(n));
          c /= static_cast<std::size_t>(n);
        }
        const auto spelled = gs.spelling(gs.normal_form(w));
        auto [it1, fresh1] = rep_nf_spelling.emplace(cls[code], spelled);
        auto [it2, fresh2] = nf_class.emplace(spelled, cls[code]);
        if (it1->second != spelled || it2->second != cls[code]) {
          ok = false;
          detail = "word " + format_word(g, w);
        }
      }
      r.add(t.name() + ": normal forms = rewriting classes, length " + std::to_string(len) + " (" +
                std::to_string(rep_nf_spelling.size()) + " classes)",
            ok, detail);
    }
  }

  for (const auto &t : dihedral) {
    Garside gs(catalog_graph(t));
    const auto &rs = gs.roots();
    auto tab = oracle::enumerate_group(rs);
    const int size = static_cast<int>(tab.elements.size());
    bool lengths_ok = true, bounds_ok = true, laws_ok = true;
    std::string detail;
    for (int x = 0; x < size; ++x)
      lengths_ok = lengths_ok && rs.length(tab.elements[static_cast<std::size_t>(x)]) == tab.length(x);
    for (Side side : {Side::Left, Side::Right}) {
      auto le = [&](int a, int b) { return side == Side::Left ? tab.prefix_le(a, b) : tab.suffix_le(a, b); };
      const std::string sname = side == Side::Left ? "L" : "R";
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
          const auto &ex = tab.elements[static_cast<std::size_t>(x)];
          const auto &ey = tab.elements[static_cast<std::size_t>(y)];
          const int m = oracle::lattice_bound(size, x, y, le, true);
          const int j = oracle::lattice_bound(size, x, y, le, false);
          const int gm = tab.index.at(gs.meet_simples(ex, ey, side));
          const int gj = tab.index.at(gs.join_simples(ex, ey, side));
          if (m != gm || j != gj) {
            bounds_ok = false;
            detail = "side " + sname + " pair " + format_word(gs.graph(), rs.reduced_word(ex)) + " / " +
                     format_word(gs.graph(), rs.reduced_word(ey));
          }
        }
      // lattice laws
      auto meet = [&](int a, int b) {
        return tab.index.at(gs.meet_simples(tab.elements[static_cast<std::size_t>(a)],
                                            tab.elements[static_cast<std::size_t>(b)], side));
      };
      auto join = [&](int a, int b) {
        return tab.index.at(gs.join_simples(tab.elements[static_cast<std::size_t>(a)],
                                            tab.elements[static_cast<std::size_t>(b)], side));
      };
      for (int a = 0; a < size; ++a) {
        laws_ok = laws_ok && meet(a, a) == a && join(a, a) == a;
        for (int b = 0; b < size; ++b) {
          laws_ok = laws_ok && meet(a, b) == meet(b, a) && join(a, b) == join(b, a);
          laws_ok = laws_ok && meet(a, join(a, b)) == a && join(a, meet(a, b)) == a;
          for (int c = 0; c < size; ++c)
            laws_ok = laws_ok && meet(meet(a, b), c) == meet(a, meet(b, c)) &&
                      join(join(a, b), c) == join(a, join(b, c));
        }
      }
    }
    r.add(t.name() + ": inversion-count length = Cayley distance (" + std::to_string(size) + " elements)",
          lengths_ok);
    r.add(t.name() + ": meets/joins of all simple pairs match brute-force weak order", bounds_ok, detail);
    r.add(t.name() + ": lattice laws on simples", laws_ok);
    const WElem all_join = [&] {
      WElem acc = rs.identity();
      for (int s = 0; s < rs.rank(); ++s)
        acc = gs.join_simples(acc, rs.generator(s), Side::Left);
      return acc;
    }();
    r.add(t.name() + ": join of all generators = Delta", all_join == gs.delta());
  }

  // Cancellativity: a x = a y forces x = y, and x ~ y forces a x = a y.
  for (const auto &t : nf_types) {
    const CoxeterGraph g = catalog_graph(t);
    Garside gs(g);
    const auto gens = all_gens(g);
    bool ok = true;
    std::string detail;
    int equal_pairs = 0;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      auto a = to_positive(random_word(rng, gens, 6, true));
      auto x = to_positive(random_word(rng, gens, 6, true));
      auto y = trial % 2 == 0 ? to_positive(perturb(rng, g, to_artin(x), 4, true))
                              : to_positive(random_word(rng, gens, 6, true));
      auto ax = a, ay = a;
      ax.insert(ax.end(), x.begin(), x.end());
      ay.insert(ay.end(), y.begin(), y.end());
      const bool left = gs.normal_form(ax) == gs.normal_form(ay);
      const bool right = gs.normal_form(x) == gs.normal_form(y);
      auto xa = x, ya = y;
      xa.insert(xa.end(), a.begin(), a.end());
      ya.insert(ya.end(), a.begin(), a.end());
      const bool right_cancel = gs.normal_form(xa) == gs.normal_form(ya);
      equal_pairs += left;
      if (left != right || right_cancel != right) {
        ok = false;
        detail = "a = " + format_word(g, a) + ", x = " + format_word(g, x) + ", y = " + format_word(g, y);
      }
    }
    r.add(t.name() + ": cancellativity spot checks (" + std::to_string(equal_pairs) + " equal products)", ok,
          detail);
  }
  return r;
}

/// Charney forms: gcd-freeness, reconstruction, idempotence, agreement of the
/// two word-problem routes; parabolic compatibility in A4.
inline Report run_charney(std::uint64_t seed = kDefaultSeed, int samples = 1000) {
  Report r{"charney", seed, {}};
  Rng rng(seed);
  for (const auto &t : {TypeID::make(Family::A, 3), TypeID::make(Family::B, 3), TypeID::make(Family::H, 3)}) {
    const CoxeterGraph g = catalog_graph(t);
    Garside gs(g);
    const auto gens = all_gens(g);
    int fails[5] = {0, 0, 0, 0, 0};
    std::string examples[5];
    int equal_count = 0;
    for (int i = 0; i < samples; ++i) {
      const ArtinWord w = random_word(rng, gens, 20);
      const CharneyPair cp = gs.charney(w);
      const auto b = gs.spelling(cp.b), c = gs.spelling(cp.c);
      auto record = [&](int k, bool ok) {
        if (!ok && fails[k]++ == 0)
          examples[k] = show(g, w);
      };
      record(0, (gs.right_divisor_letters(b) & gs.right_divisor_letters(c)) == 0);
      const ArtinWord rebuilt = gs.to_word(cp);
      record(1, gs.equals_via_delta(rebuilt, w));
      record(2, gs.charney(rebuilt) == cp);
      record(3, degree(to_artin(b)) - degree(to_artin(c)) == degree(w));
      const ArtinWord same = perturb(rng, g, w, 6);
      const ArtinWord other = random_word(rng, gens, 20);
      const bool eq_other = gs.equals(w, other);
      equal_count += eq_other;
      record(4, gs.equals(w, same) && gs.equals_via_delta(w, same) && eq_other == gs.equals_via_delta(w, other));
    }
    const char *names[5] = {"no common right letter in b, c", "b c^-1 equals the input",
                            "charney is idempotent", "deg(b) - deg(c) = deg(w)",
                            "charney and Delta-form equality routes agree"};
    for (int k = 0; k < 5; ++k)
      r.add(t.name() + ": " + names[k] + " (" + std::to_string(samples) + " words)", fails[k] == 0,
            fails[k] ? std::to_string(fails[k]) + " failures, e.g. " + examples[k] : "");
  }

  // Parabolic subgroups of A4.
  const TypeID a4 = TypeID::make(Family::A, 4);
  const CoxeterGraph g = catalog_graph(a4);
  Garside gs(g);
  const GenSet all = gs.roots().all_generators();
  r.add("A4: support(Delta) = S", gs.support(gs.spelling(NormalForm{1, {}})) == all);
  for (GenSet X = 1; X < all; ++X) {
    std::vector<int> gens;
    std::string xname;
    for (int s = 0; s < gs.rank(); ++s)
      if (contains(X, s)) {
        gens.push_back(s);
        xname += (xname.empty() ? "" : ",") + g.name(s);
      }
    bool support_ok = true, delta_ok = true;
    std::string detail;
    for (int i = 0; i < 100; ++i) {
      const ArtinWord w = random_word(rng, gens, 20);
      const CharneyPair cp = gs.charney(w);
      const GenSet supp = gs.support(gs.spelling(cp.b)) | gs.support(gs.spelling(cp.c));
      if ((supp & ~X) != 0) {
        support_ok = false;
        detail = show(g, w);
      }
      for (int k = 1; k <= 3; ++k)
        if (gs.equals(gs.delta_word(k), w)) {
          delta_ok = false;
          detail = "Delta^" + std::to_string(k) + " = " + show(g, w);
        }
    }
    r.add("A4, X = {" + xname + "}: Charney supports lie in X", support_ok, support_ok ? "" : detail);
    r.add("A4, X = {" + xname + "}: Delta^k (k = 1..3) not in G_X", delta_ok, delta_ok ? "" : detail);
  }
  return r;
}

/// mu is an involution, Delta s = mu(s) Delta, delta is central, and the
/// computed mu agrees with the classification list.
inline Report run_mu() {
  Report r{"mu", kDefaultSeed, {}};
  for (const auto &t : small_connected_types(10)) {
    const CoxeterGraph g = catalog_graph(t);
    Garside gs(g);
    bool involution = true, twist = true, central = true;
    const ArtinWord d = gs.delta_word(1);
    const ArtinWord center = gs.delta_word(gs.center_exponent());
    for (int s = 0; s < gs.rank(); ++s) {
      involution = involution && gs.mu(gs.mu(s)) == s;
      const ArtinWord sw{{s, 1}}, mw{{gs.mu(s), 1}};
      twist = twist && gs.equals(concat(d, sw), concat(mw, d));
      central = central && gs.equals(concat(center, sw), concat(sw, center));
    }
    r.add(t.name() + ": mu^2 = Id", involution);
    r.add(t.name() + ": Delta s = mu(s) Delta", twist);
    r.add(t.name() + ": delta = Delta^" + std::to_string(gs.center_exponent()) + " is central", central);
    r.add(t.name() + ": mu " + (t.mu_is_identity() ? "= Id" : "!= Id") + " matches the root system",
          gs.mu_is_identity() == t.mu_is_identity());
  }
  return r;
}

/// Catalog of spherical graphs (connected, disconnected, renamed) used by the
/// isomorphism suite.
inline std::vector<std::pair<std::string, CoxeterGraph>> iso_catalog(Rng &rng) {
  std::vector<std::pair<std::string, CoxeterGraph>> out;
  auto T = [](Family f, int p) { return TypeID::make(f, p); };
  auto cat = [](const TypeID &t, const std::string &prefix) { return catalog_graph(t, prefix); };
  for (const auto &t : {T(Family::A, 1), T(Family::A, 2), T(Family::A, 3), T(Family::A, 4), T(Family::B, 2),
                        T(Family::B, 3), T(Family::B, 4), T(Family::D, 4), T(Family::D, 5), T(Family::F, 4),
                        T(Family::H, 3), T(Family::H, 4), T(Family::E, 6), T(Family::I2, 5), T(Family::I2, 6),
                        T(Family::I2, 8)})
    out.emplace_back(t.name(), cat(t, "v"));
  auto add_union = [&](const std::string &name, std::vector<TypeID> parts) {
    std::vector<CoxeterGraph> gs;
    for (std::size_t i = 0; i < parts.size(); ++i)
      gs.push_back(cat(parts[i], std::string(1, static_cast<char>('a' + i))));
    out.emplace_back(name, disjoint_union(gs));
  };
  add_union("A1+A1", {T(Family::A, 1), T(Family::A, 1)});
  add_union("A2+A1", {T(Family::A, 2), T(Family::A, 1)});
  add_union("A1+A2", {T(Family::A, 1), T(Family::A, 2)});
  add_union("A3+A1", {T(Family::A, 3), T(Family::A, 1)});
  add_union("B3+A1", {T(Family::B, 3), T(Family::A, 1)});
  add_union("A2+A2", {T(Family::A, 2), T(Family::A, 2)});
  add_union("B2+B2", {T(Family::B, 2), T(Family::B, 2)});
  add_union("A2+A1+A1", {T(Family::A, 2), T(Family::A, 1), T(Family::A, 1)});
  add_union("A1+A1+A1+A1", {T(Family::A, 1), T(Family::A, 1), T(Family::A, 1), T(Family::A, 1)});
  add_union("I2(5)+A2", {T(Family::I2, 5), T(Family::A, 2)});
  add_union("A1+B2", {T(Family::A, 1), T(Family::B, 2)});
  add_union("I2(6)+A1", {T(Family::I2, 6), T(Family::A, 1)});
  // An edge labeled 4 is B2 by another name.
  {
    CoxeterGraph g({"x", "y"});
    g.set_label(0, 1, 4);
    out.emplace_back("I2(4) literal", g);
  }
  // Renamed and reordered copies.
  out.emplace_back("D4 shuffled", shuffled(cat(T(Family::D, 4), "v"), rng, "q"));
  out.emplace_back("B3 shuffled", shuffled(cat(T(Family::B, 3), "v"), rng, "q"));
  out.emplace_back("H3 shuffled", shuffled(cat(T(Family::H, 3), "v"), rng, "q"));
  out.emplace_back("F4 shuffled", shuffled(cat(T(Family::F, 4), "v"), rng, "q"));
  out.emplace_back("E6 shuffled", shuffled(cat(T(Family::E, 6), "v"), rng, "q"));
  out.emplace_back("A3+A1 shuffled", shuffled(disjoint_union({cat(T(Family::A, 3), "a"), cat(T(Family::A, 1), "b")}),
                                              rng, "q"));
  out.emplace_back("A2+A1+A1 shuffled",
                   shuffled(disjoint_union({cat(T(Family::A, 1), "a"), cat(T(Family::A, 2), "b"),
                                            cat(T(Family::A, 1), "c")}),
                            rng, "q"));
  return out;
}

/// The decider against type-multiset equality and a brute-force labeled
/// isomorphism test; invariant profiles separate exactly the non-isomorphic
/// pairs.
inline Report run_iso(std::uint64_t seed = kDefaultSeed) {
  Report r{"iso", seed, {}};
  Rng rng(seed);
  const auto catalog = iso_catalog(rng);
  int pairs = 0, agree = 0, brute_agree = 0, profile_agree = 0, symmetric = 0;
  std::string detail;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j) {
      const auto &[n1, g1] = catalog[i];
      const auto &[n2, g2] = catalog[j];
      ++pairs;
      const IsoDecision d = decide_iso(g1, g2);
      const bool eq = graphs_equal(g1, g2);
      const bool brute = oracle::labeled_isomorphic(g1, g2);
      const bool profiles_equal =
          detail::sorted_vectors(d.left) == detail::sorted_vectors(d.right) && d.rkZ_left == d.rkZ_right;
      agree += d.isomorphic == eq;
      brute_agree += d.isomorphic == brute;
      profile_agree += d.isomorphic == profiles_equal;
      symmetric += decide_iso(g2, g1).isomorphic == d.isomorphic;
      if ((d.isomorphic != eq || d.isomorphic != brute || d.isomorphic != profiles_equal) && detail.empty())
        detail = n1 + " vs " + n2;
    }
  const std::string count = " (" + std::to_string(catalog.size()) + " graphs, " + std::to_string(pairs) + " pairs)";
  r.add("decide_iso agrees with graphs_equal" + count, agree == pairs, detail);
  r.add("decide_iso agrees with brute-force labeled isomorphism" + count, brute_agree == pairs, detail);
  r.add("invariant profiles coincide exactly for isomorphic pairs" + count, profile_agree == pairs, detail);
  r.add("decide_iso is symmetric" + count, symmetric == pairs);
  const auto types = small_connected_types(12);
  r.add("separation_check over rank <= 4 and I2(5..12) (" + std::to_string(types.size()) + " types)",
        separation_check(types));
  return r;
}

/// The automorphism of A2 x Z given by s1 -> s1 delta t, s2 -> s2 delta t,
/// t -> delta t, with inverse s1 -> s1 t^-1, s2 -> s2 t^-1, t -> delta^-1 t^7.
inline Report run_example5() {
  Report r{"example5", kDefaultSeed, {}};
  CoxeterGraph g({"s1", "s2", "t"});
  g.set_label("s1", "s2", 3);
  Garside gs(g);
  const int s1 = 0, s2 = 1, t = 2;
  const ArtinWord S1{{s1, 1}}, S2{{s2, 1}}, Tw{{t, 1}};
  const ArtinWord delta = power(ArtinWord{{s1, 1}, {s2, 1}}, 3);
  const std::vector<ArtinWord> phi{concat(concat(S1, delta), Tw), concat(concat(S2, delta), Tw),
                                   concat(delta, Tw)};
  const std::vector<ArtinWord> phi_inv{concat(S1, inverse_word(Tw)), concat(S2, inverse_word(Tw)),
                                       concat(inverse_word(delta), power(Tw, 7))};
  const char *names[3] = {"s1", "s2", "t"};

  r.add("delta = (s1 s2)^3 is central", gs.equals(concat(delta, S1), concat(S1, delta)) &&
                                            gs.equals(concat(delta, S2), concat(S2, delta)) &&
                                            gs.equals(concat(delta, Tw), concat(Tw, delta)));
  for (const auto &[label, images] : {std::pair{"phi", phi}, std::pair{"phi^-1", phi_inv}}) {
    auto img = [&](int s) { return images[static_cast<std::size_t>(s)]; };
    r.add(std::string(label) + " respects s1 s2 s1 = s2 s1 s2",
          gs.equals(concat(concat(img(s1), img(s2)), img(s1)), concat(concat(img(s2), img(s1)), img(s2))));
    r.add(std::string(label) + " respects s1 t = t s1",
          gs.equals(concat(img(s1), img(t)), concat(img(t), img(s1))));
    r.add(std::string(label) + " respects s2 t = t s2",
          gs.equals(concat(img(s2), img(t)), concat(img(t), img(s2))));
  }
  for (int x = 0; x < 3; ++x) {
    const ArtinWord xw{{x, 1}};
    r.add(std::string("phi(phi^-1(") + names[x] + ")) = " + names[x],
          gs.equals(substitute(substitute(xw, phi_inv), phi), xw));
    r.add(std::string("phi^-1(phi(") + names[x] + ")) = " + names[x],
          gs.equals(substitute(substitute(xw, phi), phi_inv), xw));
  }
  r.add("phi(delta) = delta^7 t^6", gs.equals(substitute(delta, phi), concat(power(delta, 7), power(Tw, 6))));
  return r;
}

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"monoid", "charney", "mu", "table1", "coxeter-power", "iso", "example5"};
  return names;
}

/// Runs a suite by name; throws std::invalid_argument for unknown names.
inline Report run_suite(const std::string &name, std::uint64_t seed = kDefaultSeed) {
  Report r;
  if (name == "monoid")
    r = run_monoid(seed);
  else if (name == "charney")
    r = run_charney(seed);
  else if (name == "mu")
    r = run_mu();
  else if (name == "table1")
    r = run_table1();
  else if (name == "coxeter-power")
    r = run_coxeter_power();
  else if (name == "iso")
    r = run_iso(seed);
  else if (name == "example5")
    r = run_example5();
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  r.seed = seed;
  return r;
}

} // namespace artin::verify
