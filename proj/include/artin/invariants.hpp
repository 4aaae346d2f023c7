#pragma once

// Isomorphism invariants of spherical Artin groups and the decision
// procedure built on them. For a connected graph the vector (cd, mf, rkAb)
// already determines the type, so two spherical Artin groups are isomorphic
// exactly when their graphs have the same multiset of component types.

#include <algorithm>
#include <compare>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "artin/coxgraph.hpp"

namespace artin {

struct InvariantVector {
  int cd = 0;
  int mf = 0;
  int rkAb = 0;

  friend auto operator<=>(const InvariantVector &, const InvariantVector &) = default;
};

/// Maximal order of a finite subgroup of G/Z(G): h/2 when mu = Id, else h.
constexpr int mf(Family f, int param) {
  const int h = coxeter_number(f, param);
  return mu_is_identity(f, param) ? h / 2 : h;
}

inline int mf(const TypeID &t) { return mf(t.family, t.param); }

namespace table1 {

/// The published table of mf values, kept independent of coxeter_number().
constexpr int published_mf(Family f, int n) {
  switch (f) {
  case Family::A: return n == 1 ? 1 : n + 1;
  case Family::B: return n;
  case Family::D: return n % 2 == 0 ? n - 1 : 2 * n - 2;
  case Family::E: return n == 6 ? 12 : n == 7 ? 9 : 15;
  case Family::F: return 6;
  case Family::H: return n == 3 ? 5 : 15;
  case Family::I2: return n % 2 == 0 ? n / 2 : n;
  }
  return 0;
}

constexpr bool agrees_with_coxeter_numbers() {
  for (int n = 1; n <= 64; ++n)
    for (Family f : {Family::A, Family::B, Family::D, Family::E, Family::F, Family::H})
      if (valid_type(f, n) && published_mf(f, n) != artin::mf(f, n))
        return false;
  for (int p = 5; p <= 200; ++p)
    if (published_mf(Family::I2, p) != artin::mf(Family::I2, p))
      return false;
  return true;
}

static_assert(agrees_with_coxeter_numbers(), "mf table disagrees with the Coxeter-number formula");

} // namespace table1

/// Cohomological dimension: the rank. Throws NonSphericalError.
inline int cd(const CoxeterGraph &g) {
  classify_components(g);
  return static_cast<int>(g.size());
}

/// Rank of the abelianization.
inline int rkAb(const CoxeterGraph &g) { return odd_component_count(g); }

/// Rank of the center: the number of components.
inline int rkZ(const CoxeterGraph &g) { return static_cast<int>(classify_components(g).size()); }

struct ComponentProfile {
  TypeID type;
  InvariantVector invariants;
  std::vector<std::string> vertices;
};

inline std::vector<ComponentProfile> component_profile(const CoxeterGraph &g) {
  std::vector<ComponentProfile> out;
  for (const auto &c : classify_components(g))
    out.push_back({c.type,
                   {static_cast<int>(c.graph.size()), mf(c.type), odd_component_count(c.graph)},
                   c.graph.vertices()});
  return out;
}

struct IsoDecision {
  bool isomorphic = false;
  std::vector<ComponentProfile> left;
  std::vector<ComponentProfile> right;
  int rkZ_left = 0;
  int rkZ_right = 0;
  std::string explanation;
};

namespace detail {

inline std::vector<InvariantVector> sorted_vectors(const std::vector<ComponentProfile> &p) {
  std::vector<InvariantVector> v;
  for (const auto &c : p)
    v.push_back(c.invariants);
  std::sort(v.begin(), v.end());
  return v;
}

inline std::string type_list(const std::vector<ComponentProfile> &p) {
  std::vector<TypeID> types;
  for (const auto &c : p)
    types.push_back(c.type);
  std::sort(types.begin(), types.end());
  std::string out;
  for (const auto &t : types)
    out += (out.empty() ? "" : " + ") + t.name();
  return out;
}

} // namespace detail

/// Decides whether the Artin groups of two spherical graphs are isomorphic.
/// Throws NonSphericalError for non-spherical input.
inline IsoDecision decide_iso(const CoxeterGraph &g1, const CoxeterGraph &g2) {
  IsoDecision d;
  d.left = component_profile(g1);
  d.right = component_profile(g2);
  d.rkZ_left = static_cast<int>(d.left.size());
  d.rkZ_right = static_cast<int>(d.right.size());
  d.isomorphic = type_multiset(g1) == type_multiset(g2);

  std::ostringstream why;
  if (d.isomorphic) {
    why << "same component types: " << detail::type_list(d.left);
  } else if (g1.size() != g2.size()) {
    why << "cd: " << g1.size() << " vs " << g2.size();
  } else if (d.rkZ_left != d.rkZ_right) {
    why << "rkZ: " << d.rkZ_left << " vs " << d.rkZ_right;
  } else {
    auto a = detail::sorted_vectors(d.left), b = detail::sorted_vectors(d.right);
    why << detail::type_list(d.left) << " vs " << detail::type_list(d.right);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i])
        continue;
      if (a[i].cd != b[i].cd)
        why << "; cd: " << a[i].cd << " vs " << b[i].cd;
      if (a[i].mf != b[i].mf)
        why << "; mf: " << a[i].mf << " vs " << b[i].mf;
      if (a[i].rkAb != b[i].rkAb)
        why << "; rkAb: " << a[i].rkAb << " vs " << b[i].rkAb;
      break;
    }
  }
  d.explanation = why.str();
  return d;
}

inline InvariantVector invariant_vector(const TypeID &t) {
  return {t.rank(), mf(t), odd_component_count(catalog_graph(t))};
}

/// True iff the invariant vectors of the given connected types are pairwise
/// distinct.
inline bool separation_check(std::span<const TypeID> catalog) {
  std::vector<InvariantVector> v;
  for (const auto &t : catalog)
    v.push_back(invariant_vector(t));
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace artin
