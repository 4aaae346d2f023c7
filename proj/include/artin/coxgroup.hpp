#pragma once

// Finite Coxeter groups acting on their root systems.
//
// Roots are computed exactly in the simple-root basis over Q(2cos(pi/M)) by
// closing the simple roots under the simple reflections. Positivity is never
// decided numerically: s permutes the positive roots other than alpha_s, so
// every root produced from a positive root by such a reflection is positive.
// Group elements are permutations of root indices, which makes equality and
// length (number of positive roots sent negative) exact integer operations.
//
// Index layout: roots [0, N) are positive with [0, n) the simple roots in
// vertex order; root i + N is the negative of root i.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/algnum.hpp"
#include "artin/coxgraph.hpp"
#include "artin/error.hpp"

namespace artin {

/// Set of generators as a bitmask over vertex indices.
using GenSet = std::uint64_t;

inline constexpr int kMaxRank = 64;

inline GenSet gen_bit(int s) { return GenSet{1} << s; }
inline bool contains(GenSet set, int s) { return (set >> s) & 1u; }
/// Smallest generator index in a nonempty set.
inline int first_gen(GenSet set) { return std::countr_zero(set); }

class WElem {
public:
  WElem() = default;
  explicit WElem(std::vector<int> perm) : perm_(std::move(perm)) {}

  const std::vector<int> &perm() const noexcept { return perm_; }
  int operator[](int i) const { return perm_[static_cast<std::size_t>(i)]; }
  std::size_t size() const noexcept { return perm_.size(); }

  friend bool operator==(const WElem &, const WElem &) = default;
  friend auto operator<=>(const WElem &a, const WElem &b) { return a.perm_ <=> b.perm_; }

private:
  std::vector<int> perm_;
};

class RootSystem {
public:
  explicit RootSystem(const CoxeterGraph &g) : graph_(g), field_(field_modulus(g)) {
    const int n = static_cast<int>(g.size());
    if (n == 0)
      throw DomainError("empty Coxeter graph");
    if (n > kMaxRank)
      throw DomainError("rank " + std::to_string(n) + " exceeds the supported maximum of " +
                        std::to_string(kMaxRank));
    int expected = 0;
    for (const auto &c : classify_components(g))
      expected += c.type.root_count();
    build(expected / 2);
  }

  const CoxeterGraph &graph() const noexcept { return graph_; }
  const FieldCtx &field() const noexcept { return field_; }
  int rank() const noexcept { return static_cast<int>(graph_.size()); }
  int num_roots() const noexcept { return 2 * num_positive_; }
  int num_positive() const noexcept { return num_positive_; }
  GenSet all_generators() const noexcept {
    return rank() == 64 ? ~GenSet{0} : (gen_bit(rank()) - 1);
  }

  /// Coordinates of root i in the simple-root basis.
  std::vector<AlgNum> root(int i) const {
    if (i < num_positive_)
      return positive_[static_cast<std::size_t>(i)];
    std::vector<AlgNum> v = positive_[static_cast<std::size_t>(i - num_positive_)];
    for (auto &c : v)
      c = field_.sub(field_.zero(), c);
    return v;
  }
  bool is_positive(int i) const noexcept { return i < num_positive_; }
  int negate(int i) const noexcept { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }

  const WElem &generator(int s) const { return gens_.at(static_cast<std::size_t>(s)); }

  WElem identity() const {
    std::vector<int> p(static_cast<std::size_t>(num_roots()));
    std::iota(p.begin(), p.end(), 0);
    return WElem(std::move(p));
  }

  /// (uv)(alpha) = u(v(alpha)).
  WElem multiply(const WElem &u, const WElem &v) const {
    std::vector<int> p(v.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] = u[v[static_cast<int>(i)]];
    return WElem(std::move(p));
  }

  WElem inverse(const WElem &w) const {
    std::vector<int> p(w.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      p[static_cast<std::size_t>(w[static_cast<int>(i)])] = static_cast<int>(i);
    return WElem(std::move(p));
  }

  WElem times_gen(const WElem &w, int s) const { return multiply(w, generator(s)); }
  WElem gen_times(int s, const WElem &w) const { return multiply(generator(s), w); }

  /// Product of simple reflections, left to right.
  WElem from_word(std::span<const int> word) const {
    WElem w = identity();
    for (int s : word) {
      if (s < 0 || s >= rank())
        throw std::invalid_argument("from_word: generator index out of range");
      w = times_gen(w, s);
    }
    return w;
  }

  WElem from_names(const std::vector<std::string> &names) const {
    std::vector<int> word;
    for (const auto &name : names) {
      auto i = graph_.index_of(name);
      if (!i)
        throw DomainError("unknown generator '" + name + "'");
      word.push_back(*i);
    }
    return from_word(word);
  }

  int length(const WElem &w) const {
    int count = 0;
    for (int i = 0; i < num_positive_; ++i)
      if (w[i] >= num_positive_)
        ++count;
    return count;
  }

  /// {s : l(ws) < l(w)}, i.e. w(alpha_s) < 0.
  GenSet right_descents(const WElem &w) const {
    GenSet d = 0;
    for (int s = 0; s < rank(); ++s)
      if (w[s] >= num_positive_)
        d |= gen_bit(s);
    return d;
  }

  /// {s : l(sw) < l(w)}, i.e. w^-1(alpha_s) < 0.
  GenSet left_descents(const WElem &w) const {
    GenSet d = 0;
    for (int i = num_positive_; i < num_roots(); ++i)
      if (w[i] < rank())
        d |= gen_bit(w[i]);
    return d;
  }

  /// Reduced word obtained by repeatedly stripping the smallest left descent.
  std::vector<int> reduced_word(const WElem &w) const {
    std::vector<int> word;
    WElem inv = inverse(w); // left descents of w are right descents of inv
    for (GenSet d = right_descents(inv); d != 0; d = right_descents(inv)) {
      const int s = first_gen(d);
      word.push_back(s);
      inv = times_gen(inv, s);
    }
    return word;
  }

  /// Longest element of the parabolic subgroup generated by `subset`, by
  /// greedy ascent.
  WElem longest_element(GenSet subset) const {
    WElem w = identity();
    for (;;) {
      GenSet ascents = subset & ~right_descents(w);
      if (ascents == 0)
        return w;
      w = times_gen(w, first_gen(ascents));
    }
  }

  const WElem &longest_element() const { return w0_; }

  /// u <= v in the prefix (left weak) order: l(u) + l(u^-1 v) = l(v).
  bool prefix_le(const WElem &u, const WElem &v) const {
    return length(u) + length(multiply(inverse(u), v)) == length(v);
  }

  /// u <= v in the suffix order: l(v u^-1) + l(u) = l(v).
  bool suffix_le(const WElem &u, const WElem &v) const {
    return length(multiply(v, inverse(u))) + length(u) == length(v);
  }

  /// Index t with w alpha_s = +-alpha_t, or -1 if w alpha_s is not simple up
  /// to sign.
  int simple_image(const WElem &w, int s) const {
    int r = w[s];
    if (!is_positive(r))
      r = negate(r);
    return r < rank() ? r : -1;
  }

private:
  // lcm of all labels; classifies first so non-spherical input is reported
  // as such rather than as an arithmetic failure.
  static unsigned field_modulus(const CoxeterGraph &g) {
    constexpr std::uint64_t kMaxModulus = 1'000'000;
    classify_components(g);
    std::uint64_t M = 2;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        M = std::lcm(M, static_cast<std::uint64_t>(g.label(int(i), int(j))));
        if (M > kMaxModulus)
          throw DomainError("edge labels are too large: lcm exceeds " + std::to_string(kMaxModulus));
      }
    return static_cast<unsigned>(M);
  }

  std::vector<AlgNum> reflect(int s, const std::vector<AlgNum> &v) const {
    std::vector<AlgNum> out = v;
    AlgNum acc = out[static_cast<std::size_t>(s)];
    for (const auto &[t, coeff] : form_rows_[static_cast<std::size_t>(s)])
      acc = field_.sub(acc, field_.mul(coeff, v[static_cast<std::size_t>(t)]));
    out[static_cast<std::size_t>(s)] = std::move(acc);
    return out;
  }

  void build(int expected_positive) {
    const int n = rank();
    // Row s holds (t, 2 B(alpha_s, alpha_t)) for the nonzero entries, with
    // B(alpha_s, alpha_t) = -cos(pi/m_st).
    form_rows_.resize(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        AlgNum b = field_.scale(field_.cos_pi_over(static_cast<unsigned>(graph_.label(s, t))), -2);
        if (!b.is_zero())
          form_rows_[static_cast<std::size_t>(s)].emplace_back(t, std::move(b));
      }

    std::map<std::vector<AlgNum>, int> index;
    for (int s = 0; s < n; ++s) {
      std::vector<AlgNum> e(static_cast<std::size_t>(n), field_.zero());
      e[static_cast<std::size_t>(s)] = field_.one();
      index.emplace(e, s);
      positive_.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < positive_.size(); ++i)
      for (int s = 0; s < n; ++s) {
        if (static_cast<int>(i) == s)
          continue;
        auto image = reflect(s, positive_[i]);
        if (index.count(image))
          continue;
        if (static_cast<int>(positive_.size()) >= expected_positive)
          throw std::logic_error("root closure exceeded the expected number of roots");
        index.emplace(image, static_cast<int>(positive_.size()));
        positive_.push_back(std::move(image));
      }
    if (static_cast<int>(positive_.size()) != expected_positive)
      throw std::logic_error("root closure produced " + std::to_string(positive_.size()) +
                             " positive roots, expected " + std::to_string(expected_positive));
    num_positive_ = expected_positive;

    for (int s = 0; s < n; ++s) {
      std::vector<int> perm(static_cast<std::size_t>(num_roots()));
      for (int i = 0; i < num_positive_; ++i) {
        int img;
        if (i == s) {
          img = negate(s);
        } else {
          auto it = index.find(reflect(s, positive_[static_cast<std::size_t>(i)]));
          if (it == index.end())
            throw std::logic_error("root closure is not stable under reflections");
          img = it->second;
        }
        perm[static_cast<std::size_t>(i)] = img;
        perm[static_cast<std::size_t>(negate(i))] = negate(img);
      }
      gens_.emplace_back(std::move(perm));
    }
    w0_ = longest_element(all_generators());
  }

  CoxeterGraph graph_;
  FieldCtx field_;
  std::vector<std::vector<std::pair<int, AlgNum>>> form_rows_;
  std::vector<std::vector<AlgNum>> positive_;
  int num_positive_ = 0;
  std::vector<WElem> gens_;
  WElem w0_;
};

} // namespace artin
