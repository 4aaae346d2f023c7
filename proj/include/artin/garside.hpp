#pragma once

// Garside structure of a spherical Artin monoid/group.
//
// Simple elements are identified with elements of W (as root permutations).
// Products, divisibility and the left-weighted condition all reduce to length
// additivity and descent sets in W. Positive elements are handled as factor
// lists of simples kept in left-weighted order; group elements go through the
// Delta-form  Delta^-k p  and the Charney form  b c^-1.
//
// Generators are identified by vertex index; every greedy choice takes the
// smallest index, i.e. the vertex declared first.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/coxgroup.hpp"
#include "artin/coxgraph.hpp"
#include "artin/error.hpp"

namespace artin {

struct Letter {
  int gen = 0;
  int exp = 1; // +1 or -1

  friend bool operator==(const Letter &, const Letter &) = default;
};

using ArtinWord = std::vector<Letter>;
/// A positive word as a list of generator indices.
using PositiveWord = std::vector<int>;

inline ArtinWord to_artin(std::span<const int> word) {
  ArtinWord w;
  w.reserve(word.size());
  for (int s : word)
    w.push_back({s, 1});
  return w;
}

inline ArtinWord inverse_word(const ArtinWord &w) {
  ArtinWord inv(w.rbegin(), w.rend());
  for (auto &l : inv)
    l.exp = -l.exp;
  return inv;
}

inline ArtinWord concat(ArtinWord a, const ArtinWord &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline ArtinWord power(const ArtinWord &w, int k) {
  ArtinWord base = k < 0 ? inverse_word(w) : w;
  ArtinWord out;
  for (int i = 0; i < std::abs(k); ++i)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

inline bool is_positive(const ArtinWord &w) {
  return std::all_of(w.begin(), w.end(), [](const Letter &l) { return l.exp == 1; });
}

inline PositiveWord to_positive(const ArtinWord &w) {
  PositiveWord p;
  p.reserve(w.size());
  for (const auto &l : w) {
    if (l.exp != 1)
      throw DomainError("expected a positive word");
    p.push_back(l.gen);
  }
  return p;
}

/// Sum of exponents: the homomorphism G -> Z sending every generator to 1.
inline int degree(const ArtinWord &w) {
  int d = 0;
  for (const auto &l : w)
    d += l.exp;
  return d;
}

/// Alternating word s t s ... of length m.
inline ArtinWord relation_word(int s, int t, int m) {
  if (m < 2)
    throw std::invalid_argument("relation_word: m must be >= 2");
  if (s == t)
    throw std::invalid_argument("relation_word: generators must differ");
  ArtinWord w;
  for (int i = 0; i < m; ++i)
    w.push_back({i % 2 == 0 ? s : t, 1});
  return w;
}

/// Parses whitespace-separated tokens `name`, `name^-1` or `name^k`.
inline ArtinWord parse_word(const CoxeterGraph &g, std::string_view text) {
  ArtinWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view tok = text.substr(start, i - start);
    std::string_view name = tok;
    int k = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      std::string_view num = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw DomainError("invalid exponent in word token '" + std::string(tok) + "'");
    }
    auto s = g.index_of(name);
    if (!s)
      throw DomainError("unknown generator '" + std::string(name) + "' in word");
    for (int r = 0; r < std::abs(k); ++r)
      w.push_back({*s, k < 0 ? -1 : 1});
  }
  return w;
}

inline std::string format_word(const CoxeterGraph &g, const ArtinWord &w) {
  std::string out;
  for (const auto &l : w) {
    if (!out.empty())
      out += ' ';
    out += g.name(l.gen);
    if (l.exp < 0)
      out += "^-1";
  }
  return out;
}

inline std::string format_word(const CoxeterGraph &g, const PositiveWord &w) {
  return format_word(g, to_artin(w));
}

/// Delta^k x_1 ... x_l with every x_i a simple other than 1 and Delta, and
/// each pair (x_i, x_{i+1}) left-weighted.
struct NormalForm {
  int k = 0;
  std::vector<WElem> factors;

  friend bool operator==(const NormalForm &, const NormalForm &) = default;
};

/// w = Delta^-k p with p positive and k minimal.
struct DeltaForm {
  int k = 0;
  NormalForm p;

  friend bool operator==(const DeltaForm &, const DeltaForm &) = default;
};

/// The unique a = b c^-1 with b, c positive and no common right divisor.
struct CharneyPair {
  NormalForm b;
  NormalForm c;

  friend bool operator==(const CharneyPair &, const CharneyPair &) = default;
};

enum class Side { Left, Right };

class Garside {
public:
  explicit Garside(const CoxeterGraph &g) : rs_(g) {
    delta_ = rs_.longest_element();
    for (int s = 0; s < rs_.rank(); ++s)
      mu_.push_back(rs_.simple_image(delta_, s));
  }

  const RootSystem &roots() const noexcept { return rs_; }
  const CoxeterGraph &graph() const noexcept { return rs_.graph(); }
  int rank() const noexcept { return rs_.rank(); }

  // -- simples ---------------------------------------------------------------

  const WElem &delta() const noexcept { return delta_; }

  /// Delta_X for a subset X of the generators.
  WElem fundamental_element(GenSet subset) const {
    if (subset & ~rs_.all_generators())
      throw std::invalid_argument("fundamental_element: unknown generators in subset");
    return rs_.longest_element(subset);
  }

  /// The product uv when it is again simple (lengths add), else nullopt.
  std::optional<WElem> simple_product(const WElem &u, const WElem &v) const {
    WElem uv = rs_.multiply(u, v);
    if (rs_.length(uv) != rs_.length(u) + rs_.length(v))
      return std::nullopt;
    return uv;
  }

  /// Slides generators from the front of v to the back of u until every left
  /// descent of v is a right descent of u. The monoid product is unchanged.
  std::pair<WElem, WElem> left_weighted_pair(WElem u, WElem v) const {
    for (;;) {
      GenSet movable = rs_.left_descents(v) & ~rs_.right_descents(u);
      if (movable == 0)
        return {std::move(u), std::move(v)};
      const int s = first_gen(movable);
      u = rs_.times_gen(u, s);
      v = rs_.gen_times(s, v);
    }
  }

  bool is_left_weighted(const WElem &u, const WElem &v) const {
    return (rs_.left_descents(v) & ~rs_.right_descents(u)) == 0;
  }

  /// Greatest common prefix (Side::Left) or suffix (Side::Right) of two
  /// simples.
  WElem meet_simples(const WElem &u, const WElem &v, Side side) const {
    WElem d = rs_.identity();
    int len = 0;
    for (bool grew = true; grew;) {
      grew = false;
      for (int s = 0; s < rank() && !grew; ++s) {
        WElem e = side == Side::Left ? rs_.times_gen(d, s) : rs_.gen_times(s, d);
        if (rs_.length(e) != len + 1)
          continue;
        const bool common = side == Side::Left ? rs_.prefix_le(e, u) && rs_.prefix_le(e, v)
                                               : rs_.suffix_le(e, u) && rs_.suffix_le(e, v);
        if (common) {
          d = std::move(e);
          ++len;
          grew = true;
        }
      }
    }
    return d;
  }

  /// Least common multiple of two simples, through the order-reversing
  /// involutions x -> x w0 (prefix order) and x -> w0 x (suffix order).
  WElem join_simples(const WElem &u, const WElem &v, Side side) const {
    if (side == Side::Left)
      return rs_.multiply(meet_simples(rs_.multiply(u, delta_), rs_.multiply(v, delta_), Side::Left),
                          delta_);
    return rs_.multiply(delta_,
                        meet_simples(rs_.multiply(delta_, u), rs_.multiply(delta_, v), Side::Right));
  }

  // -- mu --------------------------------------------------------------------

  /// mu(s) with Delta s = mu(s) Delta.
  int mu(int s) const { return mu_.at(static_cast<std::size_t>(s)); }

  bool mu_is_identity() const {
    for (int s = 0; s < rank(); ++s)
      if (mu(s) != s)
        return false;
    return true;
  }

  PositiveWord mu_on_positive(const PositiveWord &w) const {
    PositiveWord out;
    out.reserve(w.size());
    for (int s : w)
      out.push_back(mu(s));
    return out;
  }

  /// Exponent e with delta = Delta^e generating the center (connected graphs
  /// only).
  int center_exponent() const {
    if (!is_connected(graph()))
      throw std::invalid_argument("center_exponent: graph is not connected");
    return mu_is_identity() ? 1 : 2;
  }

  // -- positive elements ----------------------------------------------------

  /// Left-weighted normal form of a positive word.
  NormalForm normal_form(std::span<const int> word) const {
    std::vector<WElem> factors;
    for (int s : word)
      append_simple(factors, rs_.generator(s));
    return to_normal_form(std::move(factors));
  }

  NormalForm normal_form(const ArtinWord &word) const { return normal_form(to_positive(word)); }

  /// Canonical spelling: k copies of the reduced word of w0, then the reduced
  /// words of the factors.
  PositiveWord spelling(const NormalForm &nf) const {
    PositiveWord out;
    const PositiveWord dw = rs_.reduced_word(delta_);
    for (int i = 0; i < nf.k; ++i)
      out.insert(out.end(), dw.begin(), dw.end());
    for (const auto &x : nf.factors) {
      auto rw = rs_.reduced_word(x);
      out.insert(out.end(), rw.begin(), rw.end());
    }
    return out;
  }

  /// Letters of the canonical spelling.
  GenSet support(std::span<const int> word) const {
    GenSet set = 0;
    for (int s : spelling(normal_form(word)))
      set |= gen_bit(s);
    return set;
  }

  /// Generators s with s <=_R p.
  GenSet right_divisor_letters(std::span<const int> word) const {
    auto rev = reversed_factors(expand(normal_form(word)));
    return head_left_descents(rev);
  }

  /// p ^_R q, by repeatedly cancelling the smallest common right letter.
  PositiveWord right_gcd_positive(std::span<const int> p, std::span<const int> q) const {
    auto [gcd, rp, rq] = right_gcd_factors(expand(normal_form(p)), expand(normal_form(q)));
    return spelling(to_normal_form(std::move(gcd)));
  }

  // -- group elements --------------------------------------------------------

  /// w = Delta^-k p with p positive and k minimal.
  DeltaForm delta_form(const ArtinWord &w) const {
    // The true positive part is mu^twist(stored).
    std::vector<WElem> stored;
    int k = 0;
    bool twist = false;
    for (const auto &l : w) {
      WElem x = l.exp > 0 ? rs_.generator(l.gen)
                          : rs_.multiply(rs_.generator(l.gen), delta_); // s^-1 Delta
      append_simple(stored, twist ? mu_simple(x) : x);
      if (l.exp < 0) {
        // P x Delta^-1 = Delta^-1 mu(P x)
        ++k;
        twist = !twist;
      }
    }
    if (twist)
      for (auto &x : stored)
        x = mu_simple(x);
    NormalForm p = to_normal_form(std::move(stored));
    const int cancel = std::min(k, p.k);
    return {k - cancel, NormalForm{p.k - cancel, std::move(p.factors)}};
  }

  CharneyPair charney(const ArtinWord &w) const {
    DeltaForm df = delta_form(w);
    if (df.k == 0)
      return {std::move(df.p), NormalForm{}};
    // Delta^-k p = mu^k(p) Delta^-k
    std::vector<WElem> q = expand(df.p);
    if (df.k % 2 == 1)
      for (auto &x : q)
        x = mu_simple(x);
    std::vector<WElem> c(static_cast<std::size_t>(df.k), delta_);
    auto [gcd, b_part, c_part] = right_gcd_factors(std::move(q), std::move(c));
    return {to_normal_form(std::move(b_part)), to_normal_form(std::move(c_part))};
  }

  /// Word problem via Charney forms.
  bool equals(const ArtinWord &w1, const ArtinWord &w2) const { return charney(w1) == charney(w2); }

  /// Word problem via the Delta-form of w1 w2^-1.
  bool equals_via_delta(const ArtinWord &w1, const ArtinWord &w2) const {
    return delta_form(concat(w1, inverse_word(w2))) == DeltaForm{};
  }

  ArtinWord to_word(const NormalForm &nf) const { return to_artin(spelling(nf)); }

  /// b c^-1 spelled out.
  ArtinWord to_word(const CharneyPair &cp) const {
    return concat(to_word(cp.b), inverse_word(to_word(cp.c)));
  }

  ArtinWord delta_word(int power = 1) const {
    return artin::power(to_artin(rs_.reduced_word(delta_)), power);
  }

  /// Checks pi^(h/2) = Delta (mu = Id) or pi^h = Delta^2 (mu != Id) for the
  /// Coxeter element pi given by `ordering` (a permutation of the generators).
  bool power_check_coxeter_element(std::span<const int> ordering) const {
    if (!is_connected(graph()))
      throw std::invalid_argument("power_check_coxeter_element: graph is not connected");
    std::vector<int> sorted(ordering.begin(), ordering.end());
    std::sort(sorted.begin(), sorted.end());
    bool permutation = static_cast<int>(sorted.size()) == rank();
    for (std::size_t i = 0; permutation && i < sorted.size(); ++i)
      permutation = sorted[i] == static_cast<int>(i);
    if (!permutation)
      throw std::invalid_argument("power_check_coxeter_element: ordering is not a permutation");
    const int h = classify(graph())->coxeter_number();
    const ArtinWord pi = to_artin(ordering);
    if (mu_is_identity()) {
      if (h % 2 != 0)
        return false;
      return equals(artin::power(pi, h / 2), delta_word(1));
    }
    return equals(artin::power(pi, h), delta_word(2));
  }

private:
  WElem mu_simple(const WElem &x) const { return rs_.multiply(rs_.multiply(delta_, x), delta_); }

  /// Restores left-weightedness after the pairs in `dirty` may have been
  /// disturbed, then drops trailing identities.
  void repair(std::vector<WElem> &f, std::vector<std::size_t> dirty) const {
    while (!dirty.empty()) {
      const std::size_t i = dirty.back();
      dirty.pop_back();
      if (i + 1 >= f.size() || is_left_weighted(f[i], f[i + 1]))
        continue;
      auto [a, b] = left_weighted_pair(std::move(f[i]), std::move(f[i + 1]));
      f[i] = std::move(a);
      f[i + 1] = std::move(b);
      if (i > 0)
        dirty.push_back(i - 1);
      dirty.push_back(i + 1);
    }
    const WElem id = rs_.identity();
    while (!f.empty() && f.back() == id)
      f.pop_back();
  }

  void append_simple(std::vector<WElem> &f, WElem x) const {
    f.push_back(std::move(x));
    if (f.size() >= 2)
      repair(f, {f.size() - 2});
    else
      repair(f, {});
  }

  void normalize_all(std::vector<WElem> &f) const {
    std::vector<std::size_t> dirty;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      dirty.push_back(i);
    repair(f, std::move(dirty));
  }

  NormalForm to_normal_form(std::vector<WElem> f) const {
    normalize_all(f);
    NormalForm nf;
    std::size_t lead = 0;
    while (lead < f.size() && f[lead] == delta_)
      ++lead;
    nf.k = static_cast<int>(lead);
    nf.factors.assign(std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(lead)),
                      std::make_move_iterator(f.end()));
    return nf;
  }

  /// Factor list with the Delta power written out as factors.
  std::vector<WElem> expand(const NormalForm &nf) const {
    std::vector<WElem> f(static_cast<std::size_t>(nf.k), delta_);
    f.insert(f.end(), nf.factors.begin(), nf.factors.end());
    return f;
  }

  /// Factor list of the reversed element (reverse order, invert factors),
  /// renormalized.
  std::vector<WElem> reversed_factors(const std::vector<WElem> &f) const {
    std::vector<WElem> r;
    r.reserve(f.size());
    for (auto it = f.rbegin(); it != f.rend(); ++it)
      r.push_back(rs_.inverse(*it));
    normalize_all(r);
    return r;
  }

  /// Letters left-dividing a left-weighted factor list: those of its first
  /// factor, which is the greatest simple prefix.
  GenSet head_left_descents(const std::vector<WElem> &f) const {
    return f.empty() ? GenSet{0} : rs_.left_descents(f.front());
  }

  void left_divide_letter(std::vector<WElem> &f, int s) const {
    f.front() = rs_.gen_times(s, f.front());
    repair(f, {0});
  }

  struct GcdResult {
    std::vector<WElem> gcd;
    std::vector<WElem> p_quotient;
    std::vector<WElem> q_quotient;
  };

  /// Right gcd of two positive elements given as factor lists, together with
  /// the quotients p = p' d and q = q' d. Works on the reversed elements,
  /// where right divisors become left divisors.
  GcdResult right_gcd_factors(std::vector<WElem> p, std::vector<WElem> q) const {
    auto rp = reversed_factors(p);
    auto rq = reversed_factors(q);
    std::vector<int> removed;
    for (GenSet common = head_left_descents(rp) & head_left_descents(rq); common != 0;
         common = head_left_descents(rp) & head_left_descents(rq)) {
      const int s = first_gen(common);
      removed.push_back(s);
      left_divide_letter(rp, s);
      left_divide_letter(rq, s);
    }
    std::vector<WElem> gcd;
    for (auto it = removed.rbegin(); it != removed.rend(); ++it)
      append_simple(gcd, rs_.generator(*it));
    return {std::move(gcd), reversed_factors(rp), reversed_factors(rq)};
  }

  RootSystem rs_;
  WElem delta_;
  std::vector<int> mu_;
};

} // namespace artin
