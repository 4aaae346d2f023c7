#pragma once

// Exact arithmetic in the real cyclotomic field Q(gamma), gamma = 2cos(pi/M).
//
// Elements are stored as rational coefficient vectors of fixed length
// `degree` in the power basis 1, gamma, ..., gamma^(degree-1), reduced modulo
// the (monic, integral) minimal polynomial of gamma. Reduction plus
// lowest-terms rationals make the representation canonical, so equality of
// field elements is plain vector equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/error.hpp"

namespace artin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

using IntPoly = std::vector<BigInt>; // coefficient i multiplies x^i

inline void trim(IntPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

/// Exact division of integer polynomials where the divisor is monic.
inline IntPoly divide_exact(IntPoly num, const IntPoly &den) {
  if (den.empty() || den.back() != 1)
    throw std::logic_error("divide_exact: divisor must be monic");
  trim(num);
  if (num.size() < den.size())
    throw std::logic_error("divide_exact: divisor degree too large");
  IntPoly quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt c = num[i + den.size() - 1];
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty())
    throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

/// Phi_n(x), from x^n - 1 = prod_{d | n} Phi_d(x).
inline IntPoly cyclotomic(unsigned n) {
  IntPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0)
      p = divide_exact(p, cyclotomic(d));
  return p;
}

inline unsigned totient(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1)
      ++count;
  return count;
}

/// Given a palindromic polynomial P(y) of even degree 2d, returns psi with
/// P(y) = y^d psi(y + 1/y).
inline IntPoly palindromic_to_trace(const IntPoly &palin) {
  const std::size_t deg = palin.size() - 1;
  if (deg % 2 != 0)
    throw std::logic_error("palindromic_to_trace: odd degree");
  const int half = static_cast<int>(deg / 2);
  // Laurent coefficients, index e + half for exponent e in [-half, half].
  IntPoly rest(palin);
  IntPoly psi(half + 1);
  for (int k = half; k >= 0; --k) {
    const BigInt c = rest[k + half];
    psi[k] = c;
    if (c == 0)
      continue;
    // subtract c * (y + 1/y)^k
    BigInt binom = 1;
    for (int j = 0; j <= k; ++j) {
      rest[(k - 2 * j) + half] -= c * binom;
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (const auto &r : rest)
    if (r != 0)
      throw std::logic_error("palindromic_to_trace: not palindromic");
  return psi;
}

} // namespace detail

/// A field element; meaningful only together with the FieldCtx that made it.
class AlgNum {
public:
  AlgNum() = default;
  explicit AlgNum(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto &c : coeffs_)
      if (c != 0)
        return false;
    return true;
  }

  friend bool operator==(const AlgNum &, const AlgNum &) = default;
  friend bool operator<(const AlgNum &a, const AlgNum &b) { return a.coeffs_ < b.coeffs_; }

  friend std::ostream &operator<<(std::ostream &os, const AlgNum &a) {
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      if (!first)
        os << " + ";
      first = false;
      os << "(" << a.coeffs_[i] << ")";
      if (i == 1)
        os << "*g";
      else if (i > 1)
        os << "*g^" << i;
    }
    if (first)
      os << "0";
    return os;
  }

private:
  std::vector<Rational> coeffs_;
};

class FieldCtx {
public:
  static constexpr unsigned kDefaultDegreeBound = 64;

  /// Field Q(2cos(pi/M)). Throws DomainError for M < 2 or when the degree
  /// phi(2M)/2 exceeds `degree_bound`.
  explicit FieldCtx(unsigned M, unsigned degree_bound = kDefaultDegreeBound) : M_(M) {
    if (M < 2)
      throw DomainError("field context requires M >= 2, got " + std::to_string(M));
    degree_ = detail::totient(2 * M) / 2;
    if (degree_ > degree_bound)
      throw DomainError("field degree " + std::to_string(degree_) + " for M = " +
                        std::to_string(M) + " exceeds bound " + std::to_string(degree_bound));
    minpoly_ = detail::palindromic_to_trace(detail::cyclotomic(2 * M));
    if (minpoly_.size() != degree_ + 1 || minpoly_.back() != 1)
      throw std::logic_error("FieldCtx: unexpected minimal polynomial shape");
  }

  unsigned M() const noexcept { return M_; }
  unsigned degree() const noexcept { return degree_; }
  /// Coefficients of the minimal polynomial of gamma, constant term first.
  const std::vector<BigInt> &minpoly() const noexcept { return minpoly_; }

  AlgNum zero() const { return AlgNum(std::vector<Rational>(degree_)); }
  AlgNum from_rational(const Rational &r) const {
    std::vector<Rational> c(degree_);
    c[0] = r;
    return AlgNum(std::move(c));
  }
  AlgNum one() const { return from_rational(1); }

  /// gamma = 2cos(pi/M), reduced.
  AlgNum gamma() const {
    std::vector<Rational> poly{0, 1};
    return reduce(std::move(poly));
  }

  AlgNum add(const AlgNum &a, const AlgNum &b) const {
    check(a);
    check(b);
    std::vector<Rational> c(degree_);
    for (unsigned i = 0; i < degree_; ++i)
      c[i] = a.coeffs()[i] + b.coeffs()[i];
    return AlgNum(std::move(c));
  }

  AlgNum sub(const AlgNum &a, const AlgNum &b) const {
    check(a);
    check(b);
    std::vector<Rational> c(degree_);
    for (unsigned i = 0; i < degree_; ++i)
      c[i] = a.coeffs()[i] - b.coeffs()[i];
    return AlgNum(std::move(c));
  }

  AlgNum mul(const AlgNum &a, const AlgNum &b) const {
    check(a);
    check(b);
    std::vector<Rational> prod(2 * degree_ - 1);
    for (unsigned i = 0; i < degree_; ++i) {
      if (a.coeffs()[i] == 0)
        continue;
      for (unsigned j = 0; j < degree_; ++j)
        prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return reduce(std::move(prod));
  }

  AlgNum scale(const AlgNum &a, const Rational &r) const {
    check(a);
    std::vector<Rational> c(a.coeffs());
    for (auto &x : c)
      x *= r;
    return AlgNum(std::move(c));
  }

  /// Dickson polynomial D_k evaluated at x: D_0 = 2, D_1 = x,
  /// D_k = x D_{k-1} - D_{k-2}. D_k(2cos t) = 2cos(k t).
  AlgNum dickson(unsigned k, const AlgNum &x) const {
    AlgNum prev = from_rational(2);
    if (k == 0)
      return prev;
    AlgNum cur = x;
    for (unsigned i = 1; i < k; ++i) {
      AlgNum next = sub(mul(x, cur), prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  /// cos(pi/m) for m dividing M.
  AlgNum cos_pi_over(unsigned m) const {
    if (m == 0 || M_ % m != 0)
      throw std::invalid_argument("cos_pi_over: " + std::to_string(m) + " does not divide M = " +
                                  std::to_string(M_));
    return scale(dickson(M_ / m, gamma()), Rational(1, 2));
  }

private:
  void check(const AlgNum &a) const {
    if (a.coeffs().size() != degree_)
      throw std::invalid_argument("AlgNum does not belong to this field context");
  }

  AlgNum reduce(std::vector<Rational> poly) const {
    // minpoly is monic: x^d = -sum_{i<d} minpoly[i] x^i
    for (std::size_t top = poly.size(); top-- > degree_;) {
      const Rational c = poly[top];
      if (c == 0)
        continue;
      for (unsigned i = 0; i < degree_; ++i)
        poly[top - degree_ + i] -= c * Rational(minpoly_[i]);
      poly[top] = 0;
    }
    poly.resize(degree_);
    return AlgNum(std::move(poly));
  }

  unsigned M_;
  unsigned degree_;
  std::vector<BigInt> minpoly_;
};

} // namespace artin
