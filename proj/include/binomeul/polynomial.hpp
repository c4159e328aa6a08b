#pragma once

// Dense univariate polynomials in t over an exact coefficient ring, plus the
// ring-generic palindromic machinery (gamma expansion, two-center split,
// division by 1 - t) shared by integer polynomials and by polynomials whose
// coefficients are symmetric functions.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "binomeul/errors.hpp"

namespace binomeul {

inline bool coeff_is_zero(const mpz_class& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline mpz_class scale_coeff(const mpz_class& c, const mpz_class& k) { return c * k; }
inline mpq_class scale_coeff(const mpq_class& c, const mpz_class& k) { return c * mpq_class(k); }

template <class T>
class Polynomial {
 public:
  using coeff_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> init) : c_(init) { trim(); }

  static Polynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  int low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!coeff_is_zero(c_[k])) return static_cast<int>(k);
    return -1;
  }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(std::ptrdiff_t k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return T{};
    return c_[static_cast<std::size_t>(k)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(T{} - c);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// t^k * p
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }

  /// Multiply every coefficient by an integer.
  Polynomial scaled(const mpz_class& k) const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(scale_coeff(c, k));
    return Polynomial(std::move(v));
  }

  /// t^m p(1/t); requires m >= degree().
  Polynomial reversed(int m) const {
    if (is_zero()) return {};
    if (m < degree()) throw DomainError("reversal length below degree");
    std::vector<T> v(static_cast<std::size_t>(m) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[static_cast<std::size_t>(m) - k] = c_[k];
    return Polynomial(std::move(v));
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Polynomial<U>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// (1 + t)^m
inline IntPolynomial one_plus_t_pow(int m) {
  std::vector<mpz_class> v;
  for (int k = 0; k <= m; ++k) v.push_back(binomial(m, k));
  return IntPolynomial(std::move(v));
}

/// Coefficients of t^j and t^{n-j} agree for every j.
template <class T>
bool palindromic_about(const Polynomial<T>& p, int n) {
  for (int j = 0; j <= p.degree(); ++j) {
    const int mirror = n - j;
    if (mirror < 0) {
      if (!coeff_is_zero(p.coeff(j))) return false;
    } else if (!(p.coeff(j) == p.coeff(mirror))) {
      return false;
    }
  }
  return true;
}

/// Quotient q with p = (1 - t) q. Throws IdentityError when 1 - t does not divide p.
template <class T>
Polynomial<T> divide_by_one_minus_t(const Polynomial<T>& p) {
  if (p.is_zero()) return {};
  std::vector<T> q(p.size() - 1);
  T run{};
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    run = run + p.coeffs()[k];
    q[k] = run;
  }
  run = run + p.coeffs().back();
  if (!coeff_is_zero(run)) throw IdentityError("polynomial is not divisible by (1 - t)");
  return Polynomial<T>(std::move(q));
}

/// Coefficients g_0..g_{n/2} with p = sum g_i t^i (1+t)^{n-2i}; p must be
/// palindromic about n/2 with degree at most n.
template <class T>
std::vector<T> gamma_coefficients(const Polynomial<T>& p, int n) {
  if (n < 0) throw DomainError("gamma expansion needs n >= 0");
  if (!palindromic_about(p, n) || p.degree() > n)
    throw DomainError("gamma expansion requires a polynomial palindromic about n/2");
  std::vector<T> gammas;
  Polynomial<T> rest = p;
  for (int i = 0; 2 * i <= n; ++i) {
    T g = rest.coeff(i);
    if (!coeff_is_zero(g)) {
      Polynomial<T> term = one_plus_t_pow(n - 2 * i).map_coeffs([&](const mpz_class& b) { return scale_coeff(g, b); });
      rest -= term.shifted(static_cast<std::size_t>(i));
    }
    gammas.push_back(std::move(g));
  }
  if (!rest.is_zero()) throw IdentityError("gamma expansion left a nonzero remainder");
  return gammas;
}

template <class T>
Polynomial<T> gamma_reconstruct(const std::vector<T>& gammas, int n) {
  Polynomial<T> out;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const int e = n - 2 * static_cast<int>(i);
    if (coeff_is_zero(gammas[i])) continue;
    if (e < 0) throw DomainError("gamma index exceeds n/2");
    out += one_plus_t_pow(e).map_coeffs([&](const mpz_class& b) { return scale_coeff(gammas[i], b); }).shifted(i);
  }
  return out;
}

/// The unique (a, b) with p = a + b, a palindromic about n/2 and b palindromic
/// about (n+1)/2. Uses (1 - t) a = p - t^{n+1} p(1/t).
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> palindromic_split(const Polynomial<T>& p, int n) {
  if (n < 0) throw DomainError("palindromic decomposition needs n >= 0");
  if (p.degree() > n + 1) throw DomainError("palindromic decomposition needs degree <= n + 1");
  Polynomial<T> a = divide_by_one_minus_t(p - p.reversed(n + 1));
  Polynomial<T> b = p - a;
  return {std::move(a), std::move(b)};
}

}  // namespace binomeul
