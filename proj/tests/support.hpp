#pragma once

#include <initializer_list>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "binomeul/polynomial.hpp"

namespace testing {

inline binomeul::IntPolynomial P(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return binomeul::IntPolynomial(std::move(v));
}

inline std::vector<mpz_class> Z(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

inline std::string show(const binomeul::IntPolynomial& p) {
  std::string s;
  for (const auto& c : p.coeffs()) s += (s.empty() ? "" : " ") + c.get_str();
  return "(" + s + ")";
}

/// Shared fixed-seed generator for property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240917);
  return g;
}

inline binomeul::IntPolynomial random_poly(int max_degree, long lo, long hi) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(lo, hi);
  std::vector<mpz_class> v(static_cast<std::size_t>(deg(rng())) + 1);
  for (auto& c : v) c = coef(rng());
  return binomeul::IntPolynomial(std::move(v));
}

}  // namespace testing

namespace binomeul {
// doctest prints operands of failed comparisons through this.
inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << testing::show(p); }
}  // namespace binomeul
