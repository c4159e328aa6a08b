#pragma once

#include <gmpxx.h>

#include <vector>

#include "binomeul/polynomial.hpp"

namespace binomeul {

/// p = sum_i gammas[i] t^i (1+t)^{n-2i}
struct GammaExpansion {
  int n = 0;
  std::vector<mpz_class> gammas;

  IntPolynomial reconstruct() const { return gamma_reconstruct(gammas, n); }
  friend bool operator==(const GammaExpansion&, const GammaExpansion&) = default;
};

/// Two palindromic summands: `plus` about n/2, `minus` about (n+1)/2.
struct PalindromicPair {
  IntPolynomial plus;
  IntPolynomial minus;
  int n = 0;
};

/// (lowest + highest exponent) / 2.
mpq_class center(const IntPolynomial& p);

bool is_palindromic(const IntPolynomial& p, int n);

/// Possibly-negative gammas; positivity is a separate question.
GammaExpansion gamma_expansion(const IntPolynomial& p, int n);
bool is_gamma_positive(const GammaExpansion& g);

PalindromicPair palindromic_decomposition(const IntPolynomial& p, int n);

bool is_unimodal(const IntPolynomial& p);
/// a_0 <= a_n <= a_1 <= a_{n-1} <= ... and a_k = 0 for k > n.
bool is_alternatingly_increasing(const IntPolynomial& p, int n);

/// E_r(t^k) = t^{k/r} when r | k, else 0.
IntPolynomial e_r_operator(const IntPolynomial& p, int r);

/// First count+1 coefficients of numer / (1 - t)^m.
std::vector<mpz_class> geometric_expand(const IntPolynomial& numer, int m, int count);

/// Exact Sturm-sequence test that every complex root is real.
bool is_real_rooted(const IntPolynomial& p);
/// Number of distinct real roots, by Sturm's theorem.
int count_distinct_real_roots(const RatPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);
/// Quotient and remainder over the rationals.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial derivative(const RatPolynomial& p);

}  // namespace binomeul
