#pragma once

// The wreath product Z_r wr S_n as r-colored permutations, its descent and
// excedance statistics, and the Eulerian / derangement / binomial Eulerian
// polynomials assembled from them.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "binomeul/polyring.hpp"

namespace binomeul {

/// (sigma, eps): sigma is one-line notation over 1..n, eps[k] is the color of sigma[k].
struct ColoredPermutation {
  std::vector<int> sigma;
  std::vector<int> eps;
  int r = 1;

  int size() const { return static_cast<int>(sigma.size()); }
  /// Throws DomainError unless sigma permutes 1..n and colors lie in [0, r-1].
  void validate() const;
  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
};

/// One-line signed notation w(1)..w(n), nonzero entries with |w| a permutation.
struct SignedPermutation {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  void validate() const;
  /// Positive entries are color 0, negative entries color 1.
  ColoredPermutation to_colored() const;
  static SignedPermutation from_colored(const ColoredPermutation& w);
};

/// Sorted subset of [n].
using IndexSet = std::vector<int>;

/// Visits every element of Z_r wr S_n once, lexicographically on (sigma, eps).
/// The visitor receives a reference valid only during the call.
void for_each_colored(int n, int r, const std::function<void(const ColoredPermutation&)>& visit);
/// Materialized enumeration; intended for small n only.
std::vector<ColoredPermutation> enumerate(int n, int r);
/// r^n * n!
std::uint64_t group_order(int n, int r);

IndexSet des_set(const ColoredPermutation& w);
IndexSet asc_set(const ColoredPermutation& w);
int des(const ColoredPermutation& w);
int exc(const ColoredPermutation& w);
int exc_a(const ColoredPermutation& w);
int fexc(const ColoredPermutation& w);
bool is_derangement(const ColoredPermutation& w);

/// No two entries i, i+1 both in the set.
bool no_two_consecutive(const IndexSet& s);

enum class Statistic { des, exc };
enum class DerangementMethod { direct, inclusion_exclusion };
enum class APlusMethod { positive_first_des, flag_exc, carlitz };

IntPolynomial eulerian_poly(int n, int r, Statistic stat = Statistic::des);
/// Classical A_n(t) (r = 1).
IntPolynomial eulerian_poly(int n);
IntPolynomial derangement_poly(int n, int r, DerangementMethod method = DerangementMethod::direct);

/// xi^+_{n,r,i} and xi^-_{n,r,i}, both indexed by i from 0.
struct XiCounts {
  std::vector<mpz_class> plus;
  std::vector<mpz_class> minus;
};
XiCounts xi_counts(int n, int r);

/// (d^+, d^-) assembled from the xi counts.
std::pair<IntPolynomial, IntPolynomial> d_plus_minus(int n, int r);
/// (A^+, A^-) as binomial sums of d^+ and d^-.
std::pair<IntPolynomial, IntPolynomial> a_plus_minus(int n, int r);

/// sum_m C(n,m) t^{n-m} A_{m,r}(t)
IntPolynomial binomial_eulerian(int n, int r);
std::pair<IntPolynomial, IntPolynomial> binomial_eulerian_pm(int n, int r);
/// 1 + t sum_{m>=1} C(n,m) A_m(t), the classical definition.
IntPolynomial binomial_eulerian_classical(int n);

struct GammaTilde {
  std::vector<mpz_class> plus_formula;
  std::vector<mpz_class> minus_formula;
  std::vector<mpz_class> plus_direct;
  std::vector<mpz_class> minus_direct;
};
/// Gamma vectors of A~^+ (length floor(n/2)+1) and A~^- (length floor((n+1)/2)+1,
/// entry 0 is zero), once from xi counts and once by counting in Z_r wr S_{n+1}.
GammaTilde gamma_tilde(int n, int r);

IntPolynomial a_plus_alt(int n, int r, APlusMethod method);

IndexSet des_b_set(const SignedPermutation& w);
IndexSet asc_b_set(const SignedPermutation& w);
void for_each_signed(int n, const std::function<void(const SignedPermutation&)>& visit);

/// Signed-permutation gamma counts by Des_B (or Asc_B when use_ascents).
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> gamma_b(int n, bool use_ascents = false);

}  // namespace binomeul
