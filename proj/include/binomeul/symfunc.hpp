#pragma once

// Symmetric functions in the power-sum basis with rational coefficients,
// t-polynomials over them, and truncated z-series of those. Schur data comes
// from Murnaghan-Nakayama on demand.

#include <map>
#include <string>
#include <vector>

#include "binomeul/polyring.hpp"

namespace binomeul {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// Partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
/// prod_i i^{a_i} a_i!, where a_i parts equal i; n!/z_lambda is the class size.
mpz_class z_lambda(const Partition& lambda);
/// Cycle type of a permutation in one-line notation (1-based).
Partition cycle_type(const std::vector<int>& w);
/// A permutation with the given cycle type: consecutive cycles (1..l1)(l1+1..)...
std::vector<int> permutation_of_type(const Partition& lambda);
std::string partition_key(const Partition& lambda);  // "2,1"

class SymF {
 public:
  SymF() = default;
  /// c * p_mu
  SymF(const Partition& mu, mpq_class c);

  static SymF p(const Partition& mu) { return SymF(mu, 1); }
  static SymF h(int n);
  static SymF e(int n);
  static SymF one() { return p({}); }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for zero.
  int degree() const;
  const std::map<Partition, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(const Partition& mu) const;

  SymF& operator+=(const SymF& o);
  SymF& operator-=(const SymF& o);
  friend SymF operator+(SymF a, const SymF& b) { return a += b; }
  friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
  friend SymF operator*(const SymF& a, const SymF& b);
  friend SymF operator*(SymF a, const mpq_class& c);
  friend bool operator==(const SymF& a, const SymF& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymF& a, const SymF& b) { return !(a == b); }

 private:
  std::map<Partition, mpq_class> terms_;
};

inline bool coeff_is_zero(const SymF& f) { return f.is_zero(); }
inline SymF scale_coeff(const SymF& f, const mpz_class& k) { return f * mpq_class(k); }

SymF omega(const SymF& f);

/// chi^lambda(mu) by Murnaghan-Nakayama.
mpz_class character(const Partition& lambda, const Partition& mu);

struct SchurExpansion {
  std::map<Partition, mpq_class> coeffs;
  /// False signals an internal inconsistency for characters of genuine representations.
  bool integral = true;
};
SchurExpansion schur_coefficients(const SymF& f);
/// s_lambda in the power-sum basis.
SymF schur(const Partition& lambda);
/// Throws IdentityError when a Schur coefficient is not an integer.
bool is_schur_positive(const SymF& f);

/// Coefficient of p_{1^n}.
mpq_class ex_star(const SymF& f);

using TPoly = Polynomial<SymF>;
RatPolynomial ex_star_tpoly(const TPoly& p);
/// n! ex*(p): the dimension shadow as an integer polynomial; throws IdentityError if not integral.
IntPolynomial dimension_shadow(const TPoly& p, int n);
TPoly omega(const TPoly& p);
/// f * c(t) for an integer polynomial c.
TPoly tpoly_from(const SymF& f, const IntPolynomial& c);

struct SymGamma {
  int n = 0;
  std::vector<SymF> gammas;
  TPoly reconstruct() const { return gamma_reconstruct(gammas, n); }
};
SymGamma sym_gamma(const TPoly& p, int n);
bool is_schur_gamma_positive(const TPoly& p, int n);
std::pair<TPoly, TPoly> sym_palindromic_split(const TPoly& p, int n);

/// Truncated series sum_{m=0}^N terms[m] z^m, the z^m term homogeneous of degree m.
struct ZSeries {
  std::vector<TPoly> terms;

  int truncation() const { return static_cast<int>(terms.size()) - 1; }
  const TPoly& operator[](int m) const { return terms.at(static_cast<std::size_t>(m)); }
  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.terms == b.terms; }
};

ZSeries series_one(int N);
/// H(x; t^k z) (or E) truncated at z^N.
ZSeries series_h(int N, int t_power = 0);
ZSeries series_e(int N, int t_power = 0);
ZSeries series_add(const ZSeries& a, const ZSeries& b);
ZSeries series_sub(const ZSeries& a, const ZSeries& b);
ZSeries series_mul(const ZSeries& a, const ZSeries& b);
ZSeries series_pow(const ZSeries& a, int k);
/// Multiply every coefficient by t^k.
ZSeries series_shift_t(const ZSeries& a, int k);
/// Requires z^0 coefficient 1.
ZSeries series_inverse(const ZSeries& a);
/// Divides every coefficient by (1 - t); throws IdentityError naming the z^m term otherwise.
ZSeries series_div_one_minus_t(const ZSeries& a);
ZSeries series_omega(const ZSeries& a);

/// Names accepted by named_series, in documentation order.
const std::vector<std::string>& series_names();
/// Closed-form generating functions; throws DomainError on an unknown name or bad r.
ZSeries named_series(const std::string& name, int r, int N);

/// (1/n!) sum_w h(Gamma_{n,r}^w, t) / (1-t)^{1+dim} prod (1 - t^{lambda_i(w)}) p_{lambda_i(w)}
TPoly stembridge_h(int n, int r);

/// sum_lambda z_lambda^{-1} k^{l(lambda)} prod (1 - t^{lambda_i}) p_lambda z^|lambda| against H(z)^k / H(tz)^k.
bool power_sum_identity_check(int k, int N);

enum class StapledonMethod { closed_form, per_class };
TPoly stapledon_phi(int n, int r, StapledonMethod method);
/// Points of {0,...,rk}^n fixed by permuting coordinates with w.
mpz_class lattice_fixed_count(const std::vector<int>& w, int r, int k);

}  // namespace binomeul
