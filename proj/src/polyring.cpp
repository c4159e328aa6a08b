#include "binomeul/polyring.hpp"

#include <algorithm>

namespace binomeul {

mpq_class center(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("center undefined for zero polynomial");
  mpq_class c(p.low_degree() + p.degree(), 2);
  c.canonicalize();
  return c;
}

bool is_palindromic(const IntPolynomial& p, int n) { return palindromic_about(p, n); }

GammaExpansion gamma_expansion(const IntPolynomial& p, int n) {
  return GammaExpansion{n, gamma_coefficients(p, n)};
}

bool is_gamma_positive(const GammaExpansion& g) {
  return std::all_of(g.gammas.begin(), g.gammas.end(), [](const mpz_class& c) { return sgn(c) >= 0; });
}

PalindromicPair palindromic_decomposition(const IntPolynomial& p, int n) {
  auto [plus, minus] = palindromic_split(p, n);
  return PalindromicPair{std::move(plus), std::move(minus), n};
}

namespace {

void require_nonnegative(const IntPolynomial& p) {
  for (const auto& c : p.coeffs())
    if (sgn(c) < 0) throw DomainError("negative coefficient");
}

}  // namespace

bool is_unimodal(const IntPolynomial& p) {
  require_nonnegative(p);
  const auto& a = p.coeffs();
  std::size_t k = 0;
  while (k + 1 < a.size() && a[k] <= a[k + 1]) ++k;
  while (k + 1 < a.size() && a[k] >= a[k + 1]) ++k;
  return k + 1 >= a.size();
}

bool is_alternatingly_increasing(const IntPolynomial& p, int n) {
  require_nonnegative(p);
  if (p.degree() > n) return false;
  // Interleave indices 0, n, 1, n-1, 2, ...
  std::vector<int> order;
  for (int lo = 0, hi = n; lo <= hi; ++lo, --hi) {
    order.push_back(lo);
    if (hi != lo) order.push_back(hi);
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (p.coeff(order[i]) > p.coeff(order[i + 1])) return false;
  return true;
}

IntPolynomial e_r_operator(const IntPolynomial& p, int r) {
  if (r <= 0) throw DomainError("E_r needs r >= 1");
  std::vector<mpz_class> v;
  for (int k = 0; k <= p.degree(); k += r) v.push_back(p.coeff(k));
  return IntPolynomial(std::move(v));
}

std::vector<mpz_class> geometric_expand(const IntPolynomial& numer, int m, int count) {
  if (count < 0) throw DomainError("geometric_expand needs N >= 0");
  if (m < 0) throw DomainError("geometric_expand needs m >= 0");
  std::vector<mpz_class> out(static_cast<std::size_t>(count) + 1);
  for (int k = 0; k <= count; ++k) out[k] = numer.coeff(k);
  // Each pass divides by (1 - t): prefix sums.
  for (int pass = 0; pass < m; ++pass)
    for (std::size_t k = 1; k < out.size(); ++k) out[k] += out[k - 1];
  return out;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  return p.map_coeffs([](const mpz_class& c) { return mpq_class(c); });
}

RatPolynomial derivative(const RatPolynomial& p) {
  std::vector<mpq_class> v;
  for (int k = 1; k <= p.degree(); ++k) v.push_back(p.coeff(k) * k);
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  const mpq_class lead = b.coeff(db);
  std::vector<mpq_class> quo(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    mpq_class q = rem[k] / lead;
    if (sgn(q) == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_distinct_real_roots(const RatPolynomial& p) {
  if (p.is_zero()) throw DomainError("root count of zero polynomial");
  std::vector<RatPolynomial> chain{p, derivative(p)};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    const int s = sgn(q.coeff(q.degree()));
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("real-rootedness undefined for zero polynomial");
  if (p.degree() == 0) return true;
  const RatPolynomial q = to_rational(p);
  // The last nonzero Sturm remainder is gcd(p, p'); its degree counts repeated roots.
  RatPolynomial a = q, b = derivative(q);
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const int distinct = q.degree() - a.degree();
  return count_distinct_real_roots(q) == distinct;
}

}  // namespace binomeul
