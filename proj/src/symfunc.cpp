#include "binomeul/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "binomeul/simplicial.hpp"

namespace binomeul {

namespace {

void validate_partition(const Partition& mu) {
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] <= 0) throw DomainError("partition parts must be positive");
    if (k > 0 && mu[k] > mu[k - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int weight(const Partition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  std::size_t k = 0;
  while (k < lambda.size()) {
    std::size_t j = k;
    while (j < lambda.size() && lambda[j] == lambda[k]) ++j;
    const unsigned long a = j - k;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(lambda[k]), a);
    z *= pw * factorial(static_cast<long>(a));
    k = j;
  }
  return z;
}

Partition cycle_type(const std::vector<int>& w) {
  std::vector<char> seen(w.size(), 0);
  Partition out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> permutation_of_type(const Partition& lambda) {
  std::vector<int> w;
  int start = 1;
  for (int len : lambda) {
    for (int k = 0; k < len; ++k) w.push_back(start + (k + 1) % len);
    start += len;
  }
  return w;
}

std::string partition_key(const Partition& lambda) {
  std::string s;
  for (std::size_t k = 0; k < lambda.size(); ++k) s += (k ? "," : "") + std::to_string(lambda[k]);
  return s;
}

SymF::SymF(const Partition& mu, mpq_class c) {
  validate_partition(mu);
  c.canonicalize();
  if (sgn(c) != 0) terms_.emplace(mu, std::move(c));
}

SymF SymF::h(int n) {
  if (n < 0) throw DomainError("h_n needs n >= 0");
  SymF f;
  for (const auto& mu : partitions(n)) f.terms_.emplace(mu, mpq_class(mpz_class(1), z_lambda(mu)));
  for (auto& [mu, c] : f.terms_) c.canonicalize();
  return f;
}

SymF SymF::e(int n) {
  if (n < 0) throw DomainError("e_n needs n >= 0");
  SymF f;
  for (const auto& mu : partitions(n)) {
    mpq_class c(mpz_class(1), z_lambda(mu));
    c.canonicalize();
    if ((n - static_cast<int>(mu.size())) % 2) c = -c;
    f.terms_.emplace(mu, c);
  }
  return f;
}

int SymF::degree() const { return terms_.empty() ? -1 : weight(terms_.begin()->first); }

mpq_class SymF::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

SymF& SymF::operator+=(const SymF& o) {
  if (!is_zero() && !o.is_zero() && degree() != o.degree())
    throw DomainError("adding symmetric functions of different degrees");
  for (const auto& [mu, c] : o.terms_) {
    auto& slot = terms_[mu];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(mu);
  }
  return *this;
}

SymF& SymF::operator-=(const SymF& o) {
  if (!is_zero() && !o.is_zero() && degree() != o.degree())
    throw DomainError("subtracting symmetric functions of different degrees");
  for (const auto& [mu, c] : o.terms_) {
    auto& slot = terms_[mu];
    slot -= c;
    if (sgn(slot) == 0) terms_.erase(mu);
  }
  return *this;
}

SymF operator*(const SymF& a, const SymF& b) {
  SymF out;
  for (const auto& [mu, c] : a.terms_) {
    for (const auto& [nu, d] : b.terms_) {
      Partition merged;
      merged.reserve(mu.size() + nu.size());
      std::merge(mu.begin(), mu.end(), nu.begin(), nu.end(), std::back_inserter(merged), std::greater<int>());
      auto& slot = out.terms_[merged];
      slot += c * d;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (sgn(it->second) == 0)
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

SymF operator*(SymF a, const mpq_class& c) {
  if (sgn(c) == 0) return {};
  for (auto& [mu, d] : a.terms_) d *= c;
  return a;
}

SymF omega(const SymF& f) {
  SymF out;
  for (const auto& [mu, c] : f.terms()) {
    const int sign = (weight(mu) - static_cast<int>(mu.size())) % 2 ? -1 : 1;
    out += SymF(mu, sign * c);
  }
  return out;
}

mpz_class character(const Partition& lambda, const Partition& mu) {
  static std::map<std::pair<Partition, Partition>, mpz_class> memo;
  if (weight(lambda) != weight(mu)) throw DomainError("character needs partitions of the same size");
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Remove rim hooks of length k = mu[0] by sliding beads on the abacus.
  const int k = mu.front();
  const Partition rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  mpz_class total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.rbegin(), moved.rend());
    Partition smaller;
    for (int j = 0; j < len; ++j)
      if (int part = moved[j] - (len - 1 - j); part > 0) smaller.push_back(part);
    const mpz_class chi = character(smaller, rest);
    total += (between % 2) ? -chi : chi;
  }
  memo.emplace(std::move(key), total);
  return total;
}

SchurExpansion schur_coefficients(const SymF& f) {
  SchurExpansion out;
  if (f.is_zero()) return out;
  for (const auto& lambda : partitions(f.degree())) {
    mpq_class c = 0;
    for (const auto& [mu, a] : f.terms()) c += a * mpq_class(character(lambda, mu));
    c.canonicalize();
    if (sgn(c) == 0) continue;
    if (c.get_den() != 1) out.integral = false;
    out.coeffs.emplace(lambda, c);
  }
  return out;
}

SymF schur(const Partition& lambda) {
  validate_partition(lambda);
  SymF out;
  for (const auto& mu : partitions(weight(lambda))) out += SymF(mu, mpq_class(character(lambda, mu), z_lambda(mu)));
  return out;
}

bool is_schur_positive(const SymF& f) {
  const auto s = schur_coefficients(f);
  if (!s.integral) throw IdentityError("non-integral Schur coefficient");
  return std::all_of(s.coeffs.begin(), s.coeffs.end(), [](const auto& kv) { return sgn(kv.second) >= 0; });
}

mpq_class ex_star(const SymF& f) {
  if (f.is_zero()) return 0;
  return f.coeff(Partition(static_cast<std::size_t>(f.degree()), 1));
}

RatPolynomial ex_star_tpoly(const TPoly& p) { return p.map_coeffs([](const SymF& f) { return ex_star(f); }); }

IntPolynomial dimension_shadow(const TPoly& p, int n) {
  const mpz_class nf = factorial(n);
  return p.map_coeffs([&](const SymF& f) {
    mpq_class v = ex_star(f) * mpq_class(nf);
    v.canonicalize();
    if (v.get_den() != 1) throw IdentityError("dimension shadow is not an integer");
    return mpz_class(v.get_num());
  });
}

TPoly omega(const TPoly& p) { return p.map_coeffs([](const SymF& f) { return omega(f); }); }

TPoly tpoly_from(const SymF& f, const IntPolynomial& c) {
  return c.map_coeffs([&](const mpz_class& k) { return f * mpq_class(k); });
}

SymGamma sym_gamma(const TPoly& p, int n) { return SymGamma{n, gamma_coefficients(p, n)}; }

bool is_schur_gamma_positive(const TPoly& p, int n) {
  const auto g = sym_gamma(p, n);
  return std::all_of(g.gammas.begin(), g.gammas.end(), [](const SymF& f) { return is_schur_positive(f); });
}

std::pair<TPoly, TPoly> sym_palindromic_split(const TPoly& p, int n) { return palindromic_split(p, n); }

namespace {

void require_truncation(int N) {
  if (N < 0) throw DomainError("series truncation must be >= 0");
}

int common_truncation(const ZSeries& a, const ZSeries& b) { return std::min(a.truncation(), b.truncation()); }

}  // namespace

ZSeries series_one(int N) {
  require_truncation(N);
  ZSeries s;
  s.terms.resize(static_cast<std::size_t>(N) + 1);
  s.terms[0] = TPoly{SymF::one()};
  return s;
}

ZSeries series_h(int N, int t_power) {
  require_truncation(N);
  ZSeries s;
  for (int m = 0; m <= N; ++m) s.terms.push_back(TPoly::monomial(SymF::h(m), static_cast<std::size_t>(t_power * m)));
  return s;
}

ZSeries series_e(int N, int t_power) {
  require_truncation(N);
  ZSeries s;
  for (int m = 0; m <= N; ++m) s.terms.push_back(TPoly::monomial(SymF::e(m), static_cast<std::size_t>(t_power * m)));
  return s;
}

ZSeries series_add(const ZSeries& a, const ZSeries& b) {
  ZSeries s;
  for (int m = 0; m <= common_truncation(a, b); ++m) s.terms.push_back(a[m] + b[m]);
  return s;
}

ZSeries series_sub(const ZSeries& a, const ZSeries& b) {
  ZSeries s;
  for (int m = 0; m <= common_truncation(a, b); ++m) s.terms.push_back(a[m] - b[m]);
  return s;
}

ZSeries series_mul(const ZSeries& a, const ZSeries& b) {
  ZSeries s;
  const int N = common_truncation(a, b);
  for (int m = 0; m <= N; ++m) {
    TPoly c;
    for (int i = 0; i <= m; ++i) c += a[i] * b[m - i];
    s.terms.push_back(std::move(c));
  }
  return s;
}

ZSeries series_pow(const ZSeries& a, int k) {
  if (k < 0) throw DomainError("series power must be >= 0");
  ZSeries out = series_one(a.truncation());
  for (int j = 0; j < k; ++j) out = series_mul(out, a);
  return out;
}

ZSeries series_shift_t(const ZSeries& a, int k) {
  ZSeries s;
  for (const auto& c : a.terms) s.terms.push_back(c.shifted(static_cast<std::size_t>(k)));
  return s;
}

ZSeries series_inverse(const ZSeries& a) {
  if (a.terms.empty() || !(a[0] == TPoly{SymF::one()}))
    throw DomainError("series inverse needs constant term 1");
  ZSeries b;
  b.terms.push_back(a[0]);
  for (int m = 1; m <= a.truncation(); ++m) {
    TPoly c;
    for (int i = 1; i <= m; ++i) c -= a[i] * b[m - i];
    b.terms.push_back(std::move(c));
  }
  return b;
}

ZSeries series_div_one_minus_t(const ZSeries& a) {
  ZSeries s;
  for (int m = 0; m <= a.truncation(); ++m) {
    try {
      s.terms.push_back(divide_by_one_minus_t(a[m]));
    } catch (const IdentityError&) {
      throw IdentityError("coefficient of z^" + std::to_string(m) + " is not divisible by (1 - t)");
    }
  }
  return s;
}

ZSeries series_omega(const ZSeries& a) {
  ZSeries s;
  for (const auto& c : a.terms) s.terms.push_back(omega(c));
  return s;
}

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names{"phi",         "tphi",       "psi",     "psi_plus",    "psi_minus",
                                              "c_gamma",     "tphi_nr",    "tphi_plus", "tphi_plus_r", "tphi_minus",
                                              "rees2",       "phi_nr",     "phi_nr_plus", "phi_nr_minus"};
  return names;
}

namespace {

ZSeries one_minus_t_times(const ZSeries& a) { return series_sub(a, series_shift_t(a, 1)); }

ZSeries t_times(const ZSeries& a) { return series_shift_t(a, 1); }

/// num / den, both divided by (1 - t) first.
ZSeries fraction(const ZSeries& num, const ZSeries& den) {
  return series_mul(series_div_one_minus_t(num), series_inverse(series_div_one_minus_t(den)));
}

}  // namespace

ZSeries named_series(const std::string& name, int r, int N) {
  require_truncation(N);
  if (std::find(series_names().begin(), series_names().end(), name) == series_names().end())
    throw DomainError("unknown series name: " + name);
  if (r < 1) throw DomainError("series needs r >= 1");
  const ZSeries H = series_h(N, 0), Ht = series_h(N, 1);
  auto Hp = [&](int k) { return series_pow(H, k); };
  auto Htp = [&](int k) { return series_pow(Ht, k); };
  // H(tz)^k - t H(z)^k
  auto D = [&](int k) { return series_sub(Htp(k), t_times(Hp(k))); };

  if (name == "phi") return fraction(one_minus_t_times(H), D(1));
  if (name == "tphi") return fraction(one_minus_t_times(series_mul(H, Ht)), D(1));
  if (name == "rees2") {
    const ZSeries E = series_e(N, 0), Et = series_e(N, 1);
    const ZSeries Et2 = series_pow(Et, 2);
    const ZSeries num = one_minus_t_times(series_mul(E, Et2));
    const ZSeries den = series_sub(Et2, t_times(series_pow(E, 2)));
    return series_omega(fraction(num, den));
  }
  const ZSeries den = D(r);
  if (name == "psi") return fraction(one_minus_t_times(Htp(r - 1)), den);
  if (name == "psi_plus") return fraction(series_sub(Htp(r - 1), t_times(Hp(r - 1))), den);
  if (name == "psi_minus") return fraction(t_times(series_sub(Hp(r - 1), Htp(r - 1))), den);
  if (name == "c_gamma") return fraction(series_sub(series_mul(H, Htp(r - 1)), t_times(Hp(r))), den);
  if (name == "tphi_nr") return fraction(one_minus_t_times(series_mul(H, Htp(r))), den);
  if (name == "tphi_plus" || name == "tphi_plus_r")
    return fraction(series_sub(series_mul(H, Htp(r)), t_times(series_mul(Hp(r), Ht))), den);
  if (name == "tphi_minus")
    return fraction(t_times(series_mul(series_mul(H, Ht), series_sub(Hp(r - 1), Htp(r - 1)))), den);
  if (name == "phi_nr") return fraction(one_minus_t_times(series_mul(H, Htp(r - 1))), den);
  if (r < 2) throw DomainError(name + " needs r >= 2");
  const ZSeries HHt = series_mul(H, Ht);
  if (name == "phi_nr_plus") return fraction(series_mul(HHt, series_sub(Htp(r - 2), t_times(Hp(r - 2)))), den);
  return fraction(t_times(series_mul(HHt, series_sub(Hp(r - 2), Htp(r - 2)))), den);  // phi_nr_minus
}

namespace {

/// prod_i (1 - t^{lambda_i})
IntPolynomial one_minus_t_powers(const Partition& lambda) {
  IntPolynomial out{mpz_class(1)};
  for (int part : lambda) {
    std::vector<mpz_class> f(static_cast<std::size_t>(part) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(part)] = -1;
    out *= IntPolynomial(std::move(f));
  }
  return out;
}

IntPolynomial divide_by_one_minus_t_pow(IntPolynomial p, int k) {
  for (int j = 0; j < k; ++j) p = divide_by_one_minus_t(p);
  return p;
}

}  // namespace

TPoly stembridge_h(int n, int r) {
  if (n < 0 || r < 1) throw DomainError("stembridge_h needs n >= 0 and r >= 1");
  if (n == 0) return TPoly{SymF::one()};
  const SimplicialComplex complex = gamma_nr(n, r);
  TPoly out;
  for (const auto& lambda : partitions(n)) {
    const auto fixed = fixed_subcomplex(complex, act(permutation_of_type(lambda), complex));
    const IntPolynomial h = h_polynomial(fixed);
    IntPolynomial value;
    try {
      value = divide_by_one_minus_t_pow(h * one_minus_t_powers(lambda), 1 + fixed.dimension());
    } catch (const IdentityError&) {
      throw IdentityError("fixed-subcomplex term for cycle type " + partition_key(lambda) + " is not a polynomial");
    }
    // class size n!/z_lambda, averaged over n!
    out += tpoly_from(SymF(lambda, mpq_class(mpz_class(1), z_lambda(lambda))), value);
  }
  return out;
}

bool power_sum_identity_check(int k, int N) {
  if (k < 0) throw DomainError("power-sum identity needs k >= 0");
  const ZSeries rhs = series_mul(series_pow(series_h(N, 0), k), series_inverse(series_pow(series_h(N, 1), k)));
  for (int m = 0; m <= N; ++m) {
    TPoly lhs;
    for (const auto& lambda : partitions(m)) {
      mpz_class kl;
      mpz_ui_pow_ui(kl.get_mpz_t(), static_cast<unsigned long>(k), lambda.size());
      lhs += tpoly_from(SymF(lambda, mpq_class(kl, z_lambda(lambda))), one_minus_t_powers(lambda));
    }
    if (!(lhs == rhs[m])) return false;
  }
  return true;
}

namespace {

mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

/// (1-t)^{l+1} sum_k (rk+1)^l t^k, a polynomial of degree <= l.
IntPolynomial ehrhart_numerator(int r, int l) {
  const int terms = l + 6;
  std::vector<mpz_class> s;
  for (int k = 0; k < terms; ++k) s.push_back(ipow(mpz_class(r * k + 1), static_cast<unsigned long>(l)));
  IntPolynomial series(s);
  IntPolynomial one_minus_t{mpz_class(1), mpz_class(-1)};
  for (int j = 0; j <= l; ++j) series *= one_minus_t;
  std::vector<mpz_class> num;
  for (int k = 0; k <= l; ++k) num.push_back(series.coeff(k));
  // Coefficients l+1 .. terms-1 of the product must vanish.
  for (int k = l + 1; k < terms; ++k)
    if (series.coeff(k) != 0) throw IdentityError("Ehrhart series numerator has degree above the dimension");
  return IntPolynomial(std::move(num));
}

}  // namespace

TPoly stapledon_phi(int n, int r, StapledonMethod method) {
  if (n < 1 || r < 1) throw DomainError("stapledon_phi needs n >= 1 and r >= 1");
  if (method == StapledonMethod::closed_form) return named_series("phi_nr", r, n)[n];
  TPoly out;
  for (const auto& lambda : partitions(n)) {
    const int l = static_cast<int>(lambda.size());
    // (1-t) prod(1-t^{lambda_i}) sum_k (rk+1)^l t^k = N(t) prod(1-t^{lambda_i}) / (1-t)^l
    IntPolynomial value;
    try {
      value = divide_by_one_minus_t_pow(ehrhart_numerator(r, l) * one_minus_t_powers(lambda), l);
    } catch (const IdentityError&) {
      throw IdentityError("equivariant Ehrhart term for cycle type " + partition_key(lambda) + " is not a polynomial");
    }
    out += tpoly_from(SymF(lambda, mpq_class(mpz_class(1), z_lambda(lambda))), value);
  }
  return out;
}

mpz_class lattice_fixed_count(const std::vector<int>& w, int r, int k) {
  const int n = static_cast<int>(w.size());
  const int side = r * k + 1;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  mpz_class count = 0;
  while (true) {
    bool fixed = true;
    for (int i = 0; i < n && fixed; ++i) fixed = x[static_cast<std::size_t>(w[i] - 1)] == x[static_cast<std::size_t>(i)];
    if (fixed) ++count;
    int pos = n - 1;
    while (pos >= 0 && x[pos] == side - 1) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
  return count;
}

}  // namespace binomeul
