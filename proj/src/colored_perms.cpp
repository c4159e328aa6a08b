#include "binomeul/colored_perms.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace binomeul {

void ColoredPermutation::validate() const {
  if (r < 1) throw DomainError("number of colors must be positive");
  if (eps.size() != sigma.size()) throw DomainError("sigma and eps lengths differ");
  std::vector<int> s = sigma;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) throw DomainError("sigma is not a permutation of [n]");
  for (int c : eps)
    if (c < 0 || c >= r) throw DomainError("color out of range");
}

void SignedPermutation::validate() const {
  std::vector<int> a;
  for (int v : values) a.push_back(std::abs(v));
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i) + 1) throw DomainError("absolute values are not a permutation of [n]");
}

ColoredPermutation SignedPermutation::to_colored() const {
  ColoredPermutation w;
  w.r = 2;
  for (int v : values) {
    w.sigma.push_back(std::abs(v));
    w.eps.push_back(v < 0 ? 1 : 0);
  }
  return w;
}

SignedPermutation SignedPermutation::from_colored(const ColoredPermutation& w) {
  if (w.r != 2) throw DomainError("signed permutations need r = 2");
  SignedPermutation s;
  for (int k = 0; k < w.size(); ++k) s.values.push_back(w.eps[k] == 0 ? w.sigma[k] : -w.sigma[k]);
  return s;
}

void for_each_colored(int n, int r, const std::function<void(const ColoredPermutation&)>& visit) {
  if (n < 0 || r < 1) throw DomainError("enumeration needs n >= 0 and r >= 1");
  ColoredPermutation w;
  w.r = r;
  w.sigma.resize(n);
  std::iota(w.sigma.begin(), w.sigma.end(), 1);
  do {
    w.eps.assign(n, 0);
    while (true) {
      visit(w);
      int k = n - 1;
      while (k >= 0 && w.eps[k] == r - 1) w.eps[k--] = 0;
      if (k < 0) break;
      ++w.eps[k];
    }
  } while (std::next_permutation(w.sigma.begin(), w.sigma.end()));
}

std::vector<ColoredPermutation> enumerate(int n, int r) {
  std::vector<ColoredPermutation> out;
  for_each_colored(n, r, [&](const ColoredPermutation& w) { out.push_back(w); });
  return out;
}

std::uint64_t group_order(int n, int r) {
  std::uint64_t total = 1;
  for (int k = 1; k <= n; ++k) total *= static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(r);
  return total;
}

namespace {

bool is_descent(const ColoredPermutation& w, int k) {
  // k is 0-based; position n compares against the sentinel (n+1, color 0).
  const int n = w.size();
  const int s1 = w.sigma[k], e1 = w.eps[k];
  const int s2 = k + 1 < n ? w.sigma[k + 1] : n + 1;
  const int e2 = k + 1 < n ? w.eps[k + 1] : 0;
  return e1 > e2 || (e1 == e2 && s1 > s2);
}

}  // namespace

IndexSet des_set(const ColoredPermutation& w) {
  IndexSet out;
  for (int k = 0; k < w.size(); ++k)
    if (is_descent(w, k)) out.push_back(k + 1);
  return out;
}

IndexSet asc_set(const ColoredPermutation& w) {
  IndexSet out;
  for (int k = 0; k < w.size(); ++k)
    if (!is_descent(w, k)) out.push_back(k + 1);
  return out;
}

int des(const ColoredPermutation& w) {
  int d = 0;
  for (int k = 0; k < w.size(); ++k) d += is_descent(w, k) ? 1 : 0;
  return d;
}

int exc(const ColoredPermutation& w) {
  int e = 0;
  for (int k = 0; k < w.size(); ++k)
    if (w.sigma[k] > k + 1 || (w.sigma[k] == k + 1 && w.eps[k] != 0)) ++e;
  return e;
}

int exc_a(const ColoredPermutation& w) {
  int e = 0;
  for (int k = 0; k < w.size(); ++k)
    if (w.sigma[k] > k + 1 && w.eps[k] == 0) ++e;
  return e;
}

int fexc(const ColoredPermutation& w) {
  return w.r * exc_a(w) + std::accumulate(w.eps.begin(), w.eps.end(), 0);
}

bool is_derangement(const ColoredPermutation& w) {
  for (int k = 0; k < w.size(); ++k)
    if (w.sigma[k] == k + 1 && w.eps[k] == 0) return false;
  return true;
}

bool no_two_consecutive(const IndexSet& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] + 1 == s[i + 1]) return false;
  return true;
}

namespace {

IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<mpz_class> v;
  v.reserve(counts.size());
  for (auto c : counts) v.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(v));
}

std::vector<mpz_class> to_mpz(const std::vector<std::uint64_t>& counts) {
  std::vector<mpz_class> v;
  for (auto c : counts) v.emplace_back(static_cast<unsigned long>(c));
  return v;
}

/// Thread-safe memo for the pure enumerations that get reused across identities.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  Value get(const Key& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> table_;
};

void require_colors(int n, int r) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (r < 1) throw DomainError("r must be positive");
}

}  // namespace

IntPolynomial eulerian_poly(int n, int r, Statistic stat) {
  require_colors(n, r);
  static Memo<std::tuple<int, int, int>, IntPolynomial> memo;
  return memo.get({n, r, static_cast<int>(stat)}, [&] {
    std::vector<std::uint64_t> counts(n + 1);
    for_each_colored(n, r, [&](const ColoredPermutation& w) {
      ++counts[stat == Statistic::des ? des(w) : exc(w)];
    });
    return from_counts(counts);
  });
}

IntPolynomial eulerian_poly(int n) { return eulerian_poly(n, 1, Statistic::des); }

IntPolynomial derangement_poly(int n, int r, DerangementMethod method) {
  require_colors(n, r);
  if (method == DerangementMethod::direct) {
    std::vector<std::uint64_t> counts(n + 1);
    for_each_colored(n, r, [&](const ColoredPermutation& w) {
      if (is_derangement(w)) ++counts[exc(w)];
    });
    return from_counts(counts);
  }
  IntPolynomial d;
  for (int k = 0; k <= n; ++k) {
    IntPolynomial term = eulerian_poly(k, r).scaled(binomial(n, k));
    if ((n - k) % 2 == 0) d += term;
    else d -= term;
  }
  return d;
}

XiCounts xi_counts(int n, int r) {
  require_colors(n, r);
  if (n < 1) throw DomainError("xi counts need n >= 1");
  static Memo<std::pair<int, int>, XiCounts> memo;
  return memo.get({n, r}, [&] {
    std::vector<std::uint64_t> plus(n / 2 + 1), minus((n + 1) / 2 + 1);
    for_each_colored(n, r, [&](const ColoredPermutation& w) {
      const IndexSet a = asc_set(w);
      if (!no_two_consecutive(a)) return;
      const bool from_two = a.empty() || a.front() >= 2;
      if (!from_two) return;
      if (!a.empty() && a.back() == n) {
        ++plus.at(a.size());
      } else {
        // a is inside [2, n-1]
        ++minus.at(a.size() + 1);
      }
    });
    return XiCounts{to_mpz(plus), to_mpz(minus)};
  });
}

std::pair<IntPolynomial, IntPolynomial> d_plus_minus(int n, int r) {
  require_colors(n, r);
  if (n == 0) return {IntPolynomial{1}, IntPolynomial{}};
  const XiCounts xi = xi_counts(n, r);
  IntPolynomial plus = gamma_reconstruct(xi.plus, n);
  IntPolynomial minus = gamma_reconstruct(xi.minus, n + 1);
  return {std::move(plus), std::move(minus)};
}

std::pair<IntPolynomial, IntPolynomial> a_plus_minus(int n, int r) {
  require_colors(n, r);
  IntPolynomial plus, minus;
  for (int k = 0; k <= n; ++k) {
    auto [dp, dm] = d_plus_minus(k, r);
    plus += dp.scaled(binomial(n, k));
    minus += dm.scaled(binomial(n, k));
  }
  return {std::move(plus), std::move(minus)};
}

namespace {

IntPolynomial binomial_transform(int n, const std::function<IntPolynomial(int)>& a) {
  IntPolynomial out;
  for (int m = 0; m <= n; ++m) out += a(m).scaled(binomial(n, m)).shifted(static_cast<std::size_t>(n - m));
  return out;
}

}  // namespace

IntPolynomial binomial_eulerian(int n, int r) {
  require_colors(n, r);
  return binomial_transform(n, [r](int m) { return eulerian_poly(m, r); });
}

std::pair<IntPolynomial, IntPolynomial> binomial_eulerian_pm(int n, int r) {
  require_colors(n, r);
  return {binomial_transform(n, [r](int m) { return a_plus_minus(m, r).first; }),
          binomial_transform(n, [r](int m) { return a_plus_minus(m, r).second; })};
}

IntPolynomial binomial_eulerian_classical(int n) {
  IntPolynomial sum;
  for (int m = 1; m <= n; ++m) sum += eulerian_poly(m).scaled(binomial(n, m));
  return IntPolynomial{1} + sum.shifted(1);
}

GammaTilde gamma_tilde(int n, int r) {
  require_colors(n, r);
  if (n < 1) throw DomainError("gamma_tilde needs n >= 1");
  GammaTilde g;
  g.plus_formula.assign(n / 2 + 1, 0);
  g.minus_formula.assign((n + 1) / 2 + 1, 0);
  g.plus_formula[0] += 1;  // xi^+_{0,r,0} = 1 from d^+_0 = 1
  for (int k = 1; k <= n; ++k) {
    const XiCounts xi = xi_counts(k, r);
    const mpz_class c = binomial(n, k);
    for (std::size_t i = 0; i < xi.plus.size(); ++i) g.plus_formula.at(i) += c * xi.plus[i];
    for (std::size_t i = 0; i < xi.minus.size(); ++i) g.minus_formula.at(i) += c * xi.minus[i];
  }

  std::vector<std::uint64_t> plus(n / 2 + 1), minus((n + 1) / 2 + 1);
  auto bump = [](std::vector<std::uint64_t>& v, std::size_t i) {
    if (i >= v.size()) v.resize(i + 1);
    ++v[i];
  };
  const int big = n + 1;
  for_each_colored(big, r, [&](const ColoredPermutation& w) {
    // Prefix w(1) > ... > w(m) = 1, all of color zero.
    int m = 0;
    while (w.sigma[m] != 1) ++m;
    for (int j = 0; j <= m; ++j) {
      if (w.eps[j] != 0) return;
      if (j < m && w.sigma[j] < w.sigma[j + 1]) return;
    }
    const IndexSet a = asc_set(w);
    if (!no_two_consecutive(a)) return;
    if (a.back() == big) bump(plus, a.size() - 1);
    else bump(minus, a.size());
  });
  g.plus_direct = to_mpz(plus);
  g.minus_direct = to_mpz(minus);
  return g;
}

IntPolynomial a_plus_alt(int n, int r, APlusMethod method) {
  require_colors(n, r);
  switch (method) {
    case APlusMethod::positive_first_des: {
      std::vector<std::uint64_t> counts(n + 1);
      for_each_colored(n, r, [&](const ColoredPermutation& w) {
        if (n == 0 || w.eps[0] == 0) ++counts[des(w)];
      });
      return from_counts(counts);
    }
    case APlusMethod::flag_exc: {
      std::vector<std::uint64_t> counts(n + 1);
      for_each_colored(n, r, [&](const ColoredPermutation& w) {
        const int colors = std::accumulate(w.eps.begin(), w.eps.end(), 0);
        if (colors % r != 0) return;
        ++counts[fexc(w) / r];
      });
      return from_counts(counts);
    }
    case APlusMethod::carlitz: {
      IntPolynomial geometric(std::vector<mpz_class>(r, 1));
      IntPolynomial p = eulerian_poly(n);
      for (int k = 0; k < n; ++k) p *= geometric;
      return e_r_operator(p, r);
    }
  }
  throw DomainError("unknown method");
}

IndexSet des_b_set(const SignedPermutation& w) {
  IndexSet out;
  const int n = w.size();
  for (int i = 0; i < n; ++i) {
    const int a = w.values[i];
    const int b = i + 1 < n ? w.values[i + 1] : 0;
    if ((a > 0 && a > b) || (a < 0 && b < 0 && std::abs(a) > std::abs(b))) out.push_back(i + 1);
  }
  return out;
}

IndexSet asc_b_set(const SignedPermutation& w) {
  const IndexSet d = des_b_set(w);
  IndexSet out;
  for (int i = 1; i <= w.size(); ++i)
    if (!std::binary_search(d.begin(), d.end(), i)) out.push_back(i);
  return out;
}

void for_each_signed(int n, const std::function<void(const SignedPermutation&)>& visit) {
  SignedPermutation s;
  for_each_colored(n, 2, [&](const ColoredPermutation& w) {
    s.values.resize(n);
    for (int k = 0; k < n; ++k) s.values[k] = w.eps[k] == 0 ? w.sigma[k] : -w.sigma[k];
    visit(s);
  });
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> gamma_b(int n, bool use_ascents) {
  if (n < 1) throw DomainError("gamma_b needs n >= 1");
  std::vector<std::uint64_t> plus(n / 2 + 1), minus((n + 1) / 2 + 1);
  for_each_signed(n, [&](const SignedPermutation& w) {
    const IndexSet d = use_ascents ? asc_b_set(w) : des_b_set(w);
    if (!no_two_consecutive(d)) return;
    if (!d.empty() && d.back() == n) ++minus.at(d.size());
    else ++plus.at(d.size());
  });
  return {to_mpz(plus), to_mpz(minus)};
}

}  // namespace binomeul
