#include "binomeul/colored_perms.hpp"
#include "binomeul/simplicial.hpp"
#include "binomeul/symfunc.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace binomeul;
using testing::P;

namespace {

mpq_class q(long a, long b = 1) {
  mpq_class x(a, b);
  x.canonicalize();
  return x;
}

SymF s(const Partition& lambda) { return schur(lambda); }

TPoly tp(std::initializer_list<SymF> c) { return TPoly(std::vector<SymF>(c)); }

SymF random_symf(int degree) {
  SymF f;
  for (const auto& mu : partitions(degree)) {
    const long c = std::uniform_int_distribution<long>(-4, 4)(testing::rng());
    f += SymF(mu, q(c, std::uniform_int_distribution<long>(1, 3)(testing::rng())));
  }
  return f;
}

}  // namespace

TEST_CASE("partitions and class sizes") {
  CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions(0) == std::vector<Partition>{{}});
  CHECK(z_lambda({2, 1, 1}) == 4);
  CHECK(z_lambda({1, 1, 1}) == 6);
  mpq_class total = 0;
  for (const auto& mu : partitions(6)) total += mpq_class(mpz_class(1), z_lambda(mu));
  total.canonicalize();
  CHECK(total == 1);
  CHECK(cycle_type({2, 3, 1, 5, 4}) == Partition{3, 2});
  CHECK(cycle_type(permutation_of_type({3, 2, 1})) == Partition{3, 2, 1});
  CHECK(partition_key({2, 1}) == "2,1");
}

TEST_CASE("generators and products") {
  CHECK(SymF::h(2) == SymF({2}, q(1, 2)) + SymF({1, 1}, q(1, 2)));
  CHECK(omega(SymF::h(2)) == SymF::e(2));
  CHECK(SymF::h(1) * SymF::h(1) == SymF::p({1, 1}));
  CHECK(SymF::h(0) == SymF::one());
  CHECK_THROWS_AS(SymF::h(1) + SymF::h(2), DomainError);
  CHECK_THROWS_AS(SymF({1, 2}, 1), DomainError);
  CHECK((SymF{} + SymF::h(3)) == SymF::h(3));
}

TEST_CASE("Schur expansions") {
  auto a = schur_coefficients(SymF::p({1, 1}));
  CHECK(a.integral);
  CHECK(a.coeffs == std::map<Partition, mpq_class>{{{2}, 1}, {{1, 1}, 1}});
  CHECK(schur_coefficients(SymF::h(2)).coeffs == std::map<Partition, mpq_class>{{{2}, 1}});
  CHECK(s({2}) == SymF::h(2));
  CHECK(s({1, 1}) == SymF::e(2));
  CHECK(character({2, 1}, {1, 1, 1}) == 2);
  CHECK(character({2, 1}, {3}) == -1);
  CHECK(character({3, 3}, {2, 2, 2}) == -3);
  CHECK(character({4, 2}, {3, 3}) == 0);
  CHECK_FALSE(schur_coefficients(SymF({2}, q(1, 2))).integral);
  CHECK_THROWS_AS(is_schur_positive(SymF({2}, q(1, 2))), IdentityError);
  CHECK_FALSE(is_schur_positive(s({2}) - s({1, 1})));
  // column orthogonality: sum_lambda chi^lambda(mu)^2 = z_mu
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions(n)) {
      mpz_class sum = 0;
      for (const auto& lambda : partitions(n)) sum += character(lambda, mu) * character(lambda, mu);
      CHECK(sum == z_lambda(mu));
    }
}

TEST_CASE("exponential specialization") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(ex_star(SymF::h(n)) == mpq_class(mpz_class(1), factorial(n)));
    CHECK(ex_star(SymF::e(n)) == mpq_class(mpz_class(1), factorial(n)));
  }
  CHECK(ex_star(s({2, 1})) == q(1, 3));
  CHECK(ex_star(SymF::p({2})) == 0);
}

TEST_CASE("series arithmetic") {
  const int N = 5;
  const auto H = series_h(N), Ht = series_h(N, 1);
  const auto q1 = series_div_one_minus_t(series_sub(Ht, series_shift_t(H, 1)));
  CHECK(q1[0] == tp({SymF::one()}));
  for (int m = 1; m <= N; ++m) {
    std::vector<mpz_class> c(static_cast<std::size_t>(m));
    for (int j = 1; j <= m - 1; ++j) c[static_cast<std::size_t>(j)] = -1;
    CHECK(q1[m] == tpoly_from(SymF::h(m), IntPolynomial(c)));
  }
  // H(z) E(-z) = 1
  ZSeries em = series_e(N);
  for (int m = 1; m <= N; m += 2) em.terms[m] = -em.terms[m];
  CHECK(series_mul(H, em) == series_one(N));
  CHECK(series_inverse(series_one(3)) == series_one(3));
  CHECK(series_mul(H, series_inverse(H)) == series_one(N));
  CHECK_THROWS_AS(series_inverse(series_shift_t(H, 1)), DomainError);
  CHECK_THROWS_AS(series_div_one_minus_t(H), IdentityError);
  CHECK_THROWS_WITH(series_div_one_minus_t(H), "coefficient of z^0 is not divisible by (1 - t)");
}

TEST_CASE("named series: small coefficients") {
  CHECK(named_series("phi", 1, 2)[2] == tpoly_from(SymF::h(2), P({1, 1})));
  CHECK(named_series("tphi", 1, 2)[2] ==
        tpoly_from(SymF::h(2), P({1, 1, 1})) + tpoly_from(SymF::h(1) * SymF::h(1), P({0, 1})));
  CHECK(dimension_shadow(named_series("psi", 1, 2)[2], 2) == P({0, 1}));
  CHECK(named_series("phi", 1, 0)[0] == tp({SymF::one()}));
  CHECK_THROWS_AS(named_series("nope", 1, 2), DomainError);
  CHECK_THROWS_AS(named_series("phi_nr_plus", 1, 2), DomainError);
}

TEST_CASE("Schur gamma expansions") {
  const auto t2 = named_series("tphi", 1, 2)[2];
  const auto g = sym_gamma(t2, 2);
  CHECK(g.gammas.size() == 2);
  CHECK(g.gammas[0] == s({2}));
  CHECK(g.gammas[1] == s({1, 1}));
  CHECK(g.reconstruct() == t2);
  CHECK(is_schur_gamma_positive(t2, 2));
  CHECK(sym_gamma(named_series("phi", 1, 2)[2], 1).gammas == std::vector<SymF>{s({2})});
  const auto bad = tp({s({2}), s({2}) + s({1, 1}), s({2})});
  CHECK(sym_gamma(bad, 2).gammas[1] == s({1, 1}) - s({2}));
  CHECK_FALSE(is_schur_gamma_positive(bad, 2));
  CHECK_THROWS_AS(sym_gamma(tp({s({2}), s({2})}), 2), DomainError);
}

TEST_CASE("palindromic split of t-polynomials") {
  auto [a, b] = sym_palindromic_split(TPoly{}, 3);
  CHECK(a.is_zero());
  CHECK(b.is_zero());
  for (int n = 1; n <= 4; ++n) {
    auto [pp, pm] = sym_palindromic_split(named_series("psi", 2, n)[n], n);
    CHECK(pp == named_series("psi_plus", 2, n)[n]);
    CHECK(pm == named_series("psi_minus", 2, n)[n]);
    auto [tp_, tm] = sym_palindromic_split(named_series("tphi_nr", 2, n)[n], n);
    CHECK(tp_ == named_series("tphi_plus", 2, n)[n]);
    CHECK(tm == named_series("tphi_minus", 2, n)[n]);
  }
}

TEST_CASE("dimension shadows of named series") {
  const int N = 5;
  for (int r = 1; r <= 3; ++r) {
    std::map<std::string, ZSeries> S;
    for (const auto& name : series_names()) {
      if (r < 2 && (name == "phi_nr_plus" || name == "phi_nr_minus")) continue;
      S[name] = named_series(name, r, N);
    }
    for (int n = 1; n <= N; ++n) {
      CAPTURE(n);
      CAPTURE(r);
      auto shadow = [&](const std::string& name) { return dimension_shadow(S.at(name)[n], n); };
      auto [dp, dm] = d_plus_minus(n, r);
      auto [ap, am] = a_plus_minus(n, r);
      auto [bp, bm] = binomial_eulerian_pm(n, r);
      CHECK(shadow("phi") == eulerian_poly(n));
      CHECK(shadow("tphi") == binomial_eulerian(n, 1));
      CHECK(shadow("psi") == derangement_poly(n, r));
      CHECK(shadow("psi_plus") == dp);
      CHECK(shadow("psi_minus") == dm);
      CHECK(shadow("c_gamma") == ap);
      CHECK(shadow("tphi_nr") == binomial_eulerian(n, r));
      CHECK(shadow("tphi_plus") == bp);
      CHECK(shadow("tphi_plus_r") == bp);
      CHECK(shadow("tphi_minus") == bm);
      CHECK(shadow("rees2") == binomial_eulerian(n, 2));
      CHECK(shadow("phi_nr") == eulerian_poly(n, r));
      if (r >= 2) {
        const auto split = palindromic_decomposition(eulerian_poly(n, r), n);
        CHECK(shadow("phi_nr_plus") == split.plus);
        CHECK(shadow("phi_nr_minus") == split.minus);
      }
    }
  }
}

TEST_CASE("series identities") {
  const int N = 5;
  for (int r = 1; r <= 3; ++r) {
    CAPTURE(r);
    const auto H = series_h(N), Ht = series_h(N, 1);
    const auto psi = named_series("psi", r, N), psip = named_series("psi_plus", r, N),
               psim = named_series("psi_minus", r, N);
    CHECK(series_add(psip, psim) == psi);
    const auto tn = named_series("tphi_nr", r, N), tpl = named_series("tphi_plus", r, N),
               tmi = named_series("tphi_minus", r, N);
    CHECK(series_add(tpl, tmi) == tn);
    const auto cg = named_series("c_gamma", r, N);
    CHECK(series_mul(H, psip) == cg);
    CHECK(series_mul(Ht, cg) == tpl);
    CHECK(named_series("tphi_plus_r", r, N) == tpl);
    if (r >= 2) {
      CHECK(series_add(named_series("phi_nr_plus", r, N), named_series("phi_nr_minus", r, N)) ==
            named_series("phi_nr", r, N));
    }
    for (int n = 1; n <= N; ++n) {
      CAPTURE(n);
      CHECK(palindromic_about(psip[n], n));
      CHECK(palindromic_about(psim[n], n + 1));
      CHECK(psim[n].coeff(0).is_zero());
      CHECK(palindromic_about(tpl[n], n));
      CHECK(palindromic_about(tmi[n], n + 1));
      CHECK(tmi[n].coeff(0).is_zero());
      CHECK(is_schur_gamma_positive(psip[n], n));
      CHECK(is_schur_gamma_positive(psim[n], n + 1));
      if (r >= 2) {
        const auto pp = named_series("phi_nr_plus", r, N), pm = named_series("phi_nr_minus", r, N);
        CHECK(palindromic_about(pp[n], n));
        CHECK(palindromic_about(pm[n], n + 1));
        CHECK(pm[n].coeff(0).is_zero());
      }
    }
  }
  const auto H = series_h(N), Ht = series_h(N, 1);
  CHECK(named_series("tphi", 1, N) == series_mul(named_series("phi", 1, N), Ht));
  CHECK(named_series("rees2", 2, N) == named_series("tphi_nr", 2, N));
  CHECK(named_series("phi_nr", 2, N) == series_mul(named_series("tphi", 1, N), named_series("psi_plus", 2, N)));
  const auto phi = named_series("phi", 1, N), tphi = named_series("tphi", 1, N);
  const auto t2p = named_series("tphi_plus", 2, N), t2m = named_series("tphi_minus", 2, N);
  const auto phi2 = named_series("phi_nr", 2, N);
  for (int n = 1; n <= N; ++n) {
    CHECK(is_schur_gamma_positive(phi[n], n - 1));
    CHECK(is_schur_gamma_positive(tphi[n], n));
    CHECK(is_schur_gamma_positive(t2p[n], n));
    CHECK(is_schur_gamma_positive(t2m[n], n + 1));
    CHECK(is_schur_gamma_positive(phi2[n], n));
  }
}

TEST_CASE("Stembridge formula against the closed form") {
  CHECK(stembridge_h(2, 1) == tpoly_from(SymF::h(2), P({1, 1})));
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      const auto st = stembridge_h(n, r);
      CHECK(st == named_series("c_gamma", r, n)[n]);
      CHECK(dimension_shadow(st, n) == h_polynomial(gamma_nr(n, r)));
    }
}

TEST_CASE("power-sum identity") {
  for (int k = 0; k <= 3; ++k) CHECK(power_sum_identity_check(k, 4));
}

TEST_CASE("equivariant Ehrhart series") {
  CHECK(stapledon_phi(1, 2, StapledonMethod::per_class) == tpoly_from(SymF::p({1}), P({1, 1})));
  CHECK(stapledon_phi(2, 1, StapledonMethod::per_class) == tpoly_from(SymF::h(2), P({1, 1})));
  CHECK(stapledon_phi(2, 1, StapledonMethod::per_class) == named_series("phi", 1, 2)[2]);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      CHECK(stapledon_phi(n, r, StapledonMethod::per_class) == stapledon_phi(n, r, StapledonMethod::closed_form));
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r)
      for (int k = 0; k <= 3; ++k) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
          mpz_class expect;
          mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(r * k + 1), cycle_type(w).size());
          CHECK(lattice_fixed_count(w, r, k) == expect);
        } while (std::next_permutation(w.begin(), w.end()));
      }
}

TEST_CASE("property: algebra laws on random symmetric functions") {
  for (int trial = 0; trial < 60; ++trial) {
    const int da = std::uniform_int_distribution<int>(0, 3)(testing::rng());
    const int db = std::uniform_int_distribution<int>(0, 3)(testing::rng());
    const auto a = random_symf(da), b = random_symf(db), c = random_symf(da), d = random_symf(2);
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK((a + c) * b == a * b + c * b);
    CHECK(omega(omega(a)) == a);
    CHECK(omega(a * b) == omega(a) * omega(b));
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions(n)) {
      SymF hl = SymF::one();
      for (int part : lambda) hl = hl * SymF::h(part);
      const auto sc = schur_coefficients(hl);
      CHECK(sc.integral);
      CHECK(is_schur_positive(hl));
      CHECK(omega(s(lambda)) == s([&] {
              Partition conj;
              for (int j = 1; j <= lambda.front(); ++j) {
                int count = 0;
                for (int part : lambda) count += part >= j ? 1 : 0;
                conj.push_back(count);
              }
              return conj;
            }()));
    }
}
