#include "binomeul/verify.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "binomeul/colored_perms.hpp"

namespace binomeul {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += (!c.pass && !c.informational) ? 1 : 0;
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"enumerative", "geometric", "equivariant", "all"};
  return names;
}

namespace {

std::string show(const IntPolynomial& p) { return "(" + csv_coeffs(p) + ")"; }

std::string show(const std::vector<mpz_class>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return "(" + s + ")";
}

std::string nr(int n, int r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

template <class T>
std::string differ(const T& got, const T& want) {
  if (got == want) return {};
  return "got " + show(got) + " want " + show(want);
}

std::string differ_t(const TPoly& got, const TPoly& want) {
  if (got == want) return {};
  return "got " + to_json(got).dump() + " want " + to_json(want).dump();
}

std::string require(bool ok, const std::string& why) { return ok ? std::string{} : why; }

/// Collects checks; a check returns an empty witness on success.
class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  void check(const std::string& id, const std::string& params, const std::function<std::string()>& body) {
    CheckResult c{id, params, true, {}, false};
    try {
      c.witness = body();
      c.pass = c.witness.empty();
    } catch (const std::exception& e) {
      c.pass = false;
      c.witness = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void info(const std::string& id, const std::string& params, const std::function<std::string()>& body) {
    check(id, params, body);
    report_.checks.back().informational = true;
  }

 private:
  VerificationReport& report_;
};

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1U) s.push_back(j + 1);
    out.push_back(std::move(s));
  }
  return out;
}

mpz_class ipow(long b, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
  return out;
}

void enumerative(Runner& run, const VerifyBounds& b) {
  for (int n = 0; n <= b.max_n; ++n) {
    for (int r = 1; r <= b.max_r; ++r) {
      const std::string p = nr(n, r);
      run.check("des-exc-equidistribution", p, [&] {
        return differ(eulerian_poly(n, r, Statistic::des), eulerian_poly(n, r, Statistic::exc));
      });
      run.check("derangement-methods", p, [&] {
        return differ(derangement_poly(n, r, DerangementMethod::direct),
                      derangement_poly(n, r, DerangementMethod::inclusion_exclusion));
      });
      run.check("eulerian-from-derangements", p, [&] {
        IntPolynomial sum;
        for (int k = 0; k <= n; ++k) sum += derangement_poly(k, r).scaled(binomial(n, k));
        return differ(sum, eulerian_poly(n, r));
      });
      if (r >= 2 && n >= 1) {
        run.check("d-plus-minus-sum", p, [&] {
          auto [dp, dm] = d_plus_minus(n, r);
          return differ(dp + dm, derangement_poly(n, r));
        });
      }
      if (r >= 2) {
        run.check("a-plus-minus-sum", p, [&] {
          auto [ap, am] = a_plus_minus(n, r);
          return differ(ap + am, eulerian_poly(n, r));
        });
      }
      run.check("binomial-plus-minus-sum", p, [&] {
        auto [bp, bm] = binomial_eulerian_pm(n, r);
        return differ(bp + bm, binomial_eulerian(n, r));
      });
      run.check("binomial-plus-gamma-positive", p, [&] {
        const auto bp = binomial_eulerian_pm(n, r).first;
        const auto g = gamma_expansion(bp, n);
        return require(is_gamma_positive(g), "gammas " + show(g.gammas));
      });
      run.check("binomial-minus-gamma-positive", p, [&] {
        const auto bm = binomial_eulerian_pm(n, r).second;
        if (bm.coeff(0) != 0) return std::string("nonzero constant term");
        const auto g = gamma_expansion(bm, n + 1);
        return require(is_gamma_positive(g), "gammas " + show(g.gammas));
      });
      run.check("binomial-alternatingly-increasing", p, [&] {
        const auto a = binomial_eulerian(n, r);
        return require(is_alternatingly_increasing(a, n) && is_unimodal(a), show(a));
      });
      if (n >= 1) {
        run.check("a-plus-three-ways", p, [&] {
          const auto ap = a_plus_minus(n, r).first;
          for (auto m : {APlusMethod::positive_first_des, APlusMethod::flag_exc, APlusMethod::carlitz}) {
            auto w = differ(a_plus_alt(n, r, m), ap);
            if (!w.empty()) return "method " + std::to_string(static_cast<int>(m)) + ": " + w;
          }
          return std::string{};
        });
        run.check("a-plus-lattice-expansion", p, [&] {
          const auto c = geometric_expand(a_plus_minus(n, r).first, n, 8);
          for (int k = 0; k <= 8; ++k) {
            const mpz_class want = ipow(r * k + 1, n) - ipow(r * k, n);
            if (c[k] != want) return "k=" + std::to_string(k) + " got " + c[k].get_str() + " want " + want.get_str();
          }
          return std::string{};
        });
        run.check("real-rooted", p, [&] {
          auto [bp, bm] = binomial_eulerian_pm(n, r);
          if (!is_real_rooted(eulerian_poly(n, r))) return std::string("A_{n,r}");
          if (!is_real_rooted(bp)) return std::string("binomial plus part");
          if (!bm.is_zero() && !is_real_rooted(bm)) return std::string("binomial minus part");
          return std::string{};
        });
      }
      if (r >= 2 && n >= 1) {
        run.check("gamma-formula-vs-direct", p, [&] {
          const auto g = gamma_tilde(n, r);
          auto w = differ(g.plus_formula, g.plus_direct);
          if (w.empty()) w = differ(g.minus_formula, g.minus_direct);
          if (w.empty()) w = differ(gamma_expansion(binomial_eulerian_pm(n, r).first, n).gammas, g.plus_formula);
          if (w.empty()) w = differ(gamma_expansion(binomial_eulerian_pm(n, r).second, n + 1).gammas, g.minus_formula);
          return w;
        });
      }
    }
    run.check("binomial-r1-classical", "n=" + std::to_string(n),
              [&] { return differ(binomial_eulerian(n, 1), binomial_eulerian_classical(n)); });
    run.check("worpitzky", "n=" + std::to_string(n), [&] {
      const auto c = geometric_expand(eulerian_poly(n), n + 1, 8);
      for (int k = 0; k <= 8; ++k)
        if (c[k] != ipow(k + 1, n)) return "k=" + std::to_string(k);
      return std::string{};
    });
    if (n >= 1) {
      run.check("signed-des-b", "n=" + std::to_string(n), [&] {
        const auto g = gamma_tilde(n, 2);
        auto [pd, md] = gamma_b(n, false);
        auto [pa, ma] = gamma_b(n, true);
        auto w = differ(pd, g.plus_formula);
        if (w.empty()) w = differ(md, g.minus_formula);
        if (w.empty()) w = differ(pa, pd);
        if (w.empty()) w = differ(ma, md);
        return w;
      });
      run.check("r1-xi-minus-vanishes", "n=" + std::to_string(n), [&] {
        auto [dp, dm] = d_plus_minus(n, 1);
        if (!dm.is_zero()) return "d^- = " + show(dm);
        return differ(dp, derangement_poly(n, 1));
      });
    }
  }

  // Randomized polyring laws, fixed seed.
  std::mt19937_64 rng(7);
  auto rand_poly = [&](int max_deg, long lo, long hi) {
    std::vector<mpz_class> v(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max_deg)(rng)) + 1);
    for (auto& c : v) c = std::uniform_int_distribution<long>(lo, hi)(rng);
    return IntPolynomial(std::move(v));
  };
  run.check("gamma-round-trip", "100 random", [&] {
    for (int t = 0; t < 100; ++t) {
      const int n = std::uniform_int_distribution<int>(0, 8)(rng);
      std::vector<mpz_class> g;
      for (int i = 0; 2 * i <= n; ++i) g.push_back(rand_poly(0, -9, 9).coeff(0));
      GammaExpansion e{n, g};
      if (!(gamma_expansion(e.reconstruct(), n) == e)) return "n=" + std::to_string(n) + " gammas " + show(g);
    }
    return std::string{};
  });
  run.check("gamma-positive-unimodal", "100 random", [&] {
    for (int t = 0; t < 100; ++t) {
      const int n = std::uniform_int_distribution<int>(0, 8)(rng);
      std::vector<mpz_class> g;
      for (int i = 0; 2 * i <= n; ++i) g.push_back(rand_poly(0, 0, 20).coeff(0));
      if (!is_unimodal(gamma_reconstruct(g, n))) return show(g);
    }
    return std::string{};
  });
  run.check("right-gamma-alternating", "100 random", [&] {
    for (int t = 0; t < 100; ++t) {
      const int n = std::uniform_int_distribution<int>(1, 8)(rng);
      std::vector<mpz_class> gp, gm;
      for (int i = 0; 2 * i <= n; ++i) gp.push_back(rand_poly(0, 0, 20).coeff(0));
      for (int i = 0; 2 * i <= n - 1; ++i) gm.push_back(rand_poly(0, 0, 20).coeff(0));
      const auto p = gamma_reconstruct(gp, n) + gamma_reconstruct(gm, n - 1).shifted(1);
      if (!is_alternatingly_increasing(p, n)) return show(p);
    }
    return std::string{};
  });
  run.check("e-r-linear", "100 random", [&] {
    for (int t = 0; t < 100; ++t) {
      const int r = std::uniform_int_distribution<int>(1, 4)(rng);
      const auto a = rand_poly(10, -9, 9), c = rand_poly(10, -9, 9);
      if (!(e_r_operator(a + c, r) == e_r_operator(a, r) + e_r_operator(c, r))) return show(a) + " " + show(c);
    }
    return std::string{};
  });
}

void geometric(Runner& run, const VerifyBounds& b) {
  for (int n = 1; n <= b.max_n; ++n) {
    run.check("h-barycentric-eulerian", "n=" + std::to_string(n),
              [&] { return differ(h_polynomial(barycentric_subdivision(n)), eulerian_poly(n)); });
    for (int r = 1; r <= b.max_r; ++r) {
      const std::string p = nr(n, r);
      const auto g = gamma_nr(n, r);
      const auto d = delta_of(g);
      run.check("facet-count", p, [&] {
        const mpz_class want = factorial(n) * ipow(r, static_cast<unsigned long>(n - 1));
        return require(mpz_class(static_cast<unsigned long>(g.facets().size())) == want,
                       "facets " + std::to_string(g.facets().size()));
      });
      run.check("h-gamma-nr-a-plus", p, [&] {
        const auto h = h_polynomial(g);
        auto w = differ(h, a_plus_alt(n, r, APlusMethod::carlitz));
        if (w.empty()) w = differ(h, a_plus_alt(n, r, APlusMethod::positive_first_des));
        if (w.empty()) w = differ(h, a_plus_minus(n, r).first);
        return w;
      });
      run.check("local-h-d-plus", p, [&] { return differ(local_h(g), d_plus_minus(n, r).first); });
      run.check("local-h-palindromic-nonnegative", p, [&] {
        const auto l = local_h(g);
        bool ok = is_palindromic(l, n);
        for (const auto& c : l.coeffs()) ok = ok && c >= 0;
        return require(ok, show(l));
      });
      run.check("h-delta-binomial-plus", p, [&] { return differ(h_polynomial(d), binomial_eulerian_pm(n, r).first); });
      run.check("h-delta-restriction-sum", p, [&] {
        IntPolynomial sum;
        for (const auto& f : subsets(n)) sum += h_polynomial(restriction(g, f)).shifted(static_cast<std::size_t>(n) - f.size());
        return differ(sum, h_polynomial(d));
      });
      run.check("h-local-h-inclusion-exclusion", p, [&] {
        IntPolynomial sum;
        for (const auto& f : subsets(n)) sum += local_h(restriction(g, f));
        return differ(sum, h_polynomial(g));
      });
      run.check("restriction-structural", p, [&] {
        for (const auto& f : subsets(n))
          if (!(restriction(g, f) == relabel(gamma_nr(static_cast<int>(f.size()), r), f)))
            return "F=" + show(std::vector<mpz_class>(f.begin(), f.end()));
        return std::string{};
      });
      run.check("flag", p, [&] {
        if (!is_flag(g)) return std::string("Gamma_{n,r} not flag");
        if (!is_flag(d)) return std::string("Delta(Gamma_{n,r}) not flag");
        return std::string{};
      });
      run.check("sphere", p, [&] {
        if (!is_pseudomanifold(d)) return std::string("a ridge is not in exactly two facets");
        const mpz_class chi = reduced_euler_characteristic(d);
        const int want = (n - 1) % 2 ? -1 : 1;
        return require(chi == want, "reduced Euler characteristic " + chi.get_str());
      });
      run.check("action-proper-fixed-subcomplex", p, [&] {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
          const auto fixed = fixed_subcomplex(g, act(w, g));
          const int c = static_cast<int>(cycle_type(w).size());
          if (f_vector(fixed) != f_vector(gamma_nr(c, r))) {
            std::string s;
            for (int x : w) s += std::to_string(x);
            return "w=" + s;
          }
        } while (std::next_permutation(w.begin(), w.end()));
        return std::string{};
      });
      if (n >= 2) {
        run.check("delta-action-not-proper", p, [&] {
          std::vector<int> w(static_cast<std::size_t>(n));
          std::iota(w.begin(), w.end(), 1);
          std::swap(w[0], w[1]);
          const auto a = act(w, d);
          try {
            fixed_subcomplex(d, a);
          } catch (const DomainError&) {
            return std::string{};
          }
          return std::string("fixed_subcomplex accepted a non-proper action");
        });
      }
    }
  }
}

void equivariant(Runner& run, const VerifyBounds& b) {
  const int N = b.N;
  const ZSeries H = series_h(N), Ht = series_h(N, 1);
  const ZSeries phi = named_series("phi", 1, N), tphi = named_series("tphi", 1, N);
  for (int n = 1; n <= N; ++n) {
    const std::string p = "n=" + std::to_string(n);
    run.check("phi-schur-gamma-positive", p, [&] { return require(is_schur_gamma_positive(phi[n], n - 1), "phi"); });
    run.check("tphi-schur-gamma-positive", p, [&] { return require(is_schur_gamma_positive(tphi[n], n), "tphi"); });
    run.check("shadow-phi", p, [&] { return differ(dimension_shadow(phi[n], n), eulerian_poly(n)); });
    run.check("shadow-tphi", p, [&] { return differ(dimension_shadow(tphi[n], n), binomial_eulerian(n, 1)); });
  }
  run.check("tphi-factorization", "r=1", [&] { return require(tphi == series_mul(phi, Ht), "tphi != phi H(tz)"); });
  run.check("rees2-equals-tphi-nr", "r=2", [&] {
    return require(named_series("rees2", 2, N) == named_series("tphi_nr", 2, N), "series differ");
  });
  run.check("phi-nr2-product", "r=2", [&] {
    return require(named_series("phi_nr", 2, N) == series_mul(tphi, named_series("psi_plus", 2, N)), "series differ");
  });

  for (int r = 1; r <= b.max_r; ++r) {
    const std::string pr = "r=" + std::to_string(r);
    std::map<std::string, ZSeries> S;
    for (const auto& name : series_names()) {
      if (r < 2 && (name == "phi_nr_plus" || name == "phi_nr_minus")) continue;
      S.emplace(name, named_series(name, r, N));
    }
    run.check("additivity-psi", pr, [&] { return require(series_add(S["psi_plus"], S["psi_minus"]) == S["psi"], "psi"); });
    run.check("additivity-tphi", pr,
              [&] { return require(series_add(S["tphi_plus"], S["tphi_minus"]) == S["tphi_nr"], "tphi"); });
    if (r >= 2)
      run.check("additivity-phi", pr,
                [&] { return require(series_add(S["phi_nr_plus"], S["phi_nr_minus"]) == S["phi_nr"], "phi"); });
    run.check("c-gamma-factorization", pr, [&] { return require(series_mul(H, S["psi_plus"]) == S["c_gamma"], "H psi+"); });
    run.check("tphi-plus-factorization", pr,
              [&] { return require(series_mul(Ht, S["c_gamma"]) == S["tphi_plus"], "H(tz) c_gamma"); });
    run.check("power-sum-identity", "k=" + std::to_string(r), [&] { return require(power_sum_identity_check(r, N), "mismatch"); });

    for (int n = 1; n <= N; ++n) {
      const std::string p = nr(n, r);
      run.check("dimension-shadows", p, [&] {
        auto sh = [&](const std::string& name) { return dimension_shadow(S.at(name)[n], n); };
        auto [dp, dm] = d_plus_minus(n, r);
        auto [ap, am] = a_plus_minus(n, r);
        auto [bp, bm] = binomial_eulerian_pm(n, r);
        std::vector<std::pair<std::string, IntPolynomial>> want{
            {"psi", derangement_poly(n, r)}, {"psi_plus", dp},        {"psi_minus", dm},
            {"c_gamma", ap},                 {"tphi_nr", binomial_eulerian(n, r)},
            {"tphi_plus", bp},               {"tphi_plus_r", bp},     {"tphi_minus", bm},
            {"rees2", binomial_eulerian(n, 2)}, {"phi_nr", eulerian_poly(n, r)}};
        if (r >= 2) {
          const auto split = palindromic_decomposition(eulerian_poly(n, r), n);
          want.emplace_back("phi_nr_plus", split.plus);
          want.emplace_back("phi_nr_minus", split.minus);
        }
        for (const auto& [name, poly] : want) {
          auto w = differ(sh(name), poly);
          if (!w.empty()) return name + ": " + w;
        }
        return std::string{};
      });
      run.check("palindromic-parts", p, [&] {
        std::vector<std::pair<std::string, std::string>> pairs{{"psi_plus", "psi_minus"}, {"tphi_plus", "tphi_minus"}};
        if (r >= 2) pairs.emplace_back("phi_nr_plus", "phi_nr_minus");
        for (const auto& [plus, minus] : pairs) {
          if (!palindromic_about(S[plus][n], n)) return plus;
          if (!palindromic_about(S[minus][n], n + 1) || !S[minus][n].coeff(0).is_zero()) return minus;
        }
        return std::string{};
      });
      run.check("psi-schur-gamma-positive", p, [&] {
        if (!is_schur_gamma_positive(S["psi_plus"][n], n)) return std::string("psi_plus");
        if (!is_schur_gamma_positive(S["psi_minus"][n], n + 1)) return std::string("psi_minus");
        return std::string{};
      });
      if (r == 2) {
        run.check("tphi-pm-schur-gamma-positive", p, [&] {
          if (!is_schur_gamma_positive(S["tphi_plus"][n], n)) return std::string("tphi_plus");
          if (!is_schur_gamma_positive(S["tphi_minus"][n], n + 1)) return std::string("tphi_minus");
          return std::string{};
        });
        run.check("phi-nr-schur-gamma-positive", p,
                  [&] { return require(is_schur_gamma_positive(S["phi_nr"][n], n), "phi_nr"); });
      }
      if (r >= 3) {
        run.info("phi-nr-pm-schur-gamma-positive", p, [&] {
          if (!is_schur_gamma_positive(S["phi_nr_plus"][n], n)) return std::string("phi_nr_plus not Schur gamma-positive");
          if (!is_schur_gamma_positive(S["phi_nr_minus"][n], n + 1))
            return std::string("phi_nr_minus not Schur gamma-positive");
          return std::string{};
        });
      }
    }
    for (int n = 1; n <= b.max_n; ++n) {
      const std::string p = nr(n, r);
      run.check("stembridge", p, [&] {
        const auto st = stembridge_h(n, r);
        auto w = differ_t(st, named_series("c_gamma", r, n)[n]);
        if (w.empty()) w = differ(dimension_shadow(st, n), h_polynomial(gamma_nr(n, r)));
        return w;
      });
      run.check("stapledon", p, [&] {
        return differ_t(stapledon_phi(n, r, StapledonMethod::per_class), stapledon_phi(n, r, StapledonMethod::closed_form));
      });
    }
  }
  for (int n = 1; n <= std::min(b.max_n, 3); ++n)
    for (int r = 1; r <= std::min(b.max_r, 2); ++r)
      run.check("lattice-fixed-points", nr(n, r), [&] {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
          for (int k = 0; k <= 3; ++k)
            if (lattice_fixed_count(w, r, k) != ipow(r * k + 1, cycle_type(w).size())) return "k=" + std::to_string(k);
        } while (std::next_permutation(w.begin(), w.end()));
        return std::string{};
      });
}

}  // namespace

VerificationReport verify_suite(const std::string& suite, const VerifyBounds& bounds) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown suite: " + suite);
  if (bounds.max_n < 0 || bounds.max_r < 1 || bounds.N < 0) throw DomainError("verify bounds out of range");
  VerificationReport report{suite, {}};
  Runner run(report);
  if (suite == "enumerative" || suite == "all") enumerative(run, bounds);
  if (suite == "geometric" || suite == "all") geometric(run, bounds);
  if (suite == "equivariant" || suite == "all") equivariant(run, bounds);
  return report;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"id", c.id}, {"params", c.params}, {"pass", c.pass}};
    if (c.informational) j["informational"] = true;
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(j);
  }
  return Json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}};
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.informational ? "INFO" : c.pass ? "PASS" : "FAIL") << ' ' << c.id << " [" << c.params << ']';
    if (!c.witness.empty()) os << ' ' << c.witness;
    os << '\n';
  }
  os << report.suite << ": " << report.checks.size() << " checks, " << report.failures() << " failed\n";
  return os.str();
}

}  // namespace binomeul
