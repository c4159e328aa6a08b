// binomeul: tables, series dumps and verification suites.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 usage, 3 an internal
// identity (divisibility, integrality) failed.

#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "binomeul/colored_perms.hpp"
#include "binomeul/serialize.hpp"
#include "binomeul/verify.hpp"

using namespace binomeul;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// r^n n!, the size of Z_r wr S_n.
mpz_class wreath_size(int n, int r) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
  return p * factorial(n);
}

/// n! r^{n-1}, the facet count of Gamma_{n,r}.
mpz_class gamma_facets(int n, int r) { return n * wreath_size(n - 1, r); }

void guard(const mpz_class& elements, double budget, const std::string& what) {
  if (mpz_class(elements) > mpz_class(budget))
    throw UsageError(what + " would enumerate " + elements.get_str() + " elements, over the budget of " +
                     mpz_class(budget).get_str() + " (raise --budget)");
}

struct PolyOpts {
  std::string kind;
  int n = 0;
  int r = 1;
  std::string format = "json";
  bool gamma = false;
  std::string complex = "gamma";
};

SimplicialComplex build_complex(const std::string& name, int n, int r) {
  if (name == "simplex") return simplex(n);
  if (name == "barycentric") return barycentric_subdivision(n);
  if (name == "gamma") return gamma_nr(n, r);
  return delta_of(gamma_nr(n, r));
}

/// Palindromic about (low + high) / 2, so the gamma vector is taken with n = low + high.
std::optional<GammaExpansion> gamma_of(const IntPolynomial& p) {
  if (p.is_zero()) return GammaExpansion{0, {}};
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  const int n = low + p.degree();
  if (!is_palindromic(p, n)) return std::nullopt;
  return gamma_expansion(p, n);
}

int cmd_poly(const PolyOpts& o, double budget) {
  if (o.n < 0 || o.r < 1) throw UsageError("need n >= 0 and r >= 1");
  const bool geometric = o.kind == "h" || o.kind == "local-h";
  if (geometric) {
    if (o.n < 1) throw UsageError("complexes need n >= 1");
    guard(gamma_facets(o.n, o.r), budget, "complex");
  } else {
    guard(wreath_size(o.kind == "gamma" ? o.n + 1 : o.n, o.r), budget, "poly " + o.kind);
  }

  const std::string stat = o.kind == "h" || o.kind == "local-h" ? o.kind + ":" + o.complex : o.kind;
  if (o.kind == "gamma") {
    if (o.n < 1 || o.r < 2) throw UsageError("poly gamma needs n >= 1 and r >= 2");
    const auto g = gamma_tilde(o.n, o.r);
    const IntPolynomial plus(g.plus_formula), minus(g.minus_formula);
    if (o.format == "csv") {
      std::cout << csv_header() << '\n'
                << csv_row(o.n, o.r, "gamma-plus", plus) << '\n'
                << csv_row(o.n, o.r, "gamma-minus", minus) << '\n';
    } else {
      Json j{{"kind", o.kind}, {"n", o.n}, {"r", o.r}};
      j["plus"] = to_json(GammaExpansion{o.n, g.plus_formula});
      j["minus"] = to_json(GammaExpansion{o.n + 1, g.minus_formula});
      std::cout << j.dump(2) << '\n';
    }
    return 0;
  }

  IntPolynomial p;
  if (o.kind == "eulerian") p = eulerian_poly(o.n, o.r);
  else if (o.kind == "derangement") p = derangement_poly(o.n, o.r);
  else if (o.kind == "binomial") p = binomial_eulerian(o.n, o.r);
  else if (o.kind == "binomial-plus") p = binomial_eulerian_pm(o.n, o.r).first;
  else if (o.kind == "binomial-minus") p = binomial_eulerian_pm(o.n, o.r).second;
  else if (o.kind == "h") p = h_polynomial(build_complex(o.complex, o.n, o.r));
  else p = local_h(build_complex(o.complex, o.n, o.r));

  std::optional<GammaExpansion> g;
  if (o.gamma) g = gamma_of(p);
  if (o.format == "csv") {
    std::cout << csv_header() << '\n' << csv_row(o.n, o.r, stat, p) << '\n';
    if (g) std::cout << csv_row(o.n, o.r, stat + "-gamma", IntPolynomial(g->gammas)) << '\n';
  } else {
    Json j{{"kind", o.kind}, {"n", o.n}, {"r", o.r}};
    if (geometric) j["complex"] = o.complex;
    j["coeffs"] = to_json(p)["coeffs"];
    if (o.gamma) j["gamma"] = g ? to_json(*g) : Json(nullptr);
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

struct SeriesOpts {
  std::string name;
  int r = 1;
  int N = 3;
  std::string basis = "p";
  bool exstar = false;
};

int cmd_series(const SeriesOpts& o) {
  if (o.N < 0 || o.r < 1) throw UsageError("need N >= 0 and r >= 1");
  const ZSeries s = named_series(o.name, o.r, o.N);
  Json j{{"name", o.name}, {"r", o.r}, {"basis", o.basis}};
  const Json body = to_json(s, o.basis == "s" ? Basis::s : Basis::p);
  j["N"] = body["N"];
  j["terms"] = body["terms"];
  if (o.exstar) {
    Json shadows = Json::array();
    for (int m = 0; m <= o.N; ++m) shadows.push_back(to_json(dimension_shadow(s[m], m))["coeffs"]);
    j["exstar"] = shadows;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, const std::string& format, double budget) {
  guard(wreath_size(bounds.max_n + 1, bounds.max_r), budget, "verify");
  const auto report = verify_suite(suite, bounds);
  if (format == "json") std::cout << to_json(report).dump(2) << '\n';
  else std::cout << report_text(report);
  return report.passed() ? 0 : 1;
}

int cmd_complex(const std::string& name, int n, int r, const std::string& format, double budget) {
  if (n < 1 || r < 1) throw UsageError("need n >= 1 and r >= 1");
  guard(gamma_facets(n, r), budget, "complex");
  const auto c = build_complex(name, n, r);
  if (format == "json") std::cout << to_json(c).dump(2) << '\n';
  else std::cout << facet_text(c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact binomial Eulerian tables over colored permutation groups"};
  app.require_subcommand(1);
  double budget = 1e8;
  app.add_option("--budget", budget, "Largest enumeration allowed")->check(CLI::PositiveNumber);

  PolyOpts po;
  auto* poly = app.add_subcommand("poly", "Print one polynomial");
  poly->add_option("kind", po.kind)
      ->required()
      ->check(CLI::IsMember({"eulerian", "derangement", "binomial", "binomial-plus", "binomial-minus", "h", "local-h",
                             "gamma"}));
  poly->add_option("-n", po.n)->required();
  poly->add_option("-r", po.r);
  poly->add_option("--format", po.format)->check(CLI::IsMember({"json", "csv"}));
  poly->add_flag("--gamma", po.gamma, "Also print the gamma vector when palindromic");
  poly->add_option("--complex", po.complex)->check(CLI::IsMember({"simplex", "barycentric", "gamma", "delta-gamma"}));

  SeriesOpts so;
  auto* series = app.add_subcommand("series", "Print a truncated generating series");
  series->add_option("name", so.name)->required()->check(CLI::IsMember(series_names()));
  series->add_option("-r", so.r);
  series->add_option("-N", so.N);
  series->add_option("--basis", so.basis)->check(CLI::IsMember({"p", "s"}));
  series->add_flag("--exstar", so.exstar, "Also print n! ex* of each coefficient");

  std::string suite;
  VerifyBounds bounds;
  std::string vformat = "text";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", bounds.max_n);
  verify->add_option("--max-r", bounds.max_r);
  verify->add_option("-N", bounds.N);
  verify->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));

  std::string cname = "gamma", cformat = "text";
  int cn = 2, cr = 1;
  auto* complex = app.add_subcommand("complex", "Dump the facets of a complex");
  complex->add_option("name", cname)->check(CLI::IsMember({"simplex", "barycentric", "gamma", "delta-gamma"}));
  complex->add_option("-n", cn);
  complex->add_option("-r", cr);
  complex->add_option("--format", cformat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*poly) return cmd_poly(po, budget);
    if (*series) return cmd_series(so);
    if (*verify) return cmd_verify(suite, bounds, vformat, budget);
    return cmd_complex(cname, cn, cr, cformat, budget);
  } catch (const IdentityError& e) {
    std::cerr << "identity failure: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
