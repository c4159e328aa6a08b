#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binomeul/colored_perms.hpp"
#include "binomeul/serialize.hpp"
#include "binomeul/verify.hpp"

namespace py = pybind11;
using namespace binomeul;

namespace {

// Big integers cross the boundary as decimal strings.
py::object to_py(const mpz_class& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::list to_py(const std::vector<mpz_class>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

py::list to_py(const IntPolynomial& p) { return to_py(p.coeffs()); }

IntPolynomial from_py(const std::vector<py::int_>& c) {
  std::vector<mpz_class> v;
  for (const auto& x : c) v.emplace_back(py::str(x).cast<std::string>());
  return IntPolynomial(std::move(v));
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Statistic statistic(const std::string& s) {
  if (s == "des") return Statistic::des;
  if (s == "exc") return Statistic::exc;
  throw DomainError("statistic must be des or exc");
}

SimplicialComplex complex_named(const std::string& name, int n, int r) {
  if (name == "simplex") return simplex(n);
  if (name == "barycentric") return barycentric_subdivision(n);
  if (name == "gamma") return gamma_nr(n, r);
  if (name == "delta-gamma") return delta_of(gamma_nr(n, r));
  throw DomainError("unknown complex: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact binomial Eulerian tables over colored permutation groups";

  py::register_exception<IdentityError>(m, "IdentityError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("eulerian_poly", [](int n, int r, const std::string& stat) { return to_py(eulerian_poly(n, r, statistic(stat))); },
        py::arg("n"), py::arg("r") = 1, py::arg("stat") = "des");
  m.def("derangement_poly", [](int n, int r) { return to_py(derangement_poly(n, r)); }, py::arg("n"), py::arg("r") = 1);
  m.def("binomial_eulerian", [](int n, int r) { return to_py(binomial_eulerian(n, r)); }, py::arg("n"),
        py::arg("r") = 1);
  m.def("binomial_eulerian_pm", [](int n, int r) {
    auto [p, q] = binomial_eulerian_pm(n, r);
    return py::make_tuple(to_py(p), to_py(q));
  });
  m.def("d_plus_minus", [](int n, int r) {
    auto [p, q] = d_plus_minus(n, r);
    return py::make_tuple(to_py(p), to_py(q));
  });
  m.def("a_plus_minus", [](int n, int r) {
    auto [p, q] = a_plus_minus(n, r);
    return py::make_tuple(to_py(p), to_py(q));
  });
  m.def("gamma_tilde", [](int n, int r) {
    const auto g = gamma_tilde(n, r);
    return py::make_tuple(to_py(g.plus_formula), to_py(g.minus_formula));
  });
  m.def("gamma_b", [](int n) {
    auto [p, q] = gamma_b(n);
    return py::make_tuple(to_py(p), to_py(q));
  });

  m.def("gamma_vector", [](const std::vector<py::int_>& c, int n) { return to_py(gamma_expansion(from_py(c), n).gammas); },
        "Gammas of a polynomial palindromic about n/2.");
  m.def("is_palindromic", [](const std::vector<py::int_>& c, int n) { return is_palindromic(from_py(c), n); });
  m.def("is_unimodal", [](const std::vector<py::int_>& c) { return is_unimodal(from_py(c)); });
  m.def("is_real_rooted", [](const std::vector<py::int_>& c) { return is_real_rooted(from_py(c)); });

  m.def("h_polynomial", [](const std::string& name, int n, int r) { return to_py(h_polynomial(complex_named(name, n, r))); },
        py::arg("complex"), py::arg("n"), py::arg("r") = 1);
  m.def("local_h", [](const std::string& name, int n, int r) { return to_py(local_h(complex_named(name, n, r))); },
        py::arg("complex"), py::arg("n"), py::arg("r") = 1);
  m.def("facets", [](const std::string& name, int n, int r) { return json_to_py(to_json(complex_named(name, n, r))); },
        py::arg("complex"), py::arg("n"), py::arg("r") = 1);

  m.def("series_names", &series_names);
  m.def(
      "named_series",
      [](const std::string& name, int r, int N, const std::string& basis) {
        if (basis != "p" && basis != "s") throw DomainError("basis must be p or s");
        return json_to_py(to_json(named_series(name, r, N), basis == "s" ? Basis::s : Basis::p));
      },
      py::arg("name"), py::arg("r") = 1, py::arg("N") = 3, py::arg("basis") = "p");
  m.def(
      "dimension_shadows",
      [](const std::string& name, int r, int N) {
        const auto s = named_series(name, r, N);
        py::list out;
        for (int n = 0; n <= N; ++n) out.append(to_py(dimension_shadow(s[n], n)));
        return out;
      },
      py::arg("name"), py::arg("r") = 1, py::arg("N") = 3);

  m.def(
      "verify",
      [](const std::string& suite, int max_n, int max_r, int N) {
        return json_to_py(to_json(verify_suite(suite, VerifyBounds{max_n, max_r, N})));
      },
      py::arg("suite"), py::arg("max_n") = 4, py::arg("max_r") = 3, py::arg("N") = 5);
}
